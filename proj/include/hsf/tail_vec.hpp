#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace hsf {

inline double abs_value(double x) { return std::fabs(x); }

/// Sup-norm sequence with finitely many explicit coordinates and an eventual
/// constant tail: coord(i) = head[i] for i < head.size(), tail otherwise.
/// Closed under sums and scalar multiples, computed coordinatewise on head
/// and tail; with an exact scalar such as Dyadic the arithmetic is exact.
/// This is enough to carry elements like the all-ones sequence alongside the
/// coordinate functionals without truncating anything.
template <typename Scalar>
struct TailVec {
  std::vector<Scalar> head;
  Scalar tail{};

  Scalar coord(std::size_t i) const { return i < head.size() ? head[i] : tail; }

  static TailVec constant(const Scalar& value) { return TailVec{{}, value}; }

  /// k-th coordinate functional (0-based): e_k with zero tail.
  static TailVec unit(std::size_t k) {
    TailVec v;
    v.head.assign(k + 1, Scalar{});
    v.head[k] = Scalar{1};
    return v;
  }
};

template <typename Scalar>
TailVec<Scalar> operator+(const TailVec<Scalar>& a, const TailVec<Scalar>& b) {
  TailVec<Scalar> r;
  r.head.resize(std::max(a.head.size(), b.head.size()));
  for (std::size_t i = 0; i < r.head.size(); ++i)
    r.head[i] = a.coord(i) + b.coord(i);
  r.tail = a.tail + b.tail;
  return r;
}

template <typename Scalar>
TailVec<Scalar> operator-(const TailVec<Scalar>& a, const TailVec<Scalar>& b) {
  TailVec<Scalar> r;
  r.head.resize(std::max(a.head.size(), b.head.size()));
  for (std::size_t i = 0; i < r.head.size(); ++i)
    r.head[i] = a.coord(i) - b.coord(i);
  r.tail = a.tail - b.tail;
  return r;
}

template <typename Scalar>
TailVec<Scalar> operator*(const Scalar& c, const TailVec<Scalar>& v) {
  TailVec<Scalar> r = v;
  for (auto& h : r.head) h = c * h;
  r.tail = c * r.tail;
  return r;
}

/// Exact sup norm: max over the head and the tail value.
template <typename Scalar>
Scalar sup_norm(const TailVec<Scalar>& v) {
  Scalar m = abs_value(v.tail);
  for (const auto& h : v.head) m = std::max(m, abs_value(h));
  return m;
}

}  // namespace hsf
