#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace hsf {

/// Exact dyadic rational num / 2^exp, kept normalized (num odd or zero).
/// Closed under +, -, *; no operation ever rounds, so the cancellation
/// identities behind the sequence-space counterexamples hold exactly.
/// int64 numerators cover those computations by a wide margin; arithmetic
/// throws std::overflow_error instead of wrapping.
class Dyadic {
 public:
  constexpr Dyadic() = default;
  constexpr Dyadic(std::int64_t integer) : num_(integer) {}  // NOLINT: integers embed

  /// numerator / 2^log2_denominator
  static Dyadic scaled(std::int64_t numerator, int log2_denominator) {
    if (log2_denominator < 0 || log2_denominator > 62)
      throw std::invalid_argument("Dyadic: denominator exponent out of range");
    Dyadic d;
    d.num_ = numerator;
    d.exp_ = log2_denominator;
    d.normalize();
    return d;
  }

  std::int64_t numerator() const { return num_; }
  int log2_denominator() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  Dyadic operator-() const {
    Dyadic d = *this;
    d.num_ = -d.num_;
    return d;
  }

  Dyadic abs() const { return num_ < 0 ? -*this : *this; }

  /// Exact while |numerator| < 2^53.
  double to_double() const { return std::ldexp(static_cast<double>(num_), -exp_); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    const int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    std::int64_t sum = 0;
    if (__builtin_add_overflow(shifted(a.num_, e - a.exp_),
                               shifted(b.num_, e - b.exp_), &sum))
      throw std::overflow_error("Dyadic: addition overflow");
    return scaled(sum, e);
  }

  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    std::int64_t prod = 0;
    if (__builtin_mul_overflow(a.num_, b.num_, &prod))
      throw std::overflow_error("Dyadic: multiplication overflow");
    if (a.exp_ + b.exp_ > 62)
      throw std::overflow_error("Dyadic: denominator overflow");
    return scaled(prod, a.exp_ + b.exp_);
  }

  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b) {
    return (a - b).num_ < 0;
  }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) {
    return (a - b).num_ <= 0;
  }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return b <= a; }

 private:
  void normalize() {
    while (num_ != 0 && (num_ % 2) == 0 && exp_ > 0) {
      num_ /= 2;
      --exp_;
    }
    if (num_ == 0) exp_ = 0;
  }

  static std::int64_t shifted(std::int64_t v, int k) {
    if (v == 0) return 0;
    if (k >= 63)
      throw std::overflow_error("Dyadic: shift overflow");
    const std::int64_t limit = std::numeric_limits<std::int64_t>::max() >> k;
    if (v > limit || v < -limit)
      throw std::overflow_error("Dyadic: shift overflow");
    return v * (std::int64_t{1} << k);
  }

  std::int64_t num_ = 0;
  int exp_ = 0;
};

inline Dyadic abs_value(const Dyadic& d) { return d.abs(); }

}  // namespace hsf
