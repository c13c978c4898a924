#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace hsf {

/// Hölder exponent p in [1, inf]. Infinity is a distinguished state rather
/// than a float sentinel, so the conjugate of 1 is exactly inf and vice
/// versa, and 1/p is exactly zero at the boundary.
class Exponent {
 public:
  explicit Exponent(double p) {
    if (std::isnan(p) || p < 1.0)
      throw std::invalid_argument("Exponent: requires p >= 1");
    if (std::isinf(p)) {
      infinite_ = true;
      p_ = std::numeric_limits<double>::infinity();
    } else {
      p_ = p;
    }
  }

  static Exponent infinity() noexcept {
    Exponent e;
    e.infinite_ = true;
    e.p_ = std::numeric_limits<double>::infinity();
    return e;
  }

  bool is_infinite() const noexcept { return infinite_; }

  /// Numeric value; +inf in the infinite state.
  double value() const noexcept { return p_; }

  /// 1/p, with 1/inf = 0. Norm formulas are written in terms of this.
  double inverse() const noexcept { return infinite_ ? 0.0 : 1.0 / p_; }

  /// q with 1/p + 1/q = 1; conjugate(1) = inf, conjugate(inf) = 1.
  Exponent conjugate() const {
    if (infinite_) return Exponent(1.0);
    if (p_ == 1.0) return infinity();
    return Exponent(p_ / (p_ - 1.0));
  }

  friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.p_ == b.p_;
  }
  friend bool operator!=(const Exponent& a, const Exponent& b) noexcept {
    return !(a == b);
  }

 private:
  Exponent() = default;

  double p_ = 2.0;
  bool infinite_ = false;
};

inline Exponent conjugate_exponent(const Exponent& p) { return p.conjugate(); }

inline std::string to_string(const Exponent& p) {
  if (p.is_infinite()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", p.value());
  return buf;
}

}  // namespace hsf
