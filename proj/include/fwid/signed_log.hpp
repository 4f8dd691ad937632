#pragma once

#include <cmath>

#include "fwid/errors.hpp"
#include "fwid/scalar.hpp"

namespace fwid {

/// A nonzero complex number stored as exp(log_magnitude + i*phase), or an exact zero.
///
/// Products of many gamma values are accumulated here so intermediate results never
/// overflow; the phase is kept in (-pi, pi].
template <class R>
class SignedLog {
 public:
  SignedLog() = default;  // one

  static SignedLog zero() {
    SignedLog s;
    s.zero_ = true;
    return s;
  }

  static SignedLog one() { return SignedLog(); }

  static SignedLog from_log(R log_magnitude, R phase) {
    SignedLog s;
    s.log_magnitude_ = log_magnitude;
    s.phase_ = normalize_phase(phase);
    return s;
  }

  template <class C>
  static SignedLog from_value(const C& z) {
    using std::abs;
    using std::arg;
    using std::log;
    if (z.real() == 0 && z.imag() == 0) return zero();
    return from_log(R(log(abs(z))), R(arg(z)));
  }

  bool is_zero() const { return zero_; }
  const R& log_magnitude() const { return log_magnitude_; }
  const R& phase() const { return phase_; }

  template <class C>
  C value() const {
    using std::cos;
    using std::exp;
    using std::sin;
    if (zero_) return C(0);
    const R mag = exp(log_magnitude_);
    return C(mag * cos(phase_), mag * sin(phase_));
  }

  SignedLog& operator*=(const SignedLog& o) {
    if (zero_ || o.zero_) return *this = zero();
    log_magnitude_ += o.log_magnitude_;
    phase_ = normalize_phase(phase_ + o.phase_);
    return *this;
  }

  SignedLog& operator/=(const SignedLog& o) { return *this *= o.inverse(); }

  SignedLog inverse() const {
    if (zero_) throw EvaluationError("division by an exact zero");
    return from_log(-log_magnitude_, -phase_);
  }

  SignedLog negated() const {
    if (zero_) return *this;
    return from_log(log_magnitude_, phase_ + pi<R>());
  }

  friend SignedLog operator*(SignedLog a, const SignedLog& b) { return a *= b; }
  friend SignedLog operator/(SignedLog a, const SignedLog& b) { return a /= b; }

  friend bool operator==(const SignedLog& a, const SignedLog& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    return a.log_magnitude_ == b.log_magnitude_ && a.phase_ == b.phase_;
  }

  static R normalize_phase(R phase) {
    using std::round;
    const R two_pi = 2 * pi<R>();
    R r = phase - two_pi * round(phase / two_pi);
    if (r <= -pi<R>()) r += two_pi;
    if (r > pi<R>()) r -= two_pi;
    return r;
  }

 private:
  R log_magnitude_ = 0;
  R phase_ = 0;
  bool zero_ = false;
};

}  // namespace fwid
