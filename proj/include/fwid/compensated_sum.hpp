#pragma once

namespace fwid {

/// Neumaier (improved Kahan) summation. Works componentwise for complex values
/// because addition is componentwise.
template <class Value>
class CompensatedSum {
 public:
  CompensatedSum& operator+=(const Value& x) {
    add_component(sum_, compensation_, x);
    return *this;
  }

  Value value() const { return sum_ + compensation_; }

 private:
  template <class V>
  static void add_component(V& sum, V& comp, const V& x) {
    if constexpr (requires(V v) { v.real(); v.imag(); }) {
      auto s_re = sum.real(), c_re = comp.real();
      auto s_im = sum.imag(), c_im = comp.imag();
      add_scalar(s_re, c_re, x.real());
      add_scalar(s_im, c_im, x.imag());
      sum = V(s_re, s_im);
      comp = V(c_re, c_im);
    } else {
      add_scalar(sum, comp, x);
    }
  }

  template <class S>
  static void add_scalar(S& sum, S& comp, const S& x) {
    using std::abs;
    const S t = sum + x;
    if (abs(sum) >= abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  Value sum_ = Value(0);
  Value compensation_ = Value(0);
};

}  // namespace fwid
