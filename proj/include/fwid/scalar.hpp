#pragma once

#include <complex>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

namespace fwid {

/// Public value type: every input and reported value is a binary64 complex number.
using Complex = std::complex<double>;

/// Working precision for series and closed forms (IEEE binary128).
using QuadReal = boost::multiprecision::float128;
using QuadComplex = boost::multiprecision::complex128;

template <class C>
struct complex_traits;

template <>
struct complex_traits<Complex> {
  using real_type = double;
};

template <>
struct complex_traits<QuadComplex> {
  using real_type = QuadReal;
};

template <class C>
using real_of = typename complex_traits<C>::real_type;

template <class C>
inline C lift(const Complex& z) {
  return C(z.real(), z.imag());
}

inline Complex lower(const Complex& z) { return z; }
inline Complex lower(const QuadComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline double lower(double x) { return x; }
inline double lower(const QuadReal& x) { return static_cast<double>(x); }

template <class R>
inline R pi() {
  return boost::math::constants::pi<R>();
}

}  // namespace fwid
