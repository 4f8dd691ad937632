#pragma once

#include <cstdint>
#include <vector>

#include "fwid/errors.hpp"
#include "fwid/scalar.hpp"
#include "fwid/signed_log.hpp"

namespace fwid {

using SignedLogValue = SignedLog<double>;

/// Below this distance from a nonpositive integer, gamma() raises PoleError.
inline constexpr double kPoleErrorRadius = 1e-12;
/// Below this distance, 1/Gamma is reported as an exact ZERO.
inline constexpr double kReciprocalZeroRadius = 1e-9;

/// Distance from z to the nearest nonpositive integer.
double pole_distance(const Complex& z);
QuadReal pole_distance(const QuadComplex& z);

/// log Gamma(z). The binary64 version uses a g=7 Lanczos sum with reflection;
/// the binary128 version shifts to Re(z) >= 24 and applies the Stirling series.
/// Only exp(result) is meaningful across branch cuts.
Complex log_gamma(const Complex& z);
QuadComplex log_gamma(const QuadComplex& z);

Complex gamma(const Complex& z);
QuadComplex gamma(const QuadComplex& z);

template <class C>
SignedLog<real_of<C>> reciprocal_gamma(const C& z) {
  using R = real_of<C>;
  if (pole_distance(z) < R(kReciprocalZeroRadius)) return SignedLog<R>::zero();
  const C lg = log_gamma(z);
  return SignedLog<R>::from_log(-lg.real(), -lg.imag());
}

/// Rising factorial by direct product.
template <class C>
C pochhammer(const C& x, std::uint64_t n) {
  C p(1);
  for (std::uint64_t j = 0; j < n; ++j) p *= x + C(static_cast<double>(j));
  return p;
}

/// prod Gamma(num) / prod Gamma(den) accumulated in log space.
template <class C>
SignedLog<real_of<C>> gamma_quotient(const std::vector<C>& num, const std::vector<C>& den) {
  using R = real_of<C>;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (pole_distance(num[i]) < R(kPoleErrorRadius)) {
      throw NumeratorPoleError(i, lower(num[i].real()), lower(num[i].imag()));
    }
  }
  for (const C& d : den) {
    if (pole_distance(d) < R(kReciprocalZeroRadius)) return SignedLog<R>::zero();
  }
  R mag = 0, phase = 0;
  for (const C& x : num) {
    const C lg = log_gamma(x);
    mag += lg.real();
    phase += lg.imag();
  }
  for (const C& x : den) {
    const C lg = log_gamma(x);
    mag -= lg.real();
    phase -= lg.imag();
  }
  return SignedLog<R>::from_log(mag, phase);
}

/// Exact binomial coefficient for 0 <= k <= n <= 64.
double binomial(unsigned n, unsigned k);

}  // namespace fwid
