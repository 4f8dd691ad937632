#include "fwid/numerics.hpp"

#include <array>
#include <cmath>

namespace fwid {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * M_PI);

// Imaginary part of the principal log Gamma via log Gamma(z) = log Gamma(z+m) - sum log(z+j).
// Only used to pick the branch of the reflection formula, so accuracy well inside pi is enough.
double principal_imag(Complex z, double (*upper_imag)(Complex)) {
  double args = 0;
  while (z.real() < 0.5) {
    args += std::arg(z);
    z += 1.0;
  }
  return upper_imag(z) - args;
}

// Whole turns of 2*pi separating imag from target_imag.
double branch_turns(double target_imag, double imag) { return std::round((target_imag - imag) / (2.0 * M_PI)); }

QuadReal quad_turns(double turns) { return QuadReal(turns) * 2 * pi<QuadReal>(); }

// log Gamma for Re(z) >= 1/2.
Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(a);
}

// log sin(pi*z), exp-accurate; integer part of Re(z) is removed exactly.
Complex log_sin_pi(Complex z) {
  const double n = std::round(z.real());
  const double r = z.real() - n;
  const double y = z.imag();
  Complex out;
  if (std::abs(y) <= 1.0) {
    const Complex s(std::sin(M_PI * r) * std::cosh(M_PI * y), std::cos(M_PI * r) * std::sinh(M_PI * y));
    out = std::log(s);
  } else {
    // sin(pi w) = (i/2) e^{-i pi w} (1 - e^{2 i pi w}) for Im w > 0; conjugate otherwise.
    Complex w(r, std::abs(y));
    const Complex i_unit(0.0, 1.0);
    out = std::log(Complex(0.0, 0.5)) - i_unit * M_PI * w + std::log(1.0 - std::exp(2.0 * i_unit * M_PI * w));
    if (y < 0) out = std::conj(out);
  }
  if (std::fmod(std::abs(n), 2.0) == 1.0) out += Complex(0.0, M_PI);
  return out;
}

const std::array<const char*, 18> kStirling = {
    "8.333333333333333333333333333333333333333e-2",
    "-2.777777777777777777777777777777777777778e-3",
    "7.936507936507936507936507936507936507937e-4",
    "-5.952380952380952380952380952380952380952e-4",
    "8.417508417508417508417508417508417508418e-4",
    "-1.917526917526917526917526917526917526918e-3",
    "6.41025641025641025641025641025641025641e-3",
    "-2.955065359477124183006535947712418300654e-2",
    "1.796443723688305731649384900158893966944e-1",
    "-1.392432216905901116427432216905901116427",
    "1.340286404416839199447895100069013112491e+1",
    "-1.568482846260020173063651324520889738281e+2",
    "2.193103333333333333333333333333333333333e+3",
    "-3.610877125372498935717326521924223073648e+4",
    "6.914722688513130671083952507756734675533e+5",
    "-1.523822153940741619228336495888678051866e+7",
    "3.829007513914141414141414141414141414141e+8",
    "-1.088226603578439108901514916552510537473e+10"};

const std::array<QuadReal, 18>& stirling_coefficients() {
  static const std::array<QuadReal, 18> c = [] {
    std::array<QuadReal, 18> out;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = QuadReal(kStirling[i]);
    return out;
  }();
  return c;
}

constexpr double kStirlingShift = 24.0;

QuadComplex stirling_log_gamma(const QuadComplex& z) {
  static const QuadReal half_log_2pi = log(2 * pi<QuadReal>()) / 2;
  const auto& c = stirling_coefficients();
  const QuadComplex inv = QuadComplex(1) / z;
  const QuadComplex inv2 = inv * inv;
  QuadComplex series = 0;
  for (std::size_t k = c.size(); k-- > 0;) series = series * inv2 + c[k];
  series *= inv;
  return (z - QuadReal(0.5)) * log(z) - z + half_log_2pi + series;
}

QuadComplex quad_log_sin_pi(const QuadComplex& z) {
  const QuadReal n = round(z.real());
  const QuadReal r = z.real() - n;
  const QuadReal y = z.imag();
  const QuadReal p = pi<QuadReal>();
  QuadComplex out;
  if (abs(y) <= 1) {
    out = log(QuadComplex(sin(p * r) * cosh(p * y), cos(p * r) * sinh(p * y)));
  } else {
    const QuadComplex w(r, abs(y));
    const QuadComplex i_unit(0, 1);
    out = log(QuadComplex(0, QuadReal(0.5))) - i_unit * p * w +
          log(QuadComplex(1) - exp(QuadReal(2) * i_unit * p * w));
    if (y < 0) out = conj(out);
  }
  if (fmod(abs(n), QuadReal(2)) == 1) out += QuadComplex(0, p);
  return out;
}

}  // namespace

double pole_distance(const Complex& z) {
  if (z.real() > 0) return std::abs(z);
  return std::abs(z - std::round(z.real()));
}

QuadReal pole_distance(const QuadComplex& z) {
  if (z.real() > 0) return abs(z);
  return abs(z - QuadComplex(round(z.real()), 0));
}

Complex log_gamma(const Complex& z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw EvaluationError("log_gamma: non-finite argument");
  if (pole_distance(z) < kPoleErrorRadius) throw PoleError("log_gamma: argument is a nonpositive integer");
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  Complex w = std::log(M_PI) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
  const double target = principal_imag(z, [](Complex u) { return lanczos_log_gamma(u).imag(); });
  return {w.real(), w.imag() + 2.0 * M_PI * branch_turns(target, w.imag())};
}

QuadComplex log_gamma(const QuadComplex& z) {
  if (!isfinite(z.real()) || !isfinite(z.imag())) throw EvaluationError("log_gamma: non-finite argument");
  if (pole_distance(z) < QuadReal(kPoleErrorRadius)) throw PoleError("log_gamma: argument is a nonpositive integer");
  if (z.real() < -kStirlingShift) {
    const QuadComplex one(1);
    const QuadComplex w = log(pi<QuadReal>()) - quad_log_sin_pi(z) - log_gamma(one - z);
    const double target = log_gamma(lower(z)).imag();
    return {w.real(), w.imag() + quad_turns(branch_turns(target, lower(w.imag())))};
  }
  if (z.real() >= kStirlingShift) return stirling_log_gamma(z);
  // Gamma(z) = Gamma(z + s) / (z (z+1) ... (z+s-1)); the product is logged in chunks and
  // each chunk's log is moved to the branch of the sum of its factors' principal logs.
  QuadComplex shifted = z;
  QuadComplex product(1);
  QuadComplex log_product(0);
  double args = 0;
  int chunk = 0;
  auto flush = [&] {
    QuadComplex lp = log(product);
    lp += QuadComplex(0, quad_turns(branch_turns(args, lower(lp.imag()))));
    log_product += lp;
    product = QuadComplex(1);
    args = 0;
    chunk = 0;
  };
  while (shifted.real() < kStirlingShift) {
    product *= shifted;
    args += std::arg(lower(shifted));
    shifted += QuadReal(1);
    if (++chunk == 16) flush();
  }
  flush();
  return stirling_log_gamma(shifted) - log_product;
}

Complex gamma(const Complex& z) { return std::exp(log_gamma(z)); }

QuadComplex gamma(const QuadComplex& z) { return exp(log_gamma(z)); }

double binomial(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  if (n > 64) throw EvaluationError("binomial: n exceeds 64");
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (unsigned j = 1; j <= k; ++j) acc = acc * (n - k + j) / j;
  return static_cast<double>(acc);
}

}  // namespace fwid
