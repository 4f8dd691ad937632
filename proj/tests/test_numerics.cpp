#include <doctest.h>

#include <random>

#include "fwid/compensated_sum.hpp"
#include "fwid/numerics.hpp"
#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace fwid;

TEST_CASE("gamma matches mpmath at fixed points") {
  for (const auto& p : oracle::kGamma) {
    CAPTURE(p.z);
    CHECK(rel_diff(gamma(p.z), p.value) < 1e-13);
    CHECK(rel_diff(lower(gamma(lift<QuadComplex>(p.z))), p.value) < 1e-15);
  }
}

TEST_CASE("log_gamma agrees with the principal branch") {
  for (const auto& p : oracle::kLogGamma) {
    CAPTURE(p.z);
    for (Complex lg : {log_gamma(p.z), lower(log_gamma(lift<QuadComplex>(p.z)))}) {
      CHECK(std::abs(lg.real() - p.value.real()) < 1e-12 * std::max(1.0, std::abs(p.value.real())));
      CHECK(std::abs(lg.imag() - p.value.imag()) < 1e-11 * std::max(1.0, std::abs(p.value.imag())));
    }
  }
}

TEST_CASE("poles") {
  CHECK_THROWS_AS(gamma(Complex(-3, 0)), PoleError);
  CHECK_THROWS_AS(gamma(Complex(0, 0)), PoleError);
  CHECK(reciprocal_gamma(Complex(-3, 0)).is_zero());
  CHECK(reciprocal_gamma(Complex(-3 + 1e-10, 0)).is_zero());
  CHECK_FALSE(reciprocal_gamma(Complex(-3 + 1e-6, 0)).is_zero());
  CHECK(pole_distance(Complex(-2.25, 0)) == doctest::Approx(0.25));
  CHECK(pole_distance(Complex(1.5, 0.5)) > 0.5);
}

TEST_CASE("pochhammer") {
  for (const auto& p : oracle::kPoch) CHECK(rel_diff(pochhammer(p.x, p.n), p.value) < 1e-14);
  CHECK(pochhammer(Complex(0.7, 2), 0) == Complex(1, 0));
  CHECK(pochhammer(Complex(-4, 0), 7) == Complex(0, 0));
}

TEST_CASE("gamma_quotient") {
  std::vector<Complex> num{{0.5, 0}, {0.5, 0}}, den{{1, 0}};
  CHECK(gamma_quotient(num, den).value<Complex>().real() == doctest::Approx(M_PI).epsilon(1e-14));
  CHECK(gamma_quotient(num, {{-2, 0}}).is_zero());
  CHECK_THROWS_AS(gamma_quotient<Complex>({{1, 0}, {-2, 0}}, {}), NumeratorPoleError);
  // huge arguments stay finite in log space
  auto q = gamma_quotient<Complex>({{500, 0}}, {{499.5, 0}, {1, 0}});
  CHECK(q.value<Complex>().real() == doctest::Approx(oracle::kGammaQuotient).epsilon(1e-10));
}

TEST_CASE("binomial is exact") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(64, 32) == 1832624140942590534.0);
  CHECK(binomial(5, 0) == 1);
}

TEST_CASE("signed log arithmetic") {
  auto a = SignedLogValue::from_value(Complex(-2, 0));
  auto b = SignedLogValue::from_value(Complex(0, 3));
  Complex p = (a * b).value<Complex>();
  CHECK(rel_diff(p, Complex(0, -6)) < 1e-15);
  CHECK(rel_diff((a / b).value<Complex>(), Complex(-2, 0) / Complex(0, 3)) < 1e-15);
  CHECK((a * SignedLogValue::zero()).is_zero());
  CHECK_THROWS_AS(SignedLogValue::zero().inverse(), EvaluationError);
  CHECK(rel_diff(a.negated().value<Complex>(), Complex(2, 0)) < 1e-15);
}

TEST_CASE("compensated sum keeps low-order bits") {
  CompensatedSum<double> s;
  s += 1e16;
  s += 1.0;
  s += -1e16;
  CHECK(s.value() == 1.0);
  CompensatedSum<Complex> c;
  c += Complex(1e16, -1e16);
  c += Complex(1, 2);
  c += Complex(-1e16, 1e16);
  CHECK(c.value() == Complex(1, 2));
}

TEST_CASE("functional, reflection and duplication equations") {
  std::mt19937_64 g(2024);
  std::uniform_real_distribution<double> re(-8, 8), im(-4, 4);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    Complex z(re(g), im(g));
    if (pole_distance(z) < 1e-3 || pole_distance(z + 0.5) < 1e-3 || pole_distance(1.0 - z) < 1e-3 ||
        pole_distance(2.0 * z) < 1e-3)
      continue;
    ++checked;
    CHECK(rel_diff(gamma(z + 1.0), z * gamma(z)) < 1e-10);
    CHECK(rel_diff(gamma(z) * gamma(1.0 - z), M_PI / std::sin(M_PI * z)) < 1e-10);
    CHECK(rel_diff(gamma(z) * gamma(z + 0.5), std::pow(2.0, 1.0 - 2.0 * z) * std::sqrt(M_PI) * gamma(2.0 * z)) < 1e-10);
  }
  CHECK(checked > 250);
}
