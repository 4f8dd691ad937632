// Hand-coded identity registry. The corpus/ directory holds an independently
// written text version of every entry; tests cross-evaluate the two.
#include "fwid/catalog.hpp"

namespace fwid {

namespace {

using P = ParamExpr;

const P a = P::symbol("a");
const P b = P::symbol("b");
const P c = P::symbol("c");
const P d = P::symbol("d");
const P e = P::symbol("e");
const P l = P::symbol("l");
const P m = P::symbol("m");
const P n = P::symbol("n");
const P i = P::symbol("i");

P q(std::int64_t num, std::int64_t den) { return P(Rational(num, den)); }
const P half = q(1, 2);

Expr E(const P& p) { return Expr::param(p); }
Expr G(const P& p) { return Expr::gamma(p); }
Expr Po(const P& base, const P& count) { return Expr::poch(base, count); }
Expr sign(const P& exponent) { return Expr::neg_one_pow(exponent); }
Expr pow(const P& base, const P& exponent) { return Expr::power(E(base), exponent); }
Expr pi_const() { return Expr::power(G(half), P(2)); }

SeriesEntry plain(const P& offset) { return {offset, P(1), std::nullopt}; }
SeriesEntry fw(const P& offset, const P& coeff) { return {offset, coeff, std::nullopt}; }
SeriesEntry family(const P& offset, std::int64_t first, const P& last) {
  return {offset, P(1), Family{"i", P(first), last}};
}

Expr F(std::vector<SeriesEntry> num, std::vector<SeriesEntry> den, const P& z) {
  SeriesSpec s;
  s.kind = SeriesKind::Hypergeometric;
  s.numerator = std::move(num);
  s.denominator = std::move(den);
  s.argument = z;
  return Expr::series(std::move(s));
}

Expr F(std::initializer_list<P> num, std::initializer_list<P> den, const P& z) {
  std::vector<SeriesEntry> nn, dd;
  for (const auto& x : num) nn.push_back(plain(x));
  for (const auto& x : den) dd.push_back(plain(x));
  return F(std::move(nn), std::move(dd), z);
}

Expr Psi(std::vector<SeriesEntry> num, std::vector<SeriesEntry> den, const P& z) {
  SeriesSpec s;
  s.kind = SeriesKind::FoxWright;
  s.numerator = std::move(num);
  s.denominator = std::move(den);
  s.argument = z;
  return Expr::series(std::move(s));
}

Identity make(std::string name, std::string provenance, std::map<std::string, Domain> symbols, Expr lhs, Expr rhs,
              std::vector<Constraint> constraints = {}, std::vector<SamplePin> pins = {}) {
  Identity id;
  id.name = std::move(name);
  id.provenance = std::move(provenance);
  id.symbols = std::move(symbols);
  id.lhs = std::move(lhs);
  id.rhs = std::move(rhs);
  id.constraints = std::move(constraints);
  id.pins = std::move(pins);
  return id;
}

constexpr Domain C_ = Domain::Complex;
constexpr Domain N_ = Domain::NonnegInt;

// Fox-Wright series shared by the reciprocal pair; `with_half` adds (3/2;1) over (1/2;1).
Expr reciprocal_psi(const P& lam, bool with_half) {
  std::vector<SeriesEntry> num{fw(1, 1)};
  std::vector<SeriesEntry> den{fw(1 + n, -1), fw(2 + n, 1)};
  if (with_half) {
    num.push_back(fw(q(3, 2), 1));
    den.push_back(fw(half, 1));
  }
  num.push_back(fw((1 + lam - a) / Rational(2), lam - half));
  num.push_back(fw((2 + lam - a) / Rational(2), lam + half));
  num.push_back(fw(lam + a + n, 2 * lam));
  den.push_back(fw((1 + lam + a) / Rational(2), lam - half));
  den.push_back(fw((2 + lam + a) / Rational(2), lam + half));
  den.push_back(fw(1 + lam - a - n, 2 * lam));
  return Psi(std::move(num), std::move(den), -1);
}

// Omega (sign = true) and Theta (sign = false) summands of the double-sum identities.
Expr double_sum_psi(bool omega) {
  std::vector<SeriesEntry> num{fw(1, 1),
                               fw(q(3, 2), 1),
                               fw((m - i) / Rational(2) + l - a, l),
                               fw((1 + m - i) / Rational(2) + l - a, 1 + l),
                               fw((3 + m) / Rational(2) - i + l, 1 + 2 * l)};
  if (!omega) num.push_back(fw((2 + m) / Rational(2) + l, 1 + 2 * l));
  num.push_back(fw(1 + 2 * a + n, 1 + 2 * l));
  num.push_back(fw(1 - i + 2 * l, 2 + 4 * l));
  std::vector<SeriesEntry> den{fw(1 + n, -1),
                               fw(2 + n, 1),
                               fw(half, 1),
                               fw((2 - i) / Rational(2) + a, l),
                               fw((3 - i) / Rational(2) + a, 1 + l),
                               fw((1 + m) / Rational(2) - i + l, 1 + 2 * l)};
  if (!omega) den.push_back(fw((2 - m) / Rational(2) + l, 1 + 2 * l));
  den.push_back(fw(1 + 2 * l - 2 * a - n, 1 + 2 * l));
  den.push_back(fw(2 + m - i + 2 * l, 2 + 4 * l));
  return Psi(std::move(num), std::move(den), -1);
}

std::vector<P> ex_p8() { return {(3 + 2 * a + 2 * n) / Rational(6), (5 + 2 * a + 2 * n) / Rational(6), (7 + 2 * a + 2 * n) / Rational(6), -n}; }
std::vector<P> ex_q8() { return {(9 - 2 * a - 2 * n) / Rational(6), (7 - 2 * a - 2 * n) / Rational(6), (5 - 2 * a - 2 * n) / Rational(6), 2 + n}; }

Expr Fv(std::vector<P> num, std::vector<P> den, const P& z) {
  std::vector<SeriesEntry> nn, dd;
  for (const auto& x : num) nn.push_back(plain(x));
  for (const auto& x : den) dd.push_back(plain(x));
  return F(std::move(nn), std::move(dd), z);
}

std::vector<P> cat(std::vector<P> x, const std::vector<P>& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

}  // namespace

std::vector<Identity> builtin_identities() {
  std::vector<Identity> out;

  // Classical identities.
  out.push_back(make(
      "whipple", "Whipple 3F2 summation at unit argument", {{"a", C_}, {"b", C_}, {"c", C_}, {"n", N_}},
      F({a, 1 - a, b}, {c, 1 + 2 * b - c}, 1),
      G(c / Rational(2)) * G((1 + c) / Rational(2)) * G(b + (1 - c) / Rational(2)) * G(b + (2 - c) / Rational(2)) /
          (G((a + c) / Rational(2)) * G((1 - a + c) / Rational(2)) * G(b + (1 + a - c) / Rational(2)) *
           G(b + (2 - a - c) / Rational(2))),
      {RePositive{b}}, {{"a", -n}}));

  out.push_back(make("whipple-terminating", "Whipple 3F2 summation, terminating case a = -n",
                     {{"b", C_}, {"c", C_}, {"n", N_}}, F({-n, 1 + n, b}, {c, 1 + 2 * b - c}, 1),
                     Po((c - n) / Rational(2), n) * Po(c - 2 * b, n) / (Po((c - n) / Rational(2) - b, n) * Po(c, n))));

  out.push_back(make("dougall", "Dougall very-well-poised 5F4 summation",
                     {{"a", C_}, {"b", C_}, {"c", C_}, {"d", C_}, {"n", N_}},
                     F({a, 1 + a / Rational(2), b, c, d}, {a / Rational(2), 1 + a - b, 1 + a - c, 1 + a - d}, 1),
                     G(1 + a - b) * G(1 + a - c) * G(1 + a - d) * G(1 + a - b - c - d) /
                         (G(1 + a) * G(1 + a - b - c) * G(1 + a - b - d) * G(1 + a - c - d)),
                     {RePositive{1 + a - b - c - d}}, {{"d", -n}}));

  out.push_back(make("dougall-terminating", "Dougall 5F4 summation, terminating case d = -n",
                     {{"a", C_}, {"b", C_}, {"c", C_}, {"n", N_}},
                     F({a, 1 + a / Rational(2), b, c, -n}, {a / Rational(2), 1 + a - b, 1 + a - c, 1 + a + n}, 1),
                     Po(1 + a, n) * Po(1 + a - b - c, n) / (Po(1 + a - b, n) * Po(1 + a - c, n))));

  out.push_back(make("dougall-4f3-limit", "Limit d to infinity of the Dougall 5F4 summation: a 4F3 at -1",
                     {{"a", C_}, {"b", C_}, {"c", C_}, {"n", N_}},
                     F({a, 1 + a / Rational(2), b, c}, {a / Rational(2), 1 + a - b, 1 + a - c}, -1),
                     G(1 + a - b) * G(1 + a - c) / (G(1 + a) * G(1 + a - b - c)),
                     {RePositive{1 + a / Rational(2) - b - c}}, {{"c", -n}}));

  out.push_back(make("dixon", "Dixon well-poised 3F2 summation", {{"a", C_}, {"b", C_}, {"c", C_}, {"n", N_}},
                     F({a, b, c}, {1 + a - b, 1 + a - c}, 1),
                     G(1 + a / Rational(2)) * G(1 + a - b) * G(1 + a - c) * G(1 + a / Rational(2) - b - c) /
                         (G(1 + a) * G(1 + a / Rational(2) - b) * G(1 + a / Rational(2) - c) * G(1 + a - b - c)),
                     {RePositive{1 + a / Rational(2) - b - c}}, {{"c", -n}}));

  out.push_back(make(
      "sixf5-transform", "Very-well-poised 6F5 at -1 transformed into a 3F2 at 1",
      {{"a", C_}, {"b", C_}, {"c", C_}, {"d", C_}, {"e", C_}, {"n", N_}},
      F({a, 1 + a / Rational(2), b, c, d, e}, {a / Rational(2), 1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e}, -1),
      G(1 + a - b) * G(1 + a - c) / (G(1 + a) * G(1 + a - b - c)) * F({1 + a - d - e, b, c}, {1 + a - d, 1 + a - e}, 1),
      {}, {{"c", -n}}));

  out.push_back(make(
      "sixf5-evaluation", "Closed form of the 6F5 at -1 with d = 1-b, e = 1-c, via Dixon",
      {{"a", C_}, {"b", C_}, {"c", C_}, {"n", N_}},
      F({a, 1 + a / Rational(2), b, 1 - b, c, 1 - c}, {a / Rational(2), 1 + a - b, a + b, 1 + a - c, a + c}, -1),
      pi_const() * G(a + b) * G(1 + a - b) * G(a + c) * G(1 + a - c) /
          (pow(2, 2 * a - 1) * G(a) * G(1 + a) * G((a + b + c) / Rational(2)) * G((1 + a + b - c) / Rational(2)) *
           G((1 + a - b + c) / Rational(2)) * G((2 + a - b - c) / Rational(2))),
      {RePositive{a}}, {{"c", -n}}));

  {
    const Expr body = sign(i) * Po(-m, i) * Po(q(3, 2) + b - c, i) / (Po(1, i) * Po(half + b - c, i)) *
                      Po(1 - c, i) * Po(1 + 2 * b - 2 * c, i) / (Po(1 + 2 * b - c, i) * Po(2 + 2 * b - 2 * c + m, i)) *
                      F({-n, 1 + n, b}, {c - i, 1 + 2 * b - c + i}, 1);
    out.push_back(make("chu-shift-denominator", "Terminating 3F2 with denominator shifted by m, expanded in Whipple-type series",
                       {{"b", C_}, {"c", C_}, {"m", N_}, {"n", N_}}, F({-n, 1 + n, b}, {c, 1 + 2 * b - c + m}, 1),
                       Po(1 + 2 * b - c, m) / Po(2 + 2 * b - 2 * c, m) * Expr::sum("i", m, body),
                       {UpperBound{"m", 4}}));
  }
  {
    const P hm = m / Rational(2);
    const Expr body = Po(-m, i) * Po(q(3, 2) - hm + b - c, i) / (Po(1, i) * Po(half - hm + b - c, i)) * Po(1 - c, i) *
                      Po(1 + 2 * b - 2 * c - m, i) / (Po(2 + 2 * b - 2 * c, i) * Po(1 + 2 * b - c - m, i)) *
                      F({-n, 1 + n, b - hm}, {c - i, 1 + 2 * b - c - m + i}, 1);
    out.push_back(make("chu-shift-numerator", "Terminating 3F2 with numerator shifted by m/2, expanded in Whipple-type series",
                       {{"b", C_}, {"c", C_}, {"m", N_}, {"n", N_}}, F({-n, 1 + n, b + hm}, {c, 1 + 2 * b - c}, 1),
                       Po(c - 2 * b, m) * Po(c - b - hm, m) / (Po(2 * c - 2 * b - 1, m) * Po(1 - b - hm, m)) *
                           Expr::sum("i", m, body),
                       {UpperBound{"m", 4}}));
  }

  // Fox-Wright summations obtained from the inverse pair and their specializations.
  out.push_back(make(
      "thm1", "5Psi6 at -1 dual to the terminating Whipple 3F2", {{"a", C_}, {"l", C_}, {"n", N_}},
      Psi({fw(1, 1), fw(q(3, 2), 1), fw(l - a, l), fw(half + l - a, 1 + l), fw(1 + 2 * a + n, 1 + 2 * l)},
          {fw(1 + n, -1), fw(2 + n, 1), fw(half, 1), fw(1 + a, l), fw(q(3, 2) + a, 1 + l), fw(1 + 2 * l - 2 * a - n, 1 + 2 * l)},
          -1),
      sign(n) * pow(4, 2 * a - l) * Po(1 + 2 * a - l, n) /
          (E(l - a + l * n) * E(1 + 2 * a + 2 * l * n + 2 * n) * Po(1, n))));

  out.push_back(make(
      "example1", "9F8 at 1: the 5Psi6 summation at l = 1", {{"a", C_}, {"n", N_}},
      F({1, q(3, 2), 1 - a, (3 - 2 * a) / Rational(4), (5 - 2 * a) / Rational(4), (1 + 2 * a + n) / Rational(3),
         (2 + 2 * a + n) / Rational(3), (3 + 2 * a + n) / Rational(3), -n},
        {half, 1 + a, (5 + 2 * a) / Rational(4), (3 + 2 * a) / Rational(4), (5 - 2 * a - n) / Rational(3),
         (4 - 2 * a - n) / Rational(3), (3 - 2 * a - n) / Rational(3), 2 + n},
        1),
      E(2 * a) * E(1 - a) * E(1 + 2 * a) / (E(1 - a - n) * E(2 * a + n) * E(1 + 2 * a + 4 * n)) * Po(2, n) /
          Po(2 * a - 2, n)));

  out.push_back(make(
      "example2", "13F12 at 1: the 5Psi6 summation at l = 2", {{"a", C_}, {"n", N_}},
      F({plain(1), plain(q(3, 2)), plain((2 - a) / Rational(2)), plain((3 - a) / Rational(2)),
         plain((5 - 2 * a) / Rational(6)), plain((7 - 2 * a) / Rational(6)), plain((9 - 2 * a) / Rational(6)),
         family((i + 2 * a + n) / Rational(5), 1, P(5)), plain(-n)},
        {plain(half), plain((2 + a) / Rational(2)), plain((1 + a) / Rational(2)), plain((7 + 2 * a) / Rational(6)),
         plain((5 + 2 * a) / Rational(6)), plain((3 + 2 * a) / Rational(6)),
         family((10 - i - 2 * a - n) / Rational(5), 1, P(5)), plain(2 + n)},
        1),
      E(2 - a) * E(1 + 2 * a) / (E(2 - a + 2 * n) * E(1 + 2 * a + 6 * n)) * Po(2 * a - 1, n) * Po(2, n) /
          (Po(2 * a - 4, n) * Po(2 * a + 1, n))));

  out.push_back(make("thm2", "Alternating sum over i of 7Psi8 series at -1", {{"a", C_}, {"l", C_}, {"m", N_}, {"n", N_}},
                     Expr::sum("i", m, sign(i) * Po(-m, i) / Po(1, i) * double_sum_psi(true)),
                     sign(n) * pow(2, 4 * a - 2 * l - m - 1) * Po(1 + 2 * a - l - m / Rational(2), n) /
                         (E(1 + 2 * a + 2 * l * n + 2 * n) * E(l - a + l * n) * Po(1, n))));

  out.push_back(make("thm3", "Sum over i of 8Psi9 series at -1", {{"a", C_}, {"l", C_}, {"m", N_}, {"n", N_}},
                     Expr::sum("i", m, Po(-m, i) / Po(1, i) * double_sum_psi(false)),
                     sign(n) * pow(2, 4 * a - 2 * l - m - 1) * Po(1 + 2 * a - l + m / Rational(2), n) *
                         Po(l - 2 * a - m / Rational(2), m) /
                         (E(1 + 2 * a + 2 * l * n + 2 * n) * E(l - a + l * n) * Po(1, n))));

  out.push_back(make("cor1", "Reciprocal formula: difference of 4Psi5 series at l and -l", {{"a", C_}, {"l", C_}, {"n", N_}},
                     reciprocal_psi(l, false) - reciprocal_psi(-l, false),
                     sign(n + 1) * pow(2, 2 * a + 1) * E(l) * Po(a, n) /
                         (E(a + l + 2 * l * n + n) * E(a - l - 2 * l * n + n) * Po(1, n))));

  out.push_back(make("cor2", "Reciprocal formula: sum of 5Psi6 series at l and -l", {{"a", C_}, {"l", C_}, {"n", N_}},
                     reciprocal_psi(l, true) + reciprocal_psi(-l, true),
                     sign(n) * pow(4, a) * Po(a, 1 + n) /
                         (E(a + l + 2 * l * n + n) * E(a - l - 2 * l * n + n) * Po(1, n))));

  out.push_back(make(
      "example3", "Pair of 4F3 series at 1: the difference formula at l = 1/2", {{"a", C_}, {"n", N_}},
      F({1, (5 - 2 * a) / Rational(4), half + a + n, -n}, {(5 + 2 * a) / Rational(4), q(3, 2) - a - n, 2 + n}, 1) /
              E(1 + 2 * a) +
          F({1, (3 - 2 * a) / Rational(4), half + a + n, -n}, {(3 + 2 * a) / Rational(4), q(3, 2) - a - n, 2 + n}, 1) /
              E(1 - 2 * a),
      E(2) / (E(1 - 2 * a) * E(1 + 2 * a + 4 * n)) * Po(2, n) * Po(a, n) / (Po(half + a, n) * Po(-half + a, n))));

  out.push_back(make(
      "example4", "Pair of 7F6 series at 1: the difference formula at l = 3/2", {{"a", C_}, {"n", N_}},
      Fv(cat({1, (5 - 2 * a) / Rational(4), (7 - 2 * a) / Rational(8), (11 - 2 * a) / Rational(8)}, ex_p8()),
         cat({(5 + 2 * a) / Rational(4), (7 + 2 * a) / Rational(8), (11 + 2 * a) / Rational(8)}, ex_q8()), 1) /
              E(3 + 2 * a) +
          Fv(cat({1, (3 - 2 * a) / Rational(4), (5 - 2 * a) / Rational(8), (9 - 2 * a) / Rational(8)}, ex_p8()),
             cat({(3 + 2 * a) / Rational(4), (5 + 2 * a) / Rational(8), (9 + 2 * a) / Rational(8)}, ex_q8()), 1) /
              E(3 - 2 * a),
      E(6) / (E(3 - 2 * a + 4 * n) * E(3 + 2 * a + 8 * n)) * Po(2, n) * Po(a, n) /
          (Po(q(3, 2) + a, n) * Po(q(-3, 2) + a, n))));

  out.push_back(make(
      "example5", "Pair of 5F4 series at 1: the sum formula at l = 1/2", {{"a", C_}, {"n", N_}},
      F({1, q(3, 2), (5 - 2 * a) / Rational(4), half + a + n, -n},
        {half, (5 + 2 * a) / Rational(4), q(3, 2) - a - n, 2 + n}, 1) /
              E(1 + 2 * a) -
          F({1, q(3, 2), (3 - 2 * a) / Rational(4), half + a + n, -n},
            {half, (3 + 2 * a) / Rational(4), q(3, 2) - a - n, 2 + n}, 1) /
              E(1 - 2 * a),
      E(4) / (E(2 * a - 1) * E(1 + 2 * a + 4 * n)) * Po(1, 1 + n) * Po(a, 1 + n) /
          (Po(half + a, n) * Po(-half + a, n))));

  out.push_back(make(
      "example6", "Pair of 8F7 series at 1: the sum formula at l = 3/2", {{"a", C_}, {"n", N_}},
      Fv(cat({1, q(3, 2), (5 - 2 * a) / Rational(4), (7 - 2 * a) / Rational(8), (11 - 2 * a) / Rational(8)}, ex_p8()),
         cat({half, (5 + 2 * a) / Rational(4), (7 + 2 * a) / Rational(8), (11 + 2 * a) / Rational(8)}, ex_q8()), 1) /
              E(3 + 2 * a) -
          Fv(cat({1, q(3, 2), (3 - 2 * a) / Rational(4), (5 - 2 * a) / Rational(8), (9 - 2 * a) / Rational(8)}, ex_p8()),
             cat({half, (3 + 2 * a) / Rational(4), (5 + 2 * a) / Rational(8), (9 + 2 * a) / Rational(8)}, ex_q8()), 1) /
              E(3 - 2 * a),
      E(4) / (E(2 * a - 3 - 4 * n) * E(3 + 2 * a + 8 * n)) * Po(1, 1 + n) * Po(a, 1 + n) /
          (Po(q(3, 2) + a, n) * Po(q(-3, 2) + a, n))));

  out.push_back(make(
      "thm4", "6Psi7 at -1 with half-integer stretch coefficients, dual to a 7F6 summation",
      {{"a", C_}, {"b", C_}, {"c", C_}, {"n", N_}},
      Psi({fw(1, 1), fw(q(3, 2), 1), fw(half - a + b, half), fw(a + n, half), fw(b - a, -half), fw(-half + a + n, -half)},
          {fw(1 + n, -1), fw(2 + n, 1), fw(half, 1), fw(1 + a - c, half), fw(half - a + b + c, half),
           fw(half + a - c, -half), fw(b + c - a, -half)},
          -1),
      E(2) * Po(half + 2 * a - b - c, n) * Po(b, n) * Po(c, n) / (Po(1, n) * Po(1 + 2 * a - 2 * b, n)) *
          G(2 * a - 1 + n) * G(2 * b - 2 * a) / (G(1 + 2 * a - 2 * c + n) * G(2 * b + 2 * c - 2 * a + n))));

  out.push_back(make("cor3", "4Psi5 at -1: the limit b to infinity of the 6Psi7 summation", {{"a", C_}, {"c", C_}, {"n", N_}},
                     Psi({fw(1, 1), fw(q(3, 2), 1), fw(a + n, half), fw(-half + a + n, -half)},
                         {fw(1 + n, -1), fw(2 + n, 1), fw(half, 1), fw(1 + a - c, half), fw(half + a - c, -half)}, -1),
                     pow(2, 1 - 2 * c - 2 * n) * Po(c, n) / Po(1, n) * G(2 * a - 1 + n) / G(1 + 2 * a - 2 * c + n)));

  out.push_back(make(
      "cor4", "Terminating hypergeometric series at 1 with m-fold parameter families, c = 1-m-n in the 6Psi7 summation",
      {{"a", C_}, {"m", N_}, {"n", N_}},
      F({plain(1), plain(q(3, 2)), family(2 * a + 2 * n + 2 * i - 2, 1, m), family(3 - 2 * a - 2 * n - 2 * i, 1, m), plain(-n)},
        {plain(half), family(2 * a + 2 * n + 2 * i - 1, 1, m), family(4 - 2 * a - 2 * n - 2 * i, 1, m), plain(2 + n)}, 1),
      sign(n) * Po(2, n) * Po(m, n) / (Po(2 * a - 1 + n, n) * Po(2 * a - 1 + 2 * m + 2 * n, n)),
      {UpperBound{"m", 4}}));

  out.push_back(make(
      "thm5", "7Psi6 at 1/4 dual to the 6F5 evaluation", {{"a", C_}, {"b", C_}, {"n", N_}},
      Psi({fw(1, 1), fw(q(3, 2), 1), fw(1 - a - b, 1), fw(b - a, 1), fw(a + n, 1), fw((1 - a - b) / Rational(2), -half),
           fw((b - a) / Rational(2), -half)},
          {fw(1 + n, -1), fw(2 + n, 1), fw(2 - a - n, 1), fw(half, 1), fw((1 - a - b) / Rational(2), half),
           fw((b - a) / Rational(2), half)},
          q(1, 4)),
      Po(b, n) * Po(1 - b, n) / (Po(a + b, n) * Po(1 + a - b, n)) * G(a + n) * G(1 - a - b) * G(b - a) /
          (E(2) * G(1 + n) * G(2 - a))));

  out.push_back(make(
      "cor5", "Terminating hypergeometric series at 1 with m-fold families: b = -2m in the 7Psi6 summation",
      {{"a", C_}, {"m", N_}, {"n", N_}},
      F({plain(1), plain(q(3, 2)), family(1 - a + 2 * i, 0, m), family(a + 2 * i, 1, m), family(1 - a - 2 * i, 1, m),
         family(2 + a - 2 * i, 1, m), plain(a + n), plain(-n)},
        {plain(half), family(1 + a + 2 * i, 0, m), family(-a + 2 * i, 1, m), family(1 + a - 2 * i, 1, m),
         family(2 - a - 2 * i, 1, m), plain(2 - a - n), plain(2 + n)},
        1),
      sign(n) * Po(-2 * m, n) * Po(1 + 2 * m, n) * Po(2, n) / (Po(a - 1, n) * Po(a - 2 * m, n) * Po(1 + a + 2 * m, n)),
      {UpperBound{"m", 4}}));

  out.push_back(make("dougall-5f4-special", "5F4 at 1: the 5Psi6 summation at l = 0, a terminating Dougall case",
                     {{"a", C_}, {"n", N_}},
                     F({1, q(3, 2), half - a, 1 + 2 * a + n, -n}, {half, q(3, 2) + a, 1 - 2 * a - n, 2 + n}, 1),
                     E(1 + 2 * a) / E(1 + 2 * a + 2 * n) * Po(2, n) / Po(2 * a, n)));

  out.push_back(make("dougall-4f3-special", "4F3 at -1: the 7Psi6 summation as b goes to infinity",
                     {{"a", C_}, {"n", N_}}, F({1, q(3, 2), a + n, -n}, {half, 2 - a - n, 2 + n}, -1),
                     sign(n) * Po(2, n) / Po(a - 1, n)));

  return out;
}

std::map<std::string, std::vector<std::string>> builtin_neighbors() {
  return {
      {"whipple", {"whipple-terminating"}},
      {"whipple-terminating", {"whipple", "thm1"}},
      {"dougall", {"dougall-terminating", "dougall-4f3-limit"}},
      {"dougall-terminating", {"dougall", "dougall-5f4-special"}},
      {"dougall-4f3-limit", {"dougall", "dougall-4f3-special"}},
      {"dixon", {"sixf5-evaluation", "sixf5-transform"}},
      {"sixf5-transform", {"dixon", "sixf5-evaluation"}},
      {"sixf5-evaluation", {"sixf5-transform", "dixon", "thm5"}},
      {"chu-shift-denominator", {"whipple-terminating", "thm2"}},
      {"chu-shift-numerator", {"whipple-terminating", "thm3"}},
      {"thm1", {"whipple-terminating", "thm2", "thm3", "example1", "example2", "dougall-5f4-special"}},
      {"example1", {"thm1"}},
      {"example2", {"thm1"}},
      {"thm2", {"thm1", "chu-shift-denominator"}},
      {"thm3", {"thm1", "chu-shift-numerator"}},
      {"cor1", {"example3", "example4"}},
      {"cor2", {"example5", "example6"}},
      {"example3", {"cor1"}},
      {"example4", {"cor1"}},
      {"example5", {"cor2"}},
      {"example6", {"cor2"}},
      {"thm4", {"cor3", "cor4"}},
      {"cor3", {"thm4"}},
      {"cor4", {"thm4"}},
      {"thm5", {"cor5", "sixf5-evaluation", "dougall-4f3-special"}},
      {"cor5", {"thm5"}},
      {"dougall-5f4-special", {"thm1", "dougall-terminating"}},
      {"dougall-4f3-special", {"thm5", "dougall-4f3-limit"}},
  };
}

}  // namespace fwid
