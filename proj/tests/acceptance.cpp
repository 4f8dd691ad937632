// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "fwid/catalog.hpp"
#include "fwid/harness.hpp"
#include "fwid/inversion.hpp"
#include "fwid/notation.hpp"
#include "fwid/numerics.hpp"
#include "fwid/report.hpp"
#include "test_util.hpp"
#include "tree_gen.hpp"

using namespace fwid;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const Catalog& cat() { return Catalog::builtin(); }

TrialConfig config(const std::string& name, std::uint64_t trials, double tol, std::int64_t n_max = 12,
                   std::int64_t m_max = 4, std::uint64_t seed = 1) {
  TrialConfig c;
  c.identity = name;
  c.trials = trials;
  c.tol = tol;
  c.n_max = n_max;
  c.m_max = m_max;
  c.seed = seed;
  return c;
}

// Runs the harness and records "name P/T max_err" in the detail text.
void verify_all_pass(Check& chk, const TrialConfig& cfg) {
  VerificationReport r = verify_identity(cfg);
  const auto& a = r.aggregate;
  chk.detail << " " << cfg.identity << " " << a.passed << "/" << a.trials << " max " << fmt("%.1e", a.max_rel_err)
             << ";";
  chk.require(a.passed == a.trials, cfg.identity + " not all trials pass");
}

std::vector<Binding> sample(const std::string& name, std::size_t count, std::uint64_t seed,
                            std::int64_t n_max = 12, std::int64_t m_max = 4) {
  TrialConfig c = config(name, count, 1e-8, n_max, m_max, seed);
  std::vector<Binding> out;
  for (std::uint64_t t = 0; t < count; ++t) out.push_back(sample_binding(cat().get(name), c, t));
  return out;
}

Complex side(const std::string& name, Side s, const Binding& b) { return cat().eval_side(name, s, b); }

// Series nodes of an expression in pre-order.
void collect_series(const Expr& e, std::vector<const SeriesSpec*>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SeriesNode>) {
          out.push_back(&n.spec);
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          collect_series(n.lhs, out);
          collect_series(n.rhs, out);
        } else if constexpr (std::is_same_v<T, NegNode>) {
          collect_series(n.operand, out);
        } else if constexpr (std::is_same_v<T, PowerNode>) {
          collect_series(n.base, out);
        } else if constexpr (std::is_same_v<T, SumNode>) {
          collect_series(n.body, out);
        }
      },
      e.node().v);
}

Complex term_ratio(const SeriesSpec& s, const Binding& b, std::uint64_t k) {
  return (series_term(s, b, k) / series_term(s, b, 0)).value<Complex>();
}

Check gamma_kernel() {
  Check chk;
  std::mt19937_64 g(1);
  std::uniform_real_distribution<double> re(-8, 8), im(-4, 4);
  int checked = 0;
  double worst = 0;
  while (checked < 1000) {
    Complex z(re(g), im(g));
    if (pole_distance(z) < 1e-3 || pole_distance(z + 0.5) < 1e-3 || pole_distance(1.0 - z) < 1e-3 ||
        pole_distance(2.0 * z) < 1e-3)
      continue;
    ++checked;
    worst = std::max({worst, rel_diff(gamma(z + 1.0), z * gamma(z)),
                      rel_diff(gamma(z) * gamma(1.0 - z), M_PI / std::sin(M_PI * z)),
                      rel_diff(gamma(z) * gamma(z + 0.5), std::pow(2.0, 1.0 - 2.0 * z) * std::sqrt(M_PI) * gamma(2.0 * z))});
  }
  chk.detail << " 1000 points, worst rel " << fmt("%.2e", worst);
  chk.require(worst < 1e-10, "rel 1e-10");
  return chk;
}

Check whipple_terminating() {
  Check chk;
  verify_all_pass(chk, config("whipple-terminating", 500, 1e-10));
  return chk;
}

Check theorem1() {
  Check chk;
  verify_all_pass(chk, config("thm1", 500, 1e-8));

  // At l = 0 the Fox-Wright series is a constant C0 times the terminating Dougall
  // 5F4 with (a, b, c) = (1, 1/2-a, 1+2a+n).
  double worst = 0;
  int used = 0;
  for (const Binding& base : sample("dougall-5f4-special", 200, 3)) {
    if (used == 100) break;
    const Complex a = base.at("a");
    const long n = base.integer("n");
    const Complex nn(static_cast<double>(n), 0);
    std::vector<Complex> num{{1, 0}, {1.5, 0}, -a, 0.5 - a, 1.0 + 2.0 * a + nn};
    std::vector<Complex> den{1.0 + nn, 2.0 + nn, {0.5, 0}, 1.0 + a, 1.5 + a, 1.0 - 2.0 * a - nn};
    bool near_pole = false;
    for (const auto& x : num) near_pole |= pole_distance(x) < 1e-3;
    for (const auto& x : den) near_pole |= pole_distance(x) < 1e-3;
    if (near_pole) continue;
    const Complex c0 = gamma_quotient(num, den).value<Complex>();

    Binding t1 = base;
    t1.set("l", 0);
    Binding dt;
    dt.set("a", 1);
    dt.set("b", 0.5 - a);
    dt.set("c", 1.0 + 2.0 * a + nn);
    dt.set_integer("n", n);
    const Complex dougall_closed = side("dougall-terminating", Side::Rhs, dt);
    worst = std::max({worst, rel_diff(side("thm1", Side::Lhs, t1) / c0, side("dougall-terminating", Side::Lhs, dt)),
                      rel_diff(side("thm1", Side::Rhs, t1) / c0, dougall_closed),
                      rel_diff(side("dougall-5f4-special", Side::Lhs, base), dougall_closed)});
    ++used;
  }
  chk.detail << " l=0 chain on " << used << " bindings, worst rel " << fmt("%.2e", worst);
  chk.require(used == 100, "100 bindings");
  chk.require(worst < 1e-8, "l=0 chain within 1e-8");
  return chk;
}

Check theorems2_3() {
  Check chk;
  verify_all_pass(chk, config("thm2", 300, 1e-7, 10, 4));
  verify_all_pass(chk, config("thm3", 300, 1e-7, 10, 4));

  // At m = 0 the stretch-(2+4l) pair evaluates to 1/2, so both sides are half the single sum.
  double worst = 0;
  for (const Binding& base : sample("thm1", 100, 4, 10)) {
    Binding b = base;
    b.set_integer("m", 0);
    for (Side s : {Side::Lhs, Side::Rhs}) {
      const Complex t1 = side("thm1", s, base);
      worst = std::max({worst, rel_diff(2.0 * side("thm2", s, b), t1), rel_diff(2.0 * side("thm3", s, b), t1)});
    }
  }
  chk.detail << " m=0 vs single sum (factor 2) worst rel " << fmt("%.2e", worst);
  chk.require(worst < 1e-9, "m=0 within 1e-9");
  return chk;
}

// Termwise ratios T_k/T_0 of matching series nodes in a specialization and its parent.
double termwise(const std::string& child, const std::string& parent, const char* sym, double value) {
  std::vector<const SeriesSpec*> cs, ps;
  for (Side s : {Side::Lhs, Side::Rhs}) {
    collect_series(cat().get(child).side(s), cs);
    collect_series(cat().get(parent).side(s), ps);
  }
  if (cs.size() != ps.size() || cs.empty()) return INFINITY;
  double worst = 0;
  for (const Binding& cb : sample(child, 50, 5)) {
    Binding pb = cb;
    pb.set(sym, value);
    const auto n = static_cast<std::uint64_t>(cb.integer("n"));
    for (std::size_t j = 0; j < cs.size(); ++j)
      for (std::uint64_t k = 1; k <= n; ++k)
        worst = std::max(worst, rel_diff(term_ratio(*cs[j], cb, k), term_ratio(*ps[j], pb, k)));
  }
  return worst;
}

Check corollaries1_2() {
  Check chk;
  verify_all_pass(chk, config("cor1", 300, 1e-8));
  verify_all_pass(chk, config("cor2", 300, 1e-8));
  struct Pair {
    const char* child;
    const char* parent;
    double l;
  };
  for (const Pair& p : {Pair{"example3", "cor1", 0.5}, Pair{"example4", "cor1", 1.5}, Pair{"example5", "cor2", 0.5},
                        Pair{"example6", "cor2", 1.5}}) {
    double w = termwise(p.child, p.parent, "l", p.l);
    chk.detail << " " << p.child << " termwise " << fmt("%.1e", w) << ";";
    chk.require(w < 1e-9, std::string(p.child) + " termwise");
  }
  return chk;
}

Check theorems4_5() {
  Check chk;
  for (const char* name : {"thm4", "cor3", "cor4", "thm5", "cor5"}) verify_all_pass(chk, config(name, 300, 1e-8, 12, 3));

  // thm4 divided by its k-independent gamma ratio tends to cor3 as b grows; the bare
  // b^(2c) scaling has the same limit with an O(1/b) error and is reported alongside.
  const double bs[] = {1e2, 1e3, 1e4};
  double err[3] = {0, 0, 0}, err_pow[3] = {0, 0, 0};
  for (const Binding& cb : sample("cor3", 20, 6)) {
    const Complex limit = side("cor3", Side::Lhs, cb);
    const Complex a = cb.at("a"), c = cb.at("c");
    for (int j = 0; j < 3; ++j) {
      const Complex b(bs[j], 0);
      Binding tb = cb;
      tb.set("b", b);
      const Complex v = side("thm4", Side::Lhs, tb);
      const Complex scale = gamma_quotient<Complex>({0.5 - a + b + c, b + c - a}, {0.5 - a + b, b - a}).value<Complex>();
      err[j] = std::max(err[j], rel_diff(scale * v, limit));
      err_pow[j] = std::max(err_pow[j], rel_diff(std::pow(b, 2.0 * c) * v, limit));
    }
  }
  chk.detail << " limit err";
  for (int j = 0; j < 3; ++j)
    chk.detail << " b=" << fmt("%.0e", bs[j]) << " " << fmt("%.1e", err[j]) << " (b^2c " << fmt("%.1e", err_pow[j])
               << ")";
  chk.require(err[2] < 1e-3, "limit error below 1e-3 at b=1e4");
  chk.require(err[0] > err[1] && err[1] > err[2], "limit error decreasing in b");
  return chk;
}

Check classical() {
  Check chk;
  for (const char* name : {"whipple", "whipple-terminating", "dougall", "dougall-terminating", "dixon",
                           "dougall-4f3-limit", "sixf5-transform", "sixf5-evaluation", "chu-shift-denominator",
                           "chu-shift-numerator"})
    verify_all_pass(chk, config(name, 200, 1e-8));
  return chk;
}

Check inversion() {
  Check chk;
  std::mt19937_64 g(8);
  std::uniform_real_distribution<double> re(-3, 3), im(-1, 1), unit(-1, 1);
  const unsigned n_max = 10;
  int rejected = 0;
  double worst = 0;
  for (int t = 0; t < 300;) {
    InversionContext ctx{{re(g), im(g)}, {re(g), im(g)}, {re(g), im(g)}};
    if (guard_margin(ctx, n_max) < kDefaultGuard) {
      ++rejected;
      continue;
    }
    std::vector<Complex> seq(n_max + 1);
    for (auto& v : seq) v = Complex(unit(g), unit(g));
    worst = std::max(worst, roundtrip_error(seq, ctx, n_max));
    ++t;
  }
  chk.detail << " 300 contexts, worst roundtrip " << fmt("%.2e", worst) << " (" << rejected << " rejected by guard);";
  chk.require(worst <= 1e-8, "roundtrip 1e-8");
  chk.require(guard_margin({{1, 0}, {0, 0}, {0, 0}}, n_max) < kDefaultGuard, "zero z rejected");
  chk.require(guard_margin({{-2, 0}, {0.5, 0}, {1, 0}}, n_max) < kDefaultGuard, "vanishing x+zn rejected");

  // The single-sum summation arises from forward-transforming a Whipple-type sequence g
  // with x = 1+2a, y = 2a-2l, z = 1+2l. The alternating sum cancels heavily, so g, f and
  // the transform are formed in binary128 as roundtrip_error does.
  double chain = 0;
  int used = 0;
  const unsigned n_chain = 12;
  std::mt19937_64 h(9);
  while (used < 50) {
    const Complex ad(re(h), im(h)), ld(re(h), im(h));
    InversionContext ctx{1.0 + 2.0 * ad, 2.0 * ad - 2.0 * ld, 1.0 + 2.0 * ld};
    if (guard_margin(ctx, n_chain) < 1e-3) continue;
    const QuadComplex a = lift<QuadComplex>(ad), l = lift<QuadComplex>(ld), one(1), two(2);
    std::vector<QuadComplex> gs(n_chain + 1), fs(n_chain + 1);
    bool bad = false;
    for (unsigned k = 0; k <= n_chain; ++k) {
      const QuadComplex kk{static_cast<double>(k)};
      const QuadComplex d1 = one + two * a + two * l * kk + two * kk, d2 = two * a - two * l - two * l * kk;
      const QuadComplex e1 = two * a - two * l - two * l * kk - kk, e2 = pochhammer(l - a + l * kk, k),
                        e3 = pochhammer(one + two * a + two * l * kk + kk, k + 1);
      for (const QuadComplex& d : {d1, d2, e1, e2, e3}) bad |= std::abs(lower(d)) < 1e-3;
      gs[k] = pochhammer(one, k) * pochhammer(one + two * a - l, k) / (d1 * d2);
      fs[k] = pochhammer(one, k) / e1 * pochhammer(one + a + l * kk, k) *
              pochhammer(two * l - two * a + two * l * kk + kk, k) / (e2 * e3);
    }
    if (bad) continue;
    ++used;
    for (unsigned n = 0; n <= n_chain; ++n)
      chain = std::max(chain, rel_diff(lower(forward_transform(gs, ctx, n)), lower(fs[n])));
  }
  chk.detail << " proof chain on " << used << " bindings, worst rel " << fmt("%.2e", chain);
  chk.require(chain < 1e-8, "forward image of g equals f");
  return chk;
}

Check notation() {
  Check chk;
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(FWID_CORPUS_DIR))
    if (entry.path().extension() == ".fwid") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  chk.require(files.size() == kRegistrySize, "one corpus file per registry entry");

  int fixpoints = 0;
  double worst = 0;
  for (const auto& path : files) {
    try {
      Identity id = load_identity_file(path.string());
      const std::string text = print_identity(id);
      Identity back = parse_identity(text);
      if (back == id && print_identity(back) == text) ++fixpoints;
      else chk.require(false, path.filename().string() + " fixpoint");
      for (const Binding& b : sample(id.name, 20, 10))
        for (Side s : {Side::Lhs, Side::Rhs}) worst = std::max(worst, rel_diff(eval_side(id, s, b), side(id.name, s, b)));
    } catch (const std::exception& e) {
      chk.require(false, path.filename().string() + ": " + e.what());
    }
  }
  int trees = 0;
  fwid_test::TreeGen gen(2025);
  for (int t = 0; t < 200; ++t) {
    Expr e = gen.tree(4);
    const std::string text = print_expr(e);
    Expr back = parse_expr(text);
    if (back == e && print_expr(back) == text) ++trees;
  }
  chk.detail << " corpus fixpoints " << fixpoints << "/" << files.size() << ", random trees " << trees
             << "/200, corpus vs registry worst rel " << fmt("%.2e", worst);
  chk.require(trees == 200, "random tree fixpoint");
  chk.require(worst < 1e-12, "corpus agrees with registry");
  return chk;
}

Check reproducibility() {
  Check chk;
  TrialConfig base;
  base.seed = 42;
  const std::string first = strip_wall_time(to_json(verify_all(base)));
  const std::string second = strip_wall_time(to_json(verify_all(base)));
  const std::string serial = strip_wall_time(to_json(verify_all(base, cat(), 1)));
  chk.require(first == second, "two seeded runs identical");
  chk.require(first == serial, "serial equals parallel");

  auto t0 = std::chrono::steady_clock::now();
  verify_all(TrialConfig{});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  chk.detail << " json " << first.size() << " bytes, repeat " << (first == second ? "identical" : "differs")
             << ", serial " << (first == serial ? "identical" : "differs") << ", default run " << fmt("%.1f", secs)
             << " s";
  chk.require(secs < 60, "default run under 60 s");
  return chk;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {"gamma kernel equations", gamma_kernel},
      {"terminating Whipple 3F2", whipple_terminating},
      {"single-sum Fox-Wright summation", theorem1},
      {"double-sum summations", theorems2_3},
      {"reciprocal formulas", corollaries1_2},
      {"half-stretch and quarter-argument summations", theorems4_5},
      {"classical summations", classical},
      {"inversion pair", inversion},
      {"notation roundtrip", notation},
      {"harness reproducibility", reproducibility},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << " exception: " << e.what();
    }
    if (!c.ok) ++failures;
    std::printf("%s  criterion %zu  %s:%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].title, c.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
