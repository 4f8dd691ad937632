#include "fwid/series.hpp"

#include <algorithm>
#include <cmath>

#include "fwid/compensated_sum.hpp"

namespace fwid {

namespace {

constexpr double kNumericZero = 1e-12;
constexpr int kTailRun = 10;

template <class C>
C from_int(std::uint64_t j) {
  return C(static_cast<double>(j));
}

// Whether the Pochhammer factor (x + j) vanishes.
template <class C>
bool factor_zero(const BoundEntry<C>& e, std::uint64_t j) {
  using std::abs;
  if (e.exact_offset) return (*e.exact_offset + Rational(static_cast<std::int64_t>(j))).is_zero();
  return abs(e.offset + from_int<C>(j)) < real_of<C>(kNumericZero);
}

template <class C>
std::optional<std::uint64_t> first_zero(const std::vector<BoundEntry<C>>& entries, std::uint64_t below) {
  std::optional<std::uint64_t> best;
  for (const auto& e : entries) {
    if (e.exact_offset) {
      const Rational& r = *e.exact_offset;
      if (r.is_integer() && r.num() <= 0 && static_cast<std::uint64_t>(-r.num()) < below) {
        const auto j = static_cast<std::uint64_t>(-r.num());
        if (!best || j < *best) best = j;
      }
      continue;
    }
    for (std::uint64_t j = 0; j < below && (!best || j < *best); ++j) {
      if (factor_zero(e, j)) {
        best = j;
        break;
      }
    }
  }
  return best;
}

template <class C>
SignedLog<real_of<C>> power_over_factorial(const C& z, std::uint64_t k) {
  using R = real_of<C>;
  using std::abs;
  using std::arg;
  using std::log;
  if (k == 0) return SignedLog<R>::one();
  if (z.real() == 0 && z.imag() == 0) return SignedLog<R>::zero();
  const R kk = R(static_cast<double>(k));
  const R log_fact = log_gamma(from_int<C>(k + 1)).real();
  return SignedLog<R>::from_log(kk * R(log(abs(z))) - log_fact, kk * R(arg(z)));
}

template <class C>
C entry_arg(const BoundEntry<C>& e, std::uint64_t k) {
  return e.offset + e.coeff * from_int<C>(k);
}

}  // namespace

std::vector<std::pair<ParamExpr, ParamExpr>> expand_entries(const std::vector<SeriesEntry>& entries,
                                                            const Binding& b) {
  std::vector<std::pair<ParamExpr, ParamExpr>> out;
  for (const auto& e : entries) {
    if (!e.family) {
      out.emplace_back(e.offset, e.coeff);
      continue;
    }
    const auto lo = e.family->first.exact(b);
    const auto hi = e.family->last.exact(b);
    if (!lo || !hi || !lo->is_integer() || !hi->is_integer())
      throw EvaluationError("family range over '" + e.family->index + "' is not integral");
    for (std::int64_t i = lo->num(); i <= hi->num(); ++i) {
      const ParamExpr iv(i);
      out.emplace_back(e.offset.substitute(e.family->index, iv), e.coeff.substitute(e.family->index, iv));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    const std::string kx = x.first.to_string() + ";" + x.second.to_string();
    const std::string ky = y.first.to_string() + ";" + y.second.to_string();
    return kx < ky;
  });
  return out;
}

template <class C>
BoundSeries<C> bind_series(const SeriesSpec& spec, const Binding& b) {
  BoundSeries<C> s;
  s.kind = spec.kind;
  s.max_terms = spec.max_terms;
  s.argument = spec.argument.template evaluate<C>(b);
  auto bind_list = [&](const std::vector<SeriesEntry>& in, std::vector<BoundEntry<C>>& out) {
    for (const auto& [offset, coeff] : expand_entries(in, b)) {
      out.push_back({offset.template evaluate<C>(b), coeff.template evaluate<C>(b), offset.exact(b), coeff.exact(b)});
    }
  };
  bind_list(spec.numerator, s.numerator);
  bind_list(spec.denominator, s.denominator);
  return s;
}

template <class C>
SignedLog<real_of<C>> bound_term(const BoundSeries<C>& s, std::uint64_t k) {
  using R = real_of<C>;
  if (s.kind == SeriesKind::FoxWright) {
    std::vector<C> num, den;
    num.reserve(s.numerator.size());
    den.reserve(s.denominator.size());
    for (const auto& e : s.numerator) num.push_back(entry_arg(e, k));
    for (const auto& e : s.denominator) den.push_back(entry_arg(e, k));
    return gamma_quotient(num, den) * power_over_factorial(s.argument, k);
  }
  const auto zn = first_zero(s.numerator, k);
  const auto zd = first_zero(s.denominator, k);
  if (zn && (!zd || *zn <= *zd)) return SignedLog<R>::zero();
  if (zd) throw DenominatorZeroError("denominator Pochhammer factor vanishes at index " + std::to_string(*zd));
  SignedLog<R> t = power_over_factorial(s.argument, k);
  for (const auto& e : s.numerator) t *= SignedLog<R>::from_value(pochhammer(e.offset, k));
  for (const auto& e : s.denominator) t /= SignedLog<R>::from_value(pochhammer(e.offset, k));
  return t;
}

template <class C>
std::optional<std::uint64_t> bound_termination(const BoundSeries<C>& s) {
  std::optional<std::uint64_t> best;
  auto consider = [&](std::uint64_t K) {
    if (!best || K < *best) best = K;
  };
  if (s.kind == SeriesKind::Hypergeometric) {
    for (const auto& e : s.numerator) {
      if (e.exact_offset && e.exact_offset->is_integer() && e.exact_offset->num() <= 0)
        consider(static_cast<std::uint64_t>(-e.exact_offset->num()));
    }
    return best;
  }
  for (const auto& e : s.denominator) {
    if (!e.exact_offset || !e.exact_coeff) continue;
    const Rational& beta = *e.exact_offset;
    const Rational& B = *e.exact_coeff;
    if (!beta.is_integer() || !B.is_integer() || B.num() >= 0) continue;
    if (beta.num() <= 0) {
      consider(0);
      continue;
    }
    const std::int64_t step = -B.num();
    consider(static_cast<std::uint64_t>((beta.num() + step - 1) / step - 1));
  }
  return best;
}

template <class C>
double bound_fw_condition(const BoundSeries<C>& s) {
  real_of<C> total = 1;
  for (const auto& e : s.denominator) total += e.coeff.real();
  for (const auto& e : s.numerator) total -= e.coeff.real();
  return static_cast<double>(total);
}

template <class C>
C bound_eval(const BoundSeries<C>& s, double tol, SeriesStats* stats) {
  using R = real_of<C>;
  using std::abs;
  const auto K = bound_termination(s);
  if (!K) {
    if (s.kind == SeriesKind::FoxWright) {
      if (!(bound_fw_condition(s) > 0) || abs(s.argument) > R(1))
        throw NotSummableError("Fox-Wright series neither terminates nor satisfies the convergence condition");
    } else if (!(abs(s.argument) < R(1))) {
      throw NotSummableError("hypergeometric series neither terminates nor has |z| < 1");
    }
  }
  CompensatedSum<C> sum;
  std::uint64_t used = 0;
  int small_run = 0;
  auto converged = [&](const C& t) {
    if (K) return false;
    small_run = (abs(t) < R(tol) * abs(sum.value())) ? small_run + 1 : 0;
    return small_run >= kTailRun;
  };
  auto capped = [&](std::uint64_t k) {
    if (k >= s.max_terms) {
      if (K) throw EvaluationError("termination index exceeds max_terms");
      throw TailNotConverged("series tail did not converge within " + std::to_string(s.max_terms) + " terms");
    }
  };

  if (s.kind == SeriesKind::FoxWright) {
    for (std::uint64_t k = 0;; ++k) {
      if (K && k > *K) break;
      capped(k);
      const C t = bound_term(s, k).template value<C>();
      sum += t;
      used = k + 1;
      if (converged(t)) break;
    }
  } else {
    C t(1);
    for (std::uint64_t k = 0;; ++k) {
      if (K && k > *K) break;
      capped(k);
      if (k > 0) {
        const std::uint64_t j = k - 1;
        bool num_zero = false;
        for (const auto& e : s.numerator) num_zero = num_zero || factor_zero(e, j);
        if (num_zero) break;
        for (const auto& e : s.denominator) {
          if (factor_zero(e, j))
            throw DenominatorZeroError("denominator Pochhammer factor vanishes at index " + std::to_string(j));
        }
        C ratio = s.argument / from_int<C>(k);
        for (const auto& e : s.numerator) ratio *= e.offset + from_int<C>(j);
        for (const auto& e : s.denominator) ratio /= e.offset + from_int<C>(j);
        t *= ratio;
      }
      sum += t;
      used = k + 1;
      if (converged(t)) break;
    }
  }
  if (stats) {
    stats->terms = used;
    stats->terminating = K.has_value();
  }
  return sum.value();
}

double bound_min_pole_distance(const BoundSeries<Complex>& s, std::uint64_t terms) {
  double best = INFINITY;
  if (s.kind == SeriesKind::FoxWright) {
    for (std::uint64_t k = 0; k < terms; ++k) {
      const auto scan = [&](const std::vector<BoundEntry<Complex>>& list, bool numerator) {
        for (const auto& e : list) {
          const bool exact = e.exact_offset && (k == 0 || e.exact_coeff);
          if (exact) {
            const Rational v = *e.exact_offset + (k == 0 ? Rational(0) : *e.exact_coeff * Rational(static_cast<std::int64_t>(k)));
            if (numerator && v.is_integer() && v.num() <= 0) best = 0.0;
            continue;
          }
          best = std::min(best, pole_distance(entry_arg(e, k)));
        }
      };
      scan(s.numerator, true);
      scan(s.denominator, false);
    }
    return best;
  }
  for (std::uint64_t j = 0; j + 1 < terms; ++j) {
    bool stop = false;
    for (const auto& e : s.numerator) {
      if (e.exact_offset) {
        stop = stop || factor_zero(e, j);
        continue;
      }
      best = std::min(best, std::abs(e.offset + static_cast<double>(j)));
    }
    if (stop) break;
    for (const auto& e : s.denominator) {
      if (e.exact_offset) {
        if (factor_zero(e, j)) best = 0.0;
        continue;
      }
      best = std::min(best, std::abs(e.offset + static_cast<double>(j)));
    }
  }
  return best;
}

template BoundSeries<Complex> bind_series<Complex>(const SeriesSpec&, const Binding&);
template BoundSeries<QuadComplex> bind_series<QuadComplex>(const SeriesSpec&, const Binding&);
template SignedLog<double> bound_term<Complex>(const BoundSeries<Complex>&, std::uint64_t);
template SignedLog<QuadReal> bound_term<QuadComplex>(const BoundSeries<QuadComplex>&, std::uint64_t);
template std::optional<std::uint64_t> bound_termination<Complex>(const BoundSeries<Complex>&);
template std::optional<std::uint64_t> bound_termination<QuadComplex>(const BoundSeries<QuadComplex>&);
template double bound_fw_condition<Complex>(const BoundSeries<Complex>&);
template double bound_fw_condition<QuadComplex>(const BoundSeries<QuadComplex>&);
template Complex bound_eval<Complex>(const BoundSeries<Complex>&, double, SeriesStats*);
template QuadComplex bound_eval<QuadComplex>(const BoundSeries<QuadComplex>&, double, SeriesStats*);

SignedLogValue series_term(const SeriesSpec& spec, const Binding& b, std::uint64_t k) {
  const auto t = bound_term(bind_series<QuadComplex>(spec, b), k);
  if (t.is_zero()) return SignedLogValue::zero();
  return SignedLogValue::from_log(lower(t.log_magnitude()), lower(t.phase()));
}

std::optional<std::uint64_t> termination_index(const SeriesSpec& spec, const Binding& b) {
  return bound_termination(bind_series<QuadComplex>(spec, b));
}

double fw_condition(const SeriesSpec& spec, const Binding& b) {
  if (spec.kind != SeriesKind::FoxWright) throw EvaluationError("fw_condition applies to Fox-Wright series only");
  return bound_fw_condition(bind_series<Complex>(spec, b));
}

Complex eval_series(const SeriesSpec& spec, const Binding& b, double tol) {
  return lower(bound_eval(bind_series<QuadComplex>(spec, b), tol));
}

}  // namespace fwid
