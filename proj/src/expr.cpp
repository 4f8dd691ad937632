#include "fwid/expr.hpp"

#include <cmath>

#include "fwid/compensated_sum.hpp"

namespace fwid {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr std::int64_t kMaxFoldedPower = 16;

std::shared_ptr<const Expr::Node> make(auto&& payload) {
  return std::make_shared<const Expr::Node>(Expr::Node{std::forward<decltype(payload)>(payload)});
}

}  // namespace

Expr::Expr() : node_(make(ParamNode{ParamExpr()})) {}

Expr Expr::param(ParamExpr p) { return Expr(make(ParamNode{std::move(p)})); }
Expr Expr::gamma(ParamExpr arg) { return Expr(make(GammaNode{std::move(arg)})); }
Expr Expr::poch(ParamExpr base, ParamExpr count) { return Expr(make(PochNode{std::move(base), std::move(count)})); }
Expr Expr::neg_one_pow(ParamExpr exponent) { return Expr(make(NegOnePowNode{std::move(exponent)})); }
Expr Expr::series(SeriesSpec spec) { return Expr(make(SeriesNode{std::move(spec)})); }

Expr Expr::sum(std::string index, ParamExpr upper, Expr body) {
  return Expr(make(SumNode{std::move(index), std::move(upper), std::move(body)}));
}

Expr Expr::power(Expr base, ParamExpr exponent) {
  if (const ParamExpr* p = base.as_param()) {
    if (*p == ParamExpr(-1)) return neg_one_pow(std::move(exponent));
    if (exponent.is_constant() && p->terms().size() <= 1) {
      const Rational k = exponent.constant();
      if (k.is_integer() && k.num() >= 0 && k.num() <= kMaxFoldedPower) {
        ParamExpr out(1);
        for (std::int64_t i = 0; i < k.num(); ++i) out *= *p;
        return param(out);
      }
    }
  }
  return Expr(make(PowerNode{std::move(base), std::move(exponent)}));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  const ParamExpr* a = lhs.as_param();
  const ParamExpr* b = rhs.as_param();
  if (a && b) {
    switch (op) {
      case BinaryOp::Add: return param(*a + *b);
      case BinaryOp::Sub: return param(*a - *b);
      case BinaryOp::Mul:
        // Products of sums stay as tree nodes so factors remain visible.
        if (a->is_constant() || b->is_constant() || (a->terms().size() == 1 && b->terms().size() == 1))
          return param(*a * *b);
        break;
      case BinaryOp::Div:
        if (b->is_constant() && !b->constant().is_zero()) return param(*a / b->constant());
        break;
    }
  }
  return Expr(make(BinaryNode{op, std::move(lhs), std::move(rhs)}));
}

Expr Expr::neg(Expr operand) {
  if (const ParamExpr* p = operand.as_param()) return param(-*p);
  return Expr(make(NegNode{std::move(operand)}));
}

const ParamExpr* Expr::as_param() const {
  const auto* p = std::get_if<ParamNode>(&node_->v);
  return p ? &p->value : nullptr;
}

bool operator==(const Expr& a, const Expr& b) { return a.node_ == b.node_ || *a.node_ == *b.node_; }

std::int64_t exact_index(const ParamExpr& p, const Binding& b, const char* what) {
  const auto v = p.exact(b);
  if (!v || !v->is_integer()) throw EvaluationError(std::string(what) + " '" + p.to_string() + "' is not an exact integer");
  return v->num();
}

template <class C>
SignedLog<real_of<C>> evaluate_log(const Expr& e, const Binding& b) {
  using R = real_of<C>;
  using SL = SignedLog<R>;
  return std::visit(
      Overloaded{
          [&](const ParamNode& n) { return SL::from_value(n.value.template evaluate<C>(b)); },
          [&](const GammaNode& n) {
            const C lg = log_gamma(n.arg.template evaluate<C>(b));
            return SL::from_log(lg.real(), lg.imag());
          },
          [&](const PochNode& n) {
            const std::int64_t count = exact_index(n.count, b, "Pochhammer length");
            if (count < 0) throw EvaluationError("negative Pochhammer length " + std::to_string(count));
            return SL::from_value(pochhammer(n.base.template evaluate<C>(b), static_cast<std::uint64_t>(count)));
          },
          [&](const PowerNode& n) {
            const SL base = evaluate_log<C>(n.base, b);
            const auto k = n.exponent.exact(b);
            if (base.is_zero()) {
              if (k && k->is_zero()) return SL::one();
              if (k && k->num() > 0) return SL::zero();
              throw EvaluationError("zero raised to a non-positive power");
            }
            if (k && k->is_integer()) {
              const R kk = R(static_cast<double>(k->num()));
              return SL::from_log(base.log_magnitude() * kk, base.phase() * kk);
            }
            const C w = n.exponent.template evaluate<C>(b) * C(base.log_magnitude(), base.phase());
            return SL::from_log(w.real(), w.imag());
          },
          [&](const NegOnePowNode& n) {
            const std::int64_t k = exact_index(n.exponent, b, "sign exponent");
            return (k % 2 == 0) ? SL::one() : SL::one().negated();
          },
          [&](const SumNode& n) {
            const std::int64_t upper = exact_index(n.upper, b, "summation bound");
            CompensatedSum<C> acc;
            Binding inner = b;
            for (std::int64_t i = 0; i <= upper; ++i) {
              inner.set_integer(n.index, i);
              acc += evaluate_log<C>(n.body, inner).template value<C>();
            }
            return SL::from_value(acc.value());
          },
          [&](const SeriesNode& n) {
            return SL::from_value(bound_eval(bind_series<C>(n.spec, b), kDefaultSeriesTol));
          },
          [&](const BinaryNode& n) {
            const SL l = evaluate_log<C>(n.lhs, b);
            const SL r = evaluate_log<C>(n.rhs, b);
            switch (n.op) {
              case BinaryOp::Add: return SL::from_value(l.template value<C>() + r.template value<C>());
              case BinaryOp::Sub: return SL::from_value(l.template value<C>() - r.template value<C>());
              case BinaryOp::Mul: return l * r;
              case BinaryOp::Div: return l / r;
            }
            throw EvaluationError("unknown operator");
          },
          [&](const NegNode& n) { return evaluate_log<C>(n.operand, b).negated(); },
      },
      e.node().v);
}

template SignedLog<double> evaluate_log<Complex>(const Expr&, const Binding&);
template SignedLog<QuadReal> evaluate_log<QuadComplex>(const Expr&, const Binding&);

Complex evaluate(const Expr& e, const Binding& b) {
  return lower(evaluate_log<QuadComplex>(e, b).value<QuadComplex>());
}

namespace {

constexpr std::uint64_t kScanTermsNonterminating = 64;

void scan(const Expr& e, const Binding& b, bool denominator, ExprStats& st) {
  auto note = [&](double d) { st.min_pole_distance = std::min(st.min_pole_distance, d); };
  std::visit(
      Overloaded{
          [&](const ParamNode& n) {
            const auto x = n.value.exact(b);
            if (!x) {
              note(std::abs(n.value.evaluate<Complex>(b)));
            } else if (x->is_zero() && denominator) {
              note(0.0);
            }
          },
          [&](const GammaNode& n) {
            const auto x = n.arg.exact(b);
            if (!x) {
              note(pole_distance(n.arg.evaluate<Complex>(b)));
            } else if (x->is_integer() && x->num() <= 0) {
              note(0.0);
            }
          },
          [&](const PochNode& n) {
            const std::int64_t count = exact_index(n.count, b, "Pochhammer length");
            const auto x = n.base.exact(b);
            if (x) {
              if (denominator && x->is_integer() && x->num() <= 0 && -x->num() < count) note(0.0);
              return;
            }
            const Complex base = n.base.evaluate<Complex>(b);
            for (std::int64_t j = 0; j < count; ++j) note(std::abs(base + static_cast<double>(j)));
          },
          [&](const PowerNode& n) { scan(n.base, b, denominator, st); },
          [&](const NegOnePowNode&) {},
          [&](const SumNode& n) {
            const std::int64_t upper = exact_index(n.upper, b, "summation bound");
            Binding inner = b;
            for (std::int64_t i = 0; i <= upper; ++i) {
              inner.set_integer(n.index, i);
              scan(n.body, inner, denominator, st);
            }
          },
          [&](const SeriesNode& n) {
            const auto s = bind_series<Complex>(n.spec, b);
            const auto K = bound_termination(s);
            const std::uint64_t terms = K ? *K + 1 : std::min(kScanTermsNonterminating, s.max_terms);
            st.max_series_terms = std::max(st.max_series_terms, terms);
            note(bound_min_pole_distance(s, terms));
          },
          [&](const BinaryNode& n) {
            scan(n.lhs, b, denominator, st);
            scan(n.rhs, b, n.op == BinaryOp::Div ? !denominator : denominator, st);
          },
          [&](const NegNode& n) { scan(n.operand, b, denominator, st); },
      },
      e.node().v);
}

void collect(const ParamExpr& p, const std::set<std::string>& bound, std::set<std::string>& out) {
  for (const auto& s : p.symbols())
    if (!bound.count(s)) out.insert(s);
}

void collect_entries(const std::vector<SeriesEntry>& list, const std::set<std::string>& bound,
                     std::set<std::string>& out) {
  for (const auto& en : list) {
    std::set<std::string> inner = bound;
    if (en.family) {
      collect(en.family->first, bound, out);
      collect(en.family->last, bound, out);
      inner.insert(en.family->index);
    }
    collect(en.offset, inner, out);
    collect(en.coeff, inner, out);
  }
}

void collect(const Expr& e, const std::set<std::string>& bound, std::set<std::string>& out) {
  std::visit(Overloaded{
                 [&](const ParamNode& n) { collect(n.value, bound, out); },
                 [&](const GammaNode& n) { collect(n.arg, bound, out); },
                 [&](const PochNode& n) {
                   collect(n.base, bound, out);
                   collect(n.count, bound, out);
                 },
                 [&](const PowerNode& n) {
                   collect(n.base, bound, out);
                   collect(n.exponent, bound, out);
                 },
                 [&](const NegOnePowNode& n) { collect(n.exponent, bound, out); },
                 [&](const SumNode& n) {
                   collect(n.upper, bound, out);
                   std::set<std::string> inner = bound;
                   inner.insert(n.index);
                   collect(n.body, inner, out);
                 },
                 [&](const SeriesNode& n) {
                   collect_entries(n.spec.numerator, bound, out);
                   collect_entries(n.spec.denominator, bound, out);
                   collect(n.spec.argument, bound, out);
                 },
                 [&](const BinaryNode& n) {
                   collect(n.lhs, bound, out);
                   collect(n.rhs, bound, out);
                 },
                 [&](const NegNode& n) { collect(n.operand, bound, out); },
             },
             e.node().v);
}

}  // namespace

void scan_expr(const Expr& e, const Binding& b, ExprStats& stats) { scan(e, b, false, stats); }

std::set<std::string> free_symbols(const Expr& e) {
  std::set<std::string> out;
  collect(e, {}, out);
  return out;
}

}  // namespace fwid
