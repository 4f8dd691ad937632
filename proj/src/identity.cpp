#include "fwid/identity.hpp"

#include <algorithm>
#include <set>

namespace fwid {

std::string describe(const Constraint& c) {
  if (const auto* u = std::get_if<UpperBound>(&c)) return u->symbol + " <= " + std::to_string(u->bound);
  return "re(" + std::get<RePositive>(c).expr.to_string() + ") > 0";
}

void Identity::validate() const {
  auto require = [&](const std::set<std::string>& used, const std::string& where) {
    for (const auto& s : used) {
      if (!symbols.count(s)) throw SemanticError(name + ": undeclared symbol '" + s + "' in " + where);
    }
  };
  require(free_symbols(lhs), "lhs");
  require(free_symbols(rhs), "rhs");
  for (const auto& c : constraints) {
    if (const auto* u = std::get_if<UpperBound>(&c)) {
      require({u->symbol}, "constraints");
      if (symbols.at(u->symbol) != Domain::NonnegInt)
        throw SemanticError(name + ": bound on non-integer symbol '" + u->symbol + "'");
    } else {
      require(std::get<RePositive>(c).expr.symbols(), "constraints");
    }
  }
  for (const auto& p : pins) {
    require({p.symbol}, "sample");
    require(p.value.symbols(), "sample");
    if (symbols.at(p.symbol) != Domain::Complex)
      throw SemanticError(name + ": only complex symbols can be pinned ('" + p.symbol + "')");
  }
}

Binding Identity::complete(const Binding& b) const {
  Binding out = b;
  for (const auto& p : pins) {
    if (!out.has(p.symbol)) out.set(p.symbol, p.value.evaluate<Complex>(out));
  }
  return out;
}

void Identity::check_constraints(const Binding& b) const {
  // Symbols used only inside a sample pin (n in dougall) may stay unbound.
  std::set<std::string> used = free_symbols(lhs);
  used.merge(free_symbols(rhs));
  for (const auto& c : constraints) {
    if (const auto* u = std::get_if<UpperBound>(&c)) used.insert(u->symbol);
    else used.merge(std::get<RePositive>(c).expr.symbols());
  }
  for (const auto& [sym, dom] : symbols) {
    if (!b.has(sym)) {
      if (used.count(sym)) throw ConstraintViolation(name + ": symbol '" + sym + "' is not bound");
      continue;
    }
    if (dom == Domain::NonnegInt) {
      const auto v = exact_integer(b, sym);
      if (!v || *v < 0) throw ConstraintViolation(name + ": '" + sym + "' must be a nonnegative integer");
    }
  }
  for (const auto& c : constraints) {
    bool ok = true;
    if (const auto* u = std::get_if<UpperBound>(&c)) {
      ok = *exact_integer(b, u->symbol) <= u->bound;
    } else {
      ok = std::get<RePositive>(c).expr.evaluate<Complex>(b).real() > 0;
    }
    if (!ok) throw ConstraintViolation(name + ": constraint " + describe(c) + " violated");
  }
}

namespace {

Binding prepared(const Identity& id, const Binding& b) {
  Binding full = id.complete(b);
  // Integer symbols passed as plain values are normalized to integer-flagged ones.
  for (const auto& [sym, dom] : id.symbols) {
    if (dom == Domain::NonnegInt && full.has(sym) && !full.is_integer(sym)) {
      const auto v = exact_integer(full, sym);
      if (v && *v >= 0) full.set_integer(sym, *v);
    }
  }
  id.check_constraints(full);
  return full;
}

}  // namespace

Complex eval_side(const Identity& id, Side side, const Binding& b) {
  return evaluate(id.side(side), prepared(id, b));
}

CheckResult check(const Identity& id, const Binding& b, double tol) {
  const Binding full = prepared(id, b);
  const QuadComplex l = evaluate_log<QuadComplex>(id.lhs, full).value<QuadComplex>();
  const QuadComplex r = evaluate_log<QuadComplex>(id.rhs, full).value<QuadComplex>();
  CheckResult out;
  out.lhs = lower(l);
  out.rhs = lower(r);
  const QuadReal diff = abs(l - r);
  out.abs_err = lower(diff);
  out.rel_err = lower(diff / std::max({QuadReal(1), QuadReal(abs(l)), QuadReal(abs(r))}));
  out.pass = out.rel_err <= tol;
  return out;
}

}  // namespace fwid
