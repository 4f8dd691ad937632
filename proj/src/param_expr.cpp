#include "fwid/param_expr.hpp"

#include <algorithm>
#include <cmath>

namespace fwid {

void Binding::set(const std::string& name, Complex value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw EvaluationError("non-finite value for symbol '" + name + "'");
  values_[name] = value;
  integers_.erase(name);
}

void Binding::set_integer(const std::string& name, long value) {
  if (value < 0) throw ConstraintViolation("integer symbol '" + name + "' must be nonnegative");
  values_[name] = Complex(static_cast<double>(value), 0.0);
  integers_.insert(name);
}

const Complex& Binding::at(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw EvaluationError("unbound symbol '" + name + "'");
  return it->second;
}

long Binding::integer(const std::string& name) const {
  if (!is_integer(name)) throw EvaluationError("symbol '" + name + "' is not integer-valued");
  return static_cast<long>(at(name).real());
}

std::optional<std::int64_t> exact_integer(const Binding& b, const std::string& name) {
  const Complex& v = b.at(name);
  if (v.imag() != 0.0) return std::nullopt;
  if (std::abs(v.real()) > 9.0e15 || std::floor(v.real()) != v.real()) return std::nullopt;
  return static_cast<std::int64_t>(v.real());
}

ParamExpr::ParamExpr(Rational c) {
  if (!c.is_zero()) terms_[{}] = c;
}

ParamExpr ParamExpr::symbol(const std::string& name) {
  ParamExpr p;
  p.terms_[{name}] = Rational(1);
  return p;
}

Rational ParamExpr::constant() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ParamExpr::coefficient(const std::string& name) const {
  auto it = terms_.find({name});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool ParamExpr::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

int ParamExpr::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

std::set<std::string> ParamExpr::symbols() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) out.insert(m.begin(), m.end());
  return out;
}

void ParamExpr::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

ParamExpr ParamExpr::operator-() const {
  ParamExpr p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

ParamExpr& ParamExpr::operator+=(const ParamExpr& o) {
  for (const auto& [m, c] : o.terms_) terms_[m] += c;
  prune();
  return *this;
}

ParamExpr& ParamExpr::operator-=(const ParamExpr& o) { return *this += -o; }

ParamExpr& ParamExpr::operator*=(const ParamExpr& o) {
  std::map<Monomial, Rational> out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      std::sort(m.begin(), m.end());
      out[m] += c1 * c2;
    }
  }
  terms_ = std::move(out);
  prune();
  return *this;
}

ParamExpr& ParamExpr::operator/=(const Rational& r) {
  if (r.is_zero()) throw EvaluationError("parameter expression divided by zero");
  for (auto& [m, c] : terms_) c /= r;
  return *this;
}

ParamExpr ParamExpr::substitute(const std::string& name, const ParamExpr& value) const {
  ParamExpr out;
  for (const auto& [m, c] : terms_) {
    ParamExpr term(c);
    for (const auto& s : m) term *= (s == name) ? value : symbol(s);
    out += term;
  }
  return out;
}

std::string ParamExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    const bool negative = c.num() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    first = false;
    std::string body;
    for (std::size_t i = 0; i < m.size(); ++i) body += (i ? "*" : "") + m[i];
    if (m.empty()) {
      out += mag.to_string();
    } else if (mag == Rational(1)) {
      out += body;
    } else {
      out += mag.to_string() + "*" + body;
    }
  }
  return out;
}

template <class C>
C ParamExpr::evaluate(const Binding& b) const {
  C total(0);
  for (const auto& [m, c] : terms_) {
    C term;
    if constexpr (std::is_same_v<C, QuadComplex>) {
      term = C(QuadReal(c.num()) / QuadReal(c.den()));
    } else {
      term = C(static_cast<double>(c.num()) / static_cast<double>(c.den()));
    }
    for (const auto& s : m) term *= lift<C>(b.at(s));
    total += term;
  }
  return total;
}

template Complex ParamExpr::evaluate<Complex>(const Binding&) const;
template QuadComplex ParamExpr::evaluate<QuadComplex>(const Binding&) const;

std::optional<Rational> ParamExpr::exact(const Binding& b) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& s : m) {
      auto v = exact_integer(b, s);
      if (!v) return std::nullopt;
      term *= Rational(*v);
    }
    total += term;
  }
  return total;
}

}  // namespace fwid
