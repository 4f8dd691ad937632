#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fwid/errors.hpp"
#include "fwid/rational.hpp"
#include "fwid/scalar.hpp"

namespace fwid {

/// Values for the free symbols of an identity. Integer-flagged symbols hold exact
/// nonnegative integers.
class Binding {
 public:
  void set(const std::string& name, Complex value);
  void set_integer(const std::string& name, long value);

  bool has(const std::string& name) const { return values_.count(name) != 0; }
  bool is_integer(const std::string& name) const { return integers_.count(name) != 0; }
  const Complex& at(const std::string& name) const;
  /// Integer value of an integer-flagged symbol.
  long integer(const std::string& name) const;

  const std::map<std::string, Complex>& values() const { return values_; }
  const std::set<std::string>& integer_names() const { return integers_; }

  friend bool operator==(const Binding&, const Binding&) = default;

 private:
  std::map<std::string, Complex> values_;
  std::set<std::string> integers_;
};

/// Polynomial with rational coefficients over named symbols. The parameters that
/// occur in practice are affine in most symbols, with products such as l*n where a
/// stretch coefficient multiplies a summation bound.
class ParamExpr {
 public:
  /// Sorted symbol names with repetition; empty is the constant monomial.
  using Monomial = std::vector<std::string>;

  ParamExpr() = default;
  ParamExpr(Rational c);  // NOLINT(google-explicit-constructor)
  ParamExpr(std::int64_t c) : ParamExpr(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static ParamExpr symbol(const std::string& name);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational constant() const;
  /// Coefficient of a degree-one symbol term.
  Rational coefficient(const std::string& name) const;
  bool is_constant() const;
  int degree() const;
  std::set<std::string> symbols() const;

  ParamExpr operator-() const;
  ParamExpr& operator+=(const ParamExpr& o);
  ParamExpr& operator-=(const ParamExpr& o);
  ParamExpr& operator*=(const ParamExpr& o);
  ParamExpr& operator/=(const Rational& r);
  friend ParamExpr operator+(ParamExpr a, const ParamExpr& b) { return a += b; }
  friend ParamExpr operator-(ParamExpr a, const ParamExpr& b) { return a -= b; }
  friend ParamExpr operator*(ParamExpr a, const ParamExpr& b) { return a *= b; }
  friend ParamExpr operator/(ParamExpr a, const Rational& b) { return a /= b; }

  friend bool operator==(const ParamExpr&, const ParamExpr&) = default;
  friend bool operator<(const ParamExpr& a, const ParamExpr& b) { return a.terms_ < b.terms_; }

  /// Replace symbol `name` by `value` everywhere.
  ParamExpr substitute(const std::string& name, const ParamExpr& value) const;

  /// Canonical text: constant first, then monomials by degree and name, e.g. 1/2+2*a-l*n.
  std::string to_string() const;

  /// Value under the binding; throws EvaluationError if a symbol is unbound.
  template <class C>
  C evaluate(const Binding& b) const;

  /// Exact rational value when every symbol involved has an exact integer value.
  std::optional<Rational> exact(const Binding& b) const;

 private:
  void prune();
  std::map<Monomial, Rational> terms_;
};

extern template Complex ParamExpr::evaluate<Complex>(const Binding&) const;
extern template QuadComplex ParamExpr::evaluate<QuadComplex>(const Binding&) const;

/// Exact integer value of a binding entry (integer-flagged, or an integral real double).
std::optional<std::int64_t> exact_integer(const Binding& b, const std::string& name);

}  // namespace fwid
