#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "fwid/expr.hpp"

namespace fwid {

enum class Domain { Complex, NonnegInt };

/// Integer symbol bounded above, e.g. m <= 4.
struct UpperBound {
  std::string symbol;
  std::int64_t bound = 0;
  friend bool operator==(const UpperBound&, const UpperBound&) = default;
};

/// Re(expr) > 0.
struct RePositive {
  ParamExpr expr;
  friend bool operator==(const RePositive&, const RePositive&) = default;
};

using Constraint = std::variant<UpperBound, RePositive>;

/// Text form used in error messages and the notation: "m <= 4", "re(1+a-b) > 0".
std::string describe(const Constraint& c);

/// A symbol whose value is tied to other symbols at sample points, e.g. a = -n to
/// make a classical series terminate.
struct SamplePin {
  std::string symbol;
  ParamExpr value;
  friend bool operator==(const SamplePin&, const SamplePin&) = default;
};

enum class Side { Lhs, Rhs };

struct Identity {
  std::string name;
  std::string provenance;
  std::map<std::string, Domain> symbols;
  std::vector<Constraint> constraints;
  std::vector<SamplePin> pins;
  Expr lhs;
  Expr rhs;

  friend bool operator==(const Identity&, const Identity&) = default;

  /// Throws SemanticError if a side, constraint or pin uses an undeclared symbol.
  void validate() const;
  /// Copy of b with pinned symbols filled in where absent.
  Binding complete(const Binding& b) const;
  /// Throws ConstraintViolation naming the failed predicate.
  void check_constraints(const Binding& b) const;
  const Expr& side(Side s) const { return s == Side::Lhs ? lhs : rhs; }
};

/// Both sides are evaluated in binary128; the binding is completed and checked first.
Complex eval_side(const Identity& id, Side side, const Binding& b);

struct CheckResult {
  Complex lhs;
  Complex rhs;
  double abs_err = 0;
  double rel_err = 0;  // |lhs-rhs| / max(1, |lhs|, |rhs|)
  bool pass = false;
};

CheckResult check(const Identity& id, const Binding& b, double tol);

}  // namespace fwid
