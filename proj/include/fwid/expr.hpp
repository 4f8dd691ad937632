#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "fwid/param_expr.hpp"
#include "fwid/series.hpp"

namespace fwid {

enum class BinaryOp { Add, Sub, Mul, Div };

/// Immutable closed-form expression tree. Build through the static constructors,
/// which fold polynomial arithmetic on parameter leaves so that equal
/// mathematical inputs produce structurally equal trees.
class Expr {
 public:
  struct Node;

  Expr();  // the constant 0

  static Expr param(ParamExpr p);
  static Expr gamma(ParamExpr arg);
  static Expr poch(ParamExpr base, ParamExpr count);
  static Expr power(Expr base, ParamExpr exponent);
  static Expr neg_one_pow(ParamExpr exponent);
  static Expr sum(std::string index, ParamExpr upper, Expr body);
  static Expr series(SeriesSpec spec);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr neg(Expr operand);

  const Node& node() const { return *node_; }
  /// The parameter payload when this is a parameter leaf.
  const ParamExpr* as_param() const;

  friend bool operator==(const Expr& a, const Expr& b);

  friend Expr operator+(Expr a, Expr b) { return binary(BinaryOp::Add, std::move(a), std::move(b)); }
  friend Expr operator-(Expr a, Expr b) { return binary(BinaryOp::Sub, std::move(a), std::move(b)); }
  friend Expr operator*(Expr a, Expr b) { return binary(BinaryOp::Mul, std::move(a), std::move(b)); }
  friend Expr operator/(Expr a, Expr b) { return binary(BinaryOp::Div, std::move(a), std::move(b)); }
  friend Expr operator-(Expr a) { return neg(std::move(a)); }

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ParamNode {
  ParamExpr value;
  friend bool operator==(const ParamNode&, const ParamNode&) = default;
};
struct GammaNode {
  ParamExpr arg;
  friend bool operator==(const GammaNode&, const GammaNode&) = default;
};
struct PochNode {
  ParamExpr base;
  ParamExpr count;
  friend bool operator==(const PochNode&, const PochNode&) = default;
};
struct PowerNode {
  Expr base;
  ParamExpr exponent;
  friend bool operator==(const PowerNode&, const PowerNode&) = default;
};
struct NegOnePowNode {
  ParamExpr exponent;
  friend bool operator==(const NegOnePowNode&, const NegOnePowNode&) = default;
};
struct SumNode {
  std::string index;
  ParamExpr upper;  // lower limit is 0
  Expr body;
  friend bool operator==(const SumNode&, const SumNode&) = default;
};
struct SeriesNode {
  SeriesSpec spec;
  friend bool operator==(const SeriesNode&, const SeriesNode&) = default;
};
struct BinaryNode {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
  friend bool operator==(const BinaryNode&, const BinaryNode&) = default;
};
struct NegNode {
  Expr operand;
  friend bool operator==(const NegNode&, const NegNode&) = default;
};

struct Expr::Node {
  std::variant<ParamNode, GammaNode, PochNode, PowerNode, NegOnePowNode, SumNode, SeriesNode, BinaryNode, NegNode> v;
  friend bool operator==(const Node&, const Node&) = default;
};

/// Value of the tree; multiplicative nodes are combined in log space.
template <class C>
SignedLog<real_of<C>> evaluate_log(const Expr& e, const Binding& b);

/// Evaluated in binary128 and rounded.
Complex evaluate(const Expr& e, const Binding& b);

/// Proximity data gathered without evaluating: used to reject sample points.
struct ExprStats {
  double min_pole_distance = INFINITY;
  std::uint64_t max_series_terms = 0;
};

/// Scans gamma arguments, Pochhammer factors, parameter leaves and series entries
/// that are not exact integers, and records how close any comes to a pole or zero.
void scan_expr(const Expr& e, const Binding& b, ExprStats& stats);

/// Every symbol referenced (sum and family indices excluded).
std::set<std::string> free_symbols(const Expr& e);

/// Exact nonnegative integer value of an index expression.
std::int64_t exact_index(const ParamExpr& p, const Binding& b, const char* what);

}  // namespace fwid
