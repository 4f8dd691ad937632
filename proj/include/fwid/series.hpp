#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fwid/numerics.hpp"
#include "fwid/param_expr.hpp"

namespace fwid {

enum class SeriesKind { Hypergeometric, FoxWright };

/// Index range of a parameter family such as {2*a+2*i : i = 1..m}.
struct Family {
  std::string index;
  ParamExpr first;
  ParamExpr last;
  friend bool operator==(const Family&, const Family&) = default;
};

/// One numerator or denominator parameter: offset (alpha or beta) and stretch
/// coefficient (A or B, always 1 for pFq). A family entry expands to one entry per
/// index value.
struct SeriesEntry {
  ParamExpr offset;
  ParamExpr coeff = ParamExpr(1);
  std::optional<Family> family;
  friend bool operator==(const SeriesEntry&, const SeriesEntry&) = default;
};

struct SeriesSpec {
  SeriesKind kind = SeriesKind::Hypergeometric;
  std::vector<SeriesEntry> numerator;
  std::vector<SeriesEntry> denominator;
  ParamExpr argument;
  std::uint64_t max_terms = 10000;
  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

inline constexpr double kDefaultSeriesTol = 1e-12;

template <class C>
struct BoundEntry {
  C offset;
  C coeff;
  std::optional<Rational> exact_offset;
  std::optional<Rational> exact_coeff;
};

/// A series with all entries expanded, evaluated and sorted in canonical order.
template <class C>
struct BoundSeries {
  SeriesKind kind = SeriesKind::Hypergeometric;
  std::vector<BoundEntry<C>> numerator;
  std::vector<BoundEntry<C>> denominator;
  C argument;
  std::uint64_t max_terms = 10000;
};

/// Expand families and sort entries by their canonical text, without binding values.
std::vector<std::pair<ParamExpr, ParamExpr>> expand_entries(const std::vector<SeriesEntry>& entries,
                                                            const Binding& b);

template <class C>
BoundSeries<C> bind_series(const SeriesSpec& spec, const Binding& b);

template <class C>
SignedLog<real_of<C>> bound_term(const BoundSeries<C>& s, std::uint64_t k);

template <class C>
std::optional<std::uint64_t> bound_termination(const BoundSeries<C>& s);

template <class C>
double bound_fw_condition(const BoundSeries<C>& s);

struct SeriesStats {
  std::uint64_t terms = 0;  // number of terms summed
  bool terminating = false;
};

template <class C>
C bound_eval(const BoundSeries<C>& s, double tol, SeriesStats* stats = nullptr);

/// Smallest distance to a pole (gamma) or zero (Pochhammer factor) among the
/// non-exact arguments met while summing up to `terms` terms.
double bound_min_pole_distance(const BoundSeries<Complex>& s, std::uint64_t terms);

/// k-th term; Fox-Wright terms use gamma_quotient, pFq terms Pochhammer products.
SignedLogValue series_term(const SeriesSpec& spec, const Binding& b, std::uint64_t k);
std::optional<std::uint64_t> termination_index(const SeriesSpec& spec, const Binding& b);
/// 1 + sum Re(B_j) - sum Re(A_i).
double fw_condition(const SeriesSpec& spec, const Binding& b);
/// Terms are summed in binary128 with compensated accumulation.
Complex eval_series(const SeriesSpec& spec, const Binding& b, double tol = kDefaultSeriesTol);

}  // namespace fwid
