#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fwid/identity.hpp"

namespace fwid {

struct SourceSpan {
  std::size_t start = 0;  // byte offsets, end exclusive
  std::size_t end = 0;
  std::size_t line = 1;  // 1-based
  std::size_t column = 1;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan span, std::vector<std::string> expected);
  const char* tag() const noexcept override { return "ParseError"; }
  const SourceSpan& span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::vector<std::string> expected_;
};

/// Grammar, informally:
///   identity "name" {
///     source: "free text";                      (optional)
///     params: a in C, n in N;
///     constraints: m <= 4, re(1+a-b) > 0;       (optional)
///     sample: a = -n;                           (optional)
///     lhs: expr;
///     rhs: expr;
///   }
/// Expressions use + - * / ^, integers, declared names, gamma(p), poch(p, k),
/// (-1)^k, sum(i, 0, k, expr), F[p, ... | q, ...](z) and
/// Psi[(x1, x2; A), ... | (y; B), ...](z). A parameter family is written
/// {p : i = 1..m} in a list. Unicode lambda is read as the name l.
Identity parse_identity(std::string_view text);
std::string print_identity(const Identity& id);

/// Parse a bare expression. Names are not checked against a declaration list.
Expr parse_expr(std::string_view text);
std::string print_expr(const Expr& e);

/// Reads and parses a corpus file; IoError if it cannot be read.
Identity load_identity_file(const std::string& path);

}  // namespace fwid
