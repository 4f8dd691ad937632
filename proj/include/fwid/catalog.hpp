#pragma once

#include <map>
#include <string>
#include <vector>

#include "fwid/identity.hpp"

namespace fwid {

struct IdentitySummary {
  std::string name;
  std::string provenance;
  std::string symbols;  // e.g. "a:C l:C n:N"
};

/// Immutable set of identities keyed by name, plus the reduction-chain neighbours
/// consulted when a systematic failure is classified.
class Catalog {
 public:
  Catalog(std::vector<Identity> identities, std::map<std::string, std::vector<std::string>> neighbors = {});

  /// The hand-coded registry.
  static const Catalog& builtin();

  std::vector<IdentitySummary> list() const;
  std::vector<std::string> names() const;
  std::size_t size() const { return by_name_.size(); }
  bool contains(const std::string& name) const { return by_name_.count(name) != 0; }
  /// Throws UnknownIdentity listing near matches.
  const Identity& get(const std::string& name) const;
  std::vector<std::string> suggestions(const std::string& name, std::size_t limit = 3) const;
  const std::vector<std::string>& neighbors(const std::string& name) const;

  Complex eval_side(const std::string& name, Side side, const Binding& b) const;
  CheckResult check(const std::string& name, const Binding& b, double tol) const;

 private:
  std::map<std::string, Identity> by_name_;
  std::map<std::string, std::vector<std::string>> neighbors_;
};

/// Number of entries in the built-in registry.
inline constexpr std::size_t kRegistrySize = 28;

std::vector<Identity> builtin_identities();
std::map<std::string, std::vector<std::string>> builtin_neighbors();

std::string symbol_summary(const Identity& id);

}  // namespace fwid
