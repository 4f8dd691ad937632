#include "fwid/catalog.hpp"

#include <algorithm>

namespace fwid {

namespace {

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

std::string symbol_summary(const Identity& id) {
  std::string out;
  for (const auto& [name, dom] : id.symbols) {
    if (!out.empty()) out += ' ';
    out += name + (dom == Domain::Complex ? ":C" : ":N");
  }
  return out;
}

Catalog::Catalog(std::vector<Identity> identities, std::map<std::string, std::vector<std::string>> neighbors)
    : neighbors_(std::move(neighbors)) {
  for (auto& id : identities) {
    id.validate();
    const std::string name = id.name;
    if (!by_name_.emplace(name, std::move(id)).second) throw SemanticError("duplicate identity '" + name + "'");
  }
}

const Catalog& Catalog::builtin() {
  static const Catalog c(builtin_identities(), builtin_neighbors());
  return c;
}

std::vector<IdentitySummary> Catalog::list() const {
  std::vector<IdentitySummary> out;
  for (const auto& [name, id] : by_name_) out.push_back({name, id.provenance, symbol_summary(id)});
  return out;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& kv : by_name_) out.push_back(kv.first);
  return out;
}

std::vector<std::string> Catalog::suggestions(const std::string& name, std::size_t limit) const {
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& kv : by_name_) {
    std::size_t d = edit_distance(name, kv.first);
    if (!name.empty() && kv.first.find(name) != std::string::npos) d = std::min<std::size_t>(d, 1);
    scored.emplace_back(d, kv.first);
  }
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (const auto& [d, n] : scored) {
    if (out.size() >= limit) break;
    out.push_back(n);
  }
  return out;
}

const Identity& Catalog::get(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it != by_name_.end()) return it->second;
  std::string msg = "unknown identity '" + name + "'";
  const auto near = suggestions(name);
  if (!near.empty()) {
    msg += "; did you mean:";
    for (const auto& s : near) msg += " " + s;
  }
  throw UnknownIdentity(msg);
}

const std::vector<std::string>& Catalog::neighbors(const std::string& name) const {
  static const std::vector<std::string> none;
  auto it = neighbors_.find(name);
  return it == neighbors_.end() ? none : it->second;
}

Complex Catalog::eval_side(const std::string& name, Side side, const Binding& b) const {
  return fwid::eval_side(get(name), side, b);
}

CheckResult Catalog::check(const std::string& name, const Binding& b, double tol) const {
  return fwid::check(get(name), b, tol);
}

}  // namespace fwid
