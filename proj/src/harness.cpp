#include "fwid/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "fwid/compensated_sum.hpp"
#include "fwid/errors.hpp"

namespace fwid {

void TrialConfig::validate() const {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  if (m_max < 0) throw std::invalid_argument("m_max must be nonnegative");
  if (!(box.re_min <= box.re_max) || !(box.im_min <= box.im_max))
    throw std::invalid_argument("sampling box is empty");
  if (!(pole_distance >= 0)) throw std::invalid_argument("pole_distance must be nonnegative");
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Error: return "error";
  }
  return "error";
}

Outcome parse_outcome(const std::string& s) {
  if (s == "pass") return Outcome::Pass;
  if (s == "fail") return Outcome::Fail;
  if (s == "error") return Outcome::Error;
  throw std::invalid_argument("unknown outcome '" + s + "'");
}

const char* label_name(Label l) {
  switch (l) {
    case Label::Pass: return "PASS";
    case Label::Fail: return "FAIL";
    case Label::PaperDiscrepancy: return "PAPER-DISCREPANCY";
  }
  return "FAIL";
}

Label parse_label(const std::string& s) {
  if (s == "PASS") return Label::Pass;
  if (s == "FAIL") return Label::Fail;
  if (s == "PAPER-DISCREPANCY") return Label::PaperDiscrepancy;
  throw std::invalid_argument("unknown label '" + s + "'");
}

Aggregate aggregate_records(const std::vector<TrialRecord>& records) {
  Aggregate a;
  a.trials = records.size();
  CompensatedSum<double> sum;
  std::uint64_t with_err = 0;
  for (const auto& r : records) {
    switch (r.outcome) {
      case Outcome::Pass: ++a.passed; break;
      case Outcome::Fail: ++a.failed; break;
      case Outcome::Error: ++a.errors; break;
    }
    if (r.rel_err) {
      a.max_rel_err = std::max(a.max_rel_err, *r.rel_err);
      sum += *r.rel_err;
      ++with_err;
    }
  }
  if (with_err) a.mean_rel_err = sum.value() / static_cast<double>(with_err);
  // 10 * non-pass >= 9 * trials, kept in integers
  a.systematic = a.trials > 0 && 10 * (a.trials - a.passed) >= 9 * a.trials;
  a.label = a.passed == a.trials ? Label::Pass : Label::Fail;
  a.discrepancy = false;
  return a;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

// One generator per (seed, identity, trial, attempt): no state is shared between trials.
std::mt19937_64 trial_generator(std::uint64_t seed, std::uint64_t name_hash, std::uint64_t trial,
                                std::uint64_t attempt) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(seed), hi(seed), lo(name_hash), hi(name_hash), lo(trial), hi(trial), lo(attempt), hi(attempt)};
  return std::mt19937_64(seq);
}

double unit(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1p-53; }

std::int64_t upper_bound_for(const Identity& id, const std::string& sym, const TrialConfig& cfg) {
  // m counts the outer-sum or family length; every other integer symbol is a degree
  std::int64_t hi = sym == "m" ? cfg.m_max : cfg.n_max;
  for (const auto& c : id.constraints)
    if (const auto* ub = std::get_if<UpperBound>(&c); ub && ub->symbol == sym) hi = std::min(hi, ub->bound);
  return hi;
}

bool pinned(const Identity& id, const std::string& sym) {
  return std::any_of(id.pins.begin(), id.pins.end(), [&](const SamplePin& p) { return p.symbol == sym; });
}

bool admissible(const Identity& id, const Binding& b, double pole_distance, ExprStats* out) {
  try {
    id.check_constraints(b);
    ExprStats stats;
    scan_expr(id.lhs, b, stats);
    scan_expr(id.rhs, b, stats);
    if (out) *out = stats;
    return stats.min_pole_distance >= pole_distance;
  } catch (const Error&) {
    return false;
  }
}

constexpr int kMaxAttempts = 1000;

std::vector<BoundValue> flatten(const Binding& b) {
  std::vector<BoundValue> out;
  for (const auto& [name, v] : b.values()) out.push_back({name, b.is_integer(name), v});
  return out;
}

TrialRecord run_trial(const Catalog& catalog, const Identity& id, const TrialConfig& cfg, std::uint64_t trial) {
  TrialRecord rec;
  rec.trial = trial;
  try {
    Binding b = sample_binding(id, cfg, trial);
    rec.binding = flatten(b);
    ExprStats stats;
    admissible(id, b, 0, &stats);
    rec.terms = stats.max_series_terms;
    CheckResult r = catalog.check(id.name, b, cfg.tol);
    rec.lhs = r.lhs;
    rec.rhs = r.rhs;
    rec.rel_err = r.rel_err;
    rec.outcome = r.pass ? Outcome::Pass : Outcome::Fail;
  } catch (const Error& e) {
    rec.outcome = Outcome::Error;
    rec.error = e.tag();
    rec.message = e.what();
  } catch (const std::exception& e) {
    rec.outcome = Outcome::Error;
    rec.error = "Error";
    rec.message = e.what();
  }
  return rec;
}

VerificationReport run_unlabelled(const TrialConfig& cfg, const Catalog& catalog, unsigned workers) {
  cfg.validate();
  const Identity& id = catalog.get(cfg.identity);
  auto t0 = std::chrono::steady_clock::now();

  VerificationReport rep;
  rep.identity = id.name;
  rep.config = cfg;
  rep.records.resize(cfg.trials);

  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.trials));
  if (workers <= 1) {
    for (std::uint64_t t = 0; t < cfg.trials; ++t) rep.records[t] = run_trial(catalog, id, cfg, t);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::uint64_t t; (t = next.fetch_add(1)) < cfg.trials;) rep.records[t] = run_trial(catalog, id, cfg, t);
      });
    for (auto& th : pool) th.join();
  }

  rep.aggregate = aggregate_records(rep.records);
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

void classify(VerificationReport& rep, const std::vector<std::string>& neighbors,
              const std::map<std::string, Label>& neighbor_labels) {
  if (!rep.aggregate.systematic || neighbors.empty()) return;
  for (const auto& n : neighbors) {
    auto it = neighbor_labels.find(n);
    if (it == neighbor_labels.end() || it->second != Label::Pass) return;
  }
  rep.aggregate.label = Label::PaperDiscrepancy;
  rep.aggregate.discrepancy = true;
}

}  // namespace

Binding sample_binding(const Identity& id, const TrialConfig& cfg, std::uint64_t trial) {
  const std::uint64_t h = fnv1a(id.name);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto g = trial_generator(cfg.seed, h, trial, static_cast<std::uint64_t>(attempt));
    Binding b;
    for (const auto& [sym, dom] : id.symbols) {
      if (pinned(id, sym)) continue;
      if (dom == Domain::NonnegInt) {
        std::int64_t hi = upper_bound_for(id, sym, cfg);
        if (hi < 0) throw SamplingExhausted(id.name + ": no admissible value for " + sym);
        b.set_integer(sym, static_cast<long>(g() % static_cast<std::uint64_t>(hi + 1)));
      } else {
        double re = cfg.box.re_min + (cfg.box.re_max - cfg.box.re_min) * unit(g);
        double im = cfg.box.im_min + (cfg.box.im_max - cfg.box.im_min) * unit(g);
        b.set(sym, Complex(re, im));
      }
    }
    b = id.complete(b);
    if (admissible(id, b, cfg.pole_distance, nullptr)) return b;
  }
  throw SamplingExhausted(id.name + ": no admissible binding after " + std::to_string(kMaxAttempts) +
                          " attempts at trial " + std::to_string(trial));
}

unsigned default_workers() {
  if (const char* env = std::getenv("FW_VERIFY_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

VerificationReport verify_identity(const TrialConfig& cfg, const Catalog& catalog, unsigned workers) {
  VerificationReport rep = run_unlabelled(cfg, catalog, workers);
  if (rep.aggregate.systematic) {
    std::map<std::string, Label> labels;
    for (const auto& n : catalog.neighbors(rep.identity)) {
      if (!catalog.contains(n)) continue;
      TrialConfig c = cfg;
      c.identity = n;
      labels[n] = run_unlabelled(c, catalog, workers).aggregate.label;
    }
    classify(rep, catalog.neighbors(rep.identity), labels);
  }
  return rep;
}

std::vector<VerificationReport> verify_all(const TrialConfig& base, const Catalog& catalog, unsigned workers) {
  std::vector<VerificationReport> out;
  std::map<std::string, Label> labels;
  for (const auto& name : catalog.names()) {
    TrialConfig c = base;
    c.identity = name;
    out.push_back(run_unlabelled(c, catalog, workers));
    labels[name] = out.back().aggregate.label;
  }
  for (auto& rep : out) classify(rep, catalog.neighbors(rep.identity), labels);
  return out;
}

}  // namespace fwid
