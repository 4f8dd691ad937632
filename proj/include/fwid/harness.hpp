#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fwid/catalog.hpp"

namespace fwid {

struct SamplingBox {
  double re_min = -3, re_max = 3;
  double im_min = -1, im_max = 1;
  friend bool operator==(const SamplingBox&, const SamplingBox&) = default;
};

struct TrialConfig {
  std::string identity;
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  std::int64_t n_max = 12;
  std::int64_t m_max = 4;
  SamplingBox box;
  double pole_distance = 1e-3;

  friend bool operator==(const TrialConfig&, const TrialConfig&) = default;
  /// Throws std::invalid_argument on trials == 0, tol <= 0, negative bounds or an empty box.
  void validate() const;
};

enum class Outcome { Pass, Fail, Error };
const char* outcome_name(Outcome o);
Outcome parse_outcome(const std::string& s);

/// One value of a sampled symbol: integer symbols keep their integer.
struct BoundValue {
  std::string symbol;
  bool integer = false;
  Complex value;
  friend bool operator==(const BoundValue&, const BoundValue&) = default;
};

struct TrialRecord {
  std::uint64_t trial = 0;
  std::vector<BoundValue> binding;  // sorted by symbol
  std::optional<Complex> lhs;
  std::optional<Complex> rhs;
  std::optional<double> rel_err;
  Outcome outcome = Outcome::Error;
  std::string error;  // error tag, empty unless outcome is Error
  std::string message;
  std::uint64_t terms = 0;  // longest series evaluated on either side
  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

enum class Label { Pass, Fail, PaperDiscrepancy };
const char* label_name(Label l);
Label parse_label(const std::string& s);

struct Aggregate {
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t errors = 0;
  double max_rel_err = 0;
  double mean_rel_err = 0;
  /// At least 90% of trials did not pass.
  bool systematic = false;
  Label label = Label::Pass;
  bool discrepancy = false;
  friend bool operator==(const Aggregate&, const Aggregate&) = default;
};

/// Counts, error statistics and the systematic flag; label is Pass if every trial
/// passed and Fail otherwise.
Aggregate aggregate_records(const std::vector<TrialRecord>& records);

inline constexpr const char* kToolVersion = "0.3.0";

struct VerificationReport {
  std::string identity;
  std::string tool_version = kToolVersion;
  TrialConfig config;
  Aggregate aggregate;
  std::vector<TrialRecord> records;
  double wall_time_s = 0;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Deterministic in (cfg.seed, id.name, trial). Throws SamplingExhausted.
Binding sample_binding(const Identity& id, const TrialConfig& cfg, std::uint64_t trial);

/// Worker count: FW_VERIFY_THREADS if set to a positive integer, else hardware threads.
unsigned default_workers();

/// Runs cfg.trials checks. A systematic failure is labelled PAPER-DISCREPANCY when
/// every reduction-chain neighbour passes the same configuration.
VerificationReport verify_identity(const TrialConfig& cfg, const Catalog& catalog = Catalog::builtin(),
                                   unsigned workers = 0);

/// One report per catalog entry in alphabetical order.
std::vector<VerificationReport> verify_all(const TrialConfig& base, const Catalog& catalog = Catalog::builtin(),
                                           unsigned workers = 0);

}  // namespace fwid
