#include "fwid/cli.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fwid/catalog.hpp"
#include "fwid/errors.hpp"
#include "fwid/harness.hpp"
#include "fwid/inversion.hpp"
#include "fwid/notation.hpp"
#include "fwid/report.hpp"

namespace fwid {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

double parse_double(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || !std::isfinite(v)) throw UsageError("bad number '" + s + "' for " + what);
  return v;
}

// "RE" or "RE,IM"
Complex parse_complex(const std::string& s, const std::string& what) {
  auto comma = s.find(',');
  if (comma == std::string::npos) return {parse_double(s, what), 0};
  return {parse_double(s.substr(0, comma), what), parse_double(s.substr(comma + 1), what)};
}

Binding parse_bindings(const Identity& id, const std::vector<std::string>& binds) {
  Binding b;
  for (const auto& kv : binds) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--bind expects NAME=VALUE, got '" + kv + "'");
    std::string name = kv.substr(0, eq);
    if (name == "\xce\xbb") name = "l";
    auto sym = id.symbols.find(name);
    if (sym == id.symbols.end()) throw UsageError("identity '" + id.name + "' has no symbol '" + name + "'");
    std::string value = kv.substr(eq + 1);
    if (sym->second == Domain::NonnegInt) {
      double v = parse_double(value, name);
      if (v < 0 || v != std::floor(v) || v > 1e9) throw UsageError(name + " must be a nonnegative integer");
      b.set_integer(name, static_cast<long>(v));
    } else {
      b.set(name, parse_complex(value, name));
    }
  }
  return b;
}

std::string complex_text(const Complex& z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.16g %c %.16gi", z.real(), z.imag() < 0 ? '-' : '+', std::abs(z.imag()));
  return buf;
}

ordered_json complex_json(const Complex& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

void emit_error_json(std::ostream& out, const std::string& tag, const std::string& message,
                     const std::vector<std::string>& suggestions = {}) {
  ordered_json j;
  j["error"] = {{"tag", tag}, {"message", message}};
  if (!suggestions.empty()) j["error"]["suggestions"] = suggestions;
  out << j.dump(2) << "\n";
}

struct Options {
  std::string format = "table";
  // eval / verify
  std::string identity;
  std::vector<std::string> binds;
  std::string side = "both";
  TrialConfig cfg;
  std::string out_path;
  // roundtrip
  std::string x, y, z;
  std::int64_t rt_n_max = 10;
  std::uint64_t rt_trials = 100;
  std::uint64_t rt_seed = 1;
  double rt_tol = 1e-8;
  double guard = kDefaultGuard;
  // parse-check
  std::vector<std::string> files;
};

int cmd_list(const Options& o, std::ostream& out) {
  const Catalog& cat = Catalog::builtin();
  auto rows = cat.list();
  if (o.format == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) j.push_back({{"name", r.name}, {"symbols", r.symbols}, {"provenance", r.provenance}});
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  std::size_t w1 = 4, w2 = 7;
  for (const auto& r : rows) w1 = std::max(w1, r.name.size()), w2 = std::max(w2, r.symbols.size());
  for (const auto& r : rows)
    out << r.name << std::string(w1 - r.name.size() + 2, ' ') << r.symbols << std::string(w2 - r.symbols.size() + 2, ' ')
        << r.provenance << "\n";
  return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Catalog& cat = Catalog::builtin();
  const Identity& id = cat.get(o.identity);
  Binding b = parse_bindings(id, o.binds);
  bool lhs = o.side != "rhs", rhs = o.side != "lhs";
  ordered_json j;
  if (o.format == "json") j["identity"] = id.name;
  if (lhs) {
    Complex v = cat.eval_side(id.name, Side::Lhs, b);
    if (o.format == "json") j["lhs"] = complex_json(v);
    else out << "lhs  " << complex_text(v) << "\n";
  }
  if (rhs) {
    Complex v = cat.eval_side(id.name, Side::Rhs, b);
    if (o.format == "json") j["rhs"] = complex_json(v);
    else out << "rhs  " << complex_text(v) << "\n";
  }
  if (o.format == "json") out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  ReportFormat fmt = parse_format(o.format);
  TrialConfig cfg = o.cfg;
  cfg.identity = o.identity;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<VerificationReport> reports;
  bool all = o.identity == "all";
  if (all) reports = verify_all(cfg);
  else reports.push_back(verify_identity(cfg));

  if (o.out_path.empty()) {
    out << (all ? format_reports(reports, fmt) : format_report(reports.front(), fmt));
  } else {
    if (all) write_reports(reports, o.out_path, fmt);
    else write_report(reports.front(), o.out_path, fmt);
    if (fmt != ReportFormat::Json) out << to_table(reports);
  }
  for (const auto& r : reports)
    if (r.aggregate.label != Label::Pass) return kExitFailure;
  return kExitOk;
}

int cmd_roundtrip(const Options& o, std::ostream& out) {
  if (o.x.empty() || o.y.empty() || o.z.empty()) throw UsageError("roundtrip needs --x, --y and --z");
  if (o.rt_n_max < 0) throw UsageError("--n-max must be nonnegative");
  if (o.rt_trials == 0) throw UsageError("--trials must be positive");
  InversionContext ctx{parse_complex(o.x, "--x"), parse_complex(o.y, "--y"), parse_complex(o.z, "--z")};
  auto n_max = static_cast<unsigned>(o.rt_n_max);
  double margin = guard_margin(ctx, n_max);
  if (margin < o.guard) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "guard margin %.3e below %.3e", margin, o.guard);
    throw DegenerateContextError(buf);
  }
  double worst = 0;
  for (std::uint64_t t = 0; t < o.rt_trials; ++t) {
    std::seed_seq seq{static_cast<std::uint32_t>(o.rt_seed), static_cast<std::uint32_t>(o.rt_seed >> 32),
                      static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
    std::mt19937_64 g(seq);
    auto u = [&] { return 2.0 * static_cast<double>(g() >> 11) * 0x1p-53 - 1.0; };
    std::vector<Complex> s(n_max + 1);
    for (auto& v : s) {
      double re = u();
      v = Complex(re, u());
    }
    worst = std::max(worst, roundtrip_error(s, ctx, n_max));
  }
  bool ok = worst <= o.rt_tol;
  if (o.format == "json") {
    ordered_json j;
    j["x"] = complex_json(ctx.x);
    j["y"] = complex_json(ctx.y);
    j["z"] = complex_json(ctx.z);
    j["n_max"] = o.rt_n_max;
    j["trials"] = o.rt_trials;
    j["seed"] = o.rt_seed;
    j["guard_margin"] = margin;
    j["max_roundtrip_error"] = worst;
    j["pass"] = ok;
    out << j.dump(2) << "\n";
  } else {
    char buf[256];
    std::snprintf(buf, sizeof buf, "guard margin %.6e\nmax roundtrip error %.6e over %llu sequences (n_max %lld)\n%s\n",
                  margin, worst, static_cast<unsigned long long>(o.rt_trials), static_cast<long long>(o.rt_n_max),
                  ok ? "pass" : "fail");
    out << buf;
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_parse_check(const Options& o, std::ostream& out, std::ostream& err) {
  bool ok = true;
  ordered_json j = ordered_json::array();
  for (const auto& path : o.files) {
    std::string problem;
    std::string name;
    try {
      Identity id = load_identity_file(path);
      name = id.name;
      Identity again = parse_identity(print_identity(id));
      if (!(again == id)) problem = "canonical form does not parse back to the same identity";
    } catch (const ParseError& e) {
      problem = std::to_string(e.span().line) + ":" + std::to_string(e.span().column) + ": " + e.what();
    } catch (const Error& e) {
      problem = std::string(e.tag()) + ": " + e.what();
    }
    if (!problem.empty()) ok = false;
    if (o.format == "json") {
      ordered_json row = {{"file", path}, {"ok", problem.empty()}};
      if (!name.empty()) row["identity"] = name;
      if (!problem.empty()) row["error"] = problem;
      j.push_back(row);
    } else if (problem.empty()) {
      out << "ok     " << path << "  (" << name << ")\n";
    } else {
      out << "error  " << path << "\n";
      err << path << ":" << problem << "\n";
    }
  }
  if (o.format == "json") out << j.dump(2) << "\n";
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fox-Wright and hypergeometric identity checker", "fwid"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "Print the identity registry");
  list->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));

  auto* eval = app.add_subcommand("eval", "Evaluate one or both sides of an identity");
  eval->add_option("--identity", o.identity, "Identity name")->required();
  eval->add_option("--bind", o.binds, "NAME=RE or NAME=RE,IM (repeatable)");
  eval->add_option("--side", o.side, "lhs, rhs or both")->check(CLI::IsMember({"lhs", "rhs", "both"}));
  eval->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));

  auto* verify = app.add_subcommand("verify", "Randomized verification of one identity or all");
  verify->add_option("--identity", o.identity, "Identity name or 'all'")->required();
  verify->add_option("--trials", o.cfg.trials, "Number of trials");
  verify->add_option("--seed", o.cfg.seed, "Seed");
  verify->add_option("--tol", o.cfg.tol, "Relative tolerance");
  verify->add_option("--n-max", o.cfg.n_max, "Upper bound for n");
  verify->add_option("--m-max", o.cfg.m_max, "Upper bound for m");
  verify->add_option("--pole-distance", o.cfg.pole_distance, "Minimum distance of sampled arguments from poles");
  verify->add_option("--out", o.out_path, "Write the report to this path");
  verify->add_option("--format", o.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));

  auto* rt = app.add_subcommand("roundtrip", "Check that the inverse pair undoes itself");
  rt->add_option("--x", o.x, "RE or RE,IM")->required();
  rt->add_option("--y", o.y, "RE or RE,IM")->required();
  rt->add_option("--z", o.z, "RE or RE,IM")->required();
  rt->add_option("--n-max", o.rt_n_max, "Sequence length minus one");
  rt->add_option("--trials", o.rt_trials, "Number of random sequences");
  rt->add_option("--seed", o.rt_seed, "Seed");
  rt->add_option("--tol", o.rt_tol, "Largest acceptable roundtrip error");
  rt->add_option("--guard", o.guard, "Minimum guard margin");
  rt->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));

  auto* pc = app.add_subcommand("parse-check", "Parse corpus files and check print/parse is a fixpoint");
  pc->add_option("files", o.files, "Corpus files")->required();
  pc->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));

  bool json_requested = false;
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--format" && args[i + 1] == "json") json_requested = true;
  for (const auto& a : args)
    if (a == "--format=json") json_requested = true;

  std::vector<std::string> argv_store{"fwid"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (json_requested) emit_error_json(out, "UsageError", e.what());
    err << "fwid: " << e.what() << "\n";
    if (e.get_exit_code() != 0 && !app.get_subcommands().empty())
      err << app.get_subcommands().front()->help();
    return kExitUsage;
  }

  try {
    if (list->parsed()) return cmd_list(o, out);
    if (eval->parsed()) return cmd_eval(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (rt->parsed()) return cmd_roundtrip(o, out);
    return cmd_parse_check(o, out, err);
  } catch (const UnknownIdentity& e) {
    auto near = Catalog::builtin().suggestions(o.identity);
    if (json_requested) emit_error_json(out, e.tag(), e.what(), near);
    err << "fwid: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    if (json_requested) emit_error_json(out, "UsageError", e.what());
    err << "fwid: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    if (json_requested) emit_error_json(out, e.tag(), e.what());
    err << "fwid: " << e.tag() << ": " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    if (json_requested) emit_error_json(out, "Error", e.what());
    err << "fwid: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace fwid
