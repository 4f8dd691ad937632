#include "fwid/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fwid/errors.hpp"

namespace fwid {

using nlohmann::json;

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "table") return ReportFormat::Table;
  throw std::invalid_argument("unknown format '" + s + "' (expected json, csv or table)");
}

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string num(double v) { return fmt("%.17g", v); }
std::string sci(double v) { return fmt("%.16e", v); }
std::string str(const std::string& s) { return json(s).dump(); }
std::string u64(std::uint64_t v) { return std::to_string(v); }

std::string complex_json(const Complex& z) { return "{\"re\": " + num(z.real()) + ", \"im\": " + num(z.imag()) + "}"; }

std::string opt_complex(const std::optional<Complex>& z) { return z ? complex_json(*z) : "null"; }

std::string record_json(const TrialRecord& r) {
  std::string s = "{\"trial\": " + u64(r.trial) + ", \"binding\": {";
  for (std::size_t i = 0; i < r.binding.size(); ++i) {
    const auto& bv = r.binding[i];
    if (i) s += ", ";
    s += str(bv.symbol) + ": ";
    s += bv.integer ? std::to_string(static_cast<long long>(bv.value.real())) : complex_json(bv.value);
  }
  s += "}, \"lhs\": " + opt_complex(r.lhs) + ", \"rhs\": " + opt_complex(r.rhs);
  s += ", \"rel_err\": " + (r.rel_err ? sci(*r.rel_err) : std::string("null"));
  s += ", \"outcome\": " + str(outcome_name(r.outcome));
  s += ", \"error\": " + (r.error.empty() ? std::string("null") : str(r.error));
  s += ", \"message\": " + (r.message.empty() ? std::string("null") : str(r.message));
  s += ", \"terms\": " + u64(r.terms) + "}";
  return s;
}

void report_json(std::string& out, const VerificationReport& r, const std::string& ind) {
  const auto& c = r.config;
  const auto& a = r.aggregate;
  out += ind + "{\n";
  out += ind + "  \"identity\": " + str(r.identity) + ",\n";
  out += ind + "  \"tool_version\": " + str(r.tool_version) + ",\n";
  out += ind + "  \"config\": {\"identity\": " + str(c.identity) + ", \"trials\": " + u64(c.trials) +
         ", \"seed\": " + u64(c.seed) + ", \"tol\": " + num(c.tol) + ", \"n_max\": " + std::to_string(c.n_max) +
         ", \"m_max\": " + std::to_string(c.m_max) + ", \"box\": {\"re_min\": " + num(c.box.re_min) +
         ", \"re_max\": " + num(c.box.re_max) + ", \"im_min\": " + num(c.box.im_min) +
         ", \"im_max\": " + num(c.box.im_max) + "}, \"pole_distance\": " + num(c.pole_distance) + "},\n";
  out += ind + "  \"aggregate\": {\"trials\": " + u64(a.trials) + ", \"passed\": " + u64(a.passed) +
         ", \"failed\": " + u64(a.failed) + ", \"errors\": " + u64(a.errors) +
         ", \"max_rel_err\": " + sci(a.max_rel_err) + ", \"mean_rel_err\": " + sci(a.mean_rel_err) +
         ", \"systematic\": " + (a.systematic ? "true" : "false") + ", \"label\": " + str(label_name(a.label)) +
         ", \"discrepancy\": " + (a.discrepancy ? "true" : "false") + "},\n";
  out += ind + "  \"records\": [";
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    out += i ? ",\n" : "\n";
    out += ind + "    " + record_json(r.records[i]);
  }
  out += r.records.empty() ? "],\n" : "\n" + ind + "  ],\n";
  out += ind + "  \"wall_time_s\": " + num(r.wall_time_s) + "\n";
  out += ind + "}";
}

Complex complex_from(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

double dbl(const json& j) { return j.get<double>(); }

VerificationReport report_from(const json& j) {
  VerificationReport r;
  r.identity = j.at("identity").get<std::string>();
  r.tool_version = j.at("tool_version").get<std::string>();
  const json& c = j.at("config");
  r.config.identity = c.at("identity").get<std::string>();
  r.config.trials = c.at("trials").get<std::uint64_t>();
  r.config.seed = c.at("seed").get<std::uint64_t>();
  r.config.tol = dbl(c.at("tol"));
  r.config.n_max = c.at("n_max").get<std::int64_t>();
  r.config.m_max = c.at("m_max").get<std::int64_t>();
  const json& box = c.at("box");
  r.config.box = {dbl(box.at("re_min")), dbl(box.at("re_max")), dbl(box.at("im_min")), dbl(box.at("im_max"))};
  r.config.pole_distance = dbl(c.at("pole_distance"));
  const json& a = j.at("aggregate");
  r.aggregate.trials = a.at("trials").get<std::uint64_t>();
  r.aggregate.passed = a.at("passed").get<std::uint64_t>();
  r.aggregate.failed = a.at("failed").get<std::uint64_t>();
  r.aggregate.errors = a.at("errors").get<std::uint64_t>();
  r.aggregate.max_rel_err = dbl(a.at("max_rel_err"));
  r.aggregate.mean_rel_err = dbl(a.at("mean_rel_err"));
  r.aggregate.systematic = a.at("systematic").get<bool>();
  r.aggregate.label = parse_label(a.at("label").get<std::string>());
  r.aggregate.discrepancy = a.at("discrepancy").get<bool>();
  for (const json& jr : j.at("records")) {
    TrialRecord t;
    t.trial = jr.at("trial").get<std::uint64_t>();
    for (const auto& [k, v] : jr.at("binding").items()) {
      if (v.is_number_integer())
        t.binding.push_back({k, true, Complex(static_cast<double>(v.get<long long>()), 0)});
      else
        t.binding.push_back({k, false, complex_from(v)});
    }
    if (!jr.at("lhs").is_null()) t.lhs = complex_from(jr.at("lhs"));
    if (!jr.at("rhs").is_null()) t.rhs = complex_from(jr.at("rhs"));
    if (!jr.at("rel_err").is_null()) t.rel_err = dbl(jr.at("rel_err"));
    t.outcome = parse_outcome(jr.at("outcome").get<std::string>());
    if (!jr.at("error").is_null()) t.error = jr.at("error").get<std::string>();
    if (!jr.at("message").is_null()) t.message = jr.at("message").get<std::string>();
    t.terms = jr.at("terms").get<std::uint64_t>();
    r.records.push_back(std::move(t));
  }
  r.wall_time_s = dbl(j.at("wall_time_s"));
  return r;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
  }
}

std::string complex_text(const Complex& z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
  return buf;
}

std::string binding_text(const std::vector<BoundValue>& b, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += sep;
    s += b[i].symbol + "=";
    s += b[i].integer ? std::to_string(static_cast<long long>(b[i].value.real())) : complex_text(b[i].value);
  }
  return s;
}

const char* kCsvHeader = "identity,trial,outcome,rel_err,lhs_re,lhs_im,rhs_re,rhs_im,terms,binding,error\n";

void csv_rows(std::string& out, const VerificationReport& r) {
  for (const auto& t : r.records) {
    out += r.identity + "," + u64(t.trial) + "," + outcome_name(t.outcome) + ",";
    out += t.rel_err ? sci(*t.rel_err) : "";
    out += ",";
    out += t.lhs ? num(t.lhs->real()) + "," + num(t.lhs->imag()) : ",";
    out += ",";
    out += t.rhs ? num(t.rhs->real()) + "," + num(t.rhs->imag()) : ",";
    out += "," + u64(t.terms) + "," + binding_text(t.binding, ";") + "," + t.error + "\n";
  }
}

std::string summary_line(const VerificationReport& r) {
  const auto& a = r.aggregate;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%" PRIu64 "/%" PRIu64 " pass, %" PRIu64 " fail, %" PRIu64 " error, max rel_err %.3e, %s",
                a.passed, a.trials, a.failed, a.errors, a.max_rel_err, label_name(a.label));
  return buf;
}

void write_text(const std::string& text, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace

std::string to_json(const VerificationReport& r) {
  std::string out;
  report_json(out, r, "");
  return out + "\n";
}

std::string to_json(const std::vector<VerificationReport>& rs) {
  std::string out = "[";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    out += i ? ",\n" : "\n";
    report_json(out, rs[i], "  ");
  }
  out += rs.empty() ? "]\n" : "\n]\n";
  return out;
}

std::string to_csv(const VerificationReport& r) {
  std::string out = kCsvHeader;
  csv_rows(out, r);
  return out;
}

std::string to_csv(const std::vector<VerificationReport>& rs) {
  std::string out = kCsvHeader;
  for (const auto& r : rs) csv_rows(out, r);
  return out;
}

std::string to_table(const VerificationReport& r) {
  std::ostringstream os;
  char buf[512];
  std::snprintf(buf, sizeof buf, "identity %s  trials %" PRIu64 "  seed %" PRIu64 "  tol %g  n_max %lld  m_max %lld\n",
                r.identity.c_str(), r.config.trials, r.config.seed, r.config.tol,
                static_cast<long long>(r.config.n_max), static_cast<long long>(r.config.m_max));
  os << buf;
  std::snprintf(buf, sizeof buf, "%6s  %-7s  %-23s  %6s  %s\n", "trial", "outcome", "rel_err", "terms", "binding");
  os << buf;
  for (const auto& t : r.records) {
    std::string err = t.rel_err ? sci(*t.rel_err) : "-";
    std::string tail = binding_text(t.binding, " ");
    if (!t.error.empty()) tail += "  [" + t.error + "]";
    std::snprintf(buf, sizeof buf, "%6" PRIu64 "  %-7s  %-23s  %6" PRIu64 "  ", t.trial, outcome_name(t.outcome),
                  err.c_str(), t.terms);
    os << buf << tail << "\n";
  }
  os << "summary: " << summary_line(r) << "\n";
  return os.str();
}

std::string to_table(const std::vector<VerificationReport>& rs) {
  std::ostringstream os;
  std::size_t width = 8;
  for (const auto& r : rs) width = std::max(width, r.identity.size());
  std::uint64_t ok = 0;
  for (const auto& r : rs) {
    os << r.identity << std::string(width - r.identity.size() + 2, ' ') << summary_line(r) << "\n";
    if (r.aggregate.label == Label::Pass) ++ok;
  }
  os << "summary: " << ok << "/" << rs.size() << " identities pass\n";
  return os.str();
}

std::string format_report(const VerificationReport& r, ReportFormat f) {
  switch (f) {
    case ReportFormat::Json: return to_json(r);
    case ReportFormat::Csv: return to_csv(r);
    case ReportFormat::Table: return to_table(r);
  }
  return {};
}

std::string format_reports(const std::vector<VerificationReport>& rs, ReportFormat f) {
  switch (f) {
    case ReportFormat::Json: return to_json(rs);
    case ReportFormat::Csv: return to_csv(rs);
    case ReportFormat::Table: return to_table(rs);
  }
  return {};
}

void write_report(const VerificationReport& r, const std::string& path, ReportFormat f) {
  write_text(format_report(r, f), path);
}

void write_reports(const std::vector<VerificationReport>& rs, const std::string& path, ReportFormat f) {
  write_text(format_reports(rs, f), path);
}

VerificationReport report_from_json(const std::string& text) {
  try {
    return report_from(parse_json(text));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of reports");
  std::vector<VerificationReport> out;
  try {
    for (const auto& r : j) out.push_back(report_from(r));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  return out;
}

std::string strip_wall_time(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (line.find("\"wall_time_s\"") == std::string::npos) out += line + "\n";
  return out;
}

}  // namespace fwid
