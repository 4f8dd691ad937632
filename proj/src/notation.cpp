#include "fwid/notation.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace fwid {

ParseError::ParseError(const std::string& message, SourceSpan span, std::vector<std::string> expected)
    : Error(message), span_(span), expected_(std::move(expected)) {}

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok { Name, Number, String, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

const std::set<std::string> kReserved = {"gamma", "poch", "sum", "F", "Psi", "re", "identity"};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const std::size_t start = pos_;
      const std::size_t line = line_, col = col_;
      auto emit = [&](Tok k, std::string text) {
        out.push_back({k, std::move(text), SourceSpan{start, pos_, line, col}});
      };
      if (pos_ >= src_.size()) {
        emit(Tok::End, "");
        return out;
      }
      const char ch = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) advance();
        emit(Tok::Name, std::string(src_.substr(start, pos_ - start)));
      } else if (src_.substr(pos_, 2) == "\xCE\xBB") {  // lambda
        advance();
        advance();
        --col_;  // one column for the two-byte character
        emit(Tok::Name, "l");
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
        emit(Tok::Number, std::string(src_.substr(start, pos_ - start)));
      } else if (ch == '"') {
        advance();
        std::string value;
        for (;;) {
          if (pos_ >= src_.size() || src_[pos_] == '\n')
            throw ParseError("unterminated string", SourceSpan{start, pos_, line, col}, {"\""});
          char c = src_[pos_];
          advance();
          if (c == '"') break;
          if (c == '\\' && pos_ < src_.size()) {
            c = src_[pos_];
            advance();
          }
          value += c;
        }
        emit(Tok::String, value);
      } else {
        static const char* two[] = {"..", "<=", ">="};
        std::string p(1, ch);
        for (const char* t : two) {
          if (src_.substr(pos_, 2) == t) p = t;
        }
        if (p.size() == 1 && std::string("()[]{},;:|+-*/^=<>").find(ch) == std::string::npos) {
          advance();
          throw ParseError(std::string("unexpected character '") + ch + "'", SourceSpan{start, pos_, line, col}, {});
        }
        for (std::size_t k = 0; k < p.size(); ++k) advance();
        emit(Tok::Punct, p);
      }
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char ch = src_[pos_];
      if (ch == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

// ---------------------------------------------------------------- parser

class Parser {
 public:
  Parser(std::string_view src, bool check_names) : toks_(Lexer(src).run()), check_names_(check_names) {}

  Expr whole_expr() {
    Expr e = expr();
    expect_end();
    return e;
  }

  Identity identity() {
    Identity id;
    expect_name("identity");
    id.name = expect(Tok::String, "identity name string").text;
    expect_punct("{");
    if (peek_name("source")) {
      next();
      expect_punct(":");
      id.provenance = expect(Tok::String, "source string").text;
      expect_punct(";");
    }
    expect_name("params");
    expect_punct(":");
    do {
      const Token& name = expect(Tok::Name, "parameter name");
      if (kReserved.count(name.text)) throw semantic("'" + name.text + "' is reserved", name);
      expect_name("in");
      const Token& dom = expect(Tok::Name, "domain C or N");
      if (dom.text != "C" && dom.text != "N") fail_at(dom, {"C", "N"});
      if (!id.symbols.emplace(name.text, dom.text == "C" ? Domain::Complex : Domain::NonnegInt).second)
        throw semantic("parameter '" + name.text + "' declared twice", name);
      scope_.insert(name.text);
    } while (accept_punct(","));
    expect_punct(";");
    if (peek_name("constraints")) {
      next();
      expect_punct(":");
      do id.constraints.push_back(constraint());
      while (accept_punct(","));
      expect_punct(";");
    }
    if (peek_name("sample")) {
      next();
      expect_punct(":");
      do {
        const Token& name = expect(Tok::Name, "parameter name");
        check_declared(name);
        expect_punct("=");
        id.pins.push_back({name.text, param_of(expr(), name)});
      } while (accept_punct(","));
      expect_punct(";");
    }
    expect_name("lhs");
    expect_punct(":");
    id.lhs = expr();
    expect_punct(";");
    expect_name("rhs");
    expect_punct(":");
    id.rhs = expr();
    expect_punct(";");
    expect_punct("}");
    expect_end();
    id.validate();
    return id;
  }

 private:
  // ---- token helpers
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool peek_punct(const char* p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
  }
  bool peek_name(const char* n) const { return peek().kind == Tok::Name && peek().text == n; }
  bool accept_punct(const char* p) {
    if (!peek_punct(p)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail_at(const Token& t, std::vector<std::string> expected) const {
    std::string msg = "line " + std::to_string(t.span.line) + ", column " + std::to_string(t.span.column) + ": ";
    msg += t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'";
    if (!expected.empty()) {
      msg += ", expected ";
      for (std::size_t k = 0; k < expected.size(); ++k) msg += (k ? " or " : "") + expected[k];
    }
    throw ParseError(msg, t.span, std::move(expected));
  }

  SemanticError semantic(const std::string& what, const Token& t) const {
    return SemanticError("line " + std::to_string(t.span.line) + ", column " + std::to_string(t.span.column) + ": " +
                         what);
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail_at(peek(), {what});
    return next();
  }
  void expect_punct(const char* p) {
    if (!accept_punct(p)) fail_at(peek(), {std::string("'") + p + "'"});
  }
  void expect_name(const char* n) {
    if (!peek_name(n)) fail_at(peek(), {std::string("'") + n + "'"});
    next();
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail_at(peek(), {"end of input"});
  }

  void check_declared(const Token& t) const {
    if (check_names_ && !scope_.count(t.text)) throw semantic("undeclared symbol '" + t.text + "'", t);
  }

  ParamExpr param_of(const Expr& e, const Token& at) const {
    if (const ParamExpr* p = e.as_param()) return *p;
    throw semantic("expected a polynomial parameter expression", at);
  }

  ParamExpr param_expr() {
    const Token& start = peek();
    return param_of(expr(), start);
  }

  // ---- constraints
  Constraint constraint() {
    if (peek_name("re")) {
      next();
      expect_punct("(");
      ParamExpr p = param_expr();
      expect_punct(")");
      expect_punct(">");
      const Token& zero = expect(Tok::Number, "0");
      if (zero.text != "0") fail_at(zero, {"0"});
      return RePositive{p};
    }
    const Token& name = expect(Tok::Name, "constraint");
    check_declared(name);
    expect_punct("<=");
    return UpperBound{name.text, integer(expect(Tok::Number, "integer bound"))};
  }

  std::int64_t integer(const Token& t) const {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) throw semantic("integer out of range", t);
    return v;
  }

  // ---- expressions
  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept_punct("+")) {
        lhs = lhs + term();
      } else if (accept_punct("-")) {
        lhs = lhs - term();
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (peek_punct("*")) {
        next();
        lhs = lhs * unary();
      } else if (peek_punct("/")) {
        const Token& slash = next();
        Expr rhs = unary();
        if (const ParamExpr* p = rhs.as_param(); p && *p == ParamExpr()) throw semantic("division by zero", slash);
        lhs = lhs / rhs;
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (accept_punct("-")) return -unary();
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (!peek_punct("^")) return base;
    next();
    const Token& at = peek();
    return Expr::power(base, param_of(atom(), at));
  }

  Expr atom() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      next();
      return Expr::param(ParamExpr(integer(t)));
    }
    if (t.kind == Tok::Punct && t.text == "(") {
      next();
      Expr e = expr();
      expect_punct(")");
      return e;
    }
    if (t.kind != Tok::Name) fail_at(t, {"expression"});
    if (t.text == "gamma") {
      next();
      expect_punct("(");
      ParamExpr arg = param_expr();
      expect_punct(")");
      return Expr::gamma(arg);
    }
    if (t.text == "poch") {
      next();
      expect_punct("(");
      ParamExpr base = param_expr();
      expect_punct(",");
      ParamExpr count = param_expr();
      expect_punct(")");
      return Expr::poch(base, count);
    }
    if (t.text == "sum") return sum();
    if (t.text == "F" || t.text == "Psi") return series();
    if (kReserved.count(t.text)) fail_at(t, {"expression"});
    next();
    check_declared(t);
    return Expr::param(ParamExpr::symbol(t.text));
  }

  Expr sum() {
    next();
    expect_punct("(");
    const Token& index = expect(Tok::Name, "index name");
    if (kReserved.count(index.text)) throw semantic("'" + index.text + "' is reserved", index);
    expect_punct(",");
    const Token& lo = expect(Tok::Number, "0");
    if (lo.text != "0") fail_at(lo, {"0"});
    expect_punct(",");
    ParamExpr upper = param_expr();
    expect_punct(",");
    const bool added = scope_.insert(index.text).second;
    Expr body = expr();
    if (added) scope_.erase(index.text);
    expect_punct(")");
    return Expr::sum(index.text, upper, body);
  }

  Expr series() {
    SeriesSpec spec;
    spec.kind = next().text == "F" ? SeriesKind::Hypergeometric : SeriesKind::FoxWright;
    expect_punct("[");
    entry_list(spec, spec.numerator, "|");
    expect_punct("|");
    entry_list(spec, spec.denominator, "]");
    expect_punct("]");
    expect_punct("(");
    spec.argument = param_expr();
    expect_punct(")");
    return Expr::series(std::move(spec));
  }

  void entry_list(const SeriesSpec& spec, std::vector<SeriesEntry>& out, const char* terminator) {
    if (peek_punct(terminator)) return;
    do {
      if (peek_punct("{")) {
        out.push_back(family_entry(spec));
      } else if (spec.kind == SeriesKind::Hypergeometric) {
        out.push_back({param_expr(), ParamExpr(1), std::nullopt});
      } else {
        for (auto& e : fw_group()) out.push_back(std::move(e));
      }
    } while (accept_punct(","));
  }

  std::vector<SeriesEntry> fw_group() {
    expect_punct("(");
    std::vector<ParamExpr> offsets{param_expr()};
    while (accept_punct(",")) offsets.push_back(param_expr());
    expect_punct(";");
    ParamExpr coeff = param_expr();
    expect_punct(")");
    std::vector<SeriesEntry> out;
    for (auto& o : offsets) out.push_back({std::move(o), coeff, std::nullopt});
    return out;
  }

  SeriesEntry family_entry(const SeriesSpec& spec) {
    expect_punct("{");
    // The index is declared after the body, so scan ahead for it.
    std::size_t depth = 0, k = pos_;
    std::string index;
    for (; k < toks_.size() && toks_[k].kind != Tok::End; ++k) {
      const auto& tk = toks_[k];
      if (tk.kind != Tok::Punct) continue;
      if (tk.text == "(" || tk.text == "[" || tk.text == "{") ++depth;
      if (tk.text == ")" || tk.text == "]" || tk.text == "}") {
        if (depth == 0) break;
        --depth;
      }
      if (depth == 0 && tk.text == ":" && k + 1 < toks_.size() && toks_[k + 1].kind == Tok::Name) {
        index = toks_[k + 1].text;
        break;
      }
    }
    const bool added = !index.empty() && scope_.insert(index).second;
    SeriesEntry e;
    if (spec.kind == SeriesKind::Hypergeometric) {
      e.offset = param_expr();
    } else {
      auto group = fw_group();
      if (group.size() != 1) fail_at(peek(), {"single (offset; coeff) entry in a family"});
      e = group.front();
    }
    if (added) scope_.erase(index);
    expect_punct(":");
    const Token& idx = expect(Tok::Name, "family index");
    expect_punct("=");
    ParamExpr first = param_expr();
    expect_punct("..");
    ParamExpr last = param_expr();
    expect_punct("}");
    e.family = Family{idx.text, first, last};
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool check_names_;
  std::set<std::string> scope_;
};

// ---------------------------------------------------------------- printer

enum Prec { kAdd = 1, kMul = 2, kUnary = 3, kPower = 4, kAtom = 5 };

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int param_prec(const ParamExpr& p) {
  const auto& t = p.terms();
  if (t.empty()) return kAtom;
  if (t.size() > 1) return kAdd;
  const auto& [mono, coeff] = *t.begin();
  if (mono.empty()) {
    if (!coeff.is_integer()) return kMul;
    return coeff.num() >= 0 ? kAtom : kUnary;
  }
  if (mono.size() == 1 && coeff == Rational(1)) return kAtom;
  if (mono.size() == 1 && coeff == Rational(-1)) return kUnary;
  return kMul;
}

std::string wrap(const std::string& s, bool parens) { return parens ? "(" + s + ")" : s; }

std::string exponent_text(const ParamExpr& p) { return wrap(p.to_string(), param_prec(p) < kAtom); }

std::string entry_text(const SeriesSpec& spec, const SeriesEntry& e) {
  std::string body = spec.kind == SeriesKind::Hypergeometric
                         ? e.offset.to_string()
                         : "(" + e.offset.to_string() + "; " + e.coeff.to_string() + ")";
  if (!e.family) return body;
  return "{" + body + " : " + e.family->index + " = " + e.family->first.to_string() + ".." +
         e.family->last.to_string() + "}";
}

std::string list_text(const SeriesSpec& spec, const std::vector<SeriesEntry>& list) {
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < list.size();) {
    const SeriesEntry& e = list[k];
    if (spec.kind == SeriesKind::FoxWright && !e.family) {
      std::string group = e.offset.to_string();
      std::size_t j = k + 1;
      while (j < list.size() && !list[j].family && list[j].coeff == e.coeff) group += ", " + list[j++].offset.to_string();
      parts.push_back("(" + group + "; " + e.coeff.to_string() + ")");
      k = j;
      continue;
    }
    parts.push_back(entry_text(spec, e));
    ++k;
  }
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? ", " : "") + parts[k];
  return out;
}

std::pair<std::string, int> render(const Expr& e) {
  return std::visit(
      Overloaded{
          [](const ParamNode& n) { return std::make_pair(n.value.to_string(), param_prec(n.value)); },
          [](const GammaNode& n) { return std::make_pair("gamma(" + n.arg.to_string() + ")", int(kAtom)); },
          [](const PochNode& n) {
            return std::make_pair("poch(" + n.base.to_string() + ", " + n.count.to_string() + ")", int(kAtom));
          },
          [](const PowerNode& n) {
            auto [b, p] = render(n.base);
            return std::make_pair(wrap(b, p < kAtom) + "^" + exponent_text(n.exponent), int(kPower));
          },
          [](const NegOnePowNode& n) { return std::make_pair("(-1)^" + exponent_text(n.exponent), int(kPower)); },
          [](const SumNode& n) {
            return std::make_pair("sum(" + n.index + ", 0, " + n.upper.to_string() + ", " + render(n.body).first + ")",
                                  int(kAtom));
          },
          [](const SeriesNode& n) {
            const SeriesSpec& s = n.spec;
            std::string head = s.kind == SeriesKind::Hypergeometric ? "F[" : "Psi[";
            return std::make_pair(head + list_text(s, s.numerator) + " | " + list_text(s, s.denominator) + "](" +
                                      s.argument.to_string() + ")",
                                  int(kAtom));
          },
          [](const BinaryNode& n) {
            auto [l, lp] = render(n.lhs);
            auto [r, rp] = render(n.rhs);
            const bool additive = n.op == BinaryOp::Add || n.op == BinaryOp::Sub;
            const int self = additive ? kAdd : kMul;
            const int right_need = additive ? kMul : kUnary;
            const char* op = n.op == BinaryOp::Add ? " + " : n.op == BinaryOp::Sub ? " - " : n.op == BinaryOp::Mul ? "*" : "/";
            return std::make_pair(wrap(l, lp < self) + op + wrap(r, rp < right_need), self);
          },
          [](const NegNode& n) {
            auto [s, p] = render(n.operand);
            return std::make_pair("-" + wrap(s, p < kUnary), int(kUnary));
          },
      },
      e.node().v);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Identity parse_identity(std::string_view text) { return Parser(text, true).identity(); }

Expr parse_expr(std::string_view text) { return Parser(text, false).whole_expr(); }

std::string print_expr(const Expr& e) { return render(e).first; }

std::string print_identity(const Identity& id) {
  std::ostringstream out;
  out << "identity " << quoted(id.name) << " {\n";
  if (!id.provenance.empty()) out << "  source: " << quoted(id.provenance) << ";\n";
  out << "  params: ";
  bool first = true;
  for (const auto& [name, dom] : id.symbols) {
    out << (first ? "" : ", ") << name << " in " << (dom == Domain::Complex ? "C" : "N");
    first = false;
  }
  out << ";\n";
  if (!id.constraints.empty()) {
    out << "  constraints: ";
    for (std::size_t k = 0; k < id.constraints.size(); ++k) out << (k ? ", " : "") << describe(id.constraints[k]);
    out << ";\n";
  }
  if (!id.pins.empty()) {
    out << "  sample: ";
    for (std::size_t k = 0; k < id.pins.size(); ++k)
      out << (k ? ", " : "") << id.pins[k].symbol << " = " << id.pins[k].value.to_string();
    out << ";\n";
  }
  out << "  lhs: " << print_expr(id.lhs) << ";\n";
  out << "  rhs: " << print_expr(id.rhs) << ";\n";
  out << "}\n";
  return out.str();
}

Identity load_identity_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_identity(buf.str());
}

}  // namespace fwid
