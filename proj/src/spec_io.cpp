#include "opensos/spec_io.hpp"

#include <cctype>
#include <functional>
#include <optional>

namespace opensos {

ParseError::ParseError(const std::string& message, SourceSpan at)
    : Error(std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + message),
      message_(message),
      at_(at) {}

TssPtr SpecDocument::find_tss(const std::string& name) const {
  for (const auto& t : tss_decls) {
    if (t->name() == name) return t;
  }
  return nullptr;
}

TssPtr SpecDocument::tss(const std::string& name) const {
  if (auto t = find_tss(name)) return t;
  throw Error("no TSS named '" + name + "'");
}

namespace {

enum class Tok { Ident, Nat, String, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan at;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.at = {line_, col_};
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (ident_start(c)) {
        t.kind = Tok::Ident;
        while (pos_ < src_.size() && ident_char(src_[pos_])) t.text += advance();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::Nat;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t.text += advance();
      } else if (c == '"') {
        t.kind = Tok::String;
        advance();
        for (;;) {
          if (pos_ >= src_.size() || src_[pos_] == '\n') throw ParseError("unterminated string", t.at);
          char d = advance();
          if (d == '"') break;
          if (d == '\\') {
            if (pos_ >= src_.size()) throw ParseError("unterminated string", t.at);
            d = advance();
          }
          t.text += d;
        }
      } else {
        t.kind = Tok::Sym;
        std::string_view rest = src_.substr(pos_);
        if (rest.starts_with("|-") || rest.starts_with("->")) {
          t.text = std::string(rest.substr(0, 2));
          advance();
          advance();
        } else if (std::string_view("{}(),;:/=@-").find(c) != std::string_view::npos) {
          t.text = std::string(1, advance());
        } else {
          throw ParseError(std::string("unexpected character '") + c + "'", t.at);
        }
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct RawTerm {
  std::string ident;
  bool parens = false;
  std::vector<RawTerm> args;
  SourceSpan at;
};

struct RawFormula {
  RawTerm source;
  std::string label;
  SourceSpan label_at;
  RawTerm target;
};

struct RawRule {
  std::string name;
  SourceSpan at;
  std::vector<std::pair<std::string, std::optional<std::vector<std::string>>>> schema;
  std::vector<RawFormula> premises;
  RawFormula conclusion;
};

// Operators visible to a term, plus names that are ambiguous across TSSs.
struct Scope {
  Signature sig;
  std::set<std::string> ambiguous;
};

Term resolve(const RawTerm& raw, const Scope& scope) {
  if (scope.ambiguous.count(raw.ident)) {
    throw ParseError("operator '" + raw.ident + "' has conflicting arities across TSSs; pin the equation with @",
                     raw.at);
  }
  auto arity = scope.sig.arity(raw.ident);
  if (!raw.parens && !arity) return Term::variable(raw.ident);
  if (!arity) throw ParseError("undeclared operator '" + raw.ident + "'", raw.at);
  if (*arity != raw.args.size()) {
    throw ParseError("arity mismatch: '" + raw.ident + "' has arity " + std::to_string(*arity) + " but is given " +
                         std::to_string(raw.args.size()) + " argument(s)",
                     raw.at);
  }
  std::vector<Term> args;
  for (const auto& a : raw.args) args.push_back(resolve(a, scope));
  return Term::make(raw.ident, std::move(args));
}

class Parser {
 public:
  Parser(std::string_view text, const SpecDocument* prelude) : toks_(Lexer(text).run()), prelude_(prelude) {}

  SpecDocument document() {
    while (peek().kind != Tok::End) {
      if (is_keyword("tss")) {
        tss_decl();
      } else if (is_keyword("eq")) {
        eq_decl();
      } else {
        fail("expected 'tss' or 'eq'");
      }
    }
    return std::move(doc_);
  }

  Term single_term(const Signature& sig) {
    RawTerm raw = term();
    if (peek().kind != Tok::End) fail("unexpected input after term");
    return resolve(raw, Scope{sig, {}});
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", got " + got, t.at);
  }

  bool is_keyword(const char* kw) const { return peek().kind == Tok::Ident && peek().text == kw; }
  bool is_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }

  void expect_sym(const char* s) {
    if (!is_sym(s)) fail(std::string("expected '") + s + "'");
    next();
  }
  void expect_keyword(const char* kw) {
    if (!is_keyword(kw)) fail(std::string("expected '") + kw + "'");
    next();
  }
  Token ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(std::string("expected ") + what);
    return next();
  }
  Token name_token(const char* what) {
    if (peek().kind != Tok::Ident && peek().kind != Tok::String) fail(std::string("expected ") + what);
    return next();
  }

  RawTerm term() {
    Token id = ident("term");
    RawTerm t{id.text, false, {}, id.at};
    if (is_sym("(")) {
      next();
      t.parens = true;
      if (!is_sym(")")) {
        t.args.push_back(term());
        while (is_sym(",")) {
          next();
          t.args.push_back(term());
        }
      }
      expect_sym(")");
    }
    return t;
  }

  RawFormula formula() {
    RawFormula f;
    f.source = term();
    expect_sym("-");
    Token l = ident("label");
    f.label = l.text;
    f.label_at = l.at;
    expect_sym("->");
    f.target = term();
    return f;
  }

  TssPtr lookup_tss(const std::string& name) const {
    if (auto t = doc_.find_tss(name)) return t;
    if (prelude_) return prelude_->find_tss(name);
    return nullptr;
  }

  void tss_decl() {
    expect_keyword("tss");
    Token name = ident("TSS name");
    if (lookup_tss(name.text)) throw ParseError("duplicate TSS '" + name.text + "'", name.at);
    TssPtr base;
    if (is_keyword("extends")) {
      next();
      Token b = ident("base TSS name");
      base = lookup_tss(b.text);
      if (!base) throw ParseError("undeclared base TSS '" + b.text + "'", b.at);
    }
    expect_sym("{");
    expect_keyword("labels");
    expect_sym(":");
    std::set<Label> labels;
    if (!is_sym(";")) {
      labels.insert(ident("label").text);
      while (is_sym(",")) {
        next();
        labels.insert(ident("label").text);
      }
    }
    expect_sym(";");

    Signature own;
    Signature cumulative = base ? base->signature() : Signature{};
    std::vector<RawRule> raw_rules;
    while (!is_sym("}")) {
      if (is_keyword("op")) {
        next();
        Token op = ident("operator name");
        expect_sym("/");
        if (peek().kind != Tok::Nat) fail("expected arity");
        std::size_t arity = std::stoul(next().text);
        expect_sym(";");
        try {
          own.add(op.text, arity);
          cumulative.add(op.text, arity);
        } catch (const Error& e) {
          throw ParseError(std::string("duplicate operator with conflicting arity: ") + e.what(), op.at);
        }
      } else if (is_keyword("rule")) {
        raw_rules.push_back(rule());
      } else {
        fail("expected 'op', 'rule' or '}'");
      }
    }
    expect_sym("}");

    std::set<Label> all_labels = base ? base->labels() : std::set<Label>{};
    all_labels.insert(labels.begin(), labels.end());
    Scope scope{cumulative, {}};
    std::vector<Rule> rules;
    std::set<std::string> rule_names;
    for (const auto& raw : raw_rules) {
      for (auto& r : expand(raw, all_labels, scope)) {
        if (!rule_names.insert(r.name).second) throw ParseError("duplicate rule name '" + r.name + "'", raw.at);
        doc_.source_spans["rule:" + name.text + "/" + r.name] = raw.at;
        rules.push_back(std::move(r));
      }
    }
    doc_.source_spans["tss:" + name.text] = name.at;
    doc_.tss_decls.push_back(std::make_shared<const Tss>(name.text, std::move(own), std::move(labels),
                                                         std::move(rules), std::move(base)));
  }

  RawRule rule() {
    expect_keyword("rule");
    Token name = name_token("rule name");
    RawRule r;
    r.name = name.text;
    r.at = name.at;
    while (is_keyword("forall")) {
      next();
      std::string var = ident("label variable").text;
      std::optional<std::vector<std::string>> range;
      if (is_keyword("in")) {
        next();
        expect_sym("{");
        range.emplace();
        range->push_back(ident("label").text);
        while (is_sym(",")) {
          next();
          range->push_back(ident("label").text);
        }
        expect_sym("}");
      }
      r.schema.emplace_back(std::move(var), std::move(range));
    }
    expect_sym(":");
    if (!is_sym("|-")) {
      r.premises.push_back(formula());
      while (is_sym(",")) {
        next();
        r.premises.push_back(formula());
      }
    }
    expect_sym("|-");
    r.conclusion = formula();
    expect_sym(";");
    return r;
  }

  // One concrete rule per assignment of labels to the schema variables.
  std::vector<Rule> expand(const RawRule& raw, const std::set<Label>& labels, const Scope& scope) {
    std::vector<std::vector<std::string>> ranges;
    for (const auto& [var, range] : raw.schema) {
      if (range) {
        for (const auto& l : *range) {
          if (!labels.count(l)) throw ParseError("undeclared label '" + l + "'", raw.at);
        }
        ranges.push_back(*range);
      } else {
        ranges.emplace_back(labels.begin(), labels.end());
      }
    }
    std::vector<Rule> out;
    std::map<std::string, std::string> binding;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == ranges.size()) {
        out.push_back(instantiate(raw, binding, labels, scope));
        return;
      }
      for (const auto& l : ranges[i]) {
        binding[raw.schema[i].first] = l;
        go(i + 1);
      }
    };
    go(0);
    return out;
  }

  Rule instantiate(const RawRule& raw, const std::map<std::string, std::string>& binding,
                   const std::set<Label>& labels, const Scope& scope) {
    auto resolve_formula = [&](const RawFormula& f) {
      Label l = f.label;
      if (auto it = binding.find(l); it != binding.end()) l = it->second;
      if (!labels.count(l)) throw ParseError("undeclared label '" + l + "'", f.label_at);
      return Formula{resolve(f.source, scope), l, resolve(f.target, scope)};
    };
    std::string name = raw.name;
    if (!raw.schema.empty()) {
      name += '[';
      for (std::size_t i = 0; i < raw.schema.size(); ++i) {
        if (i) name += ',';
        name += binding.at(raw.schema[i].first);
      }
      name += ']';
    }
    std::vector<Formula> premises;
    for (const auto& p : raw.premises) premises.push_back(resolve_formula(p));
    return Rule{std::move(name), std::move(premises), resolve_formula(raw.conclusion)};
  }

  void eq_decl() {
    expect_keyword("eq");
    Token name = name_token("equation name");
    expect_sym(":");
    RawTerm lhs = term();
    expect_sym("=");
    RawTerm rhs = term();
    std::optional<std::string> pinned;
    Scope scope;
    if (is_sym("@")) {
      next();
      Token t = ident("TSS name");
      TssPtr tss = lookup_tss(t.text);
      if (!tss) throw ParseError("undeclared TSS '" + t.text + "'", t.at);
      pinned = t.text;
      scope.sig = tss->signature();
    } else {
      scope = visible_operators();
    }
    expect_sym(";");
    doc_.source_spans["eq:" + name.text] = name.at;
    doc_.equations.push_back(Equation{resolve(lhs, scope), resolve(rhs, scope), name.text, pinned});
  }

  Scope visible_operators() const {
    Scope s;
    auto add = [&](const SpecDocument& d) {
      for (const auto& t : d.tss_decls) {
        for (const auto& [op, arity] : t->signature().operators()) {
          auto known = s.sig.arity(op);
          if (known && *known != arity) {
            s.ambiguous.insert(op);
          } else if (!known) {
            s.sig.add(op, arity);
          }
        }
      }
    };
    if (prelude_) add(*prelude_);
    add(doc_);
    return s;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const SpecDocument* prelude_;
  SpecDocument doc_;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

SpecDocument parse(std::string_view text, const SpecDocument* prelude) {
  return Parser(text, prelude).document();
}

Term parse_term(std::string_view text, const Signature& sig) {
  return Parser(text, nullptr).single_term(sig);
}

std::string print(const SpecDocument& doc) {
  std::string out = "# opensos specification\n";
  for (const auto& t : doc.tss_decls) {
    out += "\ntss " + t->name();
    if (t->base()) out += " extends " + t->base()->name();
    out += " {\n  labels:";
    bool first = true;
    for (const auto& l : t->own_labels()) {
      out += (first ? " " : ", ") + l;
      first = false;
    }
    out += ";\n";
    for (const auto& [op, arity] : t->own_signature().operators()) {
      out += "  op " + op + "/" + std::to_string(arity) + ";\n";
    }
    for (const auto& r : t->own_rules()) {
      out += "  rule " + quote(r.name) + ": " + to_string(r) + ";\n";
    }
    out += "}\n";
  }
  if (!doc.equations.empty()) out += '\n';
  for (const auto& e : doc.equations) {
    out += "eq " + quote(e.name) + ": " + to_string(e);
    if (e.tss) out += " @" + *e.tss;
    out += ";\n";
  }
  return out;
}

bool same_structure(const SpecDocument& a, const SpecDocument& b) {
  if (a.tss_decls.size() != b.tss_decls.size() || a.equations != b.equations) return false;
  for (std::size_t i = 0; i < a.tss_decls.size(); ++i) {
    const Tss& x = *a.tss_decls[i];
    const Tss& y = *b.tss_decls[i];
    std::string bx = x.base() ? x.base()->name() : "";
    std::string by = y.base() ? y.base()->name() : "";
    if (x.name() != y.name() || bx != by || !(x.own_signature() == y.own_signature()) ||
        x.own_labels() != y.own_labels() || x.own_rules() != y.own_rules()) {
      return false;
    }
  }
  return true;
}

}  // namespace opensos
