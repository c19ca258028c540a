#include "opensos/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "opensos/report.hpp"

#ifndef OPENSOS_CORPUS_DIR
#define OPENSOS_CORPUS_DIR "corpus"
#endif

namespace opensos {

namespace fs = std::filesystem;

namespace {

struct InputError : Error {
  using Error::Error;
};

struct RunConfig {
  std::vector<std::string> specs;
  std::string tss;
  std::string ext;
  std::string eqs;
  std::string eq;
  std::string notion = "ci";
  std::vector<std::string> positional;
  std::optional<std::size_t> term_size, depth, state_cap, pair_cap, position_cap, size;
  bool json = false;
  bool allow_many_labels = false;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw InputError("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> spec_files(const std::vector<std::string>& paths) {
  std::vector<fs::path> out;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<fs::path> in_dir;
      for (const auto& e : fs::directory_iterator(p)) {
        if (e.path().extension() == ".sos") in_dir.push_back(e.path());
      }
      std::sort(in_dir.begin(), in_dir.end());
      out.insert(out.end(), in_dir.begin(), in_dir.end());
    } else if (fs::exists(p)) {
      out.emplace_back(p);
    } else {
      throw InputError("no such spec path: " + p);
    }
  }
  return out;
}

// Later files see earlier ones as prelude.
SpecDocument load(const std::vector<std::string>& paths) {
  SpecDocument doc;
  for (const auto& f : spec_files(paths)) {
    SpecDocument part;
    try {
      part = parse(read_file(f), &doc);
    } catch (const ParseError& e) {
      throw InputError(f.string() + ":" + e.what());
    }
    doc.tss_decls.insert(doc.tss_decls.end(), part.tss_decls.begin(), part.tss_decls.end());
    doc.equations.insert(doc.equations.end(), part.equations.begin(), part.equations.end());
    doc.source_spans.insert(part.source_spans.begin(), part.source_spans.end());
  }
  return doc;
}

std::vector<std::string> default_specs() {
  if (const char* env = std::getenv("OPENSOS_SPEC"); env && *env) return {env};
  return {OPENSOS_CORPUS_DIR};
}

Bounds bounds_of(const RunConfig& c) {
  Bounds b;
  if (const char* env = std::getenv("OPENSOS_BOUNDS"); env && *env) {
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw InputError("OPENSOS_BOUNDS: expected k=v, got '" + item + "'");
      auto key = item.substr(0, eq);
      std::size_t v = 0;
      try {
        v = std::stoul(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw InputError("OPENSOS_BOUNDS: bad value in '" + item + "'");
      }
      if (key == "term_size") b.term_size = v;
      else if (key == "depth") b.depth = v;
      else if (key == "state_cap") b.state_cap = v;
      else if (key == "pair_cap") b.pair_cap = v;
      else if (key == "position_cap") b.position_cap = v;
      else throw InputError("OPENSOS_BOUNDS: unknown key '" + key + "'");
    }
  }
  if (c.term_size) b.term_size = *c.term_size;
  if (c.depth) b.depth = *c.depth;
  if (c.state_cap) b.state_cap = *c.state_cap;
  if (c.pair_cap) b.pair_cap = *c.pair_cap;
  if (c.position_cap) b.position_cap = *c.position_cap;
  if (!b.term_size || !b.depth || !b.state_cap || !b.pair_cap || !b.position_cap) throw InputError("bounds must be positive");
  return b;
}

Json bounds_json(const Bounds& b) {
  return {{"term_size", b.term_size}, {"depth", b.depth}, {"state_cap", b.state_cap}, {"pair_cap", b.pair_cap}, {"position_cap", b.position_cap}};
}

int exit_of(Outcome o) {
  switch (o) {
    case Outcome::Holds: return kOk;
    case Outcome::Fails: return kFails;
    case Outcome::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

class Runner {
 public:
  Runner(const RunConfig& c, std::ostream& out) : c_(c), out_(out) {}

  const SpecDocument& doc() {
    if (!doc_) doc_ = load(c_.specs.empty() ? default_specs() : c_.specs);
    return *doc_;
  }

  TssPtr tss(const std::string& name) {
    if (name.empty()) throw InputError("missing --tss");
    auto t = doc().find_tss(name);
    if (!t) throw InputError("unknown TSS '" + name + "'");
    return t;
  }

  Term term(const std::string& text, const TssPtr& t) { return parse_term(text, t->signature()); }

  std::vector<Equation> equations(const std::string& pinned) {
    if (!c_.eqs.empty()) return parse(read_file(c_.eqs), &doc()).equations;
    std::vector<Equation> out;
    for (const auto& e : doc().equations) {
      if (e.tss && *e.tss == pinned) out.push_back(e);
    }
    return out;
  }

  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  int parse_check() {
    const auto& d = doc();
    if (c_.json) {
      emit(json_of(d));
    } else {
      out_ << "ok: " << d.tss_decls.size() << " tss, " << d.equations.size() << " equations\n";
      for (const auto& t : d.tss_decls) {
        out_ << "  " << t->name() << ": " << t->rules().size() << " rules, " << t->labels().size() << " labels\n";
      }
    }
    return kOk;
  }

  int gsos_check() {
    std::vector<TssPtr> targets;
    if (!c_.tss.empty()) targets.push_back(tss(c_.tss));
    else targets = doc().tss_decls;
    bool ok = true;
    Json all = Json::array();
    for (const auto& t : targets) {
      auto rep = validate_positive_gsos(*t);
      ok = ok && rep.ok();
      Json details = Json::array();
      for (const auto& v : rep.violations) {
        details.push_back({{"rule", v.rule}, {"kind", v.kind}, {"explanation", v.explanation}});
        if (!c_.json) out_ << t->name() << ": rule " << v.rule << ": " << v.kind << ": " << v.explanation << "\n";
      }
      if (!c_.json && rep.ok()) out_ << t->name() << ": positive GSOS\n";
      all.push_back(analysis_json("gsos-check", t->name(), rep.ok() ? "ok" : "violations", details));
    }
    if (c_.json) emit(all);
    return ok ? kOk : kFails;
  }

  int extension_check() {
    auto ext = resolve_extension(tss(c_.tss), tss(c_.ext));
    auto d = validate_disjoint_extension(*ext.base, *ext.delta);
    auto eqs = equations(c_.tss);
    auto crit = robust_extension_criteria(*ext.base, *ext.delta, eqs);
    const char* verdict = crit.met() ? "robust" : (d.disjoint() ? "not-robust" : "not-disjoint");
    if (c_.json) {
      Json offending = Json::array();
      for (const auto& [rule, why] : d.offending) offending.push_back({{"rule", rule}, {"reason", why}});
      Json details = json_of(crit);
      details["offending"] = offending;
      details["adds_labels"] = adds_labels(*ext.base, *ext.delta);
      Json rep = analysis_json("extension-check", ext.combined->name(), verdict, Json::array({details}));
      emit(rep);
    } else {
      out_ << ext.base->name() << " + " << ext.delta->name() << ": " << verdict << "\n";
      for (const auto& [rule, why] : d.offending) out_ << "  rule " << rule << ": " << why << "\n";
      print_criteria(crit);
    }
    return crit.met() ? kOk : kFails;
  }

  void print_criteria(const CriteriaReport& crit) {
    for (const auto& k : crit.conjuncts) {
      out_ << "  [" << (k.satisfied ? "x" : " ") << "] " << k.name << ": " << k.detail << "\n";
    }
    for (const auto& n : crit.notes) out_ << "  note: " << n << "\n";
  }

  int ruloids_cmd() {
    auto t = tss(c_.tss);
    auto rs = ruloids(term(arg(0, "TERM"), t), t);
    if (c_.json) {
      Json arr = Json::array();
      for (const auto& r : rs) arr.push_back(json_of(r));
      emit(arr);
    } else {
      for (const auto& r : rs) out_ << to_string(r) << "\n";
    }
    return kOk;
  }

  int transitions_cmd() {
    auto t = tss(c_.tss);
    auto p = term(arg(0, "TERM"), t);
    auto steps = transitions(p, t);
    if (c_.json) {
      Json arr = Json::array();
      for (const auto& s : steps) arr.push_back(json_of(s));
      emit(arr);
    } else {
      for (const auto& s : steps) out_ << to_string(p) << " -" << s.label << "-> " << to_string(s.target) << "\n";
    }
    return kOk;
  }

  int explore_cmd() {
    auto t = tss(c_.tss);
    auto b = bounds_of(c_);
    auto lts = explore(term(arg(0, "TERM"), t), t, b.state_cap);
    if (c_.json) {
      emit(json_of(lts));
    } else {
      out_ << lts.states.size() << " states, " << lts.transitions.size() << " transitions"
           << (lts.complete ? "" : " (truncated)") << "\n";
      for (const auto& [from, l, to] : lts.transitions) {
        out_ << to_string(lts.states[from]) << " -" << l << "-> " << to_string(lts.states[to]) << "\n";
      }
    }
    return lts.complete ? kOk : kInconclusive;
  }

  int check_cmd() {
    auto n = parse_notion(arg(0, "NOTION"));
    if (!n) throw InputError("unknown notion '" + c_.positional[0] + "'");
    auto t = tss(c_.tss);
    auto lhs = term(arg(1, "LHS"), t);
    auto rhs = term(arg(2, "RHS"), t);
    auto b = bounds_of(c_);
    auto v = check(*n, t, lhs, rhs, b);
    if (c_.json) {
      Json j = json_of(v);
      j["tss"] = t->name();
      j["lhs"] = to_string(lhs);
      j["rhs"] = to_string(rhs);
      j["bounds"] = bounds_json(b);
      emit(j);
    } else {
      print_verdict(v);
    }
    return exit_of(v.outcome);
  }

  void print_verdict(const Verdict& v) {
    out_ << to_string(v.notion) << ": " << to_string(v.outcome);
    if (v.vacuous) out_ << " (vacuous)";
    if (v.no_counterexample) out_ << " (no counterexample)";
    out_ << ": " << v.detail << "\n";
    for (const auto& [a, b] : v.relation) out_ << "  " << to_string(a) << " ~ " << to_string(b) << "\n";
    for (const auto& st : v.hp_relation) out_ << "  " << to_string(st) << "\n";
    if (v.substitution) {
      out_ << "  substitution:";
      for (const auto& [x, t] : *v.substitution) out_ << " " << x << " := " << to_string(t) << ";";
      out_ << "\n";
    }
    if (v.distinguished) {
      out_ << "  distinguished: " << to_string(v.distinguished->first) << " vs " << to_string(v.distinguished->second)
           << "\n";
    }
    if (v.formula) out_ << "  formula: " << to_string(*v.formula) << "\n";
    if (v.improper) {
      out_ << "  improper pair: " << to_string(v.improper->first) << ", " << to_string(v.improper->second) << "\n";
    }
    if (v.failing_state) out_ << "  at: " << to_string(*v.failing_state) << "\n";
    if (v.unmatched) out_ << "  unmatched (" << v.unmatched_side << "): " << to_string(*v.unmatched) << "\n";
    for (const auto& n : v.notes) out_ << "  note: " << n << "\n";
  }

  int fertility_cmd() {
    auto t = tss(c_.tss);
    auto f = initial_fertility(t, c_.size.value_or(4), c_.allow_many_labels);
    if (c_.json) {
      emit(analysis_json("fertility", t->name(), f.fertile ? "fertile" : "unknown-at-bound",
                         Json::array({json_of(f)})));
    } else {
      out_ << t->name() << ": " << (f.fertile ? "initially fertile" : "unknown at bound") << " (size <= " << f.bound
           << ")\n";
      for (const auto& [ls, w] : f.witnesses) out_ << "  {" << join(ls) << "}: " << to_string(w) << "\n";
      for (const auto& ls : f.missing) out_ << "  {" << join(ls) << "}: unrealized\n";
    }
    return f.fertile ? kOk : kInconclusive;
  }

  static std::string join(const std::set<Label>& ls) {
    std::string s;
    for (const auto& l : ls) s += (s.empty() ? "" : ", ") + l;
    return s;
  }

  int non_evolving_cmd() {
    auto t = tss(c_.tss);
    auto table = non_evolving_indices(*t);
    if (c_.json) {
      emit(analysis_json("non-evolving", t->name(), "ok", Json::array({json_of(table)})));
    } else {
      for (const auto& [op, idx] : table) {
        out_ << op << ":";
        for (auto i : idx) out_ << " " << i;
        out_ << "\n";
      }
    }
    return kOk;
  }

  int robust_eq_cmd() {
    auto t = tss(c_.tss);
    auto eqs = equations(c_.tss);
    if (!c_.eq.empty()) {
      std::erase_if(eqs, [&](const Equation& e) { return e.name != c_.eq; });
      if (eqs.empty()) throw InputError("no equation '" + c_.eq + "' for " + t->name());
    }
    bool all = true;
    Json arr = Json::array();
    for (const auto& e : eqs) {
      auto crit = robust_equation_criteria(e, t, c_.size.value_or(4), c_.allow_many_labels);
      all = all && crit.met();
      Json j = json_of(crit);
      j["equation"] = to_string(e);
      j["name"] = e.name;
      arr.push_back(j);
      if (!c_.json) {
        out_ << e.name << ": " << to_string(e) << ": " << (crit.met() ? "robust" : "criteria not met") << "\n";
        print_criteria(crit);
      }
    }
    if (c_.json) emit(analysis_json("robust-equation", t->name(), all ? "met" : "not-met", arr));
    return all ? kOk : kFails;
  }

  int sweep_cmd() {
    auto n = parse_notion(c_.notion);
    if (!n) throw InputError("unknown notion '" + c_.notion + "'");
    auto t = tss(c_.tss);
    auto b = bounds_of(c_);
    auto rep = soundness_sweep(EquationalTheory{equations(c_.tss), t}, *n, b);
    if (c_.json) {
      Json j = json_of(rep);
      j["tss"] = t->name();
      j["bounds"] = bounds_json(b);
      emit(j);
    } else {
      for (const auto& e : rep.entries) {
        out_ << e.axiom.name << ": " << to_string(e.axiom) << ": " << (e.passed ? "passed" : "not passed") << "\n  ";
        print_verdict(e.verdict);
      }
      out_ << "caveat: " << rep.caveat << "\n";
    }
    if (rep.all_passed()) return kOk;
    for (const auto& e : rep.entries) {
      if (e.verdict.outcome == Outcome::Fails) return kFails;
    }
    return kInconclusive;
  }

  int prove_cmd() {
    auto t = tss(c_.tss);
    Equation goal{term(arg(0, "LHS"), t), term(arg(1, "RHS"), t), "goal", std::nullopt};
    ProveOptions opts;
    if (c_.depth) opts.depth = *c_.depth;
    if (c_.size) opts.instance_size = *c_.size;
    auto res = prove(EquationalTheory{equations(c_.tss), t}, goal, opts);
    if (c_.json) {
      emit(json_of(res));
    } else {
      out_ << (res.proved ? "proved" : "not proved") << ": " << res.detail << "\n";
      for (const auto& s : res.steps) {
        out_ << "  " << to_string(s.term);
        if (!s.justification.empty()) out_ << "    by " << s.justification;
        out_ << "\n";
      }
    }
    return res.proved ? kOk : kInconclusive;
  }

  int advise_cmd() {
    auto n = parse_notion(c_.notion);
    if (!n) throw InputError("unknown notion '" + c_.notion + "'");
    auto ext = resolve_extension(tss(c_.tss), tss(c_.ext));
    AdvisorOptions opts;
    opts.bounds = bounds_of(c_);
    if (c_.size) opts.fertility_size = *c_.size;
    opts.allow_many_labels = c_.allow_many_labels;
    auto rep = preservation_advisor(equations(c_.tss), ext, *n, opts);
    bool bad = false;
    for (const auto& a : rep.axioms) {
      bad = bad || a.classification == Classification::Broken || a.classification == Classification::NotSoundOnBase;
    }
    if (c_.json) {
      Json j = json_of(rep);
      j["bounds"] = bounds_json(opts.bounds);
      emit(j);
    } else {
      out_ << rep.base << " + " << rep.extension << " under " << to_string(rep.notion) << "\n";
      for (const auto& a : rep.axioms) {
        out_ << a.axiom.name << ": " << to_string(a.axiom) << ": " << to_string(a.classification);
        if (!a.theorem.empty()) out_ << " (" << a.theorem << ")";
        if (a.contradiction) out_ << " [guarantee contradicted]";
        out_ << "\n";
        for (const auto& th : a.theorems) {
          out_ << " " << th.theorem << (th.relevant ? "" : " (not relevant)") << ": "
               << (th.applies() ? "applies" : "does not apply") << "\n";
          print_criteria(th.criteria);
        }
        out_ << "  extension: " << to_string(a.extended.outcome) << ": " << a.extended.detail << "\n";
      }
      out_ << "caveat: " << rep.caveat << "\n";
    }
    return bad ? kFails : kOk;
  }

 private:
  const std::string& arg(std::size_t i, const char* what) {
    if (c_.positional.size() <= i) throw InputError(std::string("missing argument ") + what);
    return c_.positional[i];
  }

  const RunConfig& c_;
  std::ostream& out_;
  std::optional<SpecDocument> doc_;
};

// Every key of an expected object must match; every element of an expected
// array must match some element of the actual array.
bool subsumes(const Json& expected, const Json& actual) {
  if (expected.is_object()) {
    if (!actual.is_object()) return false;
    for (const auto& [k, v] : expected.items()) {
      if (!actual.contains(k) || !subsumes(v, actual[k])) return false;
    }
    return true;
  }
  if (expected.is_array()) {
    if (!actual.is_array()) return false;
    return std::all_of(expected.begin(), expected.end(), [&](const Json& e) {
      return std::any_of(actual.begin(), actual.end(), [&](const Json& a) { return subsumes(e, a); });
    });
  }
  return expected == actual;
}

int run_corpus(const std::string& dir, bool json, std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);
  std::vector<fs::path> manifests;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".json") manifests.push_back(e.path());
  }
  std::sort(manifests.begin(), manifests.end());
  Json report = Json::array();
  std::size_t passed = 0, failed = 0;
  std::vector<std::string> failing;
  for (const auto& m : manifests) {
    Json manifest;
    try {
      manifest = Json::parse(read_file(m));
    } catch (const Json::exception& e) {
      throw InputError(m.string() + ": " + e.what());
    }
    const std::string fixture = m.stem().string();
    std::vector<std::string> specs;
    for (const auto& s : manifest.value("specs", Json::array())) {
      auto p = fs::path(dir) / s.get<std::string>();
      if (!fs::exists(p)) throw InputError(m.string() + ": missing spec " + p.string());
      specs.push_back(p.string());
    }
    Json cases = Json::array();
    for (const auto& c : manifest.at("cases")) {
      std::vector<std::string> args{"opensos"};
      for (const auto& a : c.at("args")) args.push_back(a.get<std::string>());
      for (const auto& s : specs) {
        args.push_back("--spec");
        args.push_back(s);
      }
      args.push_back("--json");
      std::vector<const char*> argv;
      for (const auto& a : args) argv.push_back(a.c_str());
      std::ostringstream cout_, cerr_;
      int code = run_cli(static_cast<int>(argv.size()), argv.data(), cout_, cerr_);
      Json output;
      try {
        output = Json::parse(cout_.str());
      } catch (const Json::exception&) {
        output = cout_.str();
      }
      const int expected = c.at("exit").get<int>();
      bool ok = code == expected;
      std::string why = ok ? "" : "exit " + std::to_string(code);
      if (ok && c.contains("json") && !subsumes(c["json"], output)) {
        ok = false;
        why = "json mismatch";
      }
      (ok ? passed : failed)++;
      const std::string name = c.at("name").get<std::string>();
      if (!ok) failing.push_back(fixture + "/" + name);
      Json row = {{"name", name}, {"expected_exit", expected}, {"exit", code}, {"pass", ok}, {"output", output}};
      if (!cerr_.str().empty()) row["stderr"] = cerr_.str();
      cases.push_back(row);
      if (!json) {
        out << fixture << "  " << name << "  expected " << expected << "  actual " << code << "  "
            << (ok ? "PASS" : "FAIL " + why) << "\n";
      }
    }
    report.push_back({{"fixture", fixture}, {"cases", cases}});
  }
  if (json) {
    out << Json({{"fixtures", report}, {"passed", passed}, {"failed", failed}}).dump(2) << "\n";
  } else {
    out << passed << " passed, " << failed << " failed\n";
  }
  for (const auto& f : failing) err << "corpus: expectation diverges in " << f << "\n";
  return failed ? kFails : kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Open-term bisimulation and equation preservation for positive GSOS"};
  app.require_subcommand(1);
  RunConfig c;
  std::string corpus_dir;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--spec", c.specs, "spec file or directory (repeatable)");
    sub->add_flag("--json", c.json, "JSON output");
    return sub;
  };
  auto named = [&](CLI::App* sub) {
    sub->add_option("--tss", c.tss, "TSS name");
    return common(sub);
  };
  auto bounded = [&](CLI::App* sub) {
    sub->add_option("--term-size", c.term_size, "closed-term size bound");
    sub->add_option("--depth", c.depth, "game and bisimulation depth");
    sub->add_option("--state-cap", c.state_cap, "LTS state cap");
    sub->add_option("--pair-cap", c.pair_cap, "game position cap");
    sub->add_option("--position-cap", c.position_cap, "term size and branching before a game position is left open");
    return named(sub);
  };

  auto* parse_check = common(app.add_subcommand("parse-check", "parse spec files"));
  parse_check->add_option("files", c.specs, "spec files");
  auto* gsos_check = named(app.add_subcommand("gsos-check", "check the positive GSOS format"));
  gsos_check->add_option("files", c.specs, "spec files");
  auto* extension_check = named(app.add_subcommand("extension-check", "disjointness and robustness of an extension"));
  extension_check->add_option("--ext", c.ext, "extension TSS")->required();
  extension_check->add_option("--eqs", c.eqs, "equation file");
  auto* ruloids_sub = named(app.add_subcommand("ruloids", "most general ruloids of an open term"));
  ruloids_sub->add_option("term", c.positional)->required();
  auto* transitions_sub = named(app.add_subcommand("transitions", "transitions of a closed term"));
  transitions_sub->add_option("term", c.positional)->required();
  auto* explore_sub = bounded(app.add_subcommand("explore", "reachable LTS of a closed term"));
  explore_sub->add_option("term", c.positional)->required();
  auto* check_sub = bounded(app.add_subcommand("check", "check NOTION LHS RHS"));
  check_sub->add_option("args", c.positional, "notion, lhs, rhs")->expected(3)->required();
  auto* fertility_sub = named(app.add_subcommand("fertility", "initial fertility search"));
  fertility_sub->add_option("--size", c.size, "closed-term size bound");
  fertility_sub->add_flag("--allow-many-labels", c.allow_many_labels, "lift the label-count guard");
  auto* nonev_sub = named(app.add_subcommand("non-evolving", "non-evolving argument positions"));
  auto* robust_sub = named(app.add_subcommand("robust-eq", "robust equation criteria"));
  robust_sub->add_option("--eq", c.eq, "equation name");
  robust_sub->add_option("--eqs", c.eqs, "equation file");
  robust_sub->add_option("--size", c.size, "fertility size bound");
  robust_sub->add_flag("--allow-many-labels", c.allow_many_labels, "lift the label-count guard");
  auto* sweep_sub = bounded(app.add_subcommand("sweep", "check each equation of a TSS"));
  sweep_sub->add_option("--notion", c.notion, "equivalence notion");
  sweep_sub->add_option("--eqs", c.eqs, "equation file");
  auto* prove_sub = named(app.add_subcommand("prove", "equational derivation of LHS = RHS"));
  prove_sub->add_option("args", c.positional, "lhs, rhs")->expected(2)->required();
  prove_sub->add_option("--depth", c.depth, "rewrite steps");
  prove_sub->add_option("--size", c.size, "instance term size");
  auto* advise_sub = bounded(app.add_subcommand("advise", "equation preservation advice for an extension"));
  advise_sub->add_option("--ext", c.ext, "extension TSS")->required();
  advise_sub->add_option("--eqs", c.eqs, "equation file");
  advise_sub->add_option("--notion", c.notion, "equivalence notion");
  advise_sub->add_option("--size", c.size, "fertility size bound");
  advise_sub->add_flag("--allow-many-labels", c.allow_many_labels, "lift the label-count guard");
  auto* corpus_sub = app.add_subcommand("corpus", "run fixture manifests");
  corpus_sub->add_option("dir", corpus_dir)->required();
  corpus_sub->add_flag("--json", c.json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  Runner r(c, out);
  try {
    if (*parse_check) return r.parse_check();
    if (*gsos_check) return r.gsos_check();
    if (*extension_check) return r.extension_check();
    if (*ruloids_sub) return r.ruloids_cmd();
    if (*transitions_sub) return r.transitions_cmd();
    if (*explore_sub) return r.explore_cmd();
    if (*check_sub) return r.check_cmd();
    if (*fertility_sub) return r.fertility_cmd();
    if (*nonev_sub) return r.non_evolving_cmd();
    if (*robust_sub) return r.robust_eq_cmd();
    if (*sweep_sub) return r.sweep_cmd();
    if (*prove_sub) return r.prove_cmd();
    if (*advise_sub) return r.advise_cmd();
    if (*corpus_sub) return run_corpus(corpus_dir, c.json, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace opensos
