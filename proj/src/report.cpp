#include "opensos/report.hpp"

namespace opensos {

namespace {

Json strings(const auto& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

Json labels(const std::set<Label>& ls) { return Json(std::vector<std::string>(ls.begin(), ls.end())); }

Json pairs(const std::vector<std::pair<Term, Term>>& ps) {
  Json out = Json::array();
  for (const auto& [a, b] : ps) out.push_back({to_string(a), to_string(b)});
  return out;
}

}  // namespace

Json json_of(const Tss& t) {
  Json ops = Json::object();
  for (const auto& [op, arity] : t.own_signature().operators()) ops[op] = arity;
  Json rules = Json::array();
  for (const auto& r : t.own_rules()) {
    rules.push_back({{"name", r.name}, {"premises", strings(r.premises)}, {"conclusion", to_string(r.conclusion)}});
  }
  Json out = {{"name", t.name()}, {"labels", labels(t.own_labels())}, {"ops", ops}, {"rules", rules}};
  out["extends"] = t.base() ? Json(t.base()->name()) : Json(nullptr);
  return out;
}

Json json_of(const SpecDocument& doc) {
  Json tss = Json::array();
  for (const auto& t : doc.tss_decls) tss.push_back(json_of(*t));
  Json eqs = Json::array();
  for (const auto& e : doc.equations) {
    eqs.push_back({{"name", e.name},
                   {"lhs", to_string(e.lhs)},
                   {"rhs", to_string(e.rhs)},
                   {"tss", e.tss ? Json(*e.tss) : Json(nullptr)},
                   {"proper", e.is_proper()}});
  }
  return {{"tss", tss}, {"eqs", eqs}};
}

Json json_of(const Ruloid& r) {
  return {{"hyps", strings(r.hypotheses)},
          {"source", to_string(r.source)},
          {"label", r.label},
          {"target", to_string(r.target)},
          {"text", to_string(r)}};
}

Json json_of(const Step& s) { return {{"label", s.label}, {"target", to_string(s.target)}}; }

Json json_of(const Lts& lts) {
  Json trans = Json::array();
  for (const auto& [from, l, to] : lts.transitions) {
    trans.push_back({to_string(lts.states[from]), l, to_string(lts.states[to])});
  }
  return {{"states", strings(lts.states)}, {"transitions", trans}, {"complete", lts.complete}};
}

Json json_of(const Hml& f) { return to_string(f); }

Json json_of(const HpState& st) {
  return {{"s", to_string(st.s)}, {"t", to_string(st.t)}, {"gamma", strings(st.gamma)}};
}

Json json_of(const Substitution& sigma) {
  Json out = Json::object();
  for (const auto& [x, t] : sigma) out[x] = to_string(t);
  return out;
}

Json json_of(const Verdict& v) {
  Json out = {{"notion", to_string(v.notion)},
              {"outcome", to_string(v.outcome)},
              {"detail", v.detail},
              {"explored", v.explored}};
  if (v.notion == Notion::Ci) {
    out["vacuous"] = v.vacuous;
    out["no_counterexample"] = v.no_counterexample;
  }
  if (!v.notes.empty()) out["notes"] = v.notes;
  if (v.outcome == Outcome::Holds) {
    Json cert = Json::object();
    if (!v.relation.empty()) cert["relation"] = pairs(v.relation);
    if (!v.hp_relation.empty()) {
      Json rel = Json::array();
      for (const auto& st : v.hp_relation) rel.push_back(json_of(st));
      cert["relation"] = rel;
    }
    out["certificate"] = cert;
  }
  if (v.outcome == Outcome::Fails) {
    Json w = Json::object();
    if (v.substitution) w["substitution"] = json_of(*v.substitution);
    if (v.distinguished) w["distinguished"] = {to_string(v.distinguished->first), to_string(v.distinguished->second)};
    if (v.formula) w["formula"] = json_of(*v.formula);
    if (v.unmatched) {
      w["unmatched"] = json_of(*v.unmatched);
      w["side"] = v.unmatched_side;
    }
    if (v.improper) w["improper"] = {to_string(v.improper->first), to_string(v.improper->second)};
    if (v.failing_state) w["state"] = json_of(*v.failing_state);
    if (!v.path.empty()) {
      Json path = Json::array();
      for (const auto& s : v.path) {
        path.push_back({{"state", json_of(s.state)}, {"side", s.side}, {"obligation", to_string(s.obligation)}});
      }
      w["path"] = path;
    }
    out["witness"] = w;
  }
  return out;
}

Json json_of(const CriteriaReport& c) {
  Json conj = Json::array();
  for (const auto& k : c.conjuncts) conj.push_back({{"name", k.name}, {"satisfied", k.satisfied}, {"detail", k.detail}});
  return {{"met", c.met()}, {"conjuncts", conj}, {"notes", c.notes}};
}

Json json_of(const FertilityResult& f) {
  Json w = Json::array();
  for (const auto& [s, t] : f.witnesses) w.push_back({{"labels", labels(s)}, {"term", to_string(t)}});
  Json missing = Json::array();
  for (const auto& s : f.missing) missing.push_back(labels(s));
  return {{"fertile", f.fertile}, {"bound", f.bound}, {"witnesses", w}, {"missing", missing}};
}

Json json_of(const NonEvolvingTable& t) {
  Json out = Json::object();
  for (const auto& [op, idx] : t) out[op] = std::vector<std::size_t>(idx.begin(), idx.end());
  return out;
}

Json json_of(const ProofResult& p) {
  Json steps = Json::array();
  for (const auto& s : p.steps) steps.push_back({{"term", to_string(s.term)}, {"by", s.justification}});
  return {{"proved", p.proved}, {"steps", steps}, {"detail", p.detail}};
}

Json json_of(const SweepReport& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    entries.push_back({{"axiom", e.axiom.name}, {"equation", to_string(e.axiom)}, {"passed", e.passed},
                       {"verdict", json_of(e.verdict)}});
  }
  return {{"notion", to_string(s.notion)}, {"entries", entries}, {"caveat", s.caveat}, {"all_passed", s.all_passed()}};
}

Json json_of(const PreservationReport& p) {
  Json axioms = Json::array();
  for (const auto& a : p.axioms) {
    Json ths = Json::array();
    for (const auto& t : a.theorems) {
      Json j = json_of(t.criteria);
      j["theorem"] = t.theorem;
      j["relevant"] = t.relevant;
      j["applies"] = t.applies();
      ths.push_back(j);
    }
    axioms.push_back({{"axiom", a.axiom.name},
                      {"equation", to_string(a.axiom)},
                      {"base", json_of(a.base)},
                      {"theorems", ths},
                      {"extended", json_of(a.extended)},
                      {"classification", to_string(a.classification)},
                      {"theorem", a.theorem.empty() ? Json(nullptr) : Json(a.theorem)},
                      {"contradiction", a.contradiction}});
  }
  return {{"base", p.base},
          {"extension", p.extension},
          {"notion", to_string(p.notion)},
          {"axioms", axioms},
          {"caveat", p.caveat}};
}

Json analysis_json(const std::string& analysis, const std::string& tss, const std::string& verdict, Json details) {
  return {{"analysis", analysis}, {"tss", tss}, {"verdict", verdict}, {"details", std::move(details)}};
}

}  // namespace opensos
