#include "opensos/equations.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "choice.hpp"

namespace opensos {

namespace {

bool match(const Term& pat, const Term& t, Substitution& sigma) {
  if (pat.is_var()) {
    auto [it, fresh] = sigma.try_emplace(pat.name(), t);
    return fresh || it->second == t;
  }
  if (t.is_var() || pat.name() != t.name() || pat.arity() != t.arity()) return false;
  for (std::size_t i = 0; i < pat.arity(); ++i) {
    if (!match(pat.arg(i), t.arg(i), sigma)) return false;
  }
  return true;
}

struct Oriented {
  Term from;
  Term to;
  std::vector<std::string> free;  // variables of `to` missing from `from`
  std::string name;
};

class Rewriter {
 public:
  Rewriter(const EquationalTheory& e, const Equation& goal, const ProveOptions& opts) {
    for (const auto& ax : e.axioms) {
      auto name = ax.name.empty() ? to_string(ax) : ax.name;
      add(ax.lhs, ax.rhs, name + " left to right");
      add(ax.rhs, ax.lhs, name + " right to left");
    }
    std::set<std::string> goal_vars = vars(goal.lhs);
    for (const auto& v : vars(goal.rhs)) goal_vars.insert(v);
    for (const auto& v : goal_vars) pool_.push_back(Term::variable(v));
    if (e.over) {
      auto closed = enumerate_closed_terms(e.over->signature(), opts.instance_size);
      pool_.insert(pool_.end(), closed.begin(), closed.end());
    }
  }

  // Every term one rewrite step away from `t`, with its justification.
  std::vector<std::pair<Term, std::string>> step(const Term& t) const {
    std::vector<std::pair<Term, std::string>> out;
    for (const auto& o : rules_) {
      Substitution sigma;
      if (!match(o.from, t, sigma)) continue;
      detail::for_each_choice(std::vector<std::size_t>(o.free.size(), pool_.size()),
                              [&](const std::vector<std::size_t>& pick) {
                                Substitution full = sigma;
                                for (std::size_t k = 0; k < pick.size(); ++k) full.insert_or_assign(o.free[k], pool_[pick[k]]);
                                out.emplace_back(opensos::apply(full, o.to), o.name);
                              });
    }
    if (!t.is_var()) {
      for (std::size_t i = 0; i < t.arity(); ++i) {
        for (auto& [u, why] : step(t.arg(i))) {
          std::vector<Term> args(t.args().begin(), t.args().end());
          args[i] = u;
          out.emplace_back(Term::make(t.name(), std::move(args)), std::move(why));
        }
      }
    }
    return out;
  }

 private:
  void add(const Term& from, const Term& to, std::string name) {
    if (from.is_var() && to.is_var() && from == to) return;
    std::vector<std::string> free;
    auto fv = vars(from);
    for (const auto& v : vars_in_order(to)) {
      if (!fv.count(v)) free.push_back(v);
    }
    rules_.push_back(Oriented{from, to, std::move(free), std::move(name)});
  }

  std::vector<Oriented> rules_;
  std::vector<Term> pool_;
};

struct Visit {
  std::optional<Term> parent;
  std::string why;
  std::size_t depth = 0;
};

}  // namespace

ProofResult prove(const EquationalTheory& e, const Equation& goal, const ProveOptions& opts) {
  ProofResult res;
  if (goal.lhs == goal.rhs) {
    res.proved = true;
    res.steps.push_back({goal.lhs, ""});
    res.detail = "reflexivity";
    return res;
  }
  Rewriter rw(e, goal, opts);
  std::map<Term, Visit> seen[2];
  std::deque<Term> frontier[2];
  seen[0].emplace(goal.lhs, Visit{});
  seen[1].emplace(goal.rhs, Visit{});
  frontier[0].push_back(goal.lhs);
  frontier[1].push_back(goal.rhs);
  std::size_t reached[2] = {0, 0};
  std::optional<Term> meet;
  while (!meet && reached[0] + reached[1] < opts.depth) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (frontier[side].empty()) side = 1 - side;
    if (frontier[side].empty()) break;
    std::deque<Term> next;
    for (const auto& t : frontier[side]) {
      for (auto& [u, why] : rw.step(t)) {
        if (seen[side].count(u)) continue;
        seen[side].emplace(u, Visit{t, why, reached[side] + 1});
        if (seen[1 - side].count(u)) {
          meet = u;
          break;
        }
        next.push_back(u);
      }
      if (meet || seen[0].size() + seen[1].size() > opts.term_cap) break;
    }
    ++reached[side];
    frontier[side] = std::move(next);
    if (seen[0].size() + seen[1].size() > opts.term_cap) break;
  }
  if (!meet) {
    res.detail = "no derivation within " + std::to_string(opts.depth) + " steps (" +
                 std::to_string(seen[0].size() + seen[1].size()) + " terms visited)";
    return res;
  }
  std::vector<ProofStep> forward;
  for (std::optional<Term> t = *meet; t;) {
    const auto& v = seen[0].at(*t);
    forward.push_back({*t, v.why});
    t = v.parent;
  }
  std::reverse(forward.begin(), forward.end());
  res.steps = std::move(forward);
  // walk back towards the rhs; each step is the inverse of the one recorded
  for (Term t = *meet; seen[1].at(t).parent;) {
    const auto& v = seen[1].at(t);
    std::string why = v.why;
    auto flip = [&](const std::string& from, const std::string& to) {
      if (why.size() >= from.size() && why.compare(why.size() - from.size(), from.size(), from) == 0) {
        why.replace(why.size() - from.size(), from.size(), to);
        return true;
      }
      return false;
    };
    if (!flip(" left to right", " right to left")) flip(" right to left", " left to right");
    res.steps.push_back({*v.parent, why});
    t = *v.parent;
  }
  res.proved = true;
  res.detail = "derivation of " + std::to_string(res.steps.size() - 1) + " steps";
  return res;
}

bool passes(const Verdict& v) {
  return v.outcome == Outcome::Holds || (v.notion == Notion::Ci && v.no_counterexample);
}

bool SweepReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const SweepEntry& e) { return e.passed; });
}

namespace {

const char* kCaveat =
    "axioms are checked one by one; soundness of the generated theory follows only where the equivalence is a "
    "congruence for the TSS";

}  // namespace

SweepReport soundness_sweep(const EquationalTheory& e, Notion notion, const Bounds& b) {
  SweepReport r;
  r.notion = notion;
  r.caveat = kCaveat;
  Semantics sem(e.over);
  for (const auto& ax : e.axioms) {
    Verdict v = check(notion, sem, ax.lhs, ax.rhs, b);
    bool ok = passes(v);
    r.entries.push_back(SweepEntry{ax, std::move(v), ok});
  }
  return r;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::GuaranteedPreserved: return "guaranteed-preserved";
    case Classification::EmpiricallyPreserved: return "empirically-preserved-at-bound";
    case Classification::Broken: return "broken";
    case Classification::NotSoundOnBase: return "not-sound-on-base";
  }
  return "?";
}

PreservationReport preservation_advisor(const std::vector<Equation>& axioms, const Extension& ext, Notion notion,
                                        const AdvisorOptions& opts) {
  PreservationReport rep;
  rep.base = ext.base->name();
  rep.extension = ext.delta->name();
  rep.notion = notion;
  rep.caveat = kCaveat;
  Semantics sem0(ext.base);
  Semantics sem1(ext.combined);

  Conjunct disjoint{"disjoint-extension", false, ""};
  try {
    auto d = validate_disjoint_extension(*ext.base, *ext.delta);
    disjoint.satisfied = d.disjoint();
    disjoint.detail = d.disjoint() ? "every new rule defines a new operator"
                                   : d.offending.front().first + ": " + d.offending.front().second;
  } catch (const Error& err) {
    disjoint.detail = err.what();
  }
  auto fmt = validate_positive_gsos(*ext.combined);
  Conjunct positive{"extension-positive-gsos", fmt.ok(),
                    fmt.ok() ? "all rules conform" : fmt.violations.front().rule + ": " + fmt.violations.front().kind};
  const bool adds = adds_labels(*ext.base, *ext.delta);
  const Notion proper_notion = (notion == Notion::Hp || notion == Notion::Php) ? Notion::Php : Notion::Pfh;

  for (const auto& ax : axioms) {
    AxiomReport ar{ax};
    ar.base = check(notion, sem0, ax.lhs, ax.rhs, opts.bounds);
    Conjunct sound{"sound-on-base", passes(ar.base), ar.base.detail};

    TheoremCheck robust{"robust-extension", notion == Notion::Ci || notion == Notion::Strong, {}};
    robust.criteria = robust_extension_criteria(*ext.base, *ext.delta, std::span<const Equation>(&ax, 1));
    robust.criteria.conjuncts.push_back(sound);
    if (!robust.relevant) robust.criteria.notes.push_back("speaks about transitions of closed instances only");
    ar.theorems.push_back(std::move(robust));

    TheoremCheck nolabels{"no-new-labels", notion == Notion::Fh || notion == Notion::Hp, {}};
    nolabels.criteria.conjuncts = {disjoint, positive,
                                   {"no-new-labels", !adds, adds ? "the extension declares new labels" : "label set unchanged"},
                                   {"sound-on-base", ar.base.outcome == Outcome::Holds, ar.base.detail}};
    ar.theorems.push_back(std::move(nolabels));

    TheoremCheck proper{"proper-bisimilarity", notion != Notion::Strong, {}};
    Verdict cert = check(proper_notion, sem0, ax.lhs, ax.rhs, opts.bounds);
    proper.criteria.conjuncts = {disjoint, positive,
                                 {"proper-certificate", cert.outcome == Outcome::Holds,
                                  to_string(proper_notion) + " " + to_string(cert.outcome) + ": " + cert.detail}};
    ar.theorems.push_back(std::move(proper));

    TheoremCheck nonev{"non-evolving", notion == Notion::Ci, {}};
    nonev.criteria = robust_equation_criteria(ax, ext.base, opts.fertility_size, opts.allow_many_labels);
    nonev.criteria.conjuncts.push_back(disjoint);
    nonev.criteria.conjuncts.push_back(sound);
    ar.theorems.push_back(std::move(nonev));

    ar.extended = check(notion, sem1, ax.lhs, ax.rhs, opts.bounds);
    if (ar.base.outcome == Outcome::Fails) {
      ar.classification = Classification::NotSoundOnBase;
    } else {
      for (const auto& th : ar.theorems) {
        if (th.applies()) {
          ar.classification = Classification::GuaranteedPreserved;
          ar.theorem = th.theorem;
          break;
        }
      }
      if (ar.extended.outcome == Outcome::Fails) {
        ar.contradiction = ar.classification == Classification::GuaranteedPreserved;
        ar.classification = Classification::Broken;
      } else if (ar.theorem.empty()) {
        ar.classification = Classification::EmpiricallyPreserved;
      }
    }
    rep.axioms.push_back(std::move(ar));
  }
  return rep;
}

}  // namespace opensos
