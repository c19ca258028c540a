#include "opensos/gsos.hpp"

#include <algorithm>

#include "opensos/ruloid.hpp"

namespace opensos {

namespace {

std::string join(const std::set<Label>& s) {
  std::string out = "{";
  for (const auto& l : s) out += (out.size() > 1 ? ", " : "") + l;
  return out + "}";
}

void check_rule(const Rule& rule, const Tss& t, std::vector<FormatViolation>& out) {
  auto bad = [&](std::string kind, std::string why) {
    out.push_back(FormatViolation{rule.name, std::move(kind), std::move(why)});
  };
  auto labelled = [&](const Formula& f) {
    if (!t.labels().count(f.label)) bad("undeclared label", "label '" + f.label + "' is not declared");
  };
  for (const auto* term : {&rule.conclusion.source, &rule.conclusion.target}) {
    if (!is_well_formed(*term, t.signature())) {
      bad("ill-formed term", "'" + to_string(*term) + "' does not respect the signature");
    }
  }
  labelled(rule.conclusion);
  const Term& src = rule.conclusion.source;
  if (src.is_var()) {
    bad("source not an operator", "conclusion source '" + src.name() + "' is a variable");
    return;
  }
  std::set<std::string> bound;
  std::set<std::string> args;
  for (const auto& a : src.args()) {
    if (!a.is_var()) {
      bad("source argument not a variable", "argument '" + to_string(a) + "' of the conclusion source");
    } else if (!bound.insert(a.name()).second) {
      bad("repeated source variable", "variable '" + a.name() + "' occurs twice in " + to_string(src));
    } else {
      args.insert(a.name());
    }
  }
  for (const auto& p : rule.premises) {
    labelled(p);
    if (!p.source.is_var() || !args.count(p.source.name())) {
      bad("premise source must be an argument variable", "premise " + to_string(p));
    }
    if (!p.target.is_var()) {
      bad("premise target not a variable", "premise " + to_string(p));
    } else if (!bound.insert(p.target.name()).second) {
      bad("repeated variable", "premise target '" + p.target.name() + "' is already bound");
    }
  }
  for (const auto& v : vars(rule.conclusion.target)) {
    if (!bound.count(v)) bad("target variable escape", "'" + v + "' in the conclusion target is unbound");
  }
}

// Non-evolving indices of one rule in the positive GSOS shape.
std::set<std::size_t> rule_non_evolving(const Rule& rule) {
  auto tv = vars(rule.conclusion.target);
  std::set<std::size_t> out;
  const auto args = rule.conclusion.source.args();
  for (std::size_t i = 0; i < args.size(); ++i) {
    bool evolving = tv.count(args[i].name()) != 0;
    for (const auto& p : rule.premises) {
      if (p.source.name() == args[i].name() && tv.count(p.target.name())) evolving = true;
    }
    if (!evolving) out.insert(i);
  }
  return out;
}

void open_args_at_evolving(const Term& t, const NonEvolvingTable& table, std::vector<std::string>& out) {
  if (t.is_var()) return;
  const auto& ok = table.at(t.name());
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (!t.arg(i).is_closed() && !ok.count(i)) {
      out.push_back(to_string(t.arg(i)) + " at index " + std::to_string(i) + " of " + t.name());
    }
    open_args_at_evolving(t.arg(i), table, out);
  }
}

std::string join_list(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : "; ") + x;
  return out;
}

}  // namespace

FormatReport validate_positive_gsos(const Tss& t) {
  FormatReport r;
  for (const auto& rule : t.rules()) check_rule(rule, t, r.violations);
  return r;
}

DisjointnessReport validate_disjoint_extension(const Tss& t0, const Tss& delta) {
  Signature::merge(t0.signature(), delta.signature());
  DisjointnessReport r;
  for (const auto& rule : delta.rules()) {
    auto op = rule.defined_operator();
    if (op.empty()) {
      r.offending.emplace_back(rule.name, "conclusion source is a variable");
    } else if (t0.signature().contains(op)) {
      r.offending.emplace_back(rule.name, "defines operator '" + op + "' of the base signature");
    } else if (!delta.signature().contains(op)) {
      r.offending.emplace_back(rule.name, "defines undeclared operator '" + op + "'");
    }
  }
  return r;
}

LabelUsage label_usage(const Tss& t) {
  LabelUsage u;
  for (const auto& rule : t.own_rules()) {
    for (const auto& p : rule.premises) u.premise_labels.insert(p.label);
    u.conclusion_labels.insert(rule.conclusion.label);
  }
  return u;
}

bool adds_labels(const Tss& t0, const Tss& delta) {
  return !std::includes(t0.labels().begin(), t0.labels().end(), delta.labels().begin(), delta.labels().end());
}

NonEvolvingTable non_evolving_indices(const Tss& t) {
  NonEvolvingTable table;
  for (const auto& [op, arity] : t.signature().operators()) {
    auto& set = table[op];
    for (std::size_t i = 0; i < arity; ++i) set.insert(i);
    for (std::size_t idx : t.rules_defining(op)) {
      auto keep = rule_non_evolving(t.rules()[idx]);
      std::erase_if(set, [&](std::size_t i) { return !keep.count(i); });
    }
  }
  return table;
}

FertilityResult initial_fertility(const TssPtr& t, std::size_t size_bound, bool allow_many_labels) {
  const auto& labels = t->labels();
  if (labels.size() > kFertilityLabelGuard && !allow_many_labels) {
    throw Error("initial fertility: " + std::to_string(labels.size()) + " labels exceed the guard of " +
                std::to_string(kFertilityLabelGuard));
  }
  std::vector<Label> ls(labels.begin(), labels.end());
  std::set<std::set<Label>> wanted;
  for (std::size_t mask = 0; mask < (std::size_t{1} << ls.size()); ++mask) {
    std::set<Label> s;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (mask >> i & 1) s.insert(ls[i]);
    }
    wanted.insert(std::move(s));
  }
  FertilityResult r;
  r.bound = size_bound;
  Semantics sem(t);
  for (const auto& p : enumerate_closed_terms(t->signature(), size_bound)) {
    if (r.witnesses.size() == wanted.size()) break;
    r.witnesses.emplace(sem.initial_actions(p), p);
  }
  for (const auto& s : wanted) {
    if (!r.witnesses.count(s)) r.missing.push_back(s);
  }
  r.fertile = r.missing.empty();
  return r;
}

bool CriteriaReport::met() const {
  return std::all_of(conjuncts.begin(), conjuncts.end(), [](const Conjunct& c) { return c.satisfied; });
}

const Conjunct* CriteriaReport::find(const std::string& name) const {
  for (const auto& c : conjuncts) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CriteriaReport robust_equation_criteria(const Equation& eq, const TssPtr& t, std::size_t size_bound,
                                        bool allow_many_labels) {
  CriteriaReport r;
  auto fert = initial_fertility(t, size_bound, allow_many_labels);
  std::string missing;
  for (const auto& s : fert.missing) missing += (missing.empty() ? "" : ", ") + join(s);
  r.conjuncts.push_back({"initially-fertile", fert.fertile,
                         fert.fertile ? "every label subset realized within size " + std::to_string(size_bound)
                                      : "unrealized at size " + std::to_string(size_bound) + ": " + missing});

  std::vector<std::string> nonlinear;
  if (!is_linear(eq.lhs)) nonlinear.push_back("lhs " + to_string(eq.lhs));
  if (!is_linear(eq.rhs)) nonlinear.push_back("rhs " + to_string(eq.rhs));
  r.conjuncts.push_back({"linear", nonlinear.empty(),
                         nonlinear.empty() ? "no repeated variables" : "repeated variables in " + join_list(nonlinear)});

  auto table = non_evolving_indices(*t);
  std::vector<std::string> evolving;
  open_args_at_evolving(eq.lhs, table, evolving);
  open_args_at_evolving(eq.rhs, table, evolving);
  r.conjuncts.push_back({"open-arguments-non-evolving", evolving.empty(),
                         evolving.empty() ? "every open argument sits at a non-evolving index"
                                          : "open arguments at evolving indices: " + join_list(evolving)});

  std::vector<std::string> bare;
  if (eq.lhs.is_var()) bare.push_back("lhs " + eq.lhs.name());
  if (eq.rhs.is_var()) bare.push_back("rhs " + eq.rhs.name());
  r.conjuncts.push_back(
      {"no-bare-variable-side", bare.empty(), bare.empty() ? "both sides are applications" : "bare variable: " + join_list(bare)});

  r.notes.push_back("closed arguments at evolving indices are permitted");
  return r;
}

CriteriaReport robust_extension_criteria(const Tss& t0, const Tss& delta, std::span<const Equation> eqs) {
  CriteriaReport r;
  try {
    auto d = validate_disjoint_extension(t0, delta);
    std::string detail = "every new rule defines a new operator";
    if (!d.disjoint()) {
      detail.clear();
      for (const auto& [rule, why] : d.offending) detail += (detail.empty() ? "" : "; ") + rule + ": " + why;
    }
    r.conjuncts.push_back({"disjoint-extension", d.disjoint(), detail});
  } catch (const Error& e) {
    r.conjuncts.push_back({"disjoint-extension", false, e.what()});
  }

  auto fmt = validate_positive_gsos(t0);
  r.conjuncts.push_back({"base-positive-gsos", fmt.ok(),
                         fmt.ok() ? "all base rules conform"
                                  : fmt.violations.front().rule + ": " + fmt.violations.front().kind});

  std::vector<std::string> improper;
  for (const auto& e : eqs) {
    if (!e.is_proper()) improper.push_back(e.name.empty() ? to_string(e) : e.name);
  }
  r.conjuncts.push_back(
      {"equations-proper", improper.empty(), improper.empty() ? "no side is a bare variable" : "improper: " + join_list(improper)});

  std::set<Label> base_premises;
  for (const auto& rule : t0.rules()) {
    for (const auto& p : rule.premises) base_premises.insert(p.label);
  }
  auto concl = label_usage(delta).conclusion_labels;
  std::set<Label> overlap;
  std::set_intersection(concl.begin(), concl.end(), base_premises.begin(), base_premises.end(),
                        std::inserter(overlap, overlap.begin()));
  r.conjuncts.push_back({"conclusion-labels-avoid-base-premises", overlap.empty(),
                         overlap.empty() ? "extension conclusions " + join(concl) + " vs base premises " + join(base_premises)
                                         : "label overlap " + join(overlap)});
  return r;
}

}  // namespace opensos
