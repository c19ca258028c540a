#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "opensos/tss.hpp"

namespace opensos {

struct FormatViolation {
  std::string rule;
  /// Short clause name, e.g. "repeated source variable".
  std::string kind;
  std::string explanation;
};

struct FormatReport {
  std::vector<FormatViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every rule (cumulative) of `t` against the positive GSOS shape.
FormatReport validate_positive_gsos(const Tss& t);

struct DisjointnessReport {
  /// Rule name paired with the reason it breaks disjointness.
  std::vector<std::pair<std::string, std::string>> offending;
  bool disjoint() const { return offending.empty(); }
};

/// Every rule of `delta` must define an operator of Σ1 \ Σ0. Throws Error
/// when the two signatures disagree on a shared operator's arity.
DisjointnessReport validate_disjoint_extension(const Tss& t0, const Tss& delta);

struct LabelUsage {
  std::set<Label> premise_labels;
  std::set<Label> conclusion_labels;
};

/// Labels used by the own (non-base) rules of `t`.
LabelUsage label_usage(const Tss& t);

/// Whether `delta` declares a label missing from `t0`.
bool adds_labels(const Tss& t0, const Tss& delta);

/// Operator name to its set of non-evolving argument indices.
using NonEvolvingTable = std::map<std::string, std::set<std::size_t>>;

NonEvolvingTable non_evolving_indices(const Tss& t);

struct FertilityResult {
  bool fertile = false;
  /// First witness in enumeration order for each realized label subset.
  std::map<std::set<Label>, Term> witnesses;
  std::vector<std::set<Label>> missing;
  std::size_t bound = 0;
};

inline constexpr std::size_t kFertilityLabelGuard = 16;

/// Bounded search for closed terms realizing every subset of labels as
/// initial actions. Throws Error when |L| exceeds the guard unless
/// `allow_many_labels` is set.
FertilityResult initial_fertility(const TssPtr& t, std::size_t size_bound, bool allow_many_labels = false);

struct Conjunct {
  std::string name;
  bool satisfied = false;
  std::string detail;
};

struct CriteriaReport {
  std::vector<Conjunct> conjuncts;
  std::vector<std::string> notes;
  bool met() const;
  const Conjunct* find(const std::string& name) const;
};

/// Side conditions under which a ci-sound equation stays sound under any
/// disjoint extension (fertility, linearity, open arguments at non-evolving
/// indices, no bare-variable side).
CriteriaReport robust_equation_criteria(const Equation& eq, const TssPtr& t, std::size_t size_bound,
                                        bool allow_many_labels = false);

/// Conditions under which every sound proper equation of `t0` stays sound
/// for the extension by `delta`.
CriteriaReport robust_extension_criteria(const Tss& t0, const Tss& delta, std::span<const Equation> eqs);

}  // namespace opensos
