#pragma once

#include <string>
#include <vector>

#include "opensos/bisim.hpp"
#include "opensos/gsos.hpp"

namespace opensos {

struct EquationalTheory {
  std::vector<Equation> axioms;
  TssPtr over;
};

struct ProofStep {
  Term term;
  /// How this term was reached from the previous one; empty for the first.
  std::string justification;
};

struct ProofResult {
  bool proved = false;
  std::vector<ProofStep> steps;
  std::string detail;
};

struct ProveOptions {
  /// Total rewrite steps.
  std::size_t depth = 4;
  /// Size of closed terms used to instantiate variables that appear only on
  /// the side an axiom is rewritten towards.
  std::size_t instance_size = 3;
  std::size_t term_cap = 200'000;
};

/// Bounded bidirectional search for an equational derivation of `goal`,
/// using the axioms in both directions at any position.
ProofResult prove(const EquationalTheory& e, const Equation& goal, const ProveOptions& opts = {});

struct SweepEntry {
  Equation axiom;
  Verdict verdict;
  /// Holds, or (ci) no counterexample within the bounds.
  bool passed = false;
};

struct SweepReport {
  Notion notion = Notion::Ci;
  std::vector<SweepEntry> entries;
  std::string caveat;
  bool all_passed() const;
};

/// Whether `v` counts as soundness evidence for an axiom.
bool passes(const Verdict& v);

SweepReport soundness_sweep(const EquationalTheory& e, Notion notion, const Bounds& b = {});

struct TheoremCheck {
  /// "robust-extension", "no-new-labels", "proper-bisimilarity" or
  /// "non-evolving".
  std::string theorem;
  /// Whether the result speaks about the requested notion at all.
  bool relevant = false;
  CriteriaReport criteria;
  bool applies() const { return relevant && criteria.met(); }
};

enum class Classification { GuaranteedPreserved, EmpiricallyPreserved, Broken, NotSoundOnBase };

std::string to_string(Classification c);

struct AxiomReport {
  explicit AxiomReport(Equation ax) : axiom(std::move(ax)) {}

  Equation axiom;
  Verdict base;
  std::vector<TheoremCheck> theorems;
  Verdict extended;
  Classification classification = Classification::EmpiricallyPreserved;
  /// Cited theorem when guaranteed.
  std::string theorem;
  /// A guarantee was contradicted by the re-check on the extension.
  bool contradiction = false;
};

struct PreservationReport {
  std::string base;
  std::string extension;
  Notion notion = Notion::Ci;
  std::vector<AxiomReport> axioms;
  std::string caveat;
};

struct AdvisorOptions {
  Bounds bounds;
  /// Closed-term size for the fertility search.
  std::size_t fertility_size = 4;
  bool allow_many_labels = false;
};

/// `extension.base` must be the TSS the axioms are sound for.
PreservationReport preservation_advisor(const std::vector<Equation>& axioms, const Extension& extension, Notion notion,
                                        const AdvisorOptions& opts = {});

}  // namespace opensos
