#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "opensos/tss.hpp"

namespace opensos {

/// A premise `source -label-> target` between two distinct variables.
struct Hypothesis {
  std::string source;
  Label label;
  std::string target;

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
  friend auto operator<=>(const Hypothesis&, const Hypothesis&) = default;
};

std::string to_string(const Hypothesis& h);

/// `hypotheses |- source -label-> target`, in most-general canonical form:
/// hypothesis targets are pairwise distinct, fresh for `source`, and named
/// h0, h1, ... ordered by source variable, label and first use in `target`.
struct Ruloid {
  std::vector<Hypothesis> hypotheses;
  Term source;
  Label label;
  Term target;

  friend bool operator==(const Ruloid&, const Ruloid&) = default;
  friend auto operator<=>(const Ruloid&, const Ruloid&) = default;
};

std::string to_string(const Ruloid& r);

/// Puts a ruloid with arbitrary fresh hypothesis targets into canonical form.
Ruloid canonical_ruloid(std::vector<Hypothesis> hyps, Term source, Label label, Term target);

struct Step {
  Label label;
  Term target;

  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step&, const Step&) = default;
};

/// Reachable fragment of the transition system from a root term.
struct Lts {
  /// Breadth-first discovery order; states[0] is the root.
  std::vector<Term> states;
  std::vector<std::tuple<std::size_t, Label, std::size_t>> transitions;
  /// False when the state cap cut exploration short.
  bool complete = true;
};

struct RuloidLimit : Error {
  using Error::Error;
};

/// Operational semantics of one positive GSOS TSS. Results are memoized;
/// an instance must not be shared between threads.
class Semantics {
 public:
  /// Throws Error when `tss` is not in the positive GSOS format.
  explicit Semantics(TssPtr tss);

  const Tss& tss() const { return *tss_; }
  const TssPtr& tss_ptr() const { return tss_; }

  /// Most-general provable ruloids with conclusion source `t`, sorted.
  /// Throws RuloidLimit once `t` or a subterm has more than `limit`.
  const std::vector<Ruloid>& ruloids(const Term& t, std::size_t limit = SIZE_MAX);

  /// Derivable transitions of a closed term, sorted and duplicate-free.
  const std::vector<Step>& transitions(const Term& p);

  std::set<Label> initial_actions(const Term& p);

  Lts explore(const Term& p, std::size_t state_cap);

  /// Transitions obtained by closing `r` under `sigma` and discharging each
  /// hypothesis with a derivable transition; all choices.
  std::vector<Step> instantiate_all(const Ruloid& r, const Substitution& sigma);
  /// The first such transition in enumeration order, if any.
  std::optional<Step> instantiate(const Ruloid& r, const Substitution& sigma);

 private:
  std::vector<Ruloid> synthesize(const Term& t, std::size_t limit);
  std::vector<Step> derive(const Term& p);

  template <class Emit>
  void discharge(const Ruloid& r, const Substitution& closing, Emit&& emit);

  TssPtr tss_;
  std::unordered_map<Term, std::vector<Ruloid>, TermHash> ruloid_cache_;
  std::unordered_map<Term, std::vector<Step>, TermHash> step_cache_;
};

std::vector<Ruloid> ruloids(const Term& t, const TssPtr& tss);
std::vector<Step> transitions(const Term& p, const TssPtr& tss);
std::set<Label> initial_actions(const Term& p, const TssPtr& tss);
Lts explore(const Term& p, const TssPtr& tss, std::size_t state_cap);
std::optional<Step> instantiate_ruloid(const Ruloid& r, const Substitution& sigma, const TssPtr& tss);

}  // namespace opensos
