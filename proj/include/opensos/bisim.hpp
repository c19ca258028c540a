#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opensos/ruloid.hpp"

namespace opensos {

enum class Notion { Strong, Ci, Fh, Hp, Pfh, Php };

std::string to_string(Notion n);
std::optional<Notion> parse_notion(std::string_view s);

struct Bounds {
  /// Largest closed term (operator nodes) substituted by the ci sweep.
  std::size_t term_size = 3;
  /// Depth of stratified bisimilarity when an LTS is truncated.
  std::size_t depth = 12;
  std::size_t state_cap = 10'000;
  /// Game positions expanded by the fh/hp checkers before giving up.
  std::size_t pair_cap = 5'000;
  /// Game positions with larger terms or hypothesis sets, or needing more
  /// ruloids or variable identifications than this, are left unexpanded.
  std::size_t position_cap = 2'000;
};

enum class Outcome { Holds, Fails, Inconclusive };

std::string to_string(Outcome o);

/// Hennessy-Milner formula: tt, <a>(φ1 & ... & φn), or !φ.
struct Hml {
  enum class Kind { Top, Diamond, Negation };
  Kind kind = Kind::Top;
  Label label;
  std::vector<Hml> operands;

  friend bool operator==(const Hml&, const Hml&) = default;
};

std::string to_string(const Hml& f);
bool satisfies(Semantics& sem, const Term& p, const Hml& f);

/// A position of the hp game: (s, t) related under hypotheses gamma.
struct HpState {
  Term s;
  Term t;
  std::vector<Hypothesis> gamma;

  friend bool operator==(const HpState&, const HpState&) = default;
  friend auto operator<=>(const HpState&, const HpState&) = default;
};

std::string to_string(const HpState& st);

/// One move of a failing game: at `state`, the obligation `ruloid` of
/// `side` ("lhs" or "rhs") could only be answered by losing positions.
struct GameStep {
  HpState state;
  std::string side;
  Ruloid obligation;
};

struct Verdict {
  Notion notion = Notion::Strong;
  Outcome outcome = Outcome::Inconclusive;
  std::string detail;

  /// ci only: no closing substitution exists, the verdict holds vacuously.
  bool vacuous = false;
  /// ci only: the sweep finished without a counterexample.
  bool no_counterexample = false;
  std::size_t explored = 0;

  // Holds certificates
  std::vector<std::pair<Term, Term>> relation;
  std::vector<HpState> hp_relation;
  std::vector<std::string> notes;

  // Fails witnesses
  std::optional<Substitution> substitution;
  /// Closed pair separated by `formula` (true of the first, not the second).
  std::optional<std::pair<Term, Term>> distinguished;
  std::optional<Hml> formula;
  std::optional<Ruloid> unmatched;
  std::string unmatched_side;
  std::optional<HpState> failing_state;
  std::optional<std::pair<Term, Term>> improper;
  std::vector<GameStep> path;
};

/// Proper pair: both sides are applications, or both are the same variable.
bool is_proper_pair(const Term& s, const Term& t);

Verdict strong_bisim(Semantics& sem, const Term& p, const Term& q, const Bounds& b = {});
Verdict ci_bisim(Semantics& sem, const Term& s, const Term& t, const Bounds& b = {});
Verdict fh_bisim(Semantics& sem, const Term& s, const Term& t, const Bounds& b = {}, bool proper = false);
Verdict hp_bisim(Semantics& sem, const Term& s, const Term& t, const Bounds& b = {}, bool proper = false);

Verdict check(Notion n, Semantics& sem, const Term& s, const Term& t, const Bounds& b = {});
Verdict check(Notion n, const TssPtr& tss, const Term& s, const Term& t, const Bounds& b = {});

}  // namespace opensos
