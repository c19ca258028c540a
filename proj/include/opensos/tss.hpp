#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "opensos/term.hpp"

namespace opensos {

/// A transition formula `source -label-> target`.
struct Formula {
  Term source;
  Label label;
  Term target;

  friend bool operator==(const Formula&, const Formula&) = default;
  friend auto operator<=>(const Formula&, const Formula&) = default;
};

std::string to_string(const Formula& f);

struct Rule {
  std::string name;
  std::vector<Formula> premises;
  Formula conclusion;

  /// Head operator of the conclusion source, empty when the source is a
  /// variable.
  std::string defined_operator() const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// `p1, p2 |- c` in DSL syntax.
std::string to_string(const Rule& r);

/// A transition system specification, optionally layered over a base.
/// The cumulative accessors (signature, labels, rules) return the union of
/// this layer and every layer below it.
class Tss {
 public:
  Tss(std::string name, Signature own_signature, std::set<Label> own_labels, std::vector<Rule> own_rules,
      std::shared_ptr<const Tss> base = nullptr);

  const std::string& name() const { return name_; }
  const std::shared_ptr<const Tss>& base() const { return base_; }

  const Signature& own_signature() const { return own_signature_; }
  const std::set<Label>& own_labels() const { return own_labels_; }
  const std::vector<Rule>& own_rules() const { return own_rules_; }

  const Signature& signature() const { return signature_; }
  const std::set<Label>& labels() const { return labels_; }
  const std::vector<Rule>& rules() const { return rules_; }

  /// Indices into rules() of the f-defining rules.
  const std::vector<std::size_t>& rules_defining(const std::string& op) const;

  /// This layer alone, without a base. Its rules may still mention
  /// operators declared below.
  std::shared_ptr<const Tss> delta() const;

  /// Whether `ancestor` is this TSS or one of its bases.
  bool extends(const Tss& ancestor) const;

  /// T0 ∪ T1 as a flat TSS named `name`. Throws Error on arity conflicts.
  static std::shared_ptr<const Tss> unite(const std::string& name, const Tss& t0, const Tss& t1);

 private:
  std::string name_;
  Signature own_signature_;
  std::set<Label> own_labels_;
  std::vector<Rule> own_rules_;
  std::shared_ptr<const Tss> base_;

  Signature signature_;
  std::set<Label> labels_;
  std::vector<Rule> rules_;
  std::map<std::string, std::vector<std::size_t>> defining_;
};

using TssPtr = std::shared_ptr<const Tss>;

/// The base, delta and combined TSS of an extension.
struct Extension {
  TssPtr base;
  TssPtr delta;
  TssPtr combined;
};

/// Interprets `ext` as an extension of `base`: when `ext` is layered on top
/// of `base` the delta is every layer above it, otherwise `ext` itself is the
/// delta and the combined TSS is the union.
Extension resolve_extension(const TssPtr& base, const TssPtr& ext);

}  // namespace opensos
