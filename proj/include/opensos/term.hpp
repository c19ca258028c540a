#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opensos {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Label = std::string;

/// Operator symbols with fixed arities.
class Signature {
 public:
  Signature() = default;

  /// Adds `name/arity`; throws Error if `name` is already declared with a
  /// different arity.
  void add(const std::string& name, std::size_t arity);

  bool contains(const std::string& name) const { return ops_.count(name) != 0; }
  std::optional<std::size_t> arity(const std::string& name) const;
  const std::map<std::string, std::size_t>& operators() const { return ops_; }
  bool empty() const { return ops_.empty(); }
  bool has_constants() const;

  /// Union of two signatures; throws Error on an arity conflict.
  static Signature merge(const Signature& a, const Signature& b);

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::map<std::string, std::size_t> ops_;
};

/// Immutable open term: a variable or an operator applied to arguments.
/// Copies share structure.
class Term {
 public:
  static Term variable(std::string name);
  static Term make(std::string op, std::vector<Term> args = {});

  bool is_var() const { return node_->is_var; }
  /// Variable name or operator name.
  const std::string& name() const { return node_->name; }
  std::span<const Term> args() const { return node_->args; }
  const Term& arg(std::size_t i) const { return node_->args.at(i); }
  std::size_t arity() const { return node_->args.size(); }

  /// Number of operator nodes; variables count zero.
  std::size_t size() const { return node_->size; }
  bool is_closed() const { return node_->closed; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node {
    bool is_var = false;
    std::string name;
    std::vector<Term> args;
    std::size_t size = 0;
    std::size_t hash = 0;
    bool closed = true;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

/// DSL syntax: `x`, `zero`, `plus(x, zero)`.
std::string to_string(const Term& t);

using Substitution = std::map<std::string, Term>;
using Renaming = std::map<std::string, std::string>;

std::set<std::string> vars(const Term& t);
/// Variables in order of first (leftmost, depth-first) occurrence.
std::vector<std::string> vars_in_order(const Term& t);
void collect_vars_in_order(const Term& t, std::vector<std::string>& out);

/// Homomorphic application; unmapped variables are left untouched.
Term apply(const Substitution& sigma, const Term& t);
Term rename(const Renaming& r, const Term& t);
/// (outer ∘ inner): applying the result equals apply(outer, apply(inner, t)).
Substitution compose(const Substitution& outer, const Substitution& inner);

bool is_linear(const Term& t);
bool occurs(const std::string& var, const Term& t);

/// Renames variables to v0, v1, ... by first occurrence.
std::pair<Term, Renaming> canonical_rename(const Term& t);
/// Joint canonical renaming of several terms, scanned left to right.
std::pair<std::vector<Term>, Renaming> canonical_rename(std::span<const Term> ts);

/// Checks arities against `sig`; throws Error naming the first offending
/// operator.
void check_well_formed(const Term& t, const Signature& sig);
bool is_well_formed(const Term& t, const Signature& sig);

/// Every closed term with at most `max_size` operator nodes, each once, in
/// size-lexicographic order (size, then operator name, then arguments).
std::vector<Term> enumerate_closed_terms(const Signature& sig, std::size_t max_size);

/// Every term with at most `max_size` operator nodes whose leaves are
/// constants or one of `variables`, in the same order as above.
std::vector<Term> enumerate_terms(const Signature& sig, std::span<const std::string> variables,
                                  std::size_t max_size);

struct Equation {
  Term lhs;
  Term rhs;
  std::string name;
  /// TSS the equation is pinned to, if any.
  std::optional<std::string> tss;

  /// Neither side is a bare variable.
  bool is_proper() const { return !lhs.is_var() && !rhs.is_var(); }
  friend bool operator==(const Equation&, const Equation&) = default;
};

std::string to_string(const Equation& e);

}  // namespace opensos
