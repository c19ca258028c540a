#pragma once

// Seeded random positive GSOS systems and the metatheory properties checked
// over them. Shared by the property suite and the acceptance binary.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "opensos/bisim.hpp"
#include "opensos/gsos.hpp"
#include "opensos/spec_io.hpp"

namespace opensos::test {

struct PropertyStats {
  std::size_t cases = 0;
  /// Cases whose antecedent held, so the implication was exercised.
  std::size_t exercised = 0;
  std::size_t violations = 0;
  std::string first_violation;

  void violation(const std::string& what) {
    if (!violations++) first_violation = what;
  }
};

struct OpDecl {
  std::string name;
  std::size_t arity;
};

class TssGenerator {
 public:
  explicit TssGenerator(std::uint32_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  // Base system: a constant plus up to two more operators, one or two labels.
  SpecDocument base() {
    labels_ = coin() ? std::vector<std::string>{"a"} : std::vector<std::string>{"a", "b"};
    ops_ = {{"c", 0}};
    static const char* names[] = {"f", "g"};
    const std::size_t extra = 1 + below(2);
    for (std::size_t i = 0; i < extra; ++i) ops_.push_back({names[i], below(3)});
    std::ostringstream out;
    out << "tss B { labels: " << join(labels_) << ";\n";
    for (const auto& op : ops_) out << "  op " << op.name << "/" << op.arity << ";\n";
    int n = 0;
    for (const auto& op : ops_) {
      const std::size_t rules = below(3);
      for (std::size_t r = 0; r < rules; ++r) out << "  " << rule(op, labels_, ops_, n++) << "\n";
    }
    out << "}\n";
    text_ = out.str();
    return parse(text_);
  }

  // Disjoint extension with one new operator; may add the label "n".
  SpecDocument extension(const SpecDocument& base, bool new_label) {
    auto labels = labels_;
    if (new_label) labels.push_back("n");
    OpDecl op{"h", below(3)};
    auto ops = ops_;
    ops.push_back(op);
    std::ostringstream out;
    out << "tss E extends B { labels: " << join(labels) << ";\n  op h/" << op.arity << ";\n";
    const std::size_t rules = 1 + below(2);
    for (std::size_t r = 0; r < rules; ++r) {
      // a label-adding extension uses its new label at least once
      std::vector<std::string> concl = labels;
      if (new_label && r == 0) concl = {"n"};
      out << "  " << rule(op, labels, ops, 100 + static_cast<int>(r), &concl) << "\n";
    }
    out << "}\n";
    return parse(out.str(), &base);
  }

  const std::string& text() const { return text_; }

  // Random open term over x, y with at most `size` operator nodes.
  Term term(const Signature& sig, std::size_t size) {
    std::vector<OpDecl> ops;
    for (const auto& [n, a] : sig.operators()) ops.push_back({n, a});
    for (;;) {
      auto t = random_term(ops, {"x", "y"}, size);
      if (t.size() <= 3) return t;
    }
  }

 private:
  static std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
    return s;
  }

  Term leaf(const std::vector<OpDecl>& ops, const std::vector<std::string>& leaves) {
    if (!leaves.empty()) return Term::variable(leaves[below(leaves.size())]);
    return Term::make(ops.front().name);  // the constant c comes first
  }

  Term random_term(const std::vector<OpDecl>& ops, const std::vector<std::string>& leaves, std::size_t size) {
    if (size == 0 || (!leaves.empty() && coin(0.3))) return leaf(ops, leaves);
    std::vector<OpDecl> fit;
    for (const auto& op : ops) {
      if (!leaves.empty() || op.arity + 1 <= size) fit.push_back(op);
    }
    const auto& op = fit[below(fit.size())];
    std::vector<Term> args;
    std::size_t budget = size - 1;
    for (std::size_t i = 0; i < op.arity; ++i) {
      std::size_t share = i + 1 == op.arity ? budget : below(budget + 1);
      args.push_back(random_term(ops, leaves, share));
      budget -= std::min(budget, args.back().size());
    }
    return Term::make(op.name, std::move(args));
  }

  std::string rule(const OpDecl& op, const std::vector<std::string>& labels, const std::vector<OpDecl>& ops, int id,
                   const std::vector<std::string>* concl_labels = nullptr) {
    std::vector<std::string> leaves;
    std::vector<std::string> premises;
    std::string source = op.name;
    if (op.arity) {
      source += "(";
      for (std::size_t i = 0; i < op.arity; ++i) {
        std::string x = "x" + std::to_string(i);
        source += (i ? ", " : "") + x;
        leaves.push_back(x);
        for (std::size_t l = 0; l < labels.size(); ++l) {
          if (coin(0.3)) {
            std::string y = "y" + std::to_string(i) + std::to_string(l);
            premises.push_back(x + " -" + labels[l] + "-> " + y);
            leaves.push_back(y);
          }
        }
      }
      source += ")";
    }
    const auto& cl = concl_labels ? *concl_labels : labels;
    auto target = random_term(ops, leaves, below(3));
    std::string out = "rule \"r" + std::to_string(id) + "\": ";
    for (std::size_t i = 0; i < premises.size(); ++i) out += (i ? ", " : "") + premises[i];
    out += " |- " + source + " -" + cl[below(cl.size())] + "-> " + to_string(target) + ";";
    return out;
  }

  std::mt19937 rng_;
  std::vector<std::string> labels_;
  std::vector<OpDecl> ops_;
  std::string text_;
};

inline Bounds property_bounds() {
  Bounds b;
  b.term_size = 3;
  b.depth = 8;
  b.state_cap = 2'000;
  b.pair_cap = 400;
  b.position_cap = 64;
  return b;
}

// Candidate pairs: random, variable swaps, and same-operator siblings.
inline std::vector<std::pair<Term, Term>> candidate_pairs(TssGenerator& gen, const Signature& sig, std::size_t n) {
  std::vector<std::pair<Term, Term>> out;
  Renaming swap{{"x", "y"}, {"y", "x"}};
  for (std::size_t i = 0; i < n; ++i) {
    Term s = gen.term(sig, 1 + gen.below(3));
    Term t = s;
    switch (gen.below(3)) {
      case 0: t = gen.term(sig, 1 + gen.below(3)); break;
      case 1: t = rename(swap, s); break;
      default:
        for (int tries = 0; tries < 8; ++tries) {
          t = gen.term(sig, s.size());
          if (!t.is_var() && !s.is_var() && t.name() == s.name()) break;
        }
    }
    out.emplace_back(s, t);
  }
  return out;
}

inline std::string show(const std::string& what, const std::string& text, const Term& s, const Term& t) {
  return what + " for (" + to_string(s) + ", " + to_string(t) + ") over\n" + text;
}

// (a) fh Holds => hp not Fails; hp Holds => ci has no counterexample.
inline PropertyStats property_hierarchy(std::uint32_t seed, std::size_t want) {
  PropertyStats st;
  TssGenerator gen(seed);
  const auto b = property_bounds();
  while (st.cases < want) {
    auto doc = gen.base();
    auto tss = doc.tss("B");
    Semantics sem(tss);
    for (const auto& [s, t] : candidate_pairs(gen, tss->signature(), 12)) {
      ++st.cases;
      auto fh = check(Notion::Fh, sem, s, t, b);
      auto hp = check(Notion::Hp, sem, s, t, b);
      auto ci = check(Notion::Ci, sem, s, t, b);
      if (fh.outcome == Outcome::Holds) {
        ++st.exercised;
        if (hp.outcome == Outcome::Fails) st.violation(show("fh holds, hp fails", gen.text(), s, t));
      }
      if (hp.outcome == Outcome::Holds && ci.outcome == Outcome::Fails) {
        st.violation(show("hp holds, ci fails", gen.text(), s, t));
      }
    }
  }
  return st;
}

// (b) on closed terms every notion agrees with strong bisimilarity.
inline PropertyStats property_closed_coincidence(std::uint32_t seed, std::size_t want) {
  PropertyStats st;
  TssGenerator gen(seed);
  const auto b = property_bounds();
  while (st.cases < want) {
    auto doc = gen.base();
    auto tss = doc.tss("B");
    Semantics sem(tss);
    auto closed = enumerate_closed_terms(tss->signature(), 3);
    for (int i = 0; i < 12 && !closed.empty(); ++i) {
      const auto& p = closed[gen.below(closed.size())];
      const auto& q = gen.coin(0.3) ? p : closed[gen.below(closed.size())];
      ++st.cases;
      auto strong = check(Notion::Strong, sem, p, q, b);
      if (strong.outcome == Outcome::Inconclusive) continue;
      ++st.exercised;
      for (auto n : {Notion::Ci, Notion::Fh, Notion::Hp, Notion::Pfh, Notion::Php}) {
        auto v = check(n, sem, p, q, b);
        if (v.outcome != Outcome::Inconclusive && v.outcome != strong.outcome) {
          st.violation(show(to_string(n) + " disagrees with strong", gen.text(), p, q));
        }
      }
    }
  }
  return st;
}

// (c) and (d): Holds on the base is never flipped to Fails by an extension.
inline PropertyStats property_preservation(std::uint32_t seed, std::size_t want, bool proper) {
  PropertyStats st;
  TssGenerator gen(seed);
  const auto b = property_bounds();
  const Notion notions[2] = {proper ? Notion::Pfh : Notion::Fh, proper ? Notion::Php : Notion::Hp};
  std::size_t rounds = 0;
  while (st.exercised < want && rounds++ < 50 * want) {
    auto doc = gen.base();
    auto tss = doc.tss("B");
    // label-adding extensions only for the proper variants
    auto ext_doc = gen.extension(doc, proper && gen.coin());
    auto ext = ext_doc.tss("E");
    if (!validate_disjoint_extension(*tss, *ext->delta()).disjoint()) continue;
    Semantics sem0(tss);
    Semantics sem1(ext);
    for (const auto& [s, t] : candidate_pairs(gen, tss->signature(), 10)) {
      for (auto n : notions) {
        ++st.cases;
        if (check(n, sem0, s, t, b).outcome != Outcome::Holds) continue;
        ++st.exercised;
        if (check(n, sem1, s, t, b).outcome == Outcome::Fails) {
          st.violation(show(to_string(n) + " broken by extension", gen.text() + ext_doc.tss("E")->name(), s, t));
        }
      }
    }
  }
  return st;
}

// (e) old closed terms keep their transitions in every disjoint extension.
inline PropertyStats property_conservativity(std::uint32_t seed, std::size_t want) {
  PropertyStats st;
  TssGenerator gen(seed);
  while (st.cases < want) {
    auto doc = gen.base();
    auto tss = doc.tss("B");
    auto ext_doc = gen.extension(doc, gen.coin());
    auto ext = ext_doc.tss("E");
    if (!validate_disjoint_extension(*tss, *ext->delta()).disjoint()) continue;
    ++st.cases;
    Semantics sem0(tss);
    Semantics sem1(ext);
    for (const auto& p : enumerate_closed_terms(tss->signature(), 3)) {
      ++st.exercised;
      if (sem0.transitions(p) != sem1.transitions(p)) {
        st.violation("transitions of " + to_string(p) + " changed over\n" + gen.text());
      }
    }
  }
  return st;
}

}  // namespace opensos::test
