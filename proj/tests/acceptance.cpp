// One line per acceptance criterion. Exit status is nonzero if any fails.
#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>

#include "opensos/cli.hpp"
#include "opensos/equations.hpp"
#include "oracle.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace opensos;
using test::term;

namespace {

struct Result {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

Verdict run(Notion n, const TssPtr& t, const std::string& s, const std::string& u, std::size_t size = 3) {
  Bounds b;
  b.term_size = size;
  return check(n, t, term(t, s), term(t, u), b);
}

// A ci failure must carry a substitution whose instances strong bisimilarity separates.
bool witness_verifies(const Verdict& v, const TssPtr& t, const Term& s, const Term& u) {
  if (v.outcome != Outcome::Fails || !v.substitution) return false;
  return check(Notion::Strong, t, opensos::apply(*v.substitution, s), opensos::apply(*v.substitution, u)).outcome ==
         Outcome::Fails;
}

bool no_counterexample(const Verdict& v) { return v.outcome != Outcome::Fails && passes(v); }

bool has_pair(const Verdict& v, const std::string& a, const std::string& b) {
  return std::any_of(v.relation.begin(), v.relation.end(),
                     [&](const auto& p) { return to_string(p.first) == a && to_string(p.second) == b; });
}

Result criterion1() {
  Result r;
  auto doc = test::corpus("example1.sos");
  auto bpa = doc.tss("Bpa");
  auto full = doc.tss("BpaFull");
  auto steps = transitions(term(bpa, "plus(zero, pre_a(zero))"), bpa);
  r.require(std::count(steps.begin(), steps.end(), Step{"a", term(bpa, "zero")}) == 1, "0+a.0 lacks (a, 0)");
  r.require(transitions(term(bpa, "zero"), bpa).empty(), "0 moves");
  for (const auto& e : doc.equations) {
    r.require(no_counterexample(run(Notion::Ci, bpa, to_string(e.lhs), to_string(e.rhs))), e.name + " fails on base");
  }
  for (const auto& e : doc.equations) {
    auto v = run(Notion::Ci, full, to_string(e.lhs), to_string(e.rhs));
    if (e.name == "idem" || e.name == "unit") {
      r.require(witness_verifies(v, full, e.lhs, e.rhs), e.name + " has no verified ci witness on the extension");
    } else {
      r.require(no_counterexample(v), e.name + " fails on the extension");
    }
  }
  return r;
}

Result criterion2() {
  Result r;
  auto plus = test::corpus("plus.sos").tss("PlusA");
  auto v = run(Notion::Fh, plus, "plus(x, plus(y, z))", "plus(plus(x, y), z)");
  r.require(v.outcome == Outcome::Holds, "fh does not hold: " + v.detail);
  r.require(has_pair(v, "plus(v0, plus(v1, v2))", "plus(plus(v0, v1), v2)"), "missing (x+(y+z), (x+y)+z)");
  r.require(has_pair(v, "plus(plus(v0, v1), v2)", "plus(v0, plus(v1, v2))"), "missing ((x+y)+z, x+(y+z))");
  r.require(has_pair(v, "v0", "v0"), "missing (x, x)");
  return r;
}

Result criterion3() {
  Result r;
  auto doc = test::corpus("example3.sos");
  auto base = doc.tss("Ex3");
  auto ext = doc.tss("Ex3B");
  r.require(run(Notion::Fh, base, "f(x)", "x").outcome == Outcome::Holds, "fh fails on base");
  r.require(run(Notion::Hp, base, "f(x)", "x").outcome == Outcome::Holds, "hp fails on base");
  auto fh = run(Notion::Fh, ext, "f(x)", "x");
  r.require(fh.outcome == Outcome::Fails, "fh survives the extension");
  r.require(fh.unmatched && to_string(*fh.unmatched) == "x -b-> h0 |- x -b-> h0", "wrong fh witness");
  r.require(run(Notion::Hp, ext, "f(x)", "x").outcome == Outcome::Fails, "hp survives the extension");
  auto pfh = run(Notion::Pfh, base, "f(x)", "x");
  r.require(pfh.outcome == Outcome::Fails && pfh.improper && to_string(pfh.improper->first) == "f(x)" &&
                to_string(pfh.improper->second) == "x",
            "pfh lacks the improper pair (f(x), x)");
  return r;
}

Result criterion4() {
  Result r;
  auto doc = test::corpus("example4.sos");
  auto v = run(Notion::Hp, doc.tss("Ex4"), "plus(x, y)", "plus(y, x)");
  r.require(v.outcome == Outcome::Holds, "hp fails on base");
  bool seen = std::any_of(v.hp_relation.begin(), v.hp_relation.end(), [](const HpState& st) {
    return to_string(st) == "(plus(v0, v0), v0) under {v1 -a-> v0}";
  });
  r.require(seen, "certificate lacks (x'+x', x') under {x -a-> x'}");
  r.require(run(Notion::Hp, doc.tss("Ex4B"), "plus(x, y)", "plus(y, x)").outcome == Outcome::Fails,
            "hp survives the extension");
  r.require(run(Notion::Php, doc.tss("Ex4"), "plus(x, y)", "plus(y, x)").outcome == Outcome::Fails,
            "php holds on base");
  return r;
}

Result criterion5() {
  Result r;
  auto doc = test::corpus("example5.sos");
  for (std::size_t size = 1; size <= 4; ++size) {
    r.require(no_counterexample(run(Notion::Ci, doc.tss("Choice"), "plus(x, y)", "zero", size)),
              "counterexample on base at size " + std::to_string(size));
  }
  auto ext = doc.tss("ChoiceWithA");
  auto v = run(Notion::Ci, ext, "plus(x, y)", "zero");
  r.require(witness_verifies(v, ext, term(ext, "plus(x, y)"), term(ext, "zero")), "no verified witness");
  return r;
}

Result criterion6() {
  Result r;
  auto doc = test::corpus("example6.sos");
  r.require(no_counterexample(run(Notion::Ci, doc.tss("Omega"), "f(x)", "aomega")), "counterexample on base");
  auto ext = doc.tss("OmegaWithA");
  auto v = run(Notion::Ci, ext, "f(x)", "aomega");
  r.require(witness_verifies(v, ext, term(ext, "f(x)"), term(ext, "aomega")), "no verified witness after adding a");
  for (std::size_t bound = 1; bound <= 6; ++bound) {
    auto f = initial_fertility(doc.tss("Omega"), bound);
    bool empty_missing = std::find(f.missing.begin(), f.missing.end(), std::set<Label>{}) != f.missing.end();
    r.require(!f.fertile && empty_missing, "empty label set realized at bound " + std::to_string(bound));
  }
  return r;
}

Result criterion7() {
  Result r;
  auto pdoc = test::corpus("robust_prefix.sos");
  r.require(robust_extension_criteria(*pdoc.tss("Prefix"), *pdoc.tss("PrefixChoice")->delta(), pdoc.equations).met(),
            "prefix + choice not robust");
  auto rdoc = test::corpus("robust_restrict.sos");
  r.require(
      robust_extension_criteria(*rdoc.tss("Restrict"), *rdoc.tss("RestrictPar")->delta(), rdoc.equations).met(),
      "restriction + parallel not robust");
  auto doc5 = test::corpus("example5.sos");
  r.require(
      !robust_extension_criteria(*doc5.tss("Choice"), *doc5.tss("ChoiceWithA")->delta(), doc5.equations).met(),
      "example 5 extension deemed robust");
  for (const char* name : {"Restrict", "RestrictPar"}) {
    auto t = rdoc.tss(name);
    for (const auto& e : rdoc.equations) {
      auto v = run(Notion::Ci, t, to_string(e.lhs), to_string(e.rhs));
      if (!no_counterexample(v)) {
        std::string witness = v.substitution ? " under " + to_string(opensos::apply(*v.substitution, e.lhs)) : "";
        r.require(false, e.name + " fails ci on " + name + witness);
      }
    }
  }
  return r;
}

Result criterion8() {
  Result r;
  constexpr std::uint32_t seed = 20240611;
  constexpr std::size_t want = 200;
  std::pair<const char*, test::PropertyStats> suites[] = {
      {"a", test::property_hierarchy(seed, want)},
      {"b", test::property_closed_coincidence(seed + 1, want)},
      {"c", test::property_preservation(seed + 2, want, false)},
      {"d", test::property_preservation(seed + 3, want, true)},
      {"e", test::property_conservativity(seed + 4, want)},
  };
  std::ostringstream counts;
  for (const auto& [name, st] : suites) {
    counts << name << "=" << st.cases << "/" << st.violations << " ";
    r.require(st.cases >= want, std::string("(") + name + ") too few cases");
    r.require(st.violations == 0, std::string("(") + name + ") " + st.first_violation);
  }
  if (r.pass) r.detail = "cases/violations " + counts.str();
  return r;
}

Result criterion9() {
  Result r;
  auto st = test::ruloid_oracle_corpus();
  r.require(st.violations == 0, st.first_violation);
  if (r.pass) r.detail = std::to_string(st.cases) + " closed instances agree";
  return r;
}

Result criterion10() {
  Result r;
  auto corpus_json = [] {
    std::string dir = OPENSOS_TEST_CORPUS;
    const char* argv[] = {"opensos", "corpus", dir.c_str(), "--json"};
    std::ostringstream out, err;
    int code = run_cli(4, argv, out, err);
    return std::make_pair(code, out.str());
  };
  auto first = corpus_json();
  auto second = corpus_json();
  r.require(first.first == second.first, "exit codes differ");
  r.require(first.second == second.second, "JSON reports differ");
  r.require(!first.second.empty(), "empty report");
  if (r.pass) r.detail = std::to_string(first.second.size()) + " bytes identical";
  return r;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Result()>> criteria[] = {
      {"example 1 axioms and label extension (exact verdicts)", criterion1},
      {"associativity certificate (exact)", criterion2},
      {"example 3 fh/hp/pfh (exact)", criterion3},
      {"example 4 hp/php (exact)", criterion4},
      {"example 5 ci sweep (exact verdicts, witness re-verified)", criterion5},
      {"example 6 ci and fertility (exact)", criterion6},
      {"robust extensions and restriction equations (exact)", criterion7},
      {"property suites, >= 200 cases each (zero violations)", criterion8},
      {"ruloid oracle (exact set equality)", criterion9},
      {"corpus determinism (byte-identical)", criterion10},
  };
  int failed = 0;
  int i = 0;
  for (const auto& [name, fn] : criteria) {
    ++i;
    Result r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    failed += !r.pass;
    std::cout << "criterion " << i << " " << (r.pass ? "PASS" : "FAIL") << " " << name;
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << "\n";
  }
  return failed ? 1 : 0;
}
