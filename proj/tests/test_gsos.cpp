#include <algorithm>

#include "doctest.h"
#include "opensos/gsos.hpp"
#include "support.hpp"

using namespace opensos;

namespace {

bool has_violation(const FormatReport& r, const std::string& kind) {
  for (const auto& v : r.violations) {
    if (v.kind == kind) return true;
  }
  return false;
}

TssPtr one(const std::string& text) { return parse(text).tss_decls.back(); }

}  // namespace

TEST_CASE("positive GSOS validation") {
  auto doc = test::corpus("example1.sos");
  CHECK(validate_positive_gsos(*doc.tss("Bpa")).ok());
  CHECK(validate_positive_gsos(*doc.tss("BpaFull")).ok());

  auto rep = validate_positive_gsos(*one("tss T { labels: a; op f/2; rule \"r\": |- f(x, x) -a-> x; }"));
  CHECK(has_violation(rep, "repeated source variable"));

  rep = validate_positive_gsos(
      *one("tss T { labels: a; op f/1; op g/1; rule \"r\": g(x) -a-> y |- f(x) -a-> y; }"));
  CHECK(has_violation(rep, "premise source must be an argument variable"));

  rep = validate_positive_gsos(*one("tss T { labels: a; op f/1; rule \"r\": x -a-> f(y) |- f(x) -a-> y; }"));
  CHECK(has_violation(rep, "premise target not a variable"));

  rep = validate_positive_gsos(*one("tss T { labels: a; op f/1; rule \"r\": |- f(x) -a-> y; }"));
  CHECK(has_violation(rep, "target variable escape"));

  rep = validate_positive_gsos(*one("tss T { labels: a; op f/1; rule \"r\": x -a-> x |- f(x) -a-> x; }"));
  CHECK_FALSE(rep.ok());

  rep = validate_positive_gsos(*one("tss T { labels: a; op f/1; rule \"r\": |- x -a-> x; }"));
  CHECK(has_violation(rep, "source not an operator"));
}

TEST_CASE("disjoint extensions") {
  auto doc = test::corpus("example3.sos");
  auto ex3 = doc.tss("Ex3");
  CHECK(validate_disjoint_extension(*ex3, *doc.tss("Ex3B")->delta()).disjoint());

  auto bad = parse("tss Bad extends Ex3 { labels: a; rule \"f2\": |- f(x) -a-> x; }", &doc).tss("Bad");
  auto rep = validate_disjoint_extension(*ex3, *bad->delta());
  REQUIRE_FALSE(rep.disjoint());
  CHECK(rep.offending[0].first == "f2");

  auto empty = parse("tss E extends Ex3 { labels: a; }", &doc).tss("E");
  CHECK(validate_disjoint_extension(*ex3, *empty->delta()).disjoint());
}

TEST_CASE("label usage") {
  auto prefix = test::corpus("robust_prefix.sos").tss("Prefix");
  auto u = label_usage(*prefix);
  CHECK(u.premise_labels.empty());
  CHECK(u.conclusion_labels == std::set<Label>{"a", "b", "tau"});

  auto restrict = test::corpus("robust_restrict.sos").tss("Restrict");
  u = label_usage(*restrict);
  CHECK(u.premise_labels == std::set<Label>{"a", "b"});
  CHECK(u.conclusion_labels.count("tau"));

  auto none = label_usage(*one("tss T { labels: a; op c/0; }"));
  CHECK(none.premise_labels.empty());
  CHECK(none.conclusion_labels.empty());
}

TEST_CASE("adds labels") {
  auto doc = test::corpus("example3.sos");
  CHECK(adds_labels(*doc.tss("Ex3"), *doc.tss("Ex3B")->delta()));
  CHECK_FALSE(adds_labels(*doc.tss("Ex3"), *doc.tss("Ex3G")->delta()));
  auto empty = parse("tss E extends Ex3 { labels: a; }", &doc).tss("E");
  CHECK_FALSE(adds_labels(*doc.tss("Ex3"), *empty->delta()));
}

TEST_CASE("non-evolving indices") {
  auto g = one("tss T { labels: a; op g/2; rule \"g\": x -a-> x1 |- g(x, y) -a-> x1; }");
  CHECK(non_evolving_indices(*g).at("g") == std::set<std::size_t>{1});

  auto bpa = test::corpus("example1.sos").tss("Bpa");
  auto table = non_evolving_indices(*bpa);
  CHECK(table.at("plus").empty());
  CHECK(table.at("pre_a").empty());
  CHECK(table.at("zero").empty());

  auto tester = test::corpus("tester.sos").tss("Tester");
  CHECK(non_evolving_indices(*tester).at("test") == std::set<std::size_t>{0});

  // no defining rules: every index is non-evolving
  auto idle = one("tss T { labels: a; op h/2; }");
  CHECK(non_evolving_indices(*idle).at("h") == std::set<std::size_t>{0, 1});
}

TEST_CASE("initial fertility") {
  auto bpa = test::corpus("example1.sos").tss("Bpa");
  auto f = initial_fertility(bpa, 5);
  CHECK(f.fertile);
  CHECK(to_string(f.witnesses.at({})) == "zero");
  CHECK(to_string(f.witnesses.at({"a"})) == "pre_a(zero)");
  CHECK(to_string(f.witnesses.at({"b"})) == "pre_b(zero)");
  CHECK(to_string(f.witnesses.at({"a", "b"})) == "plus(pre_a(zero), pre_b(zero))");
  // a.0 + b.0 has five operator nodes
  CHECK_FALSE(initial_fertility(bpa, 3).fertile);

  auto omega = test::corpus("example6.sos").tss("Omega");
  for (std::size_t bound = 1; bound <= 6; ++bound) {
    auto r = initial_fertility(omega, bound);
    CHECK_FALSE(r.fertile);
    CHECK(std::find(r.missing.begin(), r.missing.end(), std::set<Label>{}) != r.missing.end());
  }

  auto trivial = parse("tss T { labels: a; op c/0; }").tss("T");
  CHECK_FALSE(initial_fertility(trivial, 1).fertile);
  auto unlabelled = parse("tss U { labels: ; op c/0; }").tss("U");
  CHECK(initial_fertility(unlabelled, 1).fertile);

  std::string many = "tss M { labels: l0";
  for (int i = 1; i < 17; ++i) many += ", l" + std::to_string(i);
  many += "; op c/0; }";
  auto big = one(many);
  CHECK_THROWS_AS(initial_fertility(big, 1), Error);
  CHECK_NOTHROW(initial_fertility(big, 1, true));
}

TEST_CASE("robust equation criteria") {
  auto doc5 = test::corpus("example5.sos");
  auto c = robust_equation_criteria(doc5.equations[0], doc5.tss("Choice"), 4);
  CHECK_FALSE(c.met());
  CHECK_FALSE(c.find("open-arguments-non-evolving")->satisfied);
  CHECK_FALSE(c.find("initially-fertile")->satisfied);

  auto doc1 = test::corpus("example1.sos");
  auto idem = doc1.equations[2];
  c = robust_equation_criteria(idem, doc1.tss("Bpa"), 5);
  CHECK_FALSE(c.met());
  CHECK_FALSE(c.find("linear")->satisfied);
  CHECK_FALSE(c.find("no-bare-variable-side")->satisfied);

  auto tdoc = test::corpus("tester.sos");
  c = robust_equation_criteria(tdoc.equations[0], tdoc.tss("Tester"), 3);
  CHECK(c.met());
}

TEST_CASE("robust extension criteria") {
  auto pdoc = test::corpus("robust_prefix.sos");
  CHECK(robust_extension_criteria(*pdoc.tss("Prefix"), *pdoc.tss("PrefixChoice")->delta(), pdoc.equations).met());

  auto rdoc = test::corpus("robust_restrict.sos");
  CHECK(robust_extension_criteria(*rdoc.tss("Restrict"), *rdoc.tss("RestrictPar")->delta(), rdoc.equations).met());

  auto doc5 = test::corpus("example5.sos");
  auto c = robust_extension_criteria(*doc5.tss("Choice"), *doc5.tss("ChoiceWithA")->delta(), doc5.equations);
  CHECK_FALSE(c.met());
  CHECK(c.find("conclusion-labels-avoid-base-premises")->detail.find("{a}") != std::string::npos);

  // a bare variable side is not proper
  auto doc3 = test::corpus("example3.sos");
  c = robust_extension_criteria(*doc3.tss("Ex3"), *doc3.tss("Ex3B")->delta(), doc3.equations);
  CHECK_FALSE(c.find("equations-proper")->satisfied);
}
