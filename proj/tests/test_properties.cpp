#include "doctest.h"
#include "properties.hpp"

using namespace opensos::test;

namespace {

constexpr std::uint32_t kSeed = 20240611;
constexpr std::size_t kCases = 200;

void report(const std::string& name, const PropertyStats& st) {
  MESSAGE(name << ": " << st.cases << " cases, " << st.exercised << " exercised, " << st.violations
               << " violations");
  CHECK_MESSAGE(st.violations == 0, st.first_violation);
  CHECK(st.cases >= kCases);
}

}  // namespace

TEST_CASE("fh implies hp implies ci") {
  auto st = property_hierarchy(kSeed, kCases);
  report("hierarchy", st);
  CHECK(st.exercised > 0);
}

TEST_CASE("notions coincide on closed terms") {
  auto st = property_closed_coincidence(kSeed + 1, kCases);
  report("closed coincidence", st);
  CHECK(st.exercised >= kCases / 2);
}

TEST_CASE("label-preserving extensions keep fh and hp") {
  auto st = property_preservation(kSeed + 2, kCases, false);
  report("no new labels", st);
  CHECK(st.exercised >= kCases);
}

TEST_CASE("proper bisimilarity survives any disjoint extension") {
  auto st = property_preservation(kSeed + 3, kCases, true);
  report("proper", st);
  CHECK(st.exercised >= kCases);
}

TEST_CASE("disjoint extensions are conservative") {
  auto st = property_conservativity(kSeed + 4, kCases);
  report("conservativity", st);
}
