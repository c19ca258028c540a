#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "opensos/spec_io.hpp"

namespace opensos::test {

inline std::string read_corpus(const std::string& file) {
  std::ifstream in(std::string(OPENSOS_TEST_CORPUS) + "/" + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SpecDocument corpus(const std::string& file) { return parse(read_corpus(file)); }

inline Term term(const TssPtr& t, const std::string& text) { return parse_term(text, t->signature()); }

inline Term var(const std::string& x) { return Term::variable(x); }

}  // namespace opensos::test
