#pragma once

#include "category.hpp"
#include "precub.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace testing_support {

inline std::string slurp(const std::string& name) {
  std::ifstream f(std::string(CORNER_FIXTURES) + "/" + name);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

inline corner::PrecubicalSet fixture(const std::string& name) {
  return corner::parse_precubical(slurp(name));
}

inline corner::OmegaCategory free_on(const std::string& name) {
  return corner::build_free_category(fixture(name));
}

// Path a -u-> b -v-> c.
inline corner::PrecubicalSet path_set() {
  return corner::parse_precubical(R"({"cubes":[
    {"id":"a","dim":0,"faces":{}},{"id":"b","dim":0,"faces":{}},{"id":"c","dim":0,"faces":{}},
    {"id":"u","dim":1,"faces":{"d1-":"a","d1+":"b"}},{"id":"v","dim":1,"faces":{"d1-":"b","d1+":"c"}}]})");
}

}  // namespace testing_support
