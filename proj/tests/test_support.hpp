#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "sclsim/problem.hpp"

namespace sclsim::testing {

inline std::string read_problem_file(const std::string& name) {
  std::ifstream in(std::string(SCLSIM_PROBLEM_DIR) + "/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Problem load_problem(const std::string& name) {
  return parse_problem(read_problem_file(name));
}

}  // namespace sclsim::testing
