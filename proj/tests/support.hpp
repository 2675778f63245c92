// Copyright 2026 The pyrep Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef PYREP_TESTS_SUPPORT_HPP_
#define PYREP_TESTS_SUPPORT_HPP_

#include <fstream>
#include <sstream>
#include <string>

#include "pyrep/format.hpp"

namespace testing {

inline std::string data_path(const std::string& name) {
  return std::string(PYREP_TEST_DATA) + "/" + name;
}

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline pyrep::PythagoreanPair load_pair(const std::string& name) {
  return pyrep::parse_pair(read_data(name));
}

inline pyrep::Vector basis_vector(int d, int i) {
  pyrep::Vector v = pyrep::Vector::Zero(d);
  v(i) = 1;
  return v;
}

}  // namespace testing

#endif  // PYREP_TESTS_SUPPORT_HPP_
