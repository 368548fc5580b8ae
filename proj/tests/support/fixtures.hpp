#pragma once

#include <string>

#include "honlb/network_io.hpp"

namespace honlb::testing {

inline std::string data_path(const std::string& name) {
  return std::string(HONLB_TEST_DATA) + "/" + name;
}

inline HighOrderNetwork fixture(const std::string& name) {
  return read_network(data_path(name));
}

}  // namespace honlb::testing
