#pragma once

#include <fstream>
#include <iterator>
#include <string>

#include "json.hpp"

namespace polylink::testing {

inline std::string fixture_text() {
  std::ifstream f(POLYLINK_FIXTURE_FILE);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

/// Checked-in output of `polylink fixtures`.
inline const nlohmann::json& fixtures() {
  static const nlohmann::json j = nlohmann::json::parse(fixture_text());
  return j;
}

}  // namespace polylink::testing
