#pragma once

// Size caps shared by every construction, overridable from the environment.

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tambara/gsets.hpp"

namespace tambara {

struct Caps {
  std::size_t sections = kDefaultSectionCap;  // points of a dependent product
  int degree = 12;                             // total points for semi-ring enumeration
  std::size_t budget = 2'000'000;              // individual checks per suite
  std::size_t maps = kDefaultMapCap;           // maps enumerated by all_gmaps
};

/// Parses "sections=N,degree=N,budget=N,maps=N"; unknown keys are errors.
inline Caps parse_caps(const std::string& text, Caps base = {}) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad caps entry '" + item + "'");
    std::string key = item.substr(0, eq);
    long long v = 0;
    try {
      v = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad caps value in '" + item + "'");
    }
    if (v <= 0) throw std::invalid_argument("caps must be positive: '" + item + "'");
    if (key == "sections") base.sections = static_cast<std::size_t>(v);
    else if (key == "degree") base.degree = static_cast<int>(v);
    else if (key == "budget") base.budget = static_cast<std::size_t>(v);
    else if (key == "maps") base.maps = static_cast<std::size_t>(v);
    else throw std::invalid_argument("unknown caps key '" + key + "'");
  }
  return base;
}

inline Caps caps_from_env(Caps base = {}) {
  if (const char* s = std::getenv("TAMBARA_LAB_CAPS")) return parse_caps(s, base);
  return base;
}

}  // namespace tambara
