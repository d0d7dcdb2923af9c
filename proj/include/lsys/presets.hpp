#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "lsys/io.hpp"

namespace lsys {

/// Hilbert curve system with origin start 0. Tokens 3 and 4 draw like 1
/// and 2; 0 marks the origin.
inline constexpr std::string_view hilbert_a_definition = R"({
  "name": "hilbert-a",
  "symbols": [
    {"token": "0", "signable": false},
    {"token": "1", "signable": true},
    {"token": "2", "signable": true},
    {"token": "3", "signable": true},
    {"token": "4", "signable": true}
  ],
  "start": "0",
  "sign_symmetric": true,
  "rules": {
    "0": "0, 3, 4, -1",
    "1": "2, 3, 4, -1",
    "2": "1, 3, 4, -1",
    "3": "4, 2, 1, -4",
    "4": "3, 2, 1, -4"
  },
  "interpretation": {
    "0": "origin",
    "1": [1, 0],
    "2": [0, 1],
    "3": [1, 0],
    "4": [0, 1]
  }
}
)";

/// Point-exploding Hilbert system with start 3. Tokens 1 and 2 are
/// constants that draw; 3 and 4 are variables that draw nothing.
inline constexpr std::string_view hilbert_b_definition = R"({
  "name": "hilbert-b",
  "symbols": [
    {"token": "0", "signable": false},
    {"token": "1", "signable": true},
    {"token": "2", "signable": true},
    {"token": "3", "signable": true},
    {"token": "4", "signable": true}
  ],
  "start": "3",
  "sign_symmetric": true,
  "rules": {
    "0": "0",
    "1": "1",
    "2": "2",
    "3": "4, 2, 3, 1, 3, -2, -4",
    "4": "3, 1, 4, 2, 4, -1, -3"
  },
  "interpretation": {
    "0": "origin",
    "1": [1, 0],
    "2": [0, 1],
    "3": "skip",
    "4": "skip"
  }
}
)";

struct Preset {
  std::string_view name;
  std::string_view definition;
};

inline constexpr std::array<Preset, 2> presets{{
    {"hilbert-a", hilbert_a_definition},
    {"hilbert-b", hilbert_b_definition},
}};

inline std::optional<std::string_view> preset_definition(std::string_view name) {
  for (const Preset& p : presets) {
    if (p.name == name) return p.definition;
  }
  return std::nullopt;
}

inline const LSystem& hilbert_a() {
  static const LSystem sys = parse_system_file(hilbert_a_definition);
  return sys;
}

inline const LSystem& hilbert_b() {
  static const LSystem sys = parse_system_file(hilbert_b_definition);
  return sys;
}

}  // namespace lsys
