#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lsys/lsys.hpp"

namespace lsys::fixtures {

/// Builds a word from the integer notation used for the Hilbert systems:
/// 0 is the unsigned origin, +k / -k are signed tokens "k".
inline Word word(const LSystem& sys, std::initializer_list<int> values) {
  Word out;
  for (int v : values) {
    const Symbol s = sys.alphabet().symbol(std::to_string(v < 0 ? -v : v));
    out.push_back(v < 0 ? negate(s) : s);
  }
  return out;
}

inline std::vector<int> ints(const LSystem& sys, const Word& w) {
  std::vector<int> out;
  for (Symbol s : w) {
    const int base = std::stoi(sys.alphabet().token(s.base));
    out.push_back(s.is_negative() ? -base : base);
  }
  return out;
}

inline std::vector<int> codes(const MoveSeq& moves) {
  std::vector<int> out;
  for (Move m : moves) out.push_back(code(m));
  return out;
}

/// Reference rewriting over plain integers with P(-x) = -P(x), kept apart
/// from the library so it can act as an oracle.
struct IntSystem {
  std::map<int, std::vector<int>> rules;

  std::vector<int> apply(const std::vector<int>& w) const {
    std::vector<int> out;
    for (int x : w) {
      auto it = rules.find(x < 0 ? -x : x);
      if (it == rules.end()) {
        out.push_back(x);
        continue;
      }
      for (int y : it->second) out.push_back(x < 0 ? -y : y);
    }
    return out;
  }

  std::vector<int> generation(std::vector<int> w, unsigned n) const {
    for (unsigned i = 0; i < n; ++i) w = apply(w);
    return w;
  }
};

inline const IntSystem& int_hilbert_a() {
  static const IntSystem s{{{0, {0, 3, 4, -1}},
                            {1, {2, 3, 4, -1}},
                            {2, {1, 3, 4, -1}},
                            {3, {4, 2, 1, -4}},
                            {4, {3, 2, 1, -4}}}};
  return s;
}

inline const IntSystem& int_hilbert_b() {
  static const IntSystem s{{{3, {4, 2, 3, 1, 3, -2, -4}}, {4, {3, 1, 4, 2, 4, -1, -3}}}};
  return s;
}

/// Random signed word over tokens 1..4, optionally with unsigned 0s.
inline Word random_word(const LSystem& sys, std::mt19937& rng, std::size_t max_len,
                        bool allow_unsigned) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> pick(allow_unsigned ? 0 : 1, 4);
  std::bernoulli_distribution flip(0.5);
  Word w;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = pick(rng);
    Symbol s = sys.alphabet().symbol(std::to_string(v));
    if (v != 0 && flip(rng)) s = negate(s);
    w.push_back(s);
  }
  return w;
}

// P^3(0) decoded into canonical moves, as printed in the literature.
inline const std::vector<int> golden_generation_3_moves = {
    1, 2, -1, 2, 2, 1, -2, 1, 2, 1, -2, -2, -1, -2, 1, 1, 2, 1, -2, 1, 1,
    2, -1, 2, 1, 2, -1, -1, -2, -1, 2, 2, 2, 1, -2, 1, 1, 2, -1, 2, 1, 2,
    -1, -1, -2, -1, 2, -1, -1, -2, 1, -2, -2, -1, 2, -1, -2, -1, 2, 2, 1, 2, -1};

inline const std::vector<int> golden_generation_2_moves = {1, 2, -1, 2, 2, 1, -2, 1,
                                                           2, 1, -2, -2, -1, -2, 1};

inline const std::vector<int> golden_generation_2_word = {0, 3,  4,  -1, 4,  2,  1,  -4,
                                                          3, 2,  1,  -4, -2, -3, -4, 1};

}  // namespace lsys::fixtures
