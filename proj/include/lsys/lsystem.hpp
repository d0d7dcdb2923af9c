#pragma once

#include <cstdint>
#include <limits>
#include <vector>
#include <string>

#include "lsys/interpretation.hpp"
#include "lsys/morphism.hpp"
#include "lsys/symbol.hpp"

namespace lsys {

/// An L-system (alphabet, productions, start word) together with the
/// lattice interpretation of its symbols.
struct LSystem {
  std::string name;
  Morphism morphism;
  Word start;
  Interpretation interpretation;

  LSystem(std::string name_, Morphism morphism_, Word start_,
          Interpretation interpretation_)
      : name(std::move(name_)),
        morphism(std::move(morphism_)),
        start(std::move(start_)),
        interpretation(std::move(interpretation_)) {
    if (start.empty()) throw ValidationError("start word is empty", "");
    morphism.alphabet().validate(start);
    if (interpretation.size() != morphism.alphabet().size()) {
      throw ValidationError("interpretation must cover every token", "");
    }
  }

  const Alphabet& alphabet() const noexcept { return morphism.alphabet(); }

  friend bool operator==(const LSystem&, const LSystem&) = default;
};

/// Largest generation the materializing commands build by default.
inline constexpr unsigned default_generation_cap = 12;

/// |P^n(start)| without materializing it; saturates at UINT64_MAX.
inline std::uint64_t generation_length(const LSystem& sys, std::uint64_t n) {
  constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();
  const Morphism& m = sys.morphism;
  const std::size_t tokens = m.alphabet().size();
  // Lengths of P^k(x) and P^k(-x), indexed by token.
  std::vector<std::uint64_t> pos(tokens, 1), neg(tokens, 1);
  auto add = [](std::uint64_t a, std::uint64_t b) {
    return a > saturated - b ? saturated : a + b;
  };
  auto length_of = [&](const Word& w) {
    std::uint64_t total = 0;
    for (Symbol s : w) total = add(total, s.is_negative() ? neg[s.base] : pos[s.base]);
    return total;
  };
  for (std::uint64_t k = 0; k < n; ++k) {
    std::vector<std::uint64_t> next_pos(tokens), next_neg(tokens);
    for (std::size_t i = 0; i < tokens; ++i) {
      auto id = static_cast<TokenId>(i);
      next_pos[i] = length_of(m.image(id));
      if (!m.sign_symmetric() && m.alphabet().signable(id)) {
        next_neg[i] = length_of(m.negative_image(id));
      } else {
        next_neg[i] = next_pos[i];
      }
    }
    if (next_pos == pos && next_neg == neg) break;  // lengths reached a fixed point
    pos = std::move(next_pos);
    neg = std::move(next_neg);
  }
  return length_of(sys.start);
}

enum class GenerationStrategy { iterative, repeated_squaring };

/// Generation n, P^n(start). Both strategies produce the same word.
inline Word generation(const LSystem& sys, std::uint64_t n,
                       GenerationStrategy strategy = GenerationStrategy::iterative,
                       std::size_t cap = default_symbol_cap) {
  if (strategy == GenerationStrategy::repeated_squaring) {
    return apply(power(sys.morphism, n, cap), sys.start, cap);
  }
  Word w = sys.start;
  for (std::uint64_t i = 0; i < n; ++i) w = apply(sys.morphism, w, cap);
  return w;
}

}  // namespace lsys
