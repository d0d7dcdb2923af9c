#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "lsys/error.hpp"
#include "lsys/symbol.hpp"

namespace lsys {

/// What a token means when a word is drawn on the lattice.
struct Action {
  enum class Kind : std::uint8_t { move, skip, origin };

  Kind kind = Kind::skip;
  std::int8_t dx = 0;
  std::int8_t dy = 0;

  static constexpr Action step(int dx, int dy) {
    return {Kind::move, static_cast<std::int8_t>(dx), static_cast<std::int8_t>(dy)};
  }
  static constexpr Action skip() { return {Kind::skip, 0, 0}; }
  static constexpr Action origin() { return {Kind::origin, 0, 0}; }

  friend constexpr bool operator==(Action, Action) = default;
};

/// Per-token decoding table. A negative symbol moves opposite to its base;
/// skip and origin entries ignore the sign.
class Interpretation {
 public:
  Interpretation() = default;

  explicit Interpretation(std::vector<Action> entries)
      : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const Action& a = entries_[i];
      if (a.kind == Action::Kind::move && std::abs(a.dx) + std::abs(a.dy) != 1) {
        throw ValidationError("interpretation entry " + std::to_string(i) +
                                  " is not a unit lattice step",
                              "");
      }
    }
  }

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Action>& entries() const noexcept { return entries_; }

  /// Action for a symbol, with the move negated for negative symbols.
  Action action(Symbol s) const {
    if (s.base >= entries_.size()) {
      throw UninterpretableSymbol("no interpretation for token id " +
                                  std::to_string(s.base));
    }
    Action a = entries_[s.base];
    if (a.kind == Action::Kind::move && s.is_negative()) {
      a.dx = static_cast<std::int8_t>(-a.dx);
      a.dy = static_cast<std::int8_t>(-a.dy);
    }
    return a;
  }

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  std::vector<Action> entries_;
};

}  // namespace lsys
