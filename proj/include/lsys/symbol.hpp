#pragma once

#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lsys/error.hpp"

namespace lsys {

/// Index of a base token inside its Alphabet.
using TokenId = std::uint16_t;

enum class Sign : std::int8_t { negative = -1, none = 0, positive = 1 };

/// One alphabet element: a base token plus an optional sign.
///
/// Unsigned symbols (Sign::none) belong to tokens declared non-signable,
/// e.g. the origin marker 0 of the Hilbert systems. Signable tokens always
/// carry Sign::positive or Sign::negative.
struct Symbol {
  TokenId base = 0;
  Sign sign = Sign::none;

  friend constexpr bool operator==(Symbol, Symbol) = default;

  constexpr bool is_negative() const noexcept { return sign == Sign::negative; }
};

constexpr Symbol positive(TokenId base) noexcept { return {base, Sign::positive}; }
constexpr Symbol negative(TokenId base) noexcept { return {base, Sign::negative}; }
constexpr Symbol unsigned_symbol(TokenId base) noexcept { return {base, Sign::none}; }

/// Flips the sign of a signed symbol.
inline Symbol negate(Symbol s) {
  switch (s.sign) {
    case Sign::positive: return {s.base, Sign::negative};
    case Sign::negative: return {s.base, Sign::positive};
    case Sign::none: break;
  }
  throw UnsignedSymbolNegation("cannot negate unsigned symbol (token id " +
                               std::to_string(s.base) + ")");
}

/// A finite sequence of symbols; the empty word is the identity of
/// concatenation.
class Word {
 public:
  using value_type = Symbol;
  using const_iterator = std::vector<Symbol>::const_iterator;
  using iterator = std::vector<Symbol>::iterator;

  Word() = default;
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  template <std::input_iterator It>
  Word(It first, It last) : symbols_(first, last) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  void reserve(std::size_t n) { symbols_.reserve(n); }
  void push_back(Symbol s) { symbols_.push_back(s); }

  template <typename It>
  void append(It first, It last) {
    symbols_.insert(symbols_.end(), first, last);
  }
  void append(const Word& w) { append(w.begin(), w.end()); }

  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol& operator[](std::size_t i) { return symbols_[i]; }
  Symbol front() const { return symbols_.front(); }
  Symbol back() const { return symbols_.back(); }

  const_iterator begin() const noexcept { return symbols_.begin(); }
  const_iterator end() const noexcept { return symbols_.end(); }
  iterator begin() noexcept { return symbols_.begin(); }
  iterator end() noexcept { return symbols_.end(); }

  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Element-wise, order-preserving sign flip. The image of -x under a
/// sign-symmetric morphism is negate_word of the image of x.
inline Word negate_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(negate(s));
  return out;
}

inline Word concat(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.append(u);
  out.append(v);
  return out;
}

struct TokenSpec {
  std::string token;
  bool signable = true;

  friend bool operator==(const TokenSpec&, const TokenSpec&) = default;
};

/// Ordered set of base tokens. Tokens are non-empty and contain no
/// whitespace, commas, or a leading '-', so they can appear in word literals.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<TokenSpec> specs) : specs_(std::move(specs)) {
    if (specs_.size() > std::numeric_limits<TokenId>::max()) {
      throw ValidationError("alphabet has too many tokens", "");
    }
    for (std::size_t i = 0; i < specs_.size(); ++i) {
      const std::string& t = specs_[i].token;
      if (!is_valid_token(t)) {
        throw ValidationError("invalid token '" + t + "'", t);
      }
      if (!index_.emplace(t, static_cast<TokenId>(i)).second) {
        throw ValidationError("duplicate token '" + t + "'", t);
      }
    }
  }

  static bool is_valid_token(std::string_view t) {
    if (t.empty() || t.front() == '-') return false;
    for (char c : t) {
      if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' ||
          c == '"') {
        return false;
      }
    }
    return true;
  }

  std::size_t size() const noexcept { return specs_.size(); }
  const std::vector<TokenSpec>& tokens() const noexcept { return specs_; }
  const std::string& token(TokenId id) const { return specs_.at(id).token; }
  bool signable(TokenId id) const { return specs_.at(id).signable; }

  std::optional<TokenId> find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Symbol for a token written without a minus sign.
  Symbol symbol(std::string_view token) const {
    auto id = find(token);
    if (!id) throw UnknownSymbol("unknown token '" + std::string(token) + "'");
    return {*id, signable(*id) ? Sign::positive : Sign::none};
  }

  bool contains(Symbol s) const noexcept {
    if (s.base >= specs_.size()) return false;
    return specs_[s.base].signable ? s.sign != Sign::none : s.sign == Sign::none;
  }

  void validate(const Word& w) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!contains(w[i])) {
        throw UnknownSymbol("symbol at position " + std::to_string(i) +
                            " is not in the alphabet");
      }
    }
  }

  std::string format(Symbol s) const {
    std::string out = s.is_negative() ? "-" : "";
    return out + token(s.base);
  }

  /// Comma-plus-space separated rendering, e.g. "0, 3, 4, -1".
  std::string format(const Word& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) out += ", ";
      out += format(w[i]);
    }
    return out;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.specs_ == b.specs_;
  }

 private:
  std::vector<TokenSpec> specs_;
  std::unordered_map<std::string, TokenId> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::vector<TokenSpec> specs) {
  return std::make_shared<const Alphabet>(std::move(specs));
}

}  // namespace lsys
