#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsys/error.hpp"
#include "lsys/symbol.hpp"

namespace lsys {

/// Default cap on materialized symbols (a single word, or the total stored
/// image length of a morphism).
inline constexpr std::size_t default_symbol_cap = std::size_t{1} << 26;

/// Production map from base tokens to words, extended to signed symbols
/// and to words. Immutable once constructed.
///
/// When sign_symmetric, only images of base tokens are stored and the image
/// of -x is the element-wise negation of the image of x. Otherwise negative
/// symbols have their own stored images.
class Morphism {
 public:
  Morphism(AlphabetPtr alphabet, std::vector<Word> images, bool sign_symmetric,
           std::vector<Word> negative_images = {})
      : alphabet_(std::move(alphabet)),
        images_(std::move(images)),
        negative_images_(std::move(negative_images)),
        sign_symmetric_(sign_symmetric) {
    if (!alphabet_) throw AlphabetMismatch("morphism requires an alphabet");
    const std::size_t n = alphabet_->size();
    if (images_.size() != n) {
      throw AlphabetMismatch("morphism needs exactly one image per token");
    }
    if (sign_symmetric_) {
      if (!negative_images_.empty()) {
        throw AlphabetMismatch(
            "sign-symmetric morphism cannot store negative images");
      }
    } else if (negative_images_.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        auto id = static_cast<TokenId>(i);
        negative_images_.push_back(alphabet_->signable(id) ? Word{negative(id)}
                                                           : Word{});
      }
    } else if (negative_images_.size() != n) {
      throw AlphabetMismatch("morphism needs one negative image per token");
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto id = static_cast<TokenId>(i);
      const std::string& tok = alphabet_->token(id);
      check_image(images_[i], tok);
      if (sign_symmetric_ && alphabet_->signable(id)) {
        for (Symbol s : images_[i]) {
          if (s.sign == Sign::none) {
            throw ValidationError("image of signable token '" + tok +
                                      "' contains unsigned symbol '" +
                                      alphabet_->token(s.base) +
                                      "', which cannot be negated",
                                  tok);
          }
        }
      }
      if (!sign_symmetric_ && alphabet_->signable(id)) {
        check_image(negative_images_[i], "-" + tok);
      }
    }
  }

  static Morphism identity(AlphabetPtr alphabet, bool sign_symmetric = true) {
    std::vector<Word> images;
    images.reserve(alphabet->size());
    for (std::size_t i = 0; i < alphabet->size(); ++i) {
      auto id = static_cast<TokenId>(i);
      images.push_back(
          {Symbol{id, alphabet->signable(id) ? Sign::positive : Sign::none}});
    }
    return Morphism(std::move(alphabet), std::move(images), sign_symmetric);
  }

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  bool sign_symmetric() const noexcept { return sign_symmetric_; }

  /// Stored image of the positive (or unsigned) form of a token.
  const Word& image(TokenId id) const { return images_.at(id); }

  /// Stored image of -token; only meaningful when not sign_symmetric.
  const Word& negative_image(TokenId id) const {
    return negative_images_.at(id);
  }

  std::size_t image_length(Symbol s) const {
    if (s.is_negative() && !sign_symmetric_) return negative_images_[s.base].size();
    return images_[s.base].size();
  }

  /// Sum of stored image lengths (the memory footprint of the morphism).
  std::size_t total_image_length() const noexcept {
    std::size_t total = 0;
    for (const Word& w : images_) total += w.size();
    for (const Word& w : negative_images_) total += w.size();
    return total;
  }

  /// Image of one (possibly negative) symbol.
  Word image_of(Symbol s) const {
    Word out;
    append_image(s, out);
    return out;
  }

  void append_image(Symbol s, Word& out) const {
    if (!s.is_negative()) {
      const Word& img = images_[s.base];
      out.append(img);
    } else if (sign_symmetric_) {
      for (Symbol t : images_[s.base]) out.push_back(lsys::negate(t));
    } else {
      const Word& img = negative_images_[s.base];
      out.append(img);
    }
  }

  /// A token x with P(x) = x.
  bool is_constant(TokenId id) const {
    Symbol self{id, alphabet_->signable(id) ? Sign::positive : Sign::none};
    return images_.at(id) == Word{self};
  }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.sign_symmetric_ == b.sign_symmetric_ &&
           *a.alphabet_ == *b.alphabet_ && a.images_ == b.images_ &&
           a.negative_images_ == b.negative_images_;
  }

 private:
  void check_image(const Word& w, const std::string& tok) const {
    for (Symbol s : w) {
      if (!alphabet_->contains(s)) {
        throw UnknownSymbol("image of '" + tok +
                            "' contains a symbol outside the alphabet");
      }
    }
  }

  AlphabetPtr alphabet_;
  std::vector<Word> images_;
  std::vector<Word> negative_images_;
  bool sign_symmetric_;
};

/// Length of apply(m, w) without materializing it.
inline std::size_t applied_length(const Morphism& m, const Word& w) {
  std::size_t total = 0;
  for (Symbol s : w) total += m.image_length(s);
  return total;
}

/// Homomorphic extension: concatenation of the images of the symbols of w.
inline Word apply(const Morphism& m, const Word& w,
                  std::size_t cap = default_symbol_cap) {
  m.alphabet().validate(w);
  const std::size_t len = applied_length(m, w);
  if (len > cap) {
    throw ResourceLimit("applied word would have " + std::to_string(len) +
                        " symbols, cap is " + std::to_string(cap));
  }
  Word out;
  out.reserve(len);
  for (Symbol s : w) m.append_image(s, out);
  return out;
}

/// compose(outer, inner)(x) = apply(outer, inner(x)).
inline Morphism compose(const Morphism& outer, const Morphism& inner,
                        std::size_t cap = default_symbol_cap) {
  if (outer.sign_symmetric() != inner.sign_symmetric() ||
      (outer.alphabet_ptr() != inner.alphabet_ptr() &&
       outer.alphabet() != inner.alphabet())) {
    throw AlphabetMismatch("cannot compose morphisms over different alphabets");
  }
  const std::size_t n = inner.alphabet().size();
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto id = static_cast<TokenId>(i);
    total += applied_length(outer, inner.image(id));
    if (!inner.sign_symmetric() && inner.alphabet().signable(id)) {
      total += applied_length(outer, inner.negative_image(id));
    }
  }
  if (total > cap) {
    throw ResourceLimit("composed morphism would store " +
                        std::to_string(total) + " symbols, cap is " +
                        std::to_string(cap));
  }
  std::vector<Word> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    images.push_back(apply(outer, inner.image(static_cast<TokenId>(i)), cap));
  }
  if (inner.sign_symmetric()) {
    return Morphism(inner.alphabet_ptr(), std::move(images), true);
  }
  std::vector<Word> negatives;
  negatives.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto id = static_cast<TokenId>(i);
    negatives.push_back(inner.alphabet().signable(id)
                            ? apply(outer, inner.negative_image(id), cap)
                            : Word{});
  }
  return Morphism(inner.alphabet_ptr(), std::move(images), false,
                  std::move(negatives));
}

/// Repeated-squaring schedule for P^n.
struct PowerPlan {
  std::uint64_t target_exponent = 0;
  std::vector<unsigned> set_bits;  // ascending bit positions of n
  std::size_t squarings = 0;
  std::size_t combines = 0;
  std::size_t total_compositions = 0;

  /// Binary digits, most significant first; "0" for n = 0.
  std::string binary_digits() const {
    if (target_exponent == 0) return "0";
    std::string out;
    for (int b = std::bit_width(target_exponent) - 1; b >= 0; --b) {
      out += ((target_exponent >> b) & 1U) ? '1' : '0';
    }
    return out;
  }

  /// Exponent obtained by summing the powers of two the plan combines.
  std::uint64_t replay() const {
    std::uint64_t n = 0;
    for (unsigned b : set_bits) n += std::uint64_t{1} << b;
    return n;
  }
};

inline PowerPlan plan_power(std::uint64_t n) {
  PowerPlan plan;
  plan.target_exponent = n;
  if (n == 0) return plan;
  for (unsigned b = 0; b < 64; ++b) {
    if ((n >> b) & 1U) plan.set_bits.push_back(b);
  }
  plan.squarings = static_cast<std::size_t>(std::bit_width(n) - 1);
  plan.combines = static_cast<std::size_t>(std::popcount(n) - 1);
  plan.total_compositions = plan.squarings + plan.combines;
  return plan;
}

struct PowerResult {
  Morphism morphism;
  std::size_t compositions = 0;
  std::size_t peak_stored_symbols = 0;
};

/// P^n by repeated squaring, reporting how many compositions were made.
inline PowerResult power_with_stats(const Morphism& m, std::uint64_t n,
                                    std::size_t cap = default_symbol_cap) {
  if (n == 0) {
    Morphism id = Morphism::identity(m.alphabet_ptr(), m.sign_symmetric());
    std::size_t stored = id.total_image_length();
    return {std::move(id), 0, stored};
  }
  std::size_t compositions = 0;
  std::size_t peak = m.total_image_length();
  auto track = [&](Morphism r) {
    ++compositions;
    peak = std::max(peak, r.total_image_length());
    return r;
  };

  const unsigned top = static_cast<unsigned>(std::bit_width(n) - 1);
  Morphism square = m;  // P^(2^b) for the current bit b
  std::optional<Morphism> acc;
  for (unsigned b = 0; b <= top; ++b) {
    if ((n >> b) & 1U) {
      acc = acc ? track(compose(*acc, square, cap)) : square;
    }
    if (b < top) square = track(compose(square, square, cap));
  }
  return {std::move(*acc), compositions, peak};
}

inline Morphism power(const Morphism& m, std::uint64_t n,
                      std::size_t cap = default_symbol_cap) {
  return power_with_stats(m, n, cap).morphism;
}

}  // namespace lsys
