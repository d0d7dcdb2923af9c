#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <vector>

#include "lsys/error.hpp"
#include "lsys/lsystem.hpp"

namespace lsys {

/// Depth-first, pull-style expansion of P^n(start).
///
/// Frames reference rule images in place; a frame's sign parity says whether
/// every symbol read from it is negated. Working memory is one frame per
/// level, so at most n + 1 frames are live.
class ExpansionCursor {
 public:
  ExpansionCursor(const LSystem& sys, std::uint64_t depth)
      : morphism_(&sys.morphism), depth_(depth) {
    stack_.push_back({&sys.start, 0, depth, false});
    peak_depth_ = 1;
  }

  std::uint64_t depth() const noexcept { return depth_; }
  std::size_t stack_depth() const noexcept { return stack_.size(); }
  std::size_t peak_stack_depth() const noexcept { return peak_depth_; }
  std::uint64_t emitted() const noexcept { return emitted_; }

  std::optional<Symbol> next() {
    while (!stack_.empty()) {
      Frame& top = stack_.back();
      if (top.pos == top.word->size()) {
        stack_.pop_back();
        continue;
      }
      Symbol s = (*top.word)[top.pos++];
      if (top.negated) s = negate(s);
      if (top.remaining == 0) {
        ++emitted_;
        return s;
      }
      const std::uint64_t child_depth = top.remaining - 1;
      if (s.is_negative() && !morphism_->sign_symmetric()) {
        stack_.push_back({&morphism_->negative_image(s.base), 0, child_depth, false});
      } else {
        stack_.push_back({&morphism_->image(s.base), 0, child_depth, s.is_negative()});
      }
      if (stack_.size() > peak_depth_) peak_depth_ = stack_.size();
    }
    return std::nullopt;
  }

 private:
  struct Frame {
    const Word* word;
    std::size_t pos;
    std::uint64_t remaining;
    bool negated;
  };

  const Morphism* morphism_;
  std::uint64_t depth_;
  std::vector<Frame> stack_;
  std::size_t peak_depth_ = 0;
  std::uint64_t emitted_ = 0;
};

struct StreamStats {
  std::uint64_t emitted = 0;
  std::size_t peak_stack_depth = 0;
};

/// Feeds generation n to the sink one symbol at a time. The sink may return
/// void or bool; returning false aborts with SinkFailure. Exceptions thrown
/// by the sink propagate unchanged.
template <typename Sink>
StreamStats stream_expand_stats(const LSystem& sys, std::uint64_t n, Sink&& sink) {
  ExpansionCursor cursor(sys, n);
  while (auto s = cursor.next()) {
    if constexpr (std::is_same_v<std::invoke_result_t<Sink&, Symbol>, bool>) {
      if (!sink(*s)) {
        throw SinkFailure("sink rejected symbol " + std::to_string(cursor.emitted()));
      }
    } else {
      sink(*s);
    }
  }
  return {cursor.emitted(), cursor.peak_stack_depth()};
}

template <typename Sink>
std::uint64_t stream_expand(const LSystem& sys, std::uint64_t n, Sink&& sink) {
  return stream_expand_stats(sys, n, std::forward<Sink>(sink)).emitted;
}

/// Streamed emission compared symbol-for-symbol against the materialized
/// generation.
inline bool stream_equals_materialized(const LSystem& sys, std::uint64_t n,
                                       std::size_t cap = default_symbol_cap) {
  const Word expected = generation(sys, n, GenerationStrategy::iterative, cap);
  std::size_t i = 0;
  bool same = true;
  stream_expand(sys, n, [&](Symbol s) {
    if (i >= expected.size() || expected[i] != s) same = false;
    ++i;
  });
  return same && i == expected.size();
}

}  // namespace lsys
