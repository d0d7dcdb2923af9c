#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsys/expand.hpp"
#include "lsys/lsystem.hpp"
#include "lsys/morphism.hpp"

namespace lsys {

enum class BenchStrategy { iterative, repeated_squaring, streaming };

inline const char* to_string(BenchStrategy s) {
  switch (s) {
    case BenchStrategy::iterative: return "iterative";
    case BenchStrategy::repeated_squaring: return "repeated_squaring";
    case BenchStrategy::streaming: return "streaming";
  }
  return "?";
}

/// One row of the strategy comparison.
///
/// compositions_or_applications counts morphism applications (iterative),
/// compositions (repeated squaring) or expansion levels (streaming).
/// peak_symbols is the largest materialized word or morphism, or the peak
/// stack depth when streaming. A skipped row did not materialize anything
/// and explains why in note; for repeated squaring it still reports the
/// planned composition count.
struct BenchResult {
  std::uint64_t n = 0;
  BenchStrategy strategy = BenchStrategy::iterative;
  std::uint64_t compositions_or_applications = 0;
  std::chrono::nanoseconds wall_time{0};
  std::uint64_t peak_symbols = 0;
  std::uint64_t output_symbols = 0;
  bool skipped = false;
  std::string note;
  /// Whether the generation word equals the iterative one, when both exist.
  std::optional<bool> matches_iterative;
};

struct BenchOptions {
  std::size_t symbol_cap = default_symbol_cap;
  /// Largest generation the streaming row will walk through.
  std::uint64_t stream_cap = std::uint64_t{1} << 30;
};

inline std::vector<BenchResult> run_bench(const LSystem& sys, std::span<const std::uint64_t> exponents,
                                          const BenchOptions& opts = {}) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchResult> rows;
  for (std::uint64_t n : exponents) {
    const std::uint64_t length = generation_length(sys, n);
    std::optional<Word> iterative_word;

    BenchResult it;
    it.n = n;
    if (length > opts.symbol_cap) {
      it.skipped = true;
      it.note = "generation exceeds symbol cap";
    } else {
      const auto t0 = clock::now();
      Word w = sys.start;
      std::uint64_t peak = w.size();
      for (std::uint64_t i = 0; i < n; ++i) {
        w = apply(sys.morphism, w, opts.symbol_cap);
        ++it.compositions_or_applications;
        peak = std::max<std::uint64_t>(peak, w.size());
      }
      it.wall_time = clock::now() - t0;
      it.peak_symbols = peak;
      it.output_symbols = w.size();
      iterative_word = std::move(w);
    }
    rows.push_back(std::move(it));

    BenchResult sq;
    sq.n = n;
    sq.strategy = BenchStrategy::repeated_squaring;
    sq.compositions_or_applications = plan_power(n).total_compositions;
    try {
      const auto t0 = clock::now();
      PowerResult pr = power_with_stats(sys.morphism, n, opts.symbol_cap);
      Word w = apply(pr.morphism, sys.start, opts.symbol_cap);
      sq.wall_time = clock::now() - t0;
      sq.compositions_or_applications = pr.compositions;
      sq.peak_symbols = std::max<std::uint64_t>(pr.peak_stored_symbols, w.size());
      sq.output_symbols = w.size();
      if (iterative_word) sq.matches_iterative = (w == *iterative_word);
    } catch (const ResourceLimit&) {
      sq.skipped = true;
      sq.note = "materialization skipped: morphism power exceeds symbol cap";
    }
    rows.push_back(std::move(sq));

    BenchResult st;
    st.n = n;
    st.strategy = BenchStrategy::streaming;
    st.compositions_or_applications = n;
    if (length > opts.stream_cap) {
      st.skipped = true;
      st.note = "generation exceeds stream cap";
    } else {
      const auto t0 = clock::now();
      std::size_t i = 0;
      bool same = iterative_word.has_value();
      const StreamStats stats = stream_expand_stats(sys, n, [&](Symbol s) {
        if (same && (i >= iterative_word->size() || (*iterative_word)[i] != s)) same = false;
        ++i;
      });
      st.wall_time = clock::now() - t0;
      st.peak_symbols = stats.peak_stack_depth;
      st.output_symbols = stats.emitted;
      if (iterative_word) st.matches_iterative = same && i == iterative_word->size();
    }
    rows.push_back(std::move(st));
  }
  return rows;
}

}  // namespace lsys
