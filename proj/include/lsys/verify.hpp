#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsys/expand.hpp"
#include "lsys/geometry.hpp"
#include "lsys/io.hpp"
#include "lsys/lsystem.hpp"
#include "lsys/presets.hpp"

namespace lsys {

/// Outcome of one check. A failed report always names a counterexample in
/// detail.
struct VerificationReport {
  std::string check_name;
  std::int64_t generation_index = 0;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline VerificationReport pass(std::string name, std::int64_t m, std::string detail = {}) {
  return {std::move(name), m, true, std::move(detail)};
}

inline VerificationReport fail(std::string name, std::int64_t m, std::string detail) {
  if (detail.empty()) detail = "check failed";
  return {std::move(name), m, false, std::move(detail)};
}

inline std::string point_text(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

inline void check_generation_cap(std::uint64_t m, unsigned max_generation) {
  if (m > max_generation) {
    throw ResourceLimit("generation " + std::to_string(m) +
                        " exceeds the verification cap of " +
                        std::to_string(max_generation));
  }
}

}  // namespace detail

/// Canonical moves of generation m, decoded while streaming so the symbol
/// word itself is never held.
inline MoveSeq decode_moves(const LSystem& sys, std::uint64_t m) {
  MoveDecoder decoder(sys.interpretation);
  MoveSeq out;
  stream_expand(sys, m, [&](Symbol s) {
    if (auto mv = decoder.feed(s)) out.push_back(*mv);
  });
  return out;
}

inline Path decode_path(const LSystem& sys, std::uint64_t m) {
  return to_path(decode_moves(sys, m));
}

inline VerificationReport check_self_avoiding(const Path& p) {
  const std::string name = "self_avoiding";
  if (p.empty()) return detail::pass(name, 0);
  const auto box = bounding_box(p);
  const auto w = static_cast<std::uint64_t>(box.width() + 1);
  const auto h = static_cast<std::uint64_t>(box.height() + 1);
  // Dense bitmap when the box is small, which it is for every curve drawn
  // here; otherwise fall back to sorting.
  if (w * h <= (std::uint64_t{1} << 30)) {
    std::vector<bool> seen(w * h, false);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto idx = static_cast<std::uint64_t>(p[i].y - box.min_y) * w +
                       static_cast<std::uint64_t>(p[i].x - box.min_x);
      if (seen[idx]) {
        return detail::fail(name, 0, "point " + detail::point_text(p[i]) +
                                         " repeats at index " + std::to_string(i));
      }
      seen[idx] = true;
    }
    return detail::pass(name, 0);
  }
  std::vector<std::pair<Point, std::size_t>> sorted;
  sorted.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) sorted.emplace_back(p[i], i);
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.x != b.first.x) return a.first.x < b.first.x;
    if (a.first.y != b.first.y) return a.first.y < b.first.y;
    return a.second < b.second;
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].first == sorted[i - 1].first) {
      return detail::fail(name, 0, "point " + detail::point_text(sorted[i].first) +
                                       " repeats at index " + std::to_string(sorted[i].second));
    }
  }
  return detail::pass(name, 0);
}

/// 2^(2m) nodes and 2^(2m) - 1 edges in the decoded generation m.
inline VerificationReport check_counts(const LSystem& sys, std::uint64_t m,
                                       unsigned max_generation = default_generation_cap) {
  detail::check_generation_cap(m, max_generation);
  const auto im = static_cast<std::int64_t>(m);
  const NodeEdgeCount got = count_nodes_edges(decode_path(sys, m));
  const std::uint64_t nodes = std::uint64_t{1} << (2 * m);
  const std::string summary = std::to_string(got.nodes) + " nodes, " +
                              std::to_string(got.edges) + " edges";
  if (got.nodes == nodes && got.edges == nodes - 1) return detail::pass("counts", im, summary);
  return detail::fail("counts", im,
                      summary + "; expected " + std::to_string(nodes) + " nodes, " +
                          std::to_string(nodes - 1) + " edges");
}

/// Every point of {0..2^m-1}^2 visited exactly once.
inline VerificationReport check_path_grid_coverage(const Path& p, std::uint64_t m) {
  const std::string name = "grid_coverage";
  const auto im = static_cast<std::int64_t>(m);
  const std::int64_t side = std::int64_t{1} << m;
  std::vector<std::uint64_t> bits((static_cast<std::uint64_t>(side * side) + 63) / 64, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point q = p[i];
    if (q.x < 0 || q.y < 0 || q.x >= side || q.y >= side) {
      return detail::fail(name, im, "point " + detail::point_text(q) + " at index " +
                                        std::to_string(i) + " lies outside the grid");
    }
    const auto idx = static_cast<std::uint64_t>(q.y * side + q.x);
    const std::uint64_t mask = std::uint64_t{1} << (idx % 64);
    if (bits[idx / 64] & mask) {
      return detail::fail(name, im, "point " + detail::point_text(q) +
                                        " visited twice, again at index " + std::to_string(i));
    }
    bits[idx / 64] |= mask;
  }
  for (std::int64_t y = 0; y < side; ++y) {
    for (std::int64_t x = 0; x < side; ++x) {
      const auto idx = static_cast<std::uint64_t>(y * side + x);
      if (!(bits[idx / 64] & (std::uint64_t{1} << (idx % 64)))) {
        return detail::fail(name, im,
                            "point " + detail::point_text({x, y}) + " never visited");
      }
    }
  }
  return detail::pass(name, im, std::to_string(p.size()) + " points cover the grid");
}

inline VerificationReport check_grid_coverage(const LSystem& sys, std::uint64_t m,
                                              unsigned max_generation = default_generation_cap) {
  detail::check_generation_cap(m, max_generation);
  return check_path_grid_coverage(decode_path(sys, m), m);
}

/// Moves of generation m form a prefix of the moves of generation m + 1.
inline VerificationReport check_prefix(const LSystem& sys, std::uint64_t m,
                                       unsigned max_generation = default_generation_cap) {
  detail::check_generation_cap(m + 1, max_generation);
  const auto im = static_cast<std::int64_t>(m);
  const MoveSeq shorter = decode_moves(sys, m);
  const MoveSeq longer = decode_moves(sys, m + 1);
  if (shorter.size() > longer.size()) {
    return detail::fail("prefix", im, "generation " + std::to_string(m) + " has " +
                                          std::to_string(shorter.size()) +
                                          " moves, more than the next generation");
  }
  for (std::size_t i = 0; i < shorter.size(); ++i) {
    if (shorter[i] != longer[i]) {
      return detail::fail("prefix", im,
                          "move " + std::to_string(i) + " differs: " +
                              std::to_string(code(shorter[i])) + " vs " +
                              std::to_string(code(longer[i])));
    }
  }
  return detail::pass("prefix", im);
}

/// P^(n+1)(3) = P^n(4), 2, P^n(3), 1, P^n(3), -2, -P^n(4) on a system with
/// tokens 1..4 (the point-exploding Hilbert system by default).
inline VerificationReport check_recursion(const LSystem& sys, std::uint64_t n,
                                          unsigned max_generation = default_generation_cap) {
  detail::check_generation_cap(n + 1, max_generation);
  const auto in = static_cast<std::int64_t>(n);
  const Alphabet& a = sys.alphabet();
  const Symbol one = a.symbol("1"), two = a.symbol("2");
  const Symbol three = a.symbol("3"), four = a.symbol("4");

  auto iterate = [&](Word w, std::uint64_t k) {
    for (std::uint64_t i = 0; i < k; ++i) w = apply(sys.morphism, w);
    return w;
  };
  const Word lhs = iterate({three}, n + 1);
  const Word p3 = iterate({three}, n);
  const Word p4 = iterate({four}, n);
  Word rhs = p4;
  rhs.push_back(two);
  rhs.append(p3);
  rhs.push_back(one);
  rhs.append(p3);
  rhs.push_back(negate(two));
  rhs.append(negate_word(p4));

  const std::size_t common = std::min(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (lhs[i] != rhs[i]) {
      return detail::fail("recursion", in,
                          "symbol " + std::to_string(i) + " differs: " + a.format(lhs[i]) +
                              " vs " + a.format(rhs[i]));
    }
  }
  if (lhs.size() != rhs.size()) {
    return detail::fail("recursion", in,
                        "lengths differ: " + std::to_string(lhs.size()) + " vs " +
                            std::to_string(rhs.size()));
  }
  return detail::pass("recursion", in, std::to_string(lhs.size()) + " symbols");
}

inline VerificationReport check_recursion(std::uint64_t n) {
  return check_recursion(hilbert_b(), n);
}

enum class PathRelation { identical, axis_swap, none };

inline const char* to_string(PathRelation r) {
  switch (r) {
    case PathRelation::identical: return "identical";
    case PathRelation::axis_swap: return "axis_swap";
    case PathRelation::none: break;
  }
  return "none";
}

inline PathRelation path_relation(const Path& a, const Path& b) {
  if (a == b) return PathRelation::identical;
  if (a.size() != b.size()) return PathRelation::none;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].x != b[i].y || a[i].y != b[i].x) return PathRelation::none;
  }
  return PathRelation::axis_swap;
}

/// Decoded generation n of two systems agree exactly or after swapping the
/// axes; detail records which relation held.
inline VerificationReport check_cross_system(const LSystem& first, const LSystem& second,
                                             std::uint64_t n,
                                             unsigned max_generation = default_generation_cap) {
  detail::check_generation_cap(n, max_generation);
  const auto in = static_cast<std::int64_t>(n);
  const Path a = decode_path(first, n);
  const Path b = decode_path(second, n);
  const PathRelation rel = path_relation(a, b);
  if (rel != PathRelation::none) return detail::pass("cross_system", in, to_string(rel));
  if (a.size() != b.size()) {
    return detail::fail("cross_system", in,
                        "paths have " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()) + " points");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i] && a[i] != Point{b[i].y, b[i].x}) {
      return detail::fail("cross_system", in,
                          "point " + std::to_string(i) + " differs: " +
                              detail::point_text(a[i]) + " vs " + detail::point_text(b[i]));
    }
  }
  return detail::fail("cross_system", in, "paths mix identical and swapped points");
}

inline VerificationReport check_cross_system(std::uint64_t n) {
  return check_cross_system(hilbert_a(), hilbert_b(), n);
}

/// Every check up to max_gen: counts, grid coverage, self-avoidance and
/// prefix stability of sys, then the recursion identity and the
/// cross-system relation of the two Hilbert presets.
inline std::vector<VerificationReport> run_verification(const LSystem& sys, unsigned max_gen) {
  std::vector<VerificationReport> out;
  for (unsigned m = 1; m <= max_gen; ++m) {
    const Path p = decode_path(sys, m);
    const auto im = static_cast<std::int64_t>(m);
    const NodeEdgeCount c = count_nodes_edges(p);
    const std::uint64_t nodes = std::uint64_t{1} << (2 * m);
    const std::string summary =
        std::to_string(c.nodes) + " nodes, " + std::to_string(c.edges) + " edges";
    out.push_back(c.nodes == nodes && c.edges == nodes - 1
                      ? detail::pass("counts", im, summary)
                      : detail::fail("counts", im, summary));
    out.push_back(check_path_grid_coverage(p, m));
    VerificationReport sa = check_self_avoiding(p);
    sa.generation_index = im;
    out.push_back(std::move(sa));
  }
  for (unsigned m = 0; m < max_gen; ++m) out.push_back(check_prefix(sys, m, max_gen));
  for (unsigned n = 0; n + 1 <= max_gen; ++n) out.push_back(check_recursion(hilbert_b(), n, max_gen));
  for (unsigned n = 1; n <= max_gen; ++n) out.push_back(check_cross_system(n));
  return out;
}

}  // namespace lsys
