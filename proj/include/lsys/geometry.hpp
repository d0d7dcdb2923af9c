#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsys/error.hpp"
#include "lsys/interpretation.hpp"
#include "lsys/symbol.hpp"

namespace lsys {

/// Canonical unit moves: 1 right, -1 left, 2 up, -2 down. The y axis points
/// up; only SVG output flips it.
enum class Move : std::int8_t { right = 1, left = -1, up = 2, down = -2 };

using MoveSeq = std::vector<Move>;

constexpr int code(Move m) noexcept { return static_cast<int>(m); }

constexpr Move move_for_step(int dx, int dy) {
  if (dx == 1 && dy == 0) return Move::right;
  if (dx == -1 && dy == 0) return Move::left;
  if (dx == 0 && dy == 1) return Move::up;
  if (dx == 0 && dy == -1) return Move::down;
  throw Error("not a unit lattice step");
}

template <typename T>
struct BasicPoint {
  T x{};
  T y{};

  friend constexpr bool operator==(const BasicPoint&, const BasicPoint&) = default;
};

using Point = BasicPoint<std::int64_t>;
using Path = std::vector<Point>;

constexpr Point step(Point p, Move m) noexcept {
  switch (m) {
    case Move::right: return {p.x + 1, p.y};
    case Move::left: return {p.x - 1, p.y};
    case Move::up: return {p.x, p.y + 1};
    case Move::down: return {p.x, p.y - 1};
  }
  return p;
}

/// Incremental symbol-to-move decoder, for streamed words.
class MoveDecoder {
 public:
  explicit MoveDecoder(const Interpretation& interp) : interp_(&interp) {}

  std::optional<Move> feed(Symbol s) const {
    Action a = interp_->action(s);
    if (a.kind != Action::Kind::move) return std::nullopt;
    return move_for_step(a.dx, a.dy);
  }

 private:
  const Interpretation* interp_;
};

/// Maps each symbol to its canonical move, dropping skip and origin symbols.
inline MoveSeq to_moves(const Word& w, const Interpretation& interp) {
  MoveDecoder decoder(interp);
  MoveSeq out;
  for (Symbol s : w) {
    if (auto m = decoder.feed(s)) out.push_back(*m);
  }
  return out;
}

inline Path to_path(std::span<const Move> moves) {
  Path out;
  out.reserve(moves.size() + 1);
  out.push_back({0, 0});
  for (Move m : moves) out.push_back(step(out.back(), m));
  return out;
}

/// Inverse of to_path: the moves between consecutive points.
inline MoveSeq moves_from_path(std::span<const Point> path) {
  MoveSeq out;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const std::int64_t dx = path[i].x - path[i - 1].x;
    const std::int64_t dy = path[i].y - path[i - 1].y;
    if (std::abs(dx) + std::abs(dy) != 1) {
      throw Error("points " + std::to_string(i - 1) + " and " +
                  std::to_string(i) + " are not one unit apart");
    }
    out.push_back(move_for_step(static_cast<int>(dx), static_cast<int>(dy)));
  }
  return out;
}

template <typename T>
struct BoundingBox {
  T min_x{};
  T min_y{};
  T max_x{};
  T max_y{};

  T width() const { return max_x - min_x; }
  T height() const { return max_y - min_y; }

  friend constexpr bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

template <typename T>
BoundingBox<T> bounding_box(std::span<const BasicPoint<T>> points) {
  if (points.empty()) throw Error("bounding box of an empty path");
  BoundingBox<T> box{points[0].x, points[0].y, points[0].x, points[0].y};
  for (const auto& p : points) {
    box.min_x = std::min(box.min_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_x = std::max(box.max_x, p.x);
    box.max_y = std::max(box.max_y, p.y);
  }
  return box;
}

inline BoundingBox<std::int64_t> bounding_box(const Path& p) {
  return bounding_box(std::span<const Point>(p));
}

enum class NormalizeMode { paper_sqrt, unit_square };

struct NormalizedPath {
  std::vector<BasicPoint<double>> points;
  double scale_factor = 1.0;
};

/// Scales a decoded generation-m path. paper_sqrt multiplies by
/// sqrt(2^-m); unit_square by 1/(2^m - 1), which maps the Hilbert curve of
/// generation m onto [0,1]^2.
inline NormalizedPath normalize(const Path& p, unsigned m, NormalizeMode mode) {
  NormalizedPath out;
  out.points.reserve(p.size());
  if (mode == NormalizeMode::paper_sqrt) {
    out.scale_factor = std::sqrt(std::ldexp(1.0, -static_cast<int>(m)));
    for (const Point& q : p) {
      out.points.push_back({static_cast<double>(q.x) * out.scale_factor,
                            static_cast<double>(q.y) * out.scale_factor});
    }
    return out;
  }
  if (m == 0) throw DegenerateScale("unit_square normalization needs m >= 1");
  // Divide rather than multiply by the reciprocal so the far corner lands
  // on exactly 1.0.
  const double span = std::ldexp(1.0, static_cast<int>(m)) - 1.0;
  out.scale_factor = 1.0 / span;
  for (const Point& q : p) {
    out.points.push_back({static_cast<double>(q.x) / span,
                          static_cast<double>(q.y) / span});
  }
  return out;
}

struct NodeEdgeCount {
  std::size_t nodes = 0;
  std::size_t edges = 0;

  friend constexpr bool operator==(const NodeEdgeCount&, const NodeEdgeCount&) = default;
};

inline NodeEdgeCount count_nodes_edges(const Path& p) {
  return {p.size(), p.empty() ? 0 : p.size() - 1};
}

}  // namespace lsys
