#ifndef PSEMI_POINT_HPP
#define PSEMI_POINT_HPP

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psemi/errors.hpp"

namespace psemi {

using Coord = std::int64_t;

/// A lattice point of N^d. Coordinates are never negative, and points of
/// different dimensions do not interoperate.
class Point {
public:
  Point() = default;

  explicit Point(std::vector<Coord> coords) : coords_(std::move(coords)) {
    for (Coord c : coords_) {
      if (c < 0) {
        throw InvalidArgument("Point: coordinates must be non-negative");
      }
    }
  }

  Point(std::initializer_list<Coord> coords)
      : Point(std::vector<Coord>(coords)) {}

  static Point zero(int dim) { return Point(std::vector<Coord>(dim, 0)); }

  int dim() const { return static_cast<int>(coords_.size()); }

  Coord operator[](int i) const { return coords_[static_cast<size_t>(i)]; }

  const std::vector<Coord>& coords() const { return coords_; }

  /// Total degree, the sum of all coordinates.
  Coord degree() const {
    return std::accumulate(coords_.begin(), coords_.end(), Coord{0});
  }

  bool is_zero() const {
    for (Coord c : coords_) {
      if (c != 0) return false;
    }
    return true;
  }

  /// Componentwise domination: true when every coordinate of this point is
  /// at least the corresponding coordinate of `other`.
  bool dominates(const Point& other) const {
    check_same_dim(*this, other);
    for (int i = 0; i < dim(); ++i) {
      if ((*this)[i] < other[i]) return false;
    }
    return true;
  }

  /// Renders as "(3,7)"; one-dimensional points render as "(3)".
  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < coords_.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(coords_[i]);
    }
    s += ')';
    return s;
  }

  friend bool operator==(const Point&, const Point&) = default;

  friend Point operator+(const Point& a, const Point& b) {
    check_same_dim(a, b);
    std::vector<Coord> c(a.coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
    return Point(std::move(c));
  }

  friend void check_same_dim(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) {
      throw InvalidArgument("dimension mismatch: " + a.str() + " vs " +
                            b.str());
    }
  }

private:
  std::vector<Coord> coords_;
};

/// Componentwise difference a - b, or nothing when any coordinate would
/// become negative. A difference that leaves N^d is simply not an element
/// of any subset of N^d, so callers can treat the empty result as "not a
/// member".
inline std::optional<Point> subtract(const Point& a, const Point& b) {
  check_same_dim(a, b);
  std::vector<Coord> c(static_cast<size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] < b[i]) return std::nullopt;
    c[static_cast<size_t>(i)] = a[i] - b[i];
  }
  return Point(std::move(c));
}

/// Plain lexicographic comparison of raw coordinates. This is a container
/// ordering for std::set/std::map keys only; it is unrelated to monomial
/// orders.
struct LexLess {
  bool operator()(const Point& a, const Point& b) const {
    return a.coords() < b.coords();
  }
};

}  // namespace psemi

#endif
