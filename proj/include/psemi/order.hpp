#ifndef PSEMI_ORDER_HPP
#define PSEMI_ORDER_HPP

#include <algorithm>
#include <compare>
#include <optional>
#include <vector>

#include "psemi/errors.hpp"
#include "psemi/point.hpp"

namespace psemi {

/// Graded lexicographic order on N^d: total degree decides first, ties are
/// broken lexicographically along a configurable coordinate priority.
///
/// Only graded orders are admitted. Gradedness keeps every down-set
/// {x : x < f} finite, which the small-element sets and the automaton
/// states depend on; a non-graded order request is a configuration error.
class MonomialOrder {
public:
  /// Graded lex with the default priority (1, ..., d).
  static MonomialOrder grlex(int dim) {
    std::vector<int> priority(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) priority[static_cast<size_t>(i)] = i + 1;
    return MonomialOrder(std::move(priority));
  }

  /// Graded lex with an explicit tie-break priority, a permutation of
  /// {1, ..., d} listing coordinates in comparison order.
  static MonomialOrder grlex(std::vector<int> priority) {
    return MonomialOrder(std::move(priority));
  }

  int dim() const { return static_cast<int>(priority_.size()); }

  /// The 1-based priority permutation, as configured.
  const std::vector<int>& priority() const { return priority_; }

  std::strong_ordering compare(const Point& a, const Point& b) const {
    require_dim(a);
    require_dim(b);
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (int i : priority_) {
      if (auto c = a[i - 1] <=> b[i - 1]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  bool less(const Point& a, const Point& b) const {
    return compare(a, b) < 0;
  }

  bool less_eq(const Point& a, const Point& b) const {
    return compare(a, b) <= 0;
  }

  /// Comparator usable with standard algorithms and containers.
  struct Less {
    const MonomialOrder* order;
    bool operator()(const Point& a, const Point& b) const {
      return order->less(a, b);
    }
  };

  Less cmp() const { return Less{this}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  explicit MonomialOrder(std::vector<int> priority)
      : priority_(std::move(priority)) {
    if (priority_.empty()) {
      throw InvalidArgument("order: dimension must be positive");
    }
    std::vector<bool> seen(priority_.size(), false);
    for (int i : priority_) {
      if (i < 1 || i > dim() || seen[static_cast<size_t>(i - 1)]) {
        throw InvalidArgument(
            "order: priority must be a permutation of 1..d");
      }
      seen[static_cast<size_t>(i - 1)] = true;
    }
  }

  void require_dim(const Point& p) const {
    if (p.dim() != dim()) {
      throw InvalidArgument("order: point " + p.str() +
                            " has wrong dimension");
    }
  }

  std::vector<int> priority_;
};

/// A Frobenius element that may be absent. The absent value stands for the
/// gapless case and sorts strictly below every lattice point, so the
/// conventional literal (-1,...,-1) never needs to exist.
using ExtendedFrobenius = std::optional<Point>;

/// a is strictly above fb (absent fb is below everything).
inline bool strictly_above(const MonomialOrder& order, const Point& a,
                           const ExtendedFrobenius& fb) {
  return !fb.has_value() || order.less(*fb, a);
}

/// Membership in a strictly order-sorted vector.
inline bool sorted_contains(const std::vector<Point>& sorted, const Point& p,
                            const MonomialOrder& order) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), p, order.cmp());
  return it != sorted.end() && *it == p;
}

/// Insert into a strictly order-sorted vector, keeping it sorted.
inline void sorted_insert(std::vector<Point>& sorted, const Point& p,
                          const MonomialOrder& order) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), p, order.cmp());
  if (it == sorted.end() || !(*it == p)) sorted.insert(it, p);
}

}  // namespace psemi

#endif
