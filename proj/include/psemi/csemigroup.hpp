#ifndef PSEMI_CSEMIGROUP_HPP
#define PSEMI_CSEMIGROUP_HPP

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "psemi/cone.hpp"
#include "psemi/errors.hpp"
#include "psemi/order.hpp"
#include "psemi/point.hpp"

namespace psemi {

/// Gap-set validation failure. Carries the offending gap and, for closure
/// violations, the witness decomposition gap = a + b with both parts in
/// the complement.
class GapSetError : public DomainError {
public:
  enum class Kind { ZeroGap, GapOutsideCone, NotClosed };

  GapSetError(Kind kind, std::string message, Point gap,
              std::optional<Point> a = std::nullopt,
              std::optional<Point> b = std::nullopt)
      : DomainError(std::move(message)),
        kind(kind),
        gap(std::move(gap)),
        part_a(std::move(a)),
        part_b(std::move(b)) {}

  Kind kind;
  Point gap;
  std::optional<Point> part_a;
  std::optional<Point> part_b;
};

/// A C-semigroup: a submonoid S of an integer cone C whose complement
/// C \ S (the gap set) is finite.
///
/// The value is the cone, the fixed monomial order, and the ≺-sorted gap
/// set. Frobenius element, multiplicity and genus are fixed at
/// construction; the heavier derived data (minimal generators, small
/// elements, special gaps) is computed once on demand and shared between
/// copies of the same value, with idempotent fills that are safe under
/// concurrent readers.
class CSemigroup {
public:
  /// Builds and fully validates a semigroup from its gap set: each gap must
  /// be a non-zero cone element, and the complement must be closed under
  /// addition (checked by brute-force decomposition of every gap).
  static CSemigroup from_gaps(ConePtr cone, MonomialOrder order,
                              std::vector<Point> gaps) {
    CSemigroup s =
        from_gaps_unchecked(std::move(cone), std::move(order), std::move(gaps));
    s.validate_closure();
    return s;
  }

  /// Like from_gaps but without the closure validation: gaps must still be
  /// non-zero cone elements, and the caller asserts that the complement is
  /// additively closed. All queries read membership straight off the gap
  /// set, so reference data can be consumed exactly as published even when
  /// it fails the closure check.
  static CSemigroup from_gaps_unchecked(ConePtr cone, MonomialOrder order,
                                        std::vector<Point> gaps) {
    if (!cone) throw InvalidArgument("semigroup: null cone");
    if (order.dim() != cone->dim()) {
      throw InvalidArgument("semigroup: order dimension differs from cone");
    }
    std::sort(gaps.begin(), gaps.end(), order.cmp());
    gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
    for (const Point& h : gaps) {
      if (h.is_zero()) {
        throw GapSetError(GapSetError::Kind::ZeroGap,
                          "gap set contains the zero element", h);
      }
      if (!cone->contains(h)) {
        throw GapSetError(GapSetError::Kind::GapOutsideCone,
                          "gap " + h.str() + " lies outside the cone", h);
      }
    }
    return CSemigroup(std::move(cone), std::move(order), std::move(gaps));
  }

  /// The gapless semigroup S = C.
  static CSemigroup whole_cone(ConePtr cone, MonomialOrder order) {
    if (!cone) throw InvalidArgument("semigroup: null cone");
    if (order.dim() != cone->dim()) {
      throw InvalidArgument("semigroup: order dimension differs from cone");
    }
    return CSemigroup(std::move(cone), std::move(order), {});
  }

  const Cone& cone() const { return *cone_; }
  const ConePtr& cone_ptr() const { return cone_; }
  const MonomialOrder& order() const { return order_; }

  /// The gap set H(S), ≺-sorted.
  const std::vector<Point>& gaps() const { return gaps_; }

  int genus() const { return static_cast<int>(gaps_.size()); }

  /// ≺-maximum gap; absent when S = C.
  const ExtendedFrobenius& frobenius() const { return frobenius_; }

  /// ≺-minimum non-zero element of S.
  const Point& multiplicity() const { return multiplicity_; }

  bool contains(const Point& x) const {
    if (x.dim() != cone_->dim()) {
      throw InvalidArgument("semigroup: point " + x.str() +
                            " has wrong dimension");
    }
    return cone_->contains(x) && !is_gap(x);
  }

  /// {0} together with every s ∈ S strictly below the Frobenius element,
  /// ≺-sorted. Gapless semigroups have {0} alone.
  const std::vector<Point>& small_elements() const {
    std::call_once(derived_->small_once, [this] {
      auto& out = derived_->small;
      if (!frobenius_) {
        out = {Point::zero(cone_->dim())};
        return;
      }
      for (Point& p : cone_->elements_upto(order_, *frobenius_, true)) {
        if (p == *frobenius_ || is_gap(p)) continue;
        out.push_back(std::move(p));
      }
    });
    return derived_->small;
  }

  /// The unique minimal generating set msg(S): the non-zero elements of S
  /// with no decomposition into two non-zero elements of S. ≺-sorted.
  ///
  /// Candidates are scanned up to degree 2 deg(Fb) + 2 M, where M is the
  /// top Hilbert-basis degree of the cone: any element above that bound
  /// splits into two cone parts of degree > deg(Fb), both automatically
  /// in S, so it cannot be minimal.
  const std::vector<Point>& minimal_generators() const {
    std::call_once(derived_->msg_once, [this] { compute_msg(); });
    return derived_->msg;
  }

  /// Apéry set Ap(S, b) = {a ∈ S : a - b is a gap of S}, for b ∈ S \ {0}.
  /// Exactly the translates {h + b : h ∈ H(S)} that land in S, so the scan
  /// is exhaustive. ≺-sorted; empty for gapless S.
  std::vector<Point> apery(const Point& b) const {
    if (b.is_zero() || !contains(b)) {
      throw InvalidArgument("apery: base " + b.str() +
                            " must be a non-zero element of S");
    }
    std::vector<Point> out;
    for (const Point& h : gaps_) {
      Point a = h + b;
      if (contains(a)) out.push_back(std::move(a));
    }
    // translation by b preserves the order, so the result is sorted
    return out;
  }

  /// Special gaps: gaps x with 2x ∈ S and x + s ∈ S for every non-zero
  /// s ∈ S. Checking the minimal generators suffices, by induction over
  /// generator decompositions. ≺-sorted.
  const std::vector<Point>& special_gaps() const {
    std::call_once(derived_->sg_once, [this] {
      const auto& msg = minimal_generators();
      for (const Point& x : gaps_) {
        if (!contains(x + x)) continue;
        bool special = true;
        for (const Point& a : msg) {
          if (!contains(x + a)) {
            special = false;
            break;
          }
        }
        if (special) derived_->sg.push_back(x);
      }
    });
    return derived_->sg;
  }

  /// S \ {a} for a minimal generator a. The precondition guarantees the
  /// complement stays closed, so no revalidation happens.
  CSemigroup remove_element(const Point& a) const {
    if (!sorted_contains(minimal_generators(), a, order_)) {
      throw InvalidArgument("remove_element: " + a.str() +
                            " is not a minimal generator");
    }
    std::vector<Point> gaps = gaps_;
    sorted_insert(gaps, a, order_);
    return CSemigroup(cone_, order_, std::move(gaps));
  }

  /// S ∪ {x} for a special gap x; the special-gap condition is exactly
  /// what keeps the enlarged set a semigroup.
  CSemigroup add_element(const Point& x) const {
    if (!sorted_contains(special_gaps(), x, order_)) {
      throw InvalidArgument("add_element: " + x.str() +
                            " is not a special gap");
    }
    std::vector<Point> gaps = gaps_;
    gaps.erase(std::find(gaps.begin(), gaps.end(), x));
    return CSemigroup(cone_, order_, std::move(gaps));
  }

  friend bool operator==(const CSemigroup& a, const CSemigroup& b) {
    return *a.cone_ == *b.cone_ && a.order_ == b.order_ && a.gaps_ == b.gaps_;
  }

private:
  CSemigroup(ConePtr cone, MonomialOrder order, std::vector<Point> sorted_gaps)
      : cone_(std::move(cone)),
        order_(std::move(order)),
        gaps_(std::move(sorted_gaps)),
        derived_(std::make_shared<Derived>()) {
    if (!gaps_.empty()) frobenius_ = gaps_.back();
    multiplicity_ = compute_multiplicity();
  }

  bool is_gap(const Point& x) const {
    return sorted_contains(gaps_, x, order_);
  }

  Point compute_multiplicity() const {
    const Coord fb_deg = frobenius_ ? frobenius_->degree() : 0;
    const Coord cap = fb_deg + cone_->max_hilbert_degree() + 1;
    for (Coord deg = 1; deg <= cap; ++deg) {
      for (const Point& p : cone_->shell(order_, deg)) {
        if (!is_gap(p)) return p;
      }
    }
    throw Error("semigroup: no non-zero element found (broken gap set)");
  }

  void validate_closure() const {
    // For every gap h, no decomposition h = a + b may have both non-zero
    // parts in the complement.
    const Coord top = frobenius_ ? frobenius_->degree() : 0;
    std::vector<std::vector<Point>> shells(static_cast<size_t>(top) + 1);
    for (Coord d = 1; d <= top; ++d) {
      shells[static_cast<size_t>(d)] = cone_->shell(order_, d);
    }
    for (const Point& h : gaps_) {
      const Coord hd = h.degree();
      for (Coord da = 1; 2 * da <= hd; ++da) {
        for (const Point& a : shells[static_cast<size_t>(da)]) {
          if (is_gap(a)) continue;
          auto b = subtract(h, a);
          if (!b || b->is_zero()) continue;
          if (!cone_->contains(*b) || is_gap(*b)) continue;
          throw GapSetError(GapSetError::Kind::NotClosed,
                            "complement not closed: gap " + h.str() + " = " +
                                a.str() + " + " + b->str() +
                                " with both parts in the semigroup",
                            h, a, *b);
        }
      }
    }
  }

  void compute_msg() const {
    auto& out = derived_->msg;
    if (gaps_.empty()) {
      out = cone_->hilbert_basis();
      std::sort(out.begin(), out.end(), order_.cmp());
      return;
    }
    const Coord bound =
        2 * frobenius_->degree() + 2 * cone_->max_hilbert_degree();
    std::vector<std::vector<Point>> shells(static_cast<size_t>(bound) + 1);
    for (Coord d = 1; d <= bound; ++d) {
      shells[static_cast<size_t>(d)] = cone_->shell(order_, d);
    }
    for (Coord deg = 1; deg <= bound; ++deg) {
      for (const Point& x : shells[static_cast<size_t>(deg)]) {
        if (is_gap(x)) continue;
        bool reducible = false;
        for (Coord da = 1; 2 * da <= deg && !reducible; ++da) {
          for (const Point& a : shells[static_cast<size_t>(da)]) {
            if (is_gap(a)) continue;
            auto b = subtract(x, a);
            if (!b || b->is_zero()) continue;
            if (!cone_->contains(*b) || is_gap(*b)) continue;
            reducible = true;
            break;
          }
        }
        if (!reducible) out.push_back(x);
      }
    }
  }

  struct Derived {
    std::once_flag msg_once;
    std::once_flag small_once;
    std::once_flag sg_once;
    std::vector<Point> msg;
    std::vector<Point> small;
    std::vector<Point> sg;
  };

  ConePtr cone_;
  MonomialOrder order_;
  std::vector<Point> gaps_;
  ExtendedFrobenius frobenius_;
  Point multiplicity_;
  std::shared_ptr<Derived> derived_;
};

}  // namespace psemi

#endif
