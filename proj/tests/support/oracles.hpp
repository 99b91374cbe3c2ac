// Independent brute-force oracles used to cross-check the library. These
// deliberately re-derive everything from first principles (rectangle scans,
// decomposition searches, dynamic programming) instead of reusing the
// implementation paths they verify.

#ifndef PSEMI_TESTS_ORACLES_HPP
#define PSEMI_TESTS_ORACLES_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "psemi/psemi.hpp"

namespace psemi::testing {

// Every point of N^d in the axis box [0, size]^d.
inline std::vector<Point> box_points(int dim, Coord size) {
  std::vector<Point> out = {Point::zero(dim)};
  for (int i = 0; i < dim; ++i) {
    std::vector<Point> grown;
    for (const Point& p : out) {
      for (Coord v = 0; v <= size; ++v) {
        std::vector<Coord> c = p.coords();
        c[static_cast<size_t>(i)] = v;
        grown.emplace_back(std::move(c));
      }
    }
    out = std::move(grown);
  }
  return out;
}

// Naive replacement for elements_upto: full rectangle scan and filter.
inline std::vector<Point> rectangle_upto(const Cone& cone,
                                         const MonomialOrder& order,
                                         const Point& bound,
                                         bool include_zero) {
  std::vector<Point> out;
  for (const Point& p : box_points(cone.dim(), bound.degree())) {
    if (p.is_zero() && !include_zero) continue;
    if (!cone.contains(p)) continue;
    if (order.less(bound, p)) continue;
    out.push_back(p);
  }
  std::sort(out.begin(), out.end(), order.cmp());
  return out;
}

// Irreducibility in the cone monoid by exhaustive decomposition.
inline bool cone_irreducible(const Cone& cone, const Point& x) {
  for (const Point& u : box_points(cone.dim(), x.degree())) {
    if (u.is_zero() || u == x) continue;
    if (!x.dominates(u)) continue;
    auto v = subtract(x, u);
    if (v->is_zero()) continue;
    if (cone.contains(u) && cone.contains(*v)) return false;
  }
  return true;
}

// All irreducible cone points up to a degree bound. With the bound large
// enough this is exactly the Hilbert basis.
inline std::vector<Point> hilbert_oracle(const Cone& cone, Coord max_degree) {
  std::vector<Point> out;
  for (const Point& p : box_points(cone.dim(), max_degree)) {
    if (p.is_zero() || p.degree() > max_degree) continue;
    if (!cone.contains(p)) continue;
    if (cone_irreducible(cone, p)) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

// Dynamic programming check: every cone point of degree <= max_degree is
// an N-combination of the basis.
inline bool all_representable(const Cone& cone, const std::vector<Point>& basis,
                              Coord max_degree) {
  std::set<Point, LexLess> reachable;
  reachable.insert(Point::zero(cone.dim()));
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Point& r : std::vector<Point>(reachable.begin(),
                                             reachable.end())) {
      for (const Point& b : basis) {
        Point next = r + b;
        if (next.degree() > max_degree) continue;
        if (reachable.insert(next).second) grew = true;
      }
    }
  }
  for (const Point& p : box_points(cone.dim(), max_degree)) {
    if (p.degree() > max_degree || !cone.contains(p)) continue;
    if (!reachable.count(p)) return false;
  }
  return true;
}

// Minimal generators by a plain double loop over the elements of S up to a
// degree bound; only correct when the bound covers all of msg(S).
inline std::vector<Point> msg_oracle(const CSemigroup& s, Coord max_degree) {
  std::vector<Point> members;
  for (const Point& p : box_points(s.cone().dim(), max_degree)) {
    if (p.is_zero() || p.degree() > max_degree) continue;
    if (s.contains(p)) members.push_back(p);
  }
  std::vector<Point> out;
  for (const Point& x : members) {
    bool reducible = false;
    for (const Point& a : members) {
      if (!x.dominates(a) || a == x) continue;
      auto b = subtract(x, a);
      if (b->is_zero()) continue;
      if (s.contains(*b)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), s.order().cmp());
  return out;
}

// The defining P-semigroup condition checked directly on the small
// elements plus a degree band above the Frobenius element.
inline bool is_p_oracle(const CSemigroup& s, const PSet& P, Coord band = 4) {
  std::vector<Point> witnesses(s.small_elements().begin() + 1,
                               s.small_elements().end());
  const Coord fb_deg = s.frobenius() ? s.frobenius()->degree() : 0;
  // the small elements cover everything below Fb; add a band above it
  for (Coord deg = 1; deg <= fb_deg + band; ++deg) {
    for (const Point& p : s.cone().shell(s.order(), deg)) {
      if (!s.contains(p)) continue;
      if (!s.frobenius() || s.order().less(*s.frobenius(), p)) {
        witnesses.push_back(p);
      }
    }
  }
  for (const Point& w : witnesses) {
    bool ok = false;
    for (const Point& p : P.directions()) {
      if (s.contains(w + p)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

// Apéry set by region enumeration: elements of S whose difference with b
// is a gap, scanned over everything up to Fb + b.
inline std::vector<Point> apery_oracle(const CSemigroup& s, const Point& b) {
  std::vector<Point> out;
  if (!s.frobenius()) return out;
  const Point top = *s.frobenius() + b;
  for (const Point& a : rectangle_upto(s.cone(), s.order(), top, false)) {
    if (!s.contains(a)) continue;
    auto diff = subtract(a, b);
    if (!diff || diff->is_zero()) continue;
    if (s.cone().contains(*diff) && !s.contains(*diff)) out.push_back(a);
  }
  return out;
}

// Gap set of the numerical semigroup generated by gens (dimension 1).
inline std::vector<Point> numerical_gaps(const std::vector<Coord>& gens) {
  Coord limit = 1;
  for (Coord g : gens) limit *= g;
  std::vector<bool> member(static_cast<size_t>(limit) + 1, false);
  member[0] = true;
  for (Coord v = 1; v <= limit; ++v) {
    for (Coord g : gens) {
      if (v >= g && member[static_cast<size_t>(v - g)]) {
        member[static_cast<size_t>(v)] = true;
        break;
      }
    }
  }
  std::vector<Point> gaps;
  for (Coord v = 1; v <= limit; ++v) {
    if (!member[static_cast<size_t>(v)]) gaps.push_back(Point{v});
  }
  return gaps;
}

}  // namespace psemi::testing

#endif
