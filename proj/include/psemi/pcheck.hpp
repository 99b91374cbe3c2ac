#ifndef PSEMI_PCHECK_HPP
#define PSEMI_PCHECK_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "psemi/csemigroup.hpp"
#include "psemi/errors.hpp"
#include "psemi/point.hpp"

namespace psemi {

/// A finite, non-empty set of translation directions P ⊂ N^d \ {0}. With
/// 0 admitted every semigroup would satisfy the P condition, so zero
/// directions are rejected outright.
class PSet {
public:
  explicit PSet(std::vector<Point> directions)
      : directions_(std::move(directions)) {
    if (directions_.empty()) {
      throw InvalidArgument("P: the direction set must be non-empty");
    }
    const int d = directions_.front().dim();
    for (const Point& p : directions_) {
      if (p.dim() != d) {
        throw InvalidArgument("P: directions of mixed dimensions");
      }
      if (p.is_zero()) {
        throw InvalidArgument("P: the zero direction is not allowed");
      }
    }
    std::sort(directions_.begin(), directions_.end(), LexLess{});
    directions_.erase(std::unique(directions_.begin(), directions_.end()),
                      directions_.end());
  }

  int dim() const { return directions_.front().dim(); }

  const std::vector<Point>& directions() const { return directions_; }

  /// Whether some direction lies inside the cone. The enumerations of
  /// whole families assume this; directions outside the cone are still
  /// legal and meaningful.
  bool meets_cone(const Cone& cone) const {
    for (const Point& p : directions_) {
      if (cone.contains(p)) return true;
    }
    return false;
  }

private:
  std::vector<Point> directions_;
};

/// Witness handling for the removal test below. Strict follows the
/// characterization whose blocking witness a - p must be a non-zero
/// element of S. Compat additionally admits a - p = 0, reproducing the
/// published pruning rule behind the genus and multiplicity figures; the
/// two modes differ exactly when the removed generator itself belongs
/// to P.
enum class RemovalMode { Strict, Compat };

/// S is a P-semigroup iff every non-zero element can be translated back
/// into S by some direction of P. Checking the minimal generators
/// suffices: any other element is a generator plus something in S, and
/// the generator's direction still works for it.
inline bool is_p_semigroup(const CSemigroup& S, const PSet& P) {
  if (P.dim() != S.cone().dim()) {
    throw InvalidArgument("P: dimension differs from the semigroup");
  }
  for (const Point& a : S.minimal_generators()) {
    bool ok = false;
    for (const Point& p : P.directions()) {
      if (S.contains(a + p)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

/// For a P-semigroup S and a minimal generator a: whether S \ {a} is
/// still a P-semigroup. Removal fails exactly when some p ∈ P leaves a
/// witness s = a - p stranded: s in S (non-zero in Strict mode) whose
/// only P-translate into S was a itself.
inline bool removal_keeps_p(const CSemigroup& S, const Point& a,
                            const PSet& P, RemovalMode mode) {
  if (P.dim() != S.cone().dim()) {
    throw InvalidArgument("P: dimension differs from the semigroup");
  }
  if (!sorted_contains(S.minimal_generators(), a, S.order())) {
    throw InvalidArgument("removal_keeps_p: " + a.str() +
                          " is not a minimal generator");
  }
  for (const Point& p : P.directions()) {
    auto s = subtract(a, p);
    if (!s || !S.contains(*s)) continue;
    if (mode == RemovalMode::Strict && s->is_zero()) continue;
    bool stranded = true;
    for (const Point& q : P.directions()) {
      if (q == p) continue;
      if (S.contains(*s + q)) {
        stranded = false;
        break;
      }
    }
    if (stranded) return false;
  }
  return true;
}

/// Child test of the fixed-Frobenius tree: T ∪ {x} is a child of T iff x
/// is a special gap other than the Frobenius element, precedes the
/// multiplicity of T, and re-enters T along some direction of P.
inline bool valid_child_extension(const CSemigroup& T, const Point& x,
                                  const PSet& P) {
  if (P.dim() != T.cone().dim()) {
    throw InvalidArgument("P: dimension differs from the semigroup");
  }
  if (!sorted_contains(T.special_gaps(), x, T.order())) return false;
  if (T.frobenius() && x == *T.frobenius()) return false;
  if (!T.order().less(x, T.multiplicity())) return false;
  for (const Point& p : P.directions()) {
    if (T.contains(x + p)) return true;
  }
  return false;
}

}  // namespace psemi

#endif
