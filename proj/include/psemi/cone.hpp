#ifndef PSEMI_CONE_HPP
#define PSEMI_CONE_HPP

#include <algorithm>
#include <memory>
#include <numeric>
#include <vector>

#include "psemi/errors.hpp"
#include "psemi/order.hpp"
#include "psemi/point.hpp"

namespace psemi {

/// A finitely generated integer cone C ⊆ N^d.
///
/// Membership is decided by facet inequalities fixed at construction, since
/// it is the hot operation of every algorithm built on top. The extremal
/// rays are stored primitive (coordinate gcd 1) and pairwise
/// non-proportional; for d = 2 they are the two slope-extreme generators.
///
/// Construction accepts dimension 1, dimension 2, and the full orthant N^d
/// in any dimension. Anything else would need general convex-hull and
/// Hilbert-basis machinery and is rejected; such cones must not reach this
/// type.
class Cone {
public:
  static Cone from_generators(int dim, const std::vector<Point>& generators) {
    if (dim < 1) throw InvalidArgument("cone: dimension must be positive");
    if (generators.empty()) {
      throw InvalidArgument("cone: at least one generator required");
    }
    std::vector<Point> prim;
    for (const Point& g : generators) {
      if (g.dim() != dim) {
        throw InvalidArgument("cone: generator " + g.str() +
                              " has wrong dimension");
      }
      if (g.is_zero()) {
        throw InvalidArgument("cone: generators must be non-zero");
      }
      prim.push_back(primitive(g));
    }
    Cone cone;
    cone.dim_ = dim;
    if (dim == 1) {
      cone.rays_ = {Point{1}};
      cone.orthant_ = true;
    } else if (dim == 2) {
      cone.init_dim2(prim);
    } else {
      cone.init_orthant_only(prim);
    }
    cone.compute_hilbert_basis();
    return cone;
  }

  static Cone orthant(int dim) {
    std::vector<Point> units;
    for (int i = 0; i < dim; ++i) {
      std::vector<Coord> c(static_cast<size_t>(dim), 0);
      c[static_cast<size_t>(i)] = 1;
      units.emplace_back(std::move(c));
    }
    return from_generators(dim, units);
  }

  int dim() const { return dim_; }

  bool full_orthant() const { return orthant_; }

  /// Primitive extremal rays; exactly two for d = 2, the unit vectors for
  /// an orthant.
  const std::vector<Point>& rays() const { return rays_; }

  bool contains(const Point& x) const {
    if (x.dim() != dim_) {
      throw InvalidArgument("cone: point " + x.str() + " has wrong dimension");
    }
    for (const auto& normal : facet_normals_) {
      Coord dot = 0;
      for (int i = 0; i < dim_; ++i) dot += normal[static_cast<size_t>(i)] * x[i];
      if (dot < 0) return false;
    }
    return true;
  }

  /// The unique minimal monoid generating set of C, computed once at
  /// construction.
  const std::vector<Point>& hilbert_basis() const { return hilbert_basis_; }

  Coord max_hilbert_degree() const { return max_hilbert_degree_; }

  /// All cone points of the given total degree, sorted ascending by the
  /// order. Graded orders make degree slices exactly the order strata.
  std::vector<Point> shell(const MonomialOrder& order, Coord degree) const {
    std::vector<Point> out;
    if (degree < 0) return out;
    if (dim_ == 1) {
      out.push_back(Point{degree});
    } else if (dim_ == 2) {
      for (Coord x = 0; x <= degree; ++x) {
        Point p{x, degree - x};
        if (contains(p)) out.push_back(p);
      }
    } else {
      std::vector<Coord> partial(static_cast<size_t>(dim_), 0);
      compositions(degree, 0, partial, out);
    }
    std::sort(out.begin(), out.end(), order.cmp());
    return out;
  }

  /// All x ∈ C with x ≤ bound in the order, sorted ascending. Realizes the
  /// "for all x ∈ C up to bound" scans; the bound itself is included when
  /// it lies in the cone.
  std::vector<Point> elements_upto(const MonomialOrder& order,
                                   const Point& bound,
                                   bool include_zero) const {
    std::vector<Point> out;
    if (include_zero) out.push_back(Point::zero(dim_));
    const Coord top = bound.degree();
    for (Coord deg = 1; deg <= top; ++deg) {
      for (Point& p : shell(order, deg)) {
        if (deg == top && order.less(bound, p)) continue;
        out.push_back(std::move(p));
      }
    }
    return out;
  }

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.dim_ == b.dim_ && a.rays_ == b.rays_;
  }

private:
  Cone() = default;

  static Coord cross(const Point& a, const Point& b) {
    return a[0] * b[1] - a[1] * b[0];
  }

  static Point primitive(const Point& p) {
    Coord g = 0;
    for (int i = 0; i < p.dim(); ++i) g = std::gcd(g, p[i]);
    std::vector<Coord> c(static_cast<size_t>(p.dim()));
    for (int i = 0; i < p.dim(); ++i) c[static_cast<size_t>(i)] = p[i] / g;
    return Point(std::move(c));
  }

  void init_dim2(const std::vector<Point>& prim) {
    // Slope-extreme generators are the extremal rays: low = flattest,
    // high = steepest, compared by cross product.
    Point low = prim[0];
    Point high = prim[0];
    for (const Point& g : prim) {
      if (cross(g, low) > 0) low = g;
      if (cross(high, g) > 0) high = g;
    }
    if (low == high) {
      throw InvalidArgument("cone: fewer than 2 extremal rays");
    }
    rays_ = {low, high};
    facet_normals_ = {{-low[1], low[0]}, {high[1], -high[0]}};
    orthant_ = (low == Point{1, 0} && high == Point{0, 1});
    if (orthant_) facet_normals_.clear();
  }

  void init_orthant_only(const std::vector<Point>& prim) {
    // d >= 3 is supported only for the full orthant, i.e. every unit
    // vector must appear among the primitive generators.
    for (int i = 0; i < dim_; ++i) {
      std::vector<Coord> c(static_cast<size_t>(dim_), 0);
      c[static_cast<size_t>(i)] = 1;
      Point unit(std::move(c));
      if (std::find(prim.begin(), prim.end(), unit) == prim.end()) {
        throw InvalidArgument(
            "cone: dimension >= 3 is supported only for the full orthant");
      }
      rays_.push_back(std::move(unit));
    }
    orthant_ = true;
  }

  void compositions(Coord remaining, int coord, std::vector<Coord>& partial,
                    std::vector<Point>& out) const {
    if (coord == dim_ - 1) {
      partial[static_cast<size_t>(coord)] = remaining;
      Point p{std::vector<Coord>(partial)};
      if (contains(p)) out.push_back(std::move(p));
      return;
    }
    for (Coord v = 0; v <= remaining; ++v) {
      partial[static_cast<size_t>(coord)] = v;
      compositions(remaining - v, coord + 1, partial, out);
    }
  }

  void compute_hilbert_basis() {
    if (orthant_) {
      hilbert_basis_ = rays_;
    } else {
      // d = 2: every irreducible element lies in the fundamental
      // parallelogram {a r1 + b r2 : 0 <= a, b <= 1}; scan its lattice
      // points and keep those with no decomposition into two non-zero
      // cone points.
      const Point& r1 = rays_[0];
      const Point& r2 = rays_[1];
      const Coord det = cross(r1, r2);  // > 0: r1 is the flatter ray
      std::vector<Point> candidates;
      for (Coord x = 0; x <= r1[0] + r2[0]; ++x) {
        for (Coord y = 0; y <= r1[1] + r2[1]; ++y) {
          Point q{x, y};
          if (q.is_zero()) continue;
          const Coord a_num = cross(q, r2);
          const Coord b_num = cross(r1, q);
          if (a_num < 0 || a_num > det || b_num < 0 || b_num > det) continue;
          candidates.push_back(std::move(q));
        }
      }
      for (const Point& q : candidates) {
        if (irreducible(q)) hilbert_basis_.push_back(q);
      }
    }
    std::sort(hilbert_basis_.begin(), hilbert_basis_.end(),
              [](const Point& a, const Point& b) {
                if (a.degree() != b.degree()) return a.degree() < b.degree();
                return LexLess{}(a, b);
              });
    max_hilbert_degree_ = 0;
    for (const Point& h : hilbert_basis_) {
      max_hilbert_degree_ = std::max(max_hilbert_degree_, h.degree());
    }
  }

  bool irreducible(const Point& q) const {
    for (Coord x = 0; x <= q[0]; ++x) {
      for (Coord y = 0; y <= q[1]; ++y) {
        Point u{x, y};
        if (u.is_zero() || u == q) continue;
        Point v = *subtract(q, u);
        if (v.is_zero()) continue;
        if (contains(u) && contains(v)) return false;
      }
    }
    return true;
  }

  int dim_ = 0;
  bool orthant_ = false;
  std::vector<Point> rays_;
  std::vector<std::vector<Coord>> facet_normals_;
  std::vector<Point> hilbert_basis_;
  Coord max_hilbert_degree_ = 0;
};

using ConePtr = std::shared_ptr<const Cone>;

inline ConePtr make_cone(int dim, const std::vector<Point>& generators) {
  return std::make_shared<const Cone>(Cone::from_generators(dim, generators));
}

}  // namespace psemi

#endif
