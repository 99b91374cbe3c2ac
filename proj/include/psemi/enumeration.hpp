#ifndef PSEMI_ENUMERATION_HPP
#define PSEMI_ENUMERATION_HPP

#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "psemi/csemigroup.hpp"
#include "psemi/errors.hpp"
#include "psemi/pcheck.hpp"

namespace psemi {

/// A node of an enumeration tree. The label is the element removed from
/// (or, in the fixed-Frobenius tree, added to) the parent on the incoming
/// edge; the root has none. Children are sorted ascending by label.
struct EnumNode {
  CSemigroup semigroup;
  std::optional<Point> label;
  int depth = 0;
  std::vector<EnumNode> children;
};

struct EnumTree {
  EnumNode root;
  /// Node counts per level, root level included.
  std::vector<std::size_t> level_sizes;
  /// False when no direction of P lies in the cone; the enumerated family
  /// may then be incomplete and callers should warn.
  bool p_meets_cone = true;
};

struct FinitenessVerdict {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind;
  std::string reason;
};

namespace detail {

/// Breadth-first expansion with a fixed level budget (or none). Child
/// generation is pure per node, so a level can be split across workers;
/// results are merged back in node order, which keeps the tree identical
/// for any worker count.
template <typename ChildFn>
inline void expand_tree(EnumNode& root, std::optional<int> max_levels,
                        const ChildFn& make_children, int workers,
                        std::vector<std::size_t>& level_sizes) {
  level_sizes.assign(1, 1);
  std::vector<EnumNode*> level = {&root};
  int grown = 0;
  while (!level.empty() && (!max_levels || grown < *max_levels)) {
    const std::size_t n = level.size();
    std::vector<std::vector<EnumNode>> batches(n);
    int w = std::max(1, workers);
    if (w > static_cast<int>(n)) w = static_cast<int>(n);
    if (w <= 1) {
      for (std::size_t i = 0; i < n; ++i) {
        batches[i] = make_children(*level[i]);
      }
    } else {
      std::vector<std::thread> threads;
      std::exception_ptr failure;
      std::mutex failure_mutex;
      for (int t = 0; t < w; ++t) {
        const std::size_t begin = n * static_cast<std::size_t>(t) /
                                  static_cast<std::size_t>(w);
        const std::size_t end = n * static_cast<std::size_t>(t + 1) /
                                static_cast<std::size_t>(w);
        threads.emplace_back([&, begin, end] {
          try {
            for (std::size_t i = begin; i < end; ++i) {
              batches[i] = make_children(*level[i]);
            }
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        });
      }
      for (auto& th : threads) th.join();
      if (failure) std::rethrow_exception(failure);
    }
    std::vector<EnumNode*> next;
    for (std::size_t i = 0; i < n; ++i) {
      level[i]->children = std::move(batches[i]);
      for (EnumNode& child : level[i]->children) next.push_back(&child);
    }
    if (next.empty()) break;
    level_sizes.push_back(next.size());
    level = std::move(next);
    ++grown;
  }
}

/// Children by generator removal: drop a minimal generator above the
/// Frobenius element whenever the removal keeps the P condition. Shared
/// by the genus tree and the multiplicity tree (which additionally
/// protects the multiplicity itself).
inline std::vector<EnumNode> removal_children(const EnumNode& node,
                                              const PSet& P, RemovalMode mode,
                                              const Point* keep) {
  const CSemigroup& T = node.semigroup;
  std::vector<EnumNode> out;
  for (const Point& a : T.minimal_generators()) {
    if (keep && a == *keep) continue;
    if (!strictly_above(T.order(), a, T.frobenius())) continue;
    if (!removal_keeps_p(T, a, P, mode)) continue;
    out.push_back(EnumNode{T.remove_element(a), a, node.depth + 1, {}});
  }
  return out;
}

}  // namespace detail

/// All P-semigroups of genus up to g over the cone, as the rooted tree
/// whose root is the cone itself and whose edges remove one minimal
/// generator above the Frobenius element. Level i holds exactly the
/// P-semigroups of genus i (in Compat mode, the published pruning rule's
/// subfamily).
inline EnumTree genus_tree(ConePtr cone, const MonomialOrder& order,
                           const PSet& P, int g,
                           RemovalMode mode = RemovalMode::Strict,
                           int workers = 1) {
  if (g < 0) throw InvalidArgument("genus_tree: genus must be non-negative");
  EnumTree tree{EnumNode{CSemigroup::whole_cone(std::move(cone), order),
                         std::nullopt, 0, {}},
                {1},
                true};
  tree.p_meets_cone = P.meets_cone(tree.root.semigroup.cone());
  detail::expand_tree(
      tree.root, g,
      [&](const EnumNode& node) {
        return detail::removal_children(node, P, mode, nullptr);
      },
      workers, tree.level_sizes);
  return tree;
}

/// The complete finite family of P-semigroups with Frobenius element f.
/// The root is the ordinary semigroup of f (everything strictly above f,
/// plus zero); each edge adjoins one special gap below the multiplicity
/// that re-enters the semigroup along P. Termination is guaranteed
/// because every child strictly lowers the multiplicity.
inline EnumTree frobenius_tree(ConePtr cone, const MonomialOrder& order,
                               const PSet& P, const Point& f,
                               int workers = 1) {
  if (f.is_zero() || !cone->contains(f)) {
    throw DomainError("frobenius_tree: " + f.str() +
                      " is not a non-zero cone element");
  }
  std::vector<Point> gaps = cone->elements_upto(order, f, false);
  CSemigroup root = CSemigroup::from_gaps(std::move(cone), order,
                                          std::move(gaps));
  EnumTree tree{EnumNode{std::move(root), std::nullopt, 0, {}}, {1}, true};
  tree.p_meets_cone = P.meets_cone(tree.root.semigroup.cone());
  detail::expand_tree(
      tree.root, std::nullopt,
      [&](const EnumNode& node) {
        const CSemigroup& T = node.semigroup;
        std::vector<EnumNode> out;
        for (const Point& x : T.special_gaps()) {
          if (!valid_child_extension(T, x, P)) continue;
          out.push_back(EnumNode{T.add_element(x), x, node.depth + 1, {}});
        }
        return out;
      },
      workers, tree.level_sizes);
  return tree;
}

/// Whether the family of P-semigroups with multiplicity m is finite.
///
/// Dimension 1 has an exact criterion: finite iff gcd(m, p) = 1 for every
/// p ∈ P. In dimension 2 the family is certainly infinite when some
/// in-cone direction p has <m, p> smaller than the whole cone; the
/// remaining d = 2 cases are reported unknown rather than guessed. Cones
/// with three or more extreme rays never admit a two-generated
/// C-semigroup, so those families are infinite.
inline FinitenessVerdict finiteness(const Cone& cone,
                                    const MonomialOrder& order,
                                    const PSet& P, const Point& m) {
  (void)order;
  if (m.is_zero() || !cone.contains(m)) {
    throw DomainError("finiteness: " + m.str() +
                      " is not a non-zero cone element");
  }
  if (P.dim() != cone.dim()) {
    throw InvalidArgument("P: dimension differs from the cone");
  }
  using Kind = FinitenessVerdict::Kind;
  if (cone.dim() == 1) {
    for (const Point& p : P.directions()) {
      const Coord g = std::gcd(m[0], p[0]);
      if (g != 1) {
        return {Kind::Infinite, "gcd(m, p) = " + std::to_string(g) +
                                    " for p = " + p.str() +
                                    "; <m, p> is not a numerical semigroup"};
      }
    }
    return {Kind::Finite, "gcd(m, p) = 1 for every p in P"};
  }
  if (cone.dim() == 2) {
    // <m, p> = {i m + j p : i, j >= 0}; it equals C iff it contains every
    // Hilbert basis element, each decided by a bounded two-variable search.
    auto generated_by_two = [&](const Point& p, const Point& h) {
      for (Coord i = 0; i * m[0] <= h[0] && i * m[1] <= h[1]; ++i) {
        Point r = *subtract(h, Point{i * m[0], i * m[1]});
        if (r.is_zero()) return true;
        const int k = p[0] > 0 ? 0 : 1;
        if (r[k] % p[k] == 0) {
          const Coord j = r[k] / p[k];
          if (Point{j * p[0], j * p[1]} == r) return true;
        }
      }
      return false;
    };
    bool any_in_cone = false;
    for (const Point& p : P.directions()) {
      if (!cone.contains(p)) continue;
      any_in_cone = true;
      for (const Point& h : cone.hilbert_basis()) {
        if (!generated_by_two(p, h)) {
          return {Kind::Infinite,
                  "<m, p> omits the Hilbert basis element " + h.str() +
                      " for p = " + p.str() + ", so <m, p> is not the cone"};
        }
      }
    }
    if (!any_in_cone) {
      return {Kind::Unknown, "no direction of P lies in the cone"};
    }
    return {Kind::Unknown,
            "<m, p> equals the cone for every in-cone p; finiteness is not "
            "decided in dimension 2"};
  }
  return {Kind::Infinite,
          "the cone has " + std::to_string(cone.dim()) +
              " >= 3 extreme rays; no two elements generate a C-semigroup"};
}

/// All P-semigroups with multiplicity m, up to an optional genus bound.
/// The root keeps everything from m upwards; edges remove one minimal
/// generator other than m above the Frobenius element. Without a genus
/// bound the family must be certainly finite, otherwise the call is
/// rejected rather than allowed to run forever.
inline EnumTree multiplicity_tree(ConePtr cone, const MonomialOrder& order,
                                  const PSet& P, const Point& m,
                                  std::optional<int> genus_bound,
                                  RemovalMode mode = RemovalMode::Strict,
                                  int workers = 1) {
  if (m.is_zero() || !cone->contains(m)) {
    throw DomainError("multiplicity_tree: " + m.str() +
                      " is not a non-zero cone element");
  }
  if (!genus_bound) {
    FinitenessVerdict verdict = finiteness(*cone, order, P, m);
    if (verdict.kind != FinitenessVerdict::Kind::Finite) {
      throw DomainError(
          "multiplicity_tree: a genus bound is required, the family is not "
          "known finite (" +
          verdict.reason + ")");
    }
  }
  std::vector<Point> gaps;
  for (Point& x : cone->elements_upto(order, m, false)) {
    if (x == m) continue;
    gaps.push_back(std::move(x));
  }
  CSemigroup root =
      CSemigroup::from_gaps(std::move(cone), order, std::move(gaps));
  EnumTree tree{EnumNode{std::move(root), std::nullopt, 0, {}}, {1}, true};
  tree.p_meets_cone = P.meets_cone(tree.root.semigroup.cone());
  std::optional<int> levels;
  if (genus_bound) {
    levels = std::max(0, *genus_bound - tree.root.semigroup.genus());
  }
  detail::expand_tree(
      tree.root, levels,
      [&](const EnumNode& node) {
        return detail::removal_children(node, P, mode, &m);
      },
      workers, tree.level_sizes);
  return tree;
}

/// The classical removal tree over ALL C-semigroups of genus up to g: the
/// genus tree without the P-pruning. This is the independent brute-force
/// oracle the P-enumerations are checked against; keep g at desk scale.
inline EnumTree oracle_tree(ConePtr cone, const MonomialOrder& order, int g,
                            int workers = 1) {
  if (g < 0) throw InvalidArgument("oracle_tree: genus must be non-negative");
  EnumTree tree{EnumNode{CSemigroup::whole_cone(std::move(cone), order),
                         std::nullopt, 0, {}},
                {1},
                true};
  detail::expand_tree(
      tree.root, g,
      [](const EnumNode& node) {
        const CSemigroup& T = node.semigroup;
        std::vector<EnumNode> out;
        for (const Point& a : T.minimal_generators()) {
          if (!strictly_above(T.order(), a, T.frobenius())) continue;
          out.push_back(EnumNode{T.remove_element(a), a, node.depth + 1, {}});
        }
        return out;
      },
      workers, tree.level_sizes);
  return tree;
}

/// Nodes in breadth-first order (the canonical record order of exports).
inline std::vector<const EnumNode*> bfs_nodes(const EnumTree& tree) {
  std::vector<const EnumNode*> out = {&tree.root};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const EnumNode& child : out[i]->children) out.push_back(&child);
  }
  return out;
}

/// Nodes grouped by level, root level first.
inline std::vector<std::vector<const EnumNode*>> tree_levels(
    const EnumTree& tree) {
  std::vector<std::vector<const EnumNode*>> out;
  for (const EnumNode* node : bfs_nodes(tree)) {
    if (static_cast<std::size_t>(node->depth) >= out.size()) {
      out.resize(static_cast<std::size_t>(node->depth) + 1);
    }
    out[static_cast<std::size_t>(node->depth)].push_back(node);
  }
  return out;
}

inline std::vector<CSemigroup> collect_semigroups(const EnumTree& tree) {
  std::vector<CSemigroup> out;
  for (const EnumNode* node : bfs_nodes(tree)) out.push_back(node->semigroup);
  return out;
}

}  // namespace psemi

#endif
