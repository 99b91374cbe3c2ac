#ifndef PSEMI_SERIALIZE_HPP
#define PSEMI_SERIALIZE_HPP

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "psemi/csemigroup.hpp"
#include "psemi/enumeration.hpp"

namespace psemi {

// ordered_json keeps insertion order, so records serialize with a stable
// key layout and output stays byte-identical across runs
using ojson = nlohmann::ordered_json;

inline ojson point_json(const Point& p) {
  ojson a = ojson::array();
  for (Coord c : p.coords()) a.push_back(c);
  return a;
}

inline ojson point_list_json(const std::vector<Point>& points) {
  ojson a = ojson::array();
  for (const Point& p : points) a.push_back(point_json(p));
  return a;
}

/// Invariant record of one semigroup: gaps, minimal generators, Frobenius
/// element (null when gapless), multiplicity and genus.
inline ojson semigroup_json(const CSemigroup& s) {
  ojson rec;
  rec["gaps"] = point_list_json(s.gaps());
  rec["msg"] = point_list_json(s.minimal_generators());
  rec["frobenius"] =
      s.frobenius() ? point_json(*s.frobenius()) : ojson(nullptr);
  rec["multiplicity"] = point_json(s.multiplicity());
  rec["genus"] = s.genus();
  return rec;
}

/// One JSON record per node in breadth-first order, each with its id, the
/// parent id and the edge label.
inline std::string tree_jsonl(const EnumTree& tree) {
  std::ostringstream os;
  std::vector<std::pair<const EnumNode*, int>> queue = {{&tree.root, -1}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [node, parent] = queue[i];
    ojson rec;
    rec["id"] = static_cast<int>(i);
    rec["parent"] = parent < 0 ? ojson(nullptr) : ojson(parent);
    rec["label"] = node->label ? point_json(*node->label) : ojson(nullptr);
    ojson invariants = semigroup_json(node->semigroup);
    for (auto& [key, value] : invariants.items()) {
      rec[key] = std::move(value);
    }
    os << rec.dump() << '\n';
    for (const EnumNode& child : node->children) {
      queue.emplace_back(&child, static_cast<int>(i));
    }
  }
  return os.str();
}

/// The tree in DOT, nodes labelled by their edge labels as in the usual
/// pictures of these enumerations.
inline std::string tree_dot(const EnumTree& tree,
                            const std::string& root_label) {
  std::ostringstream os;
  os << "digraph tree {\n  node [shape=box];\n";
  std::vector<std::pair<const EnumNode*, int>> queue = {{&tree.root, -1}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [node, parent] = queue[i];
    os << "  n" << i << " [label=\""
       << (node->label ? node->label->str() : root_label) << "\"];\n";
    if (parent >= 0) os << "  n" << parent << " -> n" << i << ";\n";
    for (const EnumNode& child : node->children) {
      queue.emplace_back(&child, static_cast<int>(i));
    }
  }
  os << "}\n";
  return os.str();
}

/// Compact "levels: [1,2,6,16]" summary used by the command line tool.
inline std::string level_summary(const EnumTree& tree) {
  std::ostringstream os;
  os << "levels: [";
  for (std::size_t i = 0; i < tree.level_sizes.size(); ++i) {
    if (i > 0) os << ',';
    os << tree.level_sizes[i];
  }
  os << ']';
  return os.str();
}

}  // namespace psemi

#endif
