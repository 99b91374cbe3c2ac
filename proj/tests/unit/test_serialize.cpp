#include <doctest.h>

#include <sstream>
#include <string>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace psemi;
using namespace psemi::testing;

TEST_CASE("semigroup record layout") {
  CSemigroup s = numerical({1, 2, 4, 7});  // <3,5>
  ojson rec = semigroup_json(s);
  CHECK(rec.dump() ==
        R"({"gaps":[[1],[2],[4],[7]],"msg":[[3],[5]],"frobenius":[7],)"
        R"("multiplicity":[3],"genus":4})");

  ojson whole = semigroup_json(CSemigroup::whole_cone(narrow_cone(), grlex2()));
  CHECK(whole["frobenius"].is_null());
  CHECK(whole["genus"] == 0);
}

TEST_CASE("JSONL records round-trip through from_gaps") {
  EnumTree tree =
      frobenius_tree(narrow_cone(), grlex2(), narrow_pset(), Point{9, 2});
  std::istringstream lines(tree_jsonl(tree));
  std::string line;
  int count = 0;
  auto nodes = bfs_nodes(tree);
  while (std::getline(lines, line)) {
    auto rec = nlohmann::json::parse(line);
    std::vector<Point> gaps;
    for (const auto& g : rec.at("gaps")) {
      std::vector<Coord> coords;
      for (const auto& c : g) coords.push_back(c.get<Coord>());
      gaps.emplace_back(std::move(coords));
    }
    CSemigroup rebuilt = CSemigroup::from_gaps(narrow_cone(), grlex2(), gaps);
    CHECK(rebuilt == nodes[static_cast<size_t>(count)]->semigroup);
    CHECK(rec.at("genus").get<int>() == rebuilt.genus());
    CHECK(rec.at("id").get<int>() == count);
    if (count == 0) {
      CHECK(rec.at("parent").is_null());
      CHECK(rec.at("label").is_null());
    } else {
      CHECK(rec.at("parent").get<int>() < count);
    }
    ++count;
  }
  CHECK(count == 21);
}

TEST_CASE("tree DOT output") {
  EnumTree tree = genus_tree(narrow_cone(), grlex2(), narrow_pset(), 2,
                             RemovalMode::Compat);
  std::string dot = tree_dot(tree, "C");
  CHECK(dot.rfind("digraph tree", 0) == 0);
  CHECK(dot.find("label=\"C\"") != std::string::npos);
  CHECK(dot.find("label=\"(4,1)\"") != std::string::npos);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  // 9 nodes, 8 edges
  CHECK(bfs_nodes(tree).size() == 9);

  CHECK(level_summary(tree) == "levels: [1,2,6]");
}
