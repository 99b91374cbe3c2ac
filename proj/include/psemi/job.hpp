#ifndef PSEMI_JOB_HPP
#define PSEMI_JOB_HPP

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "psemi/automaton.hpp"
#include "psemi/csemigroup.hpp"
#include "psemi/enumeration.hpp"
#include "psemi/errors.hpp"
#include "psemi/pcheck.hpp"
#include "psemi/serialize.hpp"

namespace psemi {

/// A batch job: one command plus everything it needs, parsed from a JSON
/// config. Construction of the cone, order and P happens here so that any
/// problem with them surfaces as a ConfigError.
struct JobConfig {
  ConePtr cone;
  MonomialOrder order = MonomialOrder::grlex(1);
  std::optional<PSet> p_set;
  std::string command;
  std::optional<std::vector<Point>> gaps;
  std::optional<int> g;
  std::optional<Point> f;
  std::optional<Point> m;
  std::optional<int> genus_bound;
  RemovalMode removal_mode = RemovalMode::Strict;
  // gap sets are closure-validated unless a config opts out for reference
  // data that is consumed as published
  bool validate_gaps = true;
  std::optional<std::string> out_jsonl;
  std::optional<std::string> out_dot;
  std::optional<std::string> out_csv;
};

namespace detail {

inline Point parse_config_point(const nlohmann::json& j, int dim,
                                const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw ConfigError(what + ": expected an array of " + std::to_string(dim) +
                      " non-negative integers");
  }
  std::vector<Coord> coords;
  for (const auto& c : j) {
    if (!c.is_number_integer() || c.get<Coord>() < 0) {
      throw ConfigError(what + ": coordinates must be non-negative integers");
    }
    coords.push_back(c.get<Coord>());
  }
  return Point(std::move(coords));
}

inline std::vector<Point> parse_config_points(const nlohmann::json& j, int dim,
                                              const std::string& what) {
  if (!j.is_array()) throw ConfigError(what + ": expected an array of points");
  std::vector<Point> out;
  for (const auto& e : j) out.push_back(parse_config_point(e, dim, what));
  return out;
}

inline int parse_config_int(const nlohmann::json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<int>() < 0) {
    throw ConfigError(what + ": expected a non-negative integer");
  }
  return j.get<int>();
}

}  // namespace detail

inline JobConfig parse_job_config(const nlohmann::json& root) {
  if (!root.is_object()) throw ConfigError("config: expected a JSON object");
  static const std::vector<std::string> known = {
      "cone_rays",    "order",         "p_set",  "command",
      "gaps",         "g",             "f",      "m",
      "genus_bound",  "removal_mode",  "validate_gaps", "output"};
  for (const auto& [key, value] : root.items()) {
    (void)value;
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigError("config: unknown key \"" + key + "\"");
    }
  }

  JobConfig cfg;
  try {
    if (!root.contains("cone_rays")) {
      throw ConfigError("config: \"cone_rays\" is required");
    }
    const auto& rays = root.at("cone_rays");
    if (!rays.is_array() || rays.empty() || !rays.front().is_array() ||
        rays.front().empty()) {
      throw ConfigError("cone_rays: expected a non-empty array of points");
    }
    const int dim = static_cast<int>(rays.front().size());
    cfg.cone = make_cone(
        dim, detail::parse_config_points(rays, dim, "cone_rays"));

    if (root.contains("order")) {
      const auto& oj = root.at("order");
      if (!oj.is_object() || !oj.contains("kind")) {
        throw ConfigError("order: expected {\"kind\":...,\"priority\":[...]}");
      }
      if (oj.at("kind").get<std::string>() != "grlex") {
        throw ConfigError(
            "order: only the graded kind \"grlex\" is supported; non-graded "
            "orders have infinite down-sets");
      }
      if (oj.contains("priority")) {
        std::vector<int> priority;
        for (const auto& e : oj.at("priority")) {
          if (!e.is_number_integer()) {
            throw ConfigError("order: priority must be a list of integers");
          }
          priority.push_back(e.get<int>());
        }
        if (static_cast<int>(priority.size()) != dim) {
          throw ConfigError("order: priority length differs from dimension");
        }
        cfg.order = MonomialOrder::grlex(std::move(priority));
      } else {
        cfg.order = MonomialOrder::grlex(dim);
      }
      for (const auto& [key, value] : oj.items()) {
        (void)value;
        if (key != "kind" && key != "priority") {
          throw ConfigError("order: unknown key \"" + key + "\"");
        }
      }
    } else {
      cfg.order = MonomialOrder::grlex(dim);
    }

    if (root.contains("p_set")) {
      cfg.p_set.emplace(
          detail::parse_config_points(root.at("p_set"), dim, "p_set"));
    }
    if (!root.contains("command") || !root.at("command").is_string()) {
      throw ConfigError("config: \"command\" is required");
    }
    cfg.command = root.at("command").get<std::string>();
    static const std::vector<std::string> commands = {
        "check", "automaton", "genus", "frobenius", "multiplicity",
        "finiteness", "oracle"};
    if (std::find(commands.begin(), commands.end(), cfg.command) ==
        commands.end()) {
      throw ConfigError("config: unknown command \"" + cfg.command + "\"");
    }

    if (root.contains("gaps")) {
      cfg.gaps = detail::parse_config_points(root.at("gaps"), dim, "gaps");
    }
    if (root.contains("g")) cfg.g = detail::parse_config_int(root.at("g"), "g");
    if (root.contains("f")) {
      cfg.f = detail::parse_config_point(root.at("f"), dim, "f");
    }
    if (root.contains("m")) {
      cfg.m = detail::parse_config_point(root.at("m"), dim, "m");
    }
    if (root.contains("genus_bound")) {
      cfg.genus_bound =
          detail::parse_config_int(root.at("genus_bound"), "genus_bound");
    }
    if (root.contains("validate_gaps")) {
      if (!root.at("validate_gaps").is_boolean()) {
        throw ConfigError("validate_gaps: expected a boolean");
      }
      cfg.validate_gaps = root.at("validate_gaps").get<bool>();
    }
    if (root.contains("removal_mode")) {
      const std::string mode = root.at("removal_mode").get<std::string>();
      if (mode == "strict") {
        cfg.removal_mode = RemovalMode::Strict;
      } else if (mode == "compat") {
        cfg.removal_mode = RemovalMode::Compat;
      } else {
        throw ConfigError("removal_mode: expected \"strict\" or \"compat\"");
      }
    }
    if (root.contains("output")) {
      const auto& out = root.at("output");
      if (!out.is_object()) throw ConfigError("output: expected an object");
      for (const auto& [key, value] : out.items()) {
        if (!value.is_string()) {
          throw ConfigError("output." + key + ": expected a path string");
        }
        if (key == "jsonl") {
          cfg.out_jsonl = value.get<std::string>();
        } else if (key == "dot") {
          cfg.out_dot = value.get<std::string>();
        } else if (key == "csv") {
          cfg.out_csv = value.get<std::string>();
        } else {
          throw ConfigError("output: unknown key \"" + key + "\"");
        }
      }
    }

    auto require = [&](bool present, const std::string& key) {
      if (!present) {
        throw ConfigError("config: command \"" + cfg.command +
                          "\" requires \"" + key + "\"");
      }
    };
    if (cfg.command != "oracle") require(cfg.p_set.has_value(), "p_set");
    if (cfg.command == "check" || cfg.command == "automaton") {
      require(cfg.gaps.has_value(), "gaps");
    }
    if (cfg.command == "genus" || cfg.command == "oracle") {
      require(cfg.g.has_value(), "g");
    }
    if (cfg.command == "frobenius") require(cfg.f.has_value(), "f");
    if (cfg.command == "multiplicity" || cfg.command == "finiteness") {
      require(cfg.m.has_value(), "m");
    }
    if (cfg.p_set && cfg.p_set->dim() != dim) {
      throw ConfigError("p_set: dimension differs from the cone");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidArgument& e) {
    // construction problems of cone/order/P are configuration problems
    throw ConfigError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

namespace detail {

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open output file " + path);
  out << content;
}

inline void emit_tree(const JobConfig& cfg, const EnumTree& tree,
                      const std::string& root_label, std::ostream& out,
                      std::ostream& err) {
  if (!tree.p_meets_cone) {
    err << "warning: no direction of P lies in the cone; the enumerated "
           "family may be incomplete\n";
  }
  if (cfg.out_jsonl) write_file(*cfg.out_jsonl, tree_jsonl(tree));
  if (cfg.out_dot) write_file(*cfg.out_dot, tree_dot(tree, root_label));
  out << level_summary(tree) << '\n';
}

}  // namespace detail

/// Runs a parsed job, writing the command's summary to `out` and warnings
/// to `err`. Artifacts are byte-identical across runs and worker counts.
inline void run_job(const JobConfig& cfg, std::ostream& out, std::ostream& err,
                    int workers = 1) {
  auto build_semigroup = [&] {
    return cfg.validate_gaps
               ? CSemigroup::from_gaps(cfg.cone, cfg.order, *cfg.gaps)
               : CSemigroup::from_gaps_unchecked(cfg.cone, cfg.order,
                                                 *cfg.gaps);
  };
  if (cfg.command == "check") {
    CSemigroup s = build_semigroup();
    ojson rec;
    rec["is_p_semigroup"] = is_p_semigroup(s, *cfg.p_set);
    rec["frobenius"] =
        s.frobenius() ? point_json(*s.frobenius()) : ojson(nullptr);
    rec["multiplicity"] = point_json(s.multiplicity());
    rec["genus"] = s.genus();
    rec["msg"] = point_list_json(s.minimal_generators());
    out << rec.dump() << '\n';
  } else if (cfg.command == "automaton") {
    CSemigroup s = build_semigroup();
    Automaton m = Automaton::build(s, *cfg.p_set);
    if (cfg.out_csv) detail::write_file(*cfg.out_csv, m.to_csv());
    if (cfg.out_dot) detail::write_file(*cfg.out_dot, m.to_dot());
    ojson rec;
    rec["connected"] = m.is_connected();
    rec["extendable"] = m.all_recognized_extendable();
    out << rec.dump() << '\n';
  } else if (cfg.command == "genus") {
    EnumTree tree = genus_tree(cfg.cone, cfg.order, *cfg.p_set, *cfg.g,
                               cfg.removal_mode, workers);
    detail::emit_tree(cfg, tree, "C", out, err);
  } else if (cfg.command == "frobenius") {
    EnumTree tree =
        frobenius_tree(cfg.cone, cfg.order, *cfg.p_set, *cfg.f, workers);
    detail::emit_tree(cfg, tree, "Delta" + cfg.f->str(), out, err);
  } else if (cfg.command == "multiplicity") {
    EnumTree tree =
        multiplicity_tree(cfg.cone, cfg.order, *cfg.p_set, *cfg.m,
                          cfg.genus_bound, cfg.removal_mode, workers);
    detail::emit_tree(cfg, tree, "S" + cfg.m->str(), out, err);
  } else if (cfg.command == "finiteness") {
    FinitenessVerdict v = finiteness(*cfg.cone, cfg.order, *cfg.p_set, *cfg.m);
    ojson rec;
    switch (v.kind) {
      case FinitenessVerdict::Kind::Finite:
        rec["verdict"] = "FINITE";
        break;
      case FinitenessVerdict::Kind::Infinite:
        rec["verdict"] = "INFINITE";
        break;
      case FinitenessVerdict::Kind::Unknown:
        rec["verdict"] = "UNKNOWN";
        break;
    }
    rec["reason"] = v.reason;
    out << rec.dump() << '\n';
  } else if (cfg.command == "oracle") {
    EnumTree tree = oracle_tree(cfg.cone, cfg.order, *cfg.g, workers);
    detail::emit_tree(cfg, tree, "C", out, err);
  } else {
    throw ConfigError("config: unknown command \"" + cfg.command + "\"");
  }
}

}  // namespace psemi

#endif
