#ifndef PSEMI_AUTOMATON_HPP
#define PSEMI_AUTOMATON_HPP

#include <algorithm>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "psemi/csemigroup.hpp"
#include "psemi/errors.hpp"
#include "psemi/pcheck.hpp"

namespace psemi {

class UnknownSymbolError : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

/// One alphabet symbol with its provenance. The alphabet is the union
/// P ∪ G ∪ Q_P, which need not be disjoint, so symbols are deduplicated by
/// value and carry flags. Transition semantics depend only on the value
/// and the source state, never on the provenance.
struct AutomatonSymbol {
  Point value;
  bool in_p = false;  // a direction of P
  bool in_g = false;  // a minimal generator among the small elements
  bool in_q = false;  // a small element with no P-predecessor in S
};

/// The DFA associated to a C-semigroup S and a direction set P.
///
/// States are the small elements of S (the zero element is the initial
/// state), one merged state kappa for everything in C strictly above the
/// Frobenius element, and a dead state chi. A word walks from a starting
/// element along directions of P; it is accepted while the walk stays
/// inside S. Every state except the initial one and chi is accepting.
class Automaton {
public:
  static Automaton build(const CSemigroup& S, const PSet& P) {
    if (P.dim() != S.cone().dim()) {
      throw InvalidArgument("P: dimension differs from the semigroup");
    }
    Automaton m;
    m.zero_ = Point::zero(S.cone().dim());

    const auto& small = S.small_elements();
    // small_elements always lists 0 first
    m.small_states_.assign(small.begin() + 1, small.end());

    const auto& order = S.order();
    std::vector<AutomatonSymbol> symbols;
    auto add_symbol = [&](const Point& value, bool p, bool g, bool q) {
      for (auto& sym : symbols) {
        if (sym.value == value) {
          sym.in_p |= p;
          sym.in_g |= g;
          sym.in_q |= q;
          return;
        }
      }
      symbols.push_back(AutomatonSymbol{value, p, g, q});
    };
    for (const Point& p : P.directions()) add_symbol(p, true, false, false);
    for (const Point& a : S.minimal_generators()) {
      if (sorted_contains(m.small_states_, a, order)) {
        add_symbol(a, false, true, false);
      }
    }
    for (const Point& s : m.small_states_) {
      bool has_predecessor = false;
      for (const Point& p : P.directions()) {
        auto back = subtract(s, p);
        if (back && S.contains(*back)) {
          has_predecessor = true;
          break;
        }
      }
      if (!has_predecessor) add_symbol(s, false, false, true);
    }
    std::sort(symbols.begin(), symbols.end(),
              [&](const AutomatonSymbol& a, const AutomatonSymbol& b) {
                return order.less(a.value, b.value);
              });
    m.alphabet_ = std::move(symbols);

    const int n = static_cast<int>(m.small_states_.size());
    m.kappa_ = n + 1;
    m.chi_ = n + 2;
    m.table_.assign(static_cast<size_t>(m.chi_) + 1,
                    std::vector<int>(m.alphabet_.size(), m.chi_));

    auto small_index = [&](const Point& x) -> int {
      auto it = std::lower_bound(m.small_states_.begin(),
                                 m.small_states_.end(), x, order.cmp());
      if (it != m.small_states_.end() && *it == x) {
        return 1 + static_cast<int>(it - m.small_states_.begin());
      }
      return -1;
    };

    for (size_t j = 0; j < m.alphabet_.size(); ++j) {
      const AutomatonSymbol& sym = m.alphabet_[j];
      // initial state: enter a small element directly, jump over the
      // Frobenius element to kappa, or die
      if (int idx = small_index(sym.value); idx >= 0) {
        m.table_[0][j] = idx;
      } else if (S.contains(sym.value)) {
        m.table_[0][j] = m.kappa_;
      }
      // small states move along P only
      for (int q = 1; q <= n; ++q) {
        if (!sym.in_p) continue;
        Point target = m.small_states_[static_cast<size_t>(q - 1)] + sym.value;
        if (int idx = small_index(target); idx >= 0) {
          m.table_[static_cast<size_t>(q)][j] = idx;
        } else if (S.contains(target)) {
          m.table_[static_cast<size_t>(q)][j] = m.kappa_;
        }
      }
      // everything above the Frobenius element stays above it under P
      if (sym.in_p) m.table_[static_cast<size_t>(m.kappa_)][j] = m.kappa_;
      // chi rows stay chi (initialized so)
    }
    return m;
  }

  int num_states() const { return chi_ + 1; }
  int initial_state() const { return 0; }
  int kappa_state() const { return kappa_; }
  int chi_state() const { return chi_; }

  /// Non-zero small-element states, ≺-sorted; state i+1 is small_states()[i].
  const std::vector<Point>& small_states() const { return small_states_; }

  const std::vector<AutomatonSymbol>& alphabet() const { return alphabet_; }

  int transition(int state, int symbol) const {
    return table_[static_cast<size_t>(state)][static_cast<size_t>(symbol)];
  }

  bool accepting(int state) const { return state != 0 && state != chi_; }

  std::string state_name(int state) const {
    if (state == 0) return zero_.str();
    if (state == kappa_) return "kappa";
    if (state == chi_) return "chi";
    return small_states_[static_cast<size_t>(state - 1)].str();
  }

  /// Index of a symbol by value, or -1.
  int symbol_index(const Point& value) const {
    for (size_t j = 0; j < alphabet_.size(); ++j) {
      if (alphabet_[j].value == value) return static_cast<int>(j);
    }
    return -1;
  }

  struct RunResult {
    int final_state;
    bool accepted;
  };

  /// Runs the extended transition function on a word of lattice points.
  /// The empty word ends in the initial state, which is never accepting.
  RunResult run(std::span<const Point> word) const {
    int state = 0;
    for (const Point& letter : word) {
      int j = symbol_index(letter);
      if (j < 0) {
        throw UnknownSymbolError("automaton: " + letter.str() +
                                 " is not an alphabet symbol");
      }
      state = transition(state, j);
    }
    return RunResult{state, accepting(state)};
  }

  /// States reachable from the initial state, as a boolean mask.
  std::vector<bool> reachable_states() const {
    std::vector<bool> seen(static_cast<size_t>(num_states()), false);
    std::vector<int> queue = {0};
    seen[0] = true;
    while (!queue.empty()) {
      int q = queue.back();
      queue.pop_back();
      for (size_t j = 0; j < alphabet_.size(); ++j) {
        int t = transition(q, static_cast<int>(j));
        if (!seen[static_cast<size_t>(t)]) {
          seen[static_cast<size_t>(t)] = true;
          queue.push_back(t);
        }
      }
    }
    return seen;
  }

  bool is_connected() const {
    auto seen = reachable_states();
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  /// The language-extendability criterion: every recognized word can be
  /// extended by one letter to a recognized word iff every reachable
  /// accepting state has an outgoing transition into an accepting state.
  /// Recognized words are exactly the paths from the initial state into a
  /// reachable accepting state, and a one-letter extension is all the
  /// criterion asks for, so this finite check is equivalent.
  bool all_recognized_extendable() const {
    auto reachable = reachable_states();
    for (int q = 0; q < num_states(); ++q) {
      if (!reachable[static_cast<size_t>(q)] || !accepting(q)) continue;
      bool has_accepting_successor = false;
      for (size_t j = 0; j < alphabet_.size(); ++j) {
        if (accepting(transition(q, static_cast<int>(j)))) {
          has_accepting_successor = true;
          break;
        }
      }
      if (!has_accepting_successor) return false;
    }
    return true;
  }

  /// State table as CSV: header row of alphabet symbols, one row per state
  /// in the order initial, small elements ascending, kappa, chi.
  std::string to_csv() const {
    std::ostringstream os;
    os << "state";
    for (const auto& sym : alphabet_) os << ',' << sym.value.str();
    os << '\n';
    for (int q = 0; q < num_states(); ++q) {
      os << state_name(q);
      for (size_t j = 0; j < alphabet_.size(); ++j) {
        os << ',' << state_name(transition(q, static_cast<int>(j)));
      }
      os << '\n';
    }
    return os.str();
  }

  /// Transition diagram in DOT. Accepting states are double circles;
  /// parallel edges are merged into one labelled edge. The dead state can
  /// be omitted to keep diagrams readable.
  std::string to_dot(bool omit_chi = false) const {
    std::ostringstream os;
    os << "digraph automaton {\n  rankdir=LR;\n";
    os << "  __start [shape=point, label=\"\"];\n";
    for (int q = 0; q < num_states(); ++q) {
      if (omit_chi && q == chi_) continue;
      os << "  \"" << state_name(q) << "\" [shape="
         << (accepting(q) ? "doublecircle" : "circle") << "];\n";
    }
    os << "  __start -> \"" << state_name(0) << "\";\n";
    for (int q = 0; q < num_states(); ++q) {
      if (omit_chi && q == chi_) continue;
      std::map<int, std::vector<std::string>> by_target;
      for (size_t j = 0; j < alphabet_.size(); ++j) {
        int t = transition(q, static_cast<int>(j));
        if (omit_chi && t == chi_) continue;
        by_target[t].push_back(alphabet_[j].value.str());
      }
      for (const auto& [target, labels] : by_target) {
        os << "  \"" << state_name(q) << "\" -> \"" << state_name(target)
           << "\" [label=\"";
        for (size_t i = 0; i < labels.size(); ++i) {
          if (i > 0) os << ' ';
          os << labels[i];
        }
        os << "\"];\n";
      }
    }
    os << "}\n";
    return os.str();
  }

private:
  Point zero_;
  std::vector<Point> small_states_;
  std::vector<AutomatonSymbol> alphabet_;
  std::vector<std::vector<int>> table_;
  int kappa_ = 0;
  int chi_ = 0;
};

}  // namespace psemi

#endif
