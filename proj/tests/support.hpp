#pragma once

// Small helpers shared by the unit tests. The reference computations here are
// deliberately naive so they can serve as oracles for the library engines.

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "syncswitch/automaton.hpp"

namespace testing {

using syncswitch::Dfa;
using syncswitch::State;
using syncswitch::Symbol;
using syncswitch::Word;

inline Dfa random_dfa(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
  std::vector<State> delta(n * k);
  for (State& t : delta) t = pick(rng);
  return Dfa(n, k, std::move(delta));
}

inline Word random_word(std::mt19937_64& rng, std::size_t k, std::size_t length) {
  std::uniform_int_distribution<Symbol> pick(0, static_cast<Symbol>(k - 1));
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(pick(rng));
  return w;
}

// Image of a set of states as a plain std::set, straight from the table.
inline std::set<State> image(const Dfa& a, const std::set<State>& v, Symbol s) {
  std::set<State> out;
  for (State q : v) out.insert(a.next(q, s));
  return out;
}

// Layered breadth-first search over subsets: the shortest synchronizing
// length, or nullopt.
inline std::optional<std::size_t> layered_ssl(const Dfa& a) {
  std::set<State> all;
  for (State q = 0; q < a.states(); ++q) all.insert(q);
  std::set<std::set<State>> seen = {all};
  std::vector<std::set<State>> layer = {all};
  for (std::size_t depth = 0; !layer.empty(); ++depth) {
    std::vector<std::set<State>> next;
    for (const auto& v : layer) {
      if (v.size() == 1) return depth;
      for (Symbol s = 0; s < a.symbols(); ++s) {
        auto w = image(a, v, s);
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

// The state relabeling q -> perm[q] applied to a table.
inline Dfa relabel(const Dfa& a, const std::vector<State>& perm) {
  std::vector<State> delta(a.states() * a.symbols());
  for (State q = 0; q < a.states(); ++q) {
    for (Symbol s = 0; s < a.symbols(); ++s) delta[perm[q] * a.symbols() + s] = perm[a.next(q, s)];
  }
  return Dfa(a.states(), a.symbols(), std::move(delta));
}

inline Dfa swap_symbols(const Dfa& a, Symbol x, Symbol y) {
  std::vector<State> delta(a.table().begin(), a.table().end());
  for (State q = 0; q < a.states(); ++q) std::swap(delta[q * a.symbols() + x], delta[q * a.symbols() + y]);
  return Dfa(a.states(), a.symbols(), std::move(delta));
}

}  // namespace testing
