#pragma once

// Searches over the power automaton: synchronization test, shortest reset
// words, minimal switch count, the lexicographic (switch, length) optimum, and
// counting of optimal words.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "syncswitch/automaton.hpp"

namespace syncswitch {

enum class Objective {
  Length,            // shortest synchronizing word
  Switch,            // minimal switch count (some witness, no length guarantee)
  SwitchThenLength,  // minimal switch count, then minimal length
};

struct SyncResult {
  Word word;
  std::size_t length = 0;
  std::size_t switches = 0;
  std::optional<std::uint64_t> witness_count;
};

// Node of the switch-count search graph. Applying symbol s to (V, t) leads to
// (Vs, s) at cost 0 when s == t and cost 1 otherwise; (Q, none) is the source.
struct SearchNode {
  StateSet set;
  std::optional<Symbol> last;

  friend bool operator==(const SearchNode&, const SearchNode&) = default;
};

SearchNode source_node(const Dfa& a);
// Successor node and the switch cost of the edge.
std::pair<SearchNode, std::size_t> step(const Dfa& a, const SearchNode& node, Symbol s);

// Pair criterion: every pair of states can be merged by some word.
bool is_synchronizing(const Dfa& a);

// Breadth-first distance from Q to a singleton. Throws NotSynchronizing.
std::size_t shortest_sync_length(const Dfa& a);

// 0/1-weighted distance from (Q, none) to any singleton node. Throws NotSynchronizing.
std::size_t min_switch_count(const Dfa& a);

// Optimal word under the objective. Length and SwitchThenLength return the
// lexicographically smallest optimal word and fill witness_count; Switch returns
// the word recorded by the 0/1 search back-pointers.
SyncResult optimal_sync_word(const Dfa& a, Objective objective);

// Number of distinct optimal words. Not defined for Objective::Switch, whose
// optimal words are unbounded in number (std::invalid_argument).
// Throws CountOverflow rather than wrapping.
std::uint64_t count_optimal_words(const Dfa& a, Objective objective);

namespace kernel {

// Borrowed view of a transition table, used by the exhaustive-search hot loop
// where building a Dfa per candidate would dominate the cost.
struct TableView {
  std::size_t n;
  std::size_t k;
  const State* delta;

  State next(State q, Symbol s) const { return delta[q * k + s]; }
};

inline TableView view(const Dfa& a) { return {a.states(), a.symbols(), a.table().data()}; }

bool has_non_injective_symbol(TableView t);
bool pairs_mergeable(TableView t);

// Scratch buffers for repeated small-automaton switch searches (n <= 16).
class SwitchScratch {
 public:
  // nullopt when the automaton is not synchronizing.
  std::optional<std::size_t> min_switch(TableView t);

 private:
  std::vector<std::uint64_t> images_;
  std::vector<std::uint16_t> dist_;
  std::vector<std::uint32_t> deque_;
};

}  // namespace kernel

}  // namespace syncswitch
