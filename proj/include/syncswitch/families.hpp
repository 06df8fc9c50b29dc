#pragma once

// Generators for the named automaton families and the catalog of small
// extremal binary automata. Generators take the state count n of the drawings and
// produce 0-indexed tables (state i here is state i+1 in 1-indexed drawings).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syncswitch/automaton.hpp"

namespace syncswitch {

// a cycles all states, b moves state 0 to 1 and fixes the rest. n >= 2.
Dfa cerny(std::size_t n);
// n - 1 symbols: a1 merges state 2 into 1, ai swaps i and i+1. n >= 2.
Dfa p_family(std::size_t n);
// n symbols: a1 sends 1 to 2, a2 swaps 1 and 2, ai swaps i-1 and i. n >= 2.
Dfa p_variant(std::size_t n);
// n - 2 symbols, a 5-state core extended by a chain of swaps. n >= 5.
Dfa r_family(std::size_t n);
// Binary, n even and >= 4.
Dfa q_family(std::size_t n);
// Binary, n >= 3.
Dfa a_family(std::size_t n);
// Signed double cover of a_family used by the measure analysis; 2n states
// indexed through SignedState. n divisible by 6.
Dfa b_family(std::size_t n);
// 4 states, 3 symbols, symbol a is a 4-cycle.
Dfa cyclic_counterexample();

// Nonzero label in [-n, n] of a b_family state.
struct SignedState {
  int value;

  std::size_t index(std::size_t n) const;
  static SignedState from_index(std::size_t n, std::size_t index);
  SignedState operator-() const { return {-value}; }

  friend bool operator==(const SignedState&, const SignedState&) = default;
  friend auto operator<=>(const SignedState&, const SignedState&) = default;
};

// Index of the state with the opposite sign.
inline std::size_t negate_index(std::size_t n, std::size_t index) { return (index + n) % (2 * n); }

// Expected values carried by a catalog fixture, checked by the test suites.
struct FixtureInfo {
  std::string_view name;
  std::size_t states;
  std::size_t switch_count;
  std::optional<std::size_t> shortest_length;
  std::optional<std::uint64_t> shortest_count;
  // Every shortest synchronizing word, in display form (empty if not listed).
  std::vector<std::string_view> shortest_words;
  // The (switch, length)-optimal word, when it differs from the shortest one.
  std::optional<std::string_view> switch_then_length_word;
};

std::span<const FixtureInfo> fixture_catalog();
const FixtureInfo& fixture_info(std::string_view name);
Dfa fixture(std::string_view name);

// Family lookup by CLI name: cerny, p, p-variant, r, q, a, b.
Dfa generate(std::string_view family, std::size_t n);
std::span<const std::string_view> family_names();

}  // namespace syncswitch
