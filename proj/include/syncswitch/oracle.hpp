#pragma once

// Brute-force reference answers by plain word enumeration. Exponential, meant
// for cross-checking the search engines on tiny automata.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "syncswitch/automaton.hpp"

namespace syncswitch::oracle {

// Shortest synchronizing word length among all words of length <= max_length.
std::optional<std::size_t> shortest_length(const Dfa& a, std::size_t max_length);

// Fewest runs among words whose runs are distinct powers of alternating
// symbols, up to max_switches runs.
std::optional<std::size_t> min_switches(const Dfa& a, std::size_t max_switches);

// Synchronizing words of exactly this length.
std::uint64_t count_sync_words(const Dfa& a, std::size_t length);

// Shortest synchronizing word with at most this switch count, over words of
// length <= max_length.
std::optional<std::size_t> shortest_length_within(const Dfa& a, std::size_t switches, std::size_t max_length);

}  // namespace syncswitch::oracle
