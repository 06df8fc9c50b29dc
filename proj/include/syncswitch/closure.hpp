#pragma once

// Power closure and the two "length into switch count" transforms.

#include <cstddef>
#include <string>
#include <vector>

#include "syncswitch/automaton.hpp"

namespace syncswitch {

// Closure symbol i acts as base^exponent in the original automaton.
struct ClosureSymbol {
  Symbol base;
  std::size_t exponent;

  friend bool operator==(const ClosureSymbol&, const ClosureSymbol&) = default;
};

struct ClosureMap {
  std::vector<ClosureSymbol> provenance;
};

struct PowerClosure {
  Dfa automaton;
  ClosureMap map;
};

// Adds every distinct non-identity functional power a^e (e > 1) of every
// symbol that is not already a column. Original symbols are kept unchanged and
// first; new powers follow grouped by base symbol in increasing exponent.
PowerClosure power_closure(const Dfa& a);

// True if every power of every symbol is the identity or an existing column.
bool is_power_closed(const Dfa& a);

// DFA text followed by one "# s<i> = <base>^<e>" comment per added symbol.
std::string serialize_closure(const PowerClosure& closure);

// 2n states (q' = q + n) and a fresh symbol c = k: q stays put under old
// symbols, c moves q to q', and q' behaves like q under old symbols.
Dfa f_transform(const Dfa& a);

// Binary variant of f_transform: 3n states (q' = q + n, q'' = q + 2n), with the
// fresh symbol replaced by the word "ab" routed through q''.
// Throws AlphabetMismatch unless the alphabet is binary.
Dfa f2_transform(const Dfa& a);

}  // namespace syncswitch
