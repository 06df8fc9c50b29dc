#pragma once

// Core DFA model: transition tables, words, state subsets, canonical forms and
// the plain-text table format shared by every tool in this project.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace syncswitch {

using State = std::uint32_t;
using Symbol = std::uint32_t;

// Hard upper bound of the StateSet bit vector.
inline constexpr std::size_t kStateSetBits = 64;

// Width cap applied to subset searches. Defaults to 32 and can be raised (up to
// kStateSetBits) through the SYNCSWITCH_MAX_STATES environment variable.
std::size_t max_states();

// Throws CapacityError if n states do not fit the configured cap.
void check_capacity(std::size_t n);

// Complete deterministic automaton over states 0..n-1 and symbols 0..k-1.
// The table is stored row-major: entry (q, s) lives at q * k + s.
class Dfa {
 public:
  Dfa(std::size_t n, std::size_t k, std::vector<State> delta);

  // Automaton in which every symbol acts as the identity.
  static Dfa identity(std::size_t n, std::size_t k);

  std::size_t states() const noexcept { return n_; }
  std::size_t symbols() const noexcept { return k_; }

  State next(State q, Symbol s) const { return delta_[q * k_ + s]; }
  std::span<const State> table() const noexcept { return delta_; }

  // The action of one symbol as a transformation of the state set.
  std::vector<State> column(Symbol s) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;
  friend auto operator<=>(const Dfa&, const Dfa&) = default;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<State> delta_;
};

// A finite word over symbol indices.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  void push_back(Symbol s) { symbols_.push_back(s); }
  Word& operator+=(const Word& other);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  // w^times
  Word repeated(std::size_t times) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

// Length of w after collapsing every maximal run of equal symbols.
std::size_t switch_count(const Word& w);

// Plain rendering: symbol 0 = 'a', ..., 25 = 'z'; larger indices as "[i]".
std::string to_string(const Word& w);

// Display form with runs and short periodic blocks compressed, e.g. "ba^3(ba)^2".
std::string to_display_string(const Word& w);

// Accepts the plain form and the display form (nested groups, '^' exponents).
Word parse_word(std::string_view text);

// Subset of the states of an n-state automaton as a bit vector.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t width);

  static StateSet full(std::size_t width);
  static StateSet singleton(std::size_t width, State q);
  static StateSet from_mask(std::size_t width, std::uint64_t mask);

  std::size_t width() const noexcept { return width_; }
  std::uint64_t mask() const noexcept { return bits_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return bits_ == 0; }
  bool is_singleton() const noexcept { return bits_ != 0 && (bits_ & (bits_ - 1)) == 0; }

  bool contains(State q) const noexcept { return q < width_ && ((bits_ >> q) & 1U) != 0; }
  void insert(State q);
  void erase(State q);

  bool subset_of(const StateSet& other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  std::vector<State> members() const;

  StateSet operator|(const StateSet& o) const;
  StateSet operator&(const StateSet& o) const;

  friend bool operator==(const StateSet&, const StateSet&) = default;

 private:
  std::size_t width_ = 0;
  std::uint64_t bits_ = 0;
};

std::string to_string(const StateSet& v);

State apply_state(const Dfa& a, State q, const Word& w);
StateSet apply_set(const Dfa& a, const StateSet& v, const Word& w);
StateSet apply_set(const Dfa& a, const StateSet& v, Symbol s);

// { q : delta(q, s) in V }
StateSet preimage(const Dfa& a, const StateSet& v, Symbol s);

// True iff w maps the full state set to a single state.
bool synchronizes(const Dfa& a, const Word& w);

enum class IsoConvention { StatesOnly, StatesAndSymbols };

// Lexicographically minimal table over all state permutations (and symbol
// permutations under StatesAndSymbols). Exhaustive over n! * k! relabelings, so
// meant for small automata only.
Dfa canonical_form(const Dfa& a, IsoConvention convention);

bool isomorphic(const Dfa& a, const Dfa& b, IsoConvention convention);

// Text format: "n k" header, then n rows of k successor indices. '#' starts a
// comment running to the end of the line.
Dfa parse_dfa(std::string_view text);
std::string serialize_dfa(const Dfa& a);

}  // namespace syncswitch
