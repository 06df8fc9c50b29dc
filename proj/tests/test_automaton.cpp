#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "support.hpp"
#include "syncswitch/error.hpp"
#include "syncswitch/families.hpp"

using namespace syncswitch;

namespace {

std::set<State> as_set(const StateSet& v) {
  const auto m = v.members();
  return {m.begin(), m.end()};
}

}  // namespace

TEST_CASE("switch count of small words") {
  CHECK(switch_count(Word{}) == 0);
  CHECK(switch_count(parse_word("a")) == 1);
  CHECK(switch_count(parse_word("aaab")) == 2);
  CHECK(switch_count(parse_word("b(a^3b)^2")) == 5);
  CHECK(switch_count(parse_word("abab")) == 4);
}

TEST_CASE("switch count recursion and concatenation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = 1 + rng() % 3;
    const Word u = testing::random_word(rng, k, rng() % 12);
    const Word v = testing::random_word(rng, k, rng() % 12);
    const std::size_t joined = switch_count(u + v);
    if (u.empty() || v.empty()) {
      CHECK(joined == switch_count(u) + switch_count(v));
    } else {
      const bool glue = u[u.size() - 1] == v[0];
      CHECK(joined == switch_count(u) + switch_count(v) - (glue ? 1 : 0));
    }
    // Dropping a leading symbol costs one switch only when the next one differs.
    if (u.size() >= 2) {
      Word tail(std::vector<Symbol>(u.symbols().begin() + 1, u.symbols().end()));
      CHECK(switch_count(u) == switch_count(tail) + (u[0] != u[1] ? 1 : 0));
    }
  }
}

TEST_CASE("word text forms") {
  CHECK(to_string(parse_word("ba^3(ba)^2")) == "baaababa");
  CHECK(to_string(parse_word("(a(ba)^2)^2")) == "ababaababa");
  CHECK(to_string(parse_word("ab^2abab")) == "abbabab");
  CHECK(parse_word("").empty());
  CHECK_THROWS_AS(parse_word("a^"), ParseError);
  CHECK_THROWS_AS(parse_word("(ab"), ParseError);
  CHECK_THROWS_AS(parse_word("a1"), ParseError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = testing::random_word(rng, 1 + rng() % 3, rng() % 30);
    CHECK(parse_word(to_display_string(w)) == w);
    CHECK(parse_word(to_string(w)) == w);
  }
}

TEST_CASE("state sets") {
  StateSet v(5);
  CHECK(v.empty());
  v.insert(1);
  v.insert(4);
  CHECK(v.size() == 2);
  CHECK(v.contains(4));
  CHECK_FALSE(v.contains(5));
  CHECK_FALSE(v.is_singleton());
  v.erase(4);
  CHECK(v.is_singleton());
  CHECK(StateSet::full(5).size() == 5);
  CHECK(StateSet::full(64).size() == 64);
  CHECK(StateSet::singleton(5, 3).members() == std::vector<State>{3});
  CHECK(v.subset_of(StateSet::full(5)));
}

TEST_CASE("applying words to states and sets") {
  const Dfa c4 = cerny(4);
  const Word sync = parse_word("baaabaaab");

  CHECK(apply_state(c4, 0, Word{}) == 0);
  CHECK(apply_state(c4, 0, parse_word("a")) == 1);

  // Column b read straight from the table.
  std::set<State> b_image;
  for (State q = 0; q < 4; ++q) b_image.insert(c4.next(q, 1));
  CHECK(as_set(apply_set(c4, StateSet::full(4), Symbol{1})) == b_image);
  CHECK(apply_set(c4, StateSet::full(4), Symbol{1}).size() == 3);

  CHECK(apply_set(c4, StateSet(4), sync).empty());
  CHECK(apply_set(c4, StateSet::full(4), sync).is_singleton());
  CHECK(synchronizes(c4, sync));
  CHECK_FALSE(synchronizes(c4, parse_word("baaab")));
  std::set<State> ends;
  for (State q = 0; q < 4; ++q) {
    State p = q;
    for (Symbol s : sync.symbols()) p = c4.next(p, s);
    ends.insert(p);
  }
  CHECK(ends.size() == 1);
}

TEST_CASE("set images distribute over union and never grow") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const Dfa a = testing::random_dfa(rng, n, 2);
    const StateSet u = StateSet::from_mask(n, rng() & ((1ULL << n) - 1));
    const StateSet v = StateSet::from_mask(n, rng() & ((1ULL << n) - 1));
    const Word w = testing::random_word(rng, 2, rng() % 8);
    CHECK(apply_set(a, u | v, w) == (apply_set(a, u, w) | apply_set(a, v, w)));
    CHECK(apply_set(a, u, w).size() <= u.size());
    std::set<State> naive;
    for (State q : u.members()) naive.insert(apply_state(a, q, w));
    CHECK(as_set(apply_set(a, u, w)) == naive);
  }
}

TEST_CASE("preimages") {
  const Dfa c4 = cerny(4);
  CHECK(preimage(c4, StateSet::full(4), Symbol{0}) == StateSet::full(4));
  CHECK(preimage(c4, StateSet(4), Symbol{1}).empty());
  std::set<State> into_one;
  for (State q = 0; q < 4; ++q) {
    if (c4.next(q, 1) == 1) into_one.insert(q);
  }
  CHECK(as_set(preimage(c4, StateSet::singleton(4, 1), Symbol{1})) == into_one);
  CHECK(into_one.size() == 2);

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const Dfa a = testing::random_dfa(rng, n, 3);
    const StateSet v = StateSet::from_mask(n, rng() & ((1ULL << n) - 1));
    const Symbol s = static_cast<Symbol>(rng() % 3);
    const StateSet pre = preimage(a, v, s);
    CHECK(apply_set(a, pre, s).subset_of(v));
    for (State q = 0; q < n; ++q) CHECK(pre.contains(q) == v.contains(a.next(q, s)));
  }
}

TEST_CASE("canonical forms") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const Dfa a = testing::random_dfa(rng, n, 2);
    std::vector<State> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Dfa b = testing::relabel(a, perm);
    for (auto c : {IsoConvention::StatesOnly, IsoConvention::StatesAndSymbols}) {
      const Dfa f = canonical_form(a, c);
      CHECK(canonical_form(f, c) == f);
      CHECK(canonical_form(b, c) == f);
      CHECK(isomorphic(a, b, c));
    }
    CHECK(isomorphic(a, testing::swap_symbols(b, 0, 1), IsoConvention::StatesAndSymbols));
  }
  const Dfa c4 = cerny(4);
  const Dfa swapped = testing::swap_symbols(c4, 0, 1);
  CHECK(isomorphic(c4, swapped, IsoConvention::StatesAndSymbols));
  CHECK_FALSE(isomorphic(c4, swapped, IsoConvention::StatesOnly));
}

TEST_CASE("table text format") {
  const Dfa c4 = cerny(4);
  const std::string text = serialize_dfa(c4);
  CHECK(text.rfind("4 2\n", 0) == 0);
  CHECK(parse_dfa(text) == c4);
  CHECK(parse_dfa("# comment\n2 1\n1 # row zero\n1\n") == Dfa(2, 1, {1, 1}));
  CHECK(parse_dfa("2 1\n1\n0") == Dfa(2, 1, {1, 0}));

  auto kind_of = [](std::string_view t) {
    try {
      parse_dfa(t);
    } catch (const ParseError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  CHECK(kind_of("x 2\n") == static_cast<int>(ParseError::Kind::MalformedHeader));
  CHECK(kind_of("") == static_cast<int>(ParseError::Kind::MalformedHeader));
  CHECK(kind_of("2 1\n0\n") == static_cast<int>(ParseError::Kind::WrongRowCount));
  CHECK(kind_of("2 1\n0\n1\n1\n") == static_cast<int>(ParseError::Kind::WrongRowCount));
  CHECK(kind_of("2 1\n0\n2\n") == static_cast<int>(ParseError::Kind::OutOfRange));
  CHECK(kind_of("2 2\n0 1\n1\n") == static_cast<int>(ParseError::Kind::MalformedRow));
  CHECK(kind_of("2 1\n0\nz\n") == static_cast<int>(ParseError::Kind::MalformedRow));

  for (auto name : family_names()) {
    const Dfa a = generate(name, 6);
    CHECK(parse_dfa(serialize_dfa(a)) == a);
  }
  for (const auto& f : fixture_catalog()) {
    const Dfa a = fixture(f.name);
    CHECK(parse_dfa(serialize_dfa(a)) == a);
  }
}

TEST_CASE("capacity guard") {
  CHECK(max_states() >= 32);
  CHECK_NOTHROW(check_capacity(max_states()));
  if (max_states() < kStateSetBits) CHECK_THROWS_AS(check_capacity(max_states() + 1), CapacityError);
  CHECK_THROWS_AS(check_capacity(kStateSetBits + 1), CapacityError);
}
