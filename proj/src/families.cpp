#include "syncswitch/families.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace syncswitch {

namespace {

// Identity table edited with the 1-indexed state labels of the drawings.
class TableBuilder {
 public:
  TableBuilder(std::size_t n, std::size_t k) : n_(n), k_(k), delta_(n * k) {
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t s = 0; s < k; ++s) delta_[q * k + s] = static_cast<State>(q);
    }
  }

  TableBuilder& map(std::size_t from, Symbol s, std::size_t to) {
    delta_.at((from - 1) * k_ + s) = static_cast<State>(to - 1);
    return *this;
  }

  TableBuilder& swap(Symbol s, std::size_t p, std::size_t q) { return map(p, s, q).map(q, s, p); }

  Dfa build() && { return Dfa(n_, k_, std::move(delta_)); }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<State> delta_;
};

constexpr Symbol kA = 0;
constexpr Symbol kB = 1;
constexpr Symbol kC = 2;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Successor of state q (1-indexed, 1 < q < n) of a_family(n).
std::size_t a_family_inner(std::size_t q, Symbol s) {
  if (q % 2 == 0) return s == kA ? q + 1 : q - 1;
  return s == kA ? q - 1 : q + 1;
}

std::size_t a_family_last_target(std::size_t n) {
  switch (n % 3) {
    case 0: return n / 3;
    case 1: return (n + 2) / 3;
    default: return (n + 4) / 3;
  }
}

}  // namespace

Dfa cerny(std::size_t n) {
  require(n >= 2, "cerny needs n >= 2");
  TableBuilder t(n, 2);
  for (std::size_t q = 1; q <= n; ++q) t.map(q, kA, q % n + 1);
  t.map(1, kB, 2);
  return std::move(t).build();
}

Dfa p_family(std::size_t n) {
  require(n >= 2, "p family needs n >= 2");
  TableBuilder t(n, n - 1);
  t.map(2, 0, 1);
  for (std::size_t i = 2; i <= n - 1; ++i) t.swap(static_cast<Symbol>(i - 1), i, i + 1);
  return std::move(t).build();
}

Dfa p_variant(std::size_t n) {
  require(n >= 2, "p variant needs n >= 2");
  TableBuilder t(n, n);
  t.map(1, 0, 2);
  t.swap(1, 1, 2);
  for (std::size_t i = 3; i <= n; ++i) t.swap(static_cast<Symbol>(i - 1), i - 1, i);
  return std::move(t).build();
}

Dfa r_family(std::size_t n) {
  require(n >= 5, "r family needs n >= 5");
  TableBuilder t(n, n - 2);
  // a1: 3 -> 2 and 2 <-> 4; a2: 3 <-> 4; a3: 1 <-> 2 and 4 <-> 5.
  t.map(3, 0, 2).swap(0, 2, 4);
  t.swap(1, 3, 4);
  t.swap(2, 1, 2).swap(2, 4, 5);
  if (n >= 6) t.swap(3, 2, 6);
  for (std::size_t i = 5; i <= n - 2; ++i) t.swap(static_cast<Symbol>(i - 1), i + 1, i + 2);
  return std::move(t).build();
}

Dfa q_family(std::size_t n) {
  require(n >= 4 && n % 2 == 0, "q family needs even n >= 4");
  const std::size_t half = n / 2;
  TableBuilder t(n, 2);
  for (std::size_t i = 1; i <= half; ++i) {
    t.map(2 * i, kA, 2 * i);
    t.map(2 * i - 1, kA, 2 * i);
  }
  for (std::size_t i = 2; i <= half; ++i) {
    t.map(2 * i - 2, kB, 2 * i - 1);
    t.map(2 * i - 1, kB, 2 * i - 1);
  }
  t.map(1, kB, 3);
  t.map(n, kB, 1);
  return std::move(t).build();
}

Dfa a_family(std::size_t n) {
  require(n >= 3, "a family needs n >= 3");
  TableBuilder t(n, 2);
  t.map(1, kA, 1).map(1, kB, 2);
  for (std::size_t q = 2; q < n; ++q) {
    t.map(q, kA, a_family_inner(q, kA));
    t.map(q, kB, a_family_inner(q, kB));
  }
  const std::size_t last = a_family_last_target(n);
  t.map(n, kA, last).map(n, kB, last);
  return std::move(t).build();
}

std::size_t SignedState::index(std::size_t n) const {
  const auto magnitude = static_cast<std::size_t>(value < 0 ? -value : value);
  if (value == 0 || magnitude > n) throw std::out_of_range("signed state out of range");
  return value > 0 ? magnitude - 1 : n + magnitude - 1;
}

SignedState SignedState::from_index(std::size_t n, std::size_t index) {
  if (index >= 2 * n) throw std::out_of_range("state index out of range");
  return index < n ? SignedState{static_cast<int>(index + 1)} : SignedState{-static_cast<int>(index - n + 1)};
}

Dfa b_family(std::size_t n) {
  require(n >= 6 && n % 6 == 0, "b family needs n divisible by 6");
  const auto signed_n = static_cast<int>(n);
  std::vector<State> delta(2 * n * 2);
  auto set = [&](SignedState from, Symbol s, SignedState to) {
    delta[from.index(n) * 2 + s] = static_cast<State>(to.index(n));
    delta[(-from).index(n) * 2 + s] = static_cast<State>((-to).index(n));
  };
  set({1}, kA, {-1});
  set({1}, kB, {2});
  for (int q = 2; q < signed_n; ++q) {
    for (Symbol s : {kA, kB}) set({q}, s, {static_cast<int>(a_family_inner(static_cast<std::size_t>(q), s))});
  }
  set({signed_n}, kA, {-signed_n / 3});
  set({signed_n}, kB, {-signed_n / 3});
  return Dfa(2 * n, 2, std::move(delta));
}

Dfa cyclic_counterexample() {
  TableBuilder t(4, 3);
  for (std::size_t q = 1; q <= 4; ++q) t.map(q, kA, q % 4 + 1);
  t.map(1, kB, 3);
  t.swap(kC, 3, 4);
  return std::move(t).build();
}

// ---------------------------------------------------------------- fixtures

namespace {

Dfa fixture_t3() {
  TableBuilder t(3, 2);
  t.map(2, kA, 1);
  t.swap(kB, 2, 3);
  return std::move(t).build();
}

Dfa fixture_t4() {
  TableBuilder t(4, 2);
  t.map(2, kA, 3).map(3, kA, 2).map(4, kA, 2);
  t.map(1, kB, 3).map(3, kB, 4).map(4, kB, 1);
  return std::move(t).build();
}

Dfa fixture_t5() {
  TableBuilder t(5, 2);
  t.map(3, kA, 4).map(4, kA, 5).map(5, kA, 3);
  t.map(1, kB, 2).map(2, kB, 3).map(3, kB, 1).map(5, kB, 1);
  return std::move(t).build();
}

Dfa fixture_t6() {
  TableBuilder t(6, 2);
  t.map(4, kA, 5).map(5, kA, 4).map(6, kA, 4);
  t.map(1, kB, 2).map(2, kB, 4).map(3, kB, 5).map(4, kB, 1).map(5, kB, 6).map(6, kB, 3);
  return std::move(t).build();
}

Dfa fixture_t7() {
  TableBuilder t(7, 2);
  t.swap(kA, 3, 4).map(5, kA, 3).swap(kA, 6, 7);
  t.map(1, kB, 3).map(2, kB, 5).map(3, kB, 6).map(4, kB, 2).map(5, kB, 4).map(6, kB, 1);
  return std::move(t).build();
}

Dfa fixture_t8a() {
  TableBuilder t(8, 2);
  t.swap(kA, 3, 4).map(5, kA, 6).map(6, kA, 7).map(7, kA, 8).map(8, kA, 5);
  t.map(1, kB, 3).map(2, kB, 5).map(3, kB, 1).map(4, kB, 8).map(5, kB, 2).map(6, kB, 4).map(8, kB, 4);
  return std::move(t).build();
}

// The 9, 10 and 11 state fixtures share one skeleton; n = 10 leaves state 10 a
// b-loop, n = 11 adds a b-swap of 10 and 11 and an a-loop on 11.
Dfa fixture_long(std::size_t n) {
  TableBuilder t(n, 2);
  t.swap(kA, 2, 3).map(4, kA, 8).swap(kA, 5, 6).swap(kA, 7, 8);
  t.swap(kB, 1, 2).map(3, kB, 4).swap(kB, 4, 5).map(7, kB, 3).swap(kB, 8, 9);
  if (n >= 10) t.swap(kA, 9, 10);
  if (n >= 11) t.swap(kB, 10, 11);
  return std::move(t).build();
}

const std::vector<FixtureInfo>& catalog() {
  static const std::vector<FixtureInfo> entries = {
      {"t3", 3, 3, 3, 1, {"aba"}, std::nullopt},
      {"t4", 4, 7, 8, 1, {"abab^2aba"}, std::nullopt},
      {"t5", 5, 11, 15, 1, {"ba^2baba^2bab^2a^2b"}, std::nullopt},
      {"t6", 6, 19, 23, 1, {"abab^2ababab^2ababa^2b^2aba"}, std::nullopt},
      {"t7",
       7,
       25,
       32,
       3,
       {"ab^2abab ab^2abab bab^2abab^2ab^2abab^2a", "ab^2abab ab^2aaba bab^2abab^2ab^2abab^2a",
        "ab^2abab bab^2aba bab^2abab^2ab^2abab^2a"},
       std::nullopt},
      {"t8a", 8, 31, 42, 1, {"ba^3(ba)^3a(ba)^4(ab)^2(ba)^3(ab)^2(ba)^2a(ab)^2"},
       "ba^3(ba)^3a(ba)^4(ab)^2(ba)^2a^2ba^3ba^2ba^2(ab)^2"},
      {"t8b", 8, 31, std::nullopt, std::nullopt, {}, std::nullopt},
      {"t9a", 9, 41, 49, 1, {"b^2(ab)^4b(ab)^5b(ab)^5b(ba)^3(ab)^2b^2(ab)^2"}, std::nullopt},
      {"t9b", 9, 41, std::nullopt, std::nullopt, {}, std::nullopt},
      {"t10", 10, 53, 63, 1, {"b^2(ab)^4b(ab)^5b(ab)^6(ba)^3(ab)^3b(ba)^3(ab)^2b^2(ab)^2"}, std::nullopt},
      {"t11", 11, 65, 77, 1, {"b^2(ab)^4b(ab)^5b(ab)^6(ba)^3(ab)^4(ba)^3(ab)^3b(ba)^3(ab)^2b^2(ab)^2"},
       std::nullopt},
  };
  return entries;
}

}  // namespace

std::span<const FixtureInfo> fixture_catalog() { return catalog(); }

const FixtureInfo& fixture_info(std::string_view name) {
  for (const auto& info : catalog()) {
    if (info.name == name) return info;
  }
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

Dfa fixture(std::string_view name) {
  fixture_info(name);  // validates the name
  if (name == "t3") return fixture_t3();
  if (name == "t4") return fixture_t4();
  if (name == "t5") return fixture_t5();
  if (name == "t6") return fixture_t6();
  if (name == "t7") return fixture_t7();
  if (name == "t8a") return fixture_t8a();
  if (name == "t8b") return a_family(8);
  if (name == "t9a") return fixture_long(9);
  if (name == "t9b") return a_family(9);
  if (name == "t10") return fixture_long(10);
  return fixture_long(11);
}

namespace {

constexpr std::array<std::string_view, 7> kFamilyNames = {"cerny", "p", "p-variant", "r", "q", "a", "b"};

}  // namespace

std::span<const std::string_view> family_names() { return kFamilyNames; }

Dfa generate(std::string_view family, std::size_t n) {
  if (family == "cerny") return cerny(n);
  if (family == "p") return p_family(n);
  if (family == "p-variant") return p_variant(n);
  if (family == "r") return r_family(n);
  if (family == "q") return q_family(n);
  if (family == "a") return a_family(n);
  if (family == "b") return b_family(n);
  throw std::invalid_argument("unknown family '" + std::string(family) + "'");
}

}  // namespace syncswitch
