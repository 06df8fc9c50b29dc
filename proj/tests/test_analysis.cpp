#include <doctest.h>

#include <array>
#include <deque>
#include <map>
#include <random>

#include "support.hpp"
#include "syncswitch/analysis.hpp"
#include "syncswitch/families.hpp"
#include "syncswitch/synchro.hpp"

using namespace syncswitch;

namespace {

std::size_t idx(std::size_t n, int v) { return SignedState{v}.index(n); }

State apply_ab(const Dfa& b, State q, std::size_t times) {
  for (std::size_t i = 0; i < times; ++i) q = b.next(b.next(q, 0), 1);
  return q;
}

// Smallest k >= 1 with p(ab)^(n/3 + k) = q(ab)^(n/3), straight from the table.
// Pairs in -S use d(p, q) = d(-q, -p).
std::size_t naive_distance(const DistanceContext& ctx, State p, State q) {
  const Dfa& b = ctx.automaton();
  const std::size_t n = ctx.n();
  if (!ctx.in_target(p)) {
    p = static_cast<State>(negate_index(n, p));
    q = static_cast<State>(negate_index(n, q));
    std::swap(p, q);
  }
  State x = apply_ab(b, p, n / 3);
  const State target = apply_ab(b, q, n / 3);
  for (std::size_t k = 1; k <= 2 * n; ++k) {
    x = apply_ab(b, x, 1);
    if (x == target) return k;
  }
  return 0;
}

// Plain Dijkstra over (p, q, last) with a map-based frontier.
std::size_t naive_pair_increase(const DistanceContext& ctx, std::size_t k) {
  const std::size_t n = ctx.n();
  const Dfa& b = ctx.automaton();
  const auto cyc = ctx.cycle().members();
  using Node = std::array<State, 3>;  // p, q, last (2 = none)
  std::map<Node, std::size_t> best;
  std::multimap<std::size_t, Node> frontier;
  for (State p : cyc) {
    for (State q : cyc) {
      const std::size_t d = naive_distance(ctx, p, q);
      const bool ok = k == ctx.cycle_length() - 1 ? d == k - 1 : d <= k - 1;
      if (!ok) continue;
      best[{p, q, 2}] = 0;
      frontier.emplace(0, Node{p, q, 2});
    }
  }
  while (!frontier.empty()) {
    auto [cost, node] = *frontier.begin();
    frontier.erase(frontier.begin());
    if (best[node] < cost) continue;
    if (node[2] != 2 && naive_distance(ctx, node[0], node[1]) == k + 1) return cost;
    for (Symbol s = 0; s < 2; ++s) {
      const Node next{b.next(node[0], s), b.next(node[1], s), s};
      const std::size_t c = cost + (node[2] == s ? 0 : 1);
      auto it = best.find(next);
      if (it == best.end() || c < it->second) {
        best[next] = c;
        frontier.emplace(c, next);
      }
    }
  }
  return 0;
}

}  // namespace

TEST_CASE("context sets") {
  const DistanceContext ctx(6);
  CHECK(ctx.cycle_length() == 4);
  CHECK(ctx.target().size() == 6);
  CHECK(ctx.cycle().size() == 4);
  CHECK(ctx.cycle().subset_of(ctx.target()));
  for (int v : {-1, 2, 4, 6}) CHECK(ctx.cycle().contains(static_cast<State>(idx(6, v))));
  CHECK_THROWS_AS(DistanceContext(8), std::invalid_argument);
}

TEST_CASE("distance matches the definition") {
  for (std::size_t n : {6, 12}) {
    const DistanceContext ctx(n);
    const std::size_t third2 = 2 * n / 3;
    for (State p = 0; p < 2 * n; ++p) {
      for (State q = 0; q < 2 * n; ++q) {
        const bool pos = ctx.in_target(p) && ctx.in_target(q);
        const bool neg = ctx.in_target(negate_index(n, p)) && ctx.in_target(negate_index(n, q));
        if (!pos && !neg) {
          CHECK_THROWS_AS(ctx.distance_index(p, q), std::invalid_argument);
          continue;
        }
        const std::size_t d = ctx.distance_index(p, q);
        CHECK(d == naive_distance(ctx, p, q));
        CHECK(d == ctx.distance_index(negate_index(n, q), negate_index(n, p)));
        if (p == q) CHECK(d == third2);
        if (!ctx.equivalent(p, q)) {
          CHECK(d > 0);
          CHECK(d < third2);
          CHECK(d + ctx.distance_index(q, p) == third2);
        }
      }
    }
    CHECK(ctx.distance(SignedState{static_cast<int>(n)}, SignedState{-static_cast<int>(n / 3) + 1}) == 1);
  }
}

TEST_CASE("measure") {
  for (std::size_t n : {6, 12}) {
    const DistanceContext ctx(n);
    CHECK(ctx.measure(ctx.target()) == 1);
    for (State q : ctx.target().members()) {
      CHECK(ctx.measure(StateSet::singleton(2 * n, q)) == 2 * n / 3);
    }
    StateSet pair(2 * n);
    pair.insert(static_cast<State>(idx(n, -static_cast<int>(n / 3) + 1)));
    pair.insert(static_cast<State>(idx(n, static_cast<int>(n))));
    CHECK(ctx.measure(pair) == 2 * n / 3 - 1);

    std::mt19937_64 rng(61);
    const auto members = ctx.target().members();
    for (int trial = 0; trial < 200; ++trial) {
      StateSet a(2 * n);
      for (State q : members) {
        if (rng() & 1) a.insert(q);
      }
      if (a.empty()) continue;
      CHECK(ctx.measure(a) == ctx.measure(ctx.negate(a)));
      // max over p of min over q, spelled out
      std::size_t worst = 0;
      for (State p : a.members()) {
        std::size_t m = SIZE_MAX;
        for (State q : a.members()) m = std::min(m, ctx.distance_index(p, q));
        worst = std::max(worst, m);
      }
      CHECK(ctx.measure(a) == worst);
    }
    CHECK_THROWS_AS(ctx.measure(StateSet(2 * n)), std::invalid_argument);
  }
}

TEST_CASE("parity of images of S") {
  const DistanceContext ctx(6);
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = testing::random_word(rng, 2, rng() % 30);
    const StateSet image = apply_set(ctx.automaton(), ctx.target(), w);
    CHECK(image.subset_of(w.size() % 2 == 0 ? ctx.target() : ctx.negate(ctx.target())));
  }
}

TEST_CASE("pair increase") {
  const DistanceContext six(6);
  CHECK(min_sc_pair_increase(six, 2) == 7);
  CHECK(min_sc_pair_increase(six, 3) == 7);
  CHECK_THROWS_AS(min_sc_pair_increase(six, 1), std::invalid_argument);
  CHECK_THROWS_AS(min_sc_pair_increase(six, 4), std::invalid_argument);
  for (std::size_t k = 2; k <= 3; ++k) CHECK(naive_pair_increase(six, k) == min_sc_pair_increase(six, k));

  const DistanceContext twelve(12);
  CHECK(min_sc_pair_increase(twelve, 4) == 15);
  for (std::size_t k = 2; k <= 7; ++k) {
    CAPTURE(k);
    CHECK(min_sc_pair_increase(twelve, k) == pair_increase_bound(12, k));
    CHECK(naive_pair_increase(twelve, k) == pair_increase_bound(12, k));
  }
  CHECK(pair_increase_bound(12, 2) == 11);
  CHECK(pair_increase_bound(12, 7) == 11);
}

TEST_CASE("canonical word") {
  const Word w6 = canonical_word(6);
  CHECK(synchronizes(a_family(6), w6));
  CHECK(switch_count(w6) == 15);
  CHECK(to_string(w6).rfind("bab", 0) == 0);
  const Word w12 = canonical_word(12);
  CHECK(switch_count(w12) == 79);
  for (std::size_t n : {6, 12}) {
    const SyncResult r = optimal_sync_word(a_family(n), Objective::SwitchThenLength);
    CHECK(r.word == canonical_word(n));
    CHECK(count_optimal_words(a_family(n), Objective::SwitchThenLength) == 1);
  }
  CHECK_THROWS_AS(canonical_word(9), std::invalid_argument);
}

TEST_CASE("lemma report") {
  for (std::size_t n : {6, 12}) {
    const auto results = verify_lemmas(n);
    CHECK(results.size() == 6);
    for (const auto& r : results) {
      CAPTURE(r.id);
      CAPTURE(r.detail);
      CHECK(r.pass);
    }
    const std::string text = format_lemma_report(results);
    CHECK(text.rfind("LEMMA L1 PASS", 0) == 0);
  }
  const DistanceContext ctx(6);
  CHECK(ctx.measure(apply_set(ctx.automaton(), ctx.target(), Symbol{1})) <= 2);
}
