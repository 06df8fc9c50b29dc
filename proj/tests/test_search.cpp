#include <doctest.h>

#include <random>

#include "support.hpp"
#include "syncswitch/error.hpp"
#include "syncswitch/families.hpp"
#include "syncswitch/search.hpp"
#include "syncswitch/synchro.hpp"

using namespace syncswitch;

TEST_CASE("space sizes") {
  CHECK(space_size(2, 2, SearchSpace::All) == 16);
  CHECK(space_size(3, 2, SearchSpace::All) == 729);
  CHECK(space_size(5, 2, SearchSpace::Cyclic) == 3125);
  CHECK(space_size(3, 3, SearchSpace::Cyclic) == 729);
  CHECK_THROWS_AS(space_size(16, 2, SearchSpace::All), SearchGuard);
}

TEST_CASE("encode and decode are inverse") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const std::size_t k = 2 + rng() % 2;
    for (auto space : {SearchSpace::All, SearchSpace::Cyclic}) {
      const std::uint64_t index = rng() % space_size(n, k, space);
      const Dfa a = decode(n, k, space, index);
      CHECK(encode(a, space) == index);
      if (space == SearchSpace::Cyclic) {
        for (State q = 0; q < n; ++q) CHECK(a.next(q, 0) == (q + 1) % n);
      }
    }
  }
  CHECK(decode(3, 2, SearchSpace::All, 0) == Dfa(3, 2, std::vector<State>(6, 0)));
  CHECK_THROWS_AS(encode(testing::swap_symbols(cerny(4), 0, 1), SearchSpace::Cyclic), std::invalid_argument);
  const Dfa c = decode(4, 2, SearchSpace::Cyclic, 0);
  CHECK(encode(c, SearchSpace::All) != 0);
}

TEST_CASE("shards partition the space") {
  for (std::size_t count : {1, 3, 7, 100, 1000}) {
    const auto shards = make_shards(3, 2, SearchSpace::All, count);
    std::uint64_t expect = 0;
    for (const auto& s : shards) {
      CHECK(s.lo == expect);
      CHECK(s.hi > s.lo);
      expect = s.hi;
    }
    CHECK(expect == 729);
  }
}

TEST_CASE("small extremal searches") {
  const ExtremalReport r2 = extremal_search(2, 2);
  CHECK(r2.max_sw == 1);
  CHECK(r2.scanned == 16);

  const ExtremalReport r3 = extremal_search(3, 2);
  CHECK(r3.max_sw == 3);
  CHECK(r3.scanned == 729);
  const auto forms = r3.forms(IsoConvention::StatesAndSymbols);
  CHECK(forms.size() == 6);
  CHECK(r3.forms(IsoConvention::StatesOnly).size() == 12);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    CHECK(min_switch_count(forms[i]) == 3);
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      CHECK_FALSE(isomorphic(forms[i], forms[j], IsoConvention::StatesAndSymbols));
    }
  }
  bool has_t3 = false;
  for (const auto& f : forms) has_t3 = has_t3 || isomorphic(f, fixture("t3"), IsoConvention::StatesAndSymbols);
  CHECK(has_t3);

  const ExtremalReport r4 = extremal_search(4, 2);
  CHECK(r4.max_sw == 7);
  CHECK(r4.forms(IsoConvention::StatesAndSymbols).size() == 2);
  bool has_t4 = false;
  for (const auto& f : r4.forms(IsoConvention::StatesAndSymbols)) {
    has_t4 = has_t4 || isomorphic(f, fixture("t4"), IsoConvention::StatesAndSymbols);
  }
  CHECK(has_t4);
}

TEST_CASE("brute force maximum over all 3-state tables") {
  std::size_t best = 0;
  for (std::uint64_t i = 0; i < 729; ++i) {
    const Dfa a = decode(3, 2, SearchSpace::All, i);
    if (!testing::layered_ssl(a)) continue;
    best = std::max(best, min_switch_count(a));
  }
  CHECK(extremal_search(3, 2).max_sw == best);
}

TEST_CASE("merging reports") {
  const auto halves = make_shards(3, 2, SearchSpace::All, 2);
  const ExtremalReport x = scan_shard(halves[0]);
  const ExtremalReport y = scan_shard(halves[1]);
  const ExtremalReport xy = merge_reports(x, y);
  const ExtremalReport yx = merge_reports(y, x);
  const ExtremalReport full = extremal_search(3, 2);
  CHECK(xy.max_sw == full.max_sw);
  CHECK(xy.extremal_forms == full.extremal_forms);
  CHECK(xy.scanned == full.scanned);
  CHECK(yx.extremal_forms == xy.extremal_forms);
  CHECK(merge_reports(x, empty_report(3, 2)).extremal_forms == x.extremal_forms);
  CHECK_FALSE(empty_report(3, 2).max_sw.has_value());
  CHECK_THROWS_AS(merge_reports(x, empty_report(4, 2)), std::invalid_argument);
}

TEST_CASE("thread count does not change the result") {
  SearchOptions one;
  one.jobs = 1;
  one.shards = 5;
  SearchOptions three;
  three.jobs = 3;
  three.shards = 11;
  const ExtremalReport a = extremal_search(4, 2, one);
  const ExtremalReport b = extremal_search(4, 2, three);
  CHECK(a.max_sw == b.max_sw);
  CHECK(a.extremal_forms == b.extremal_forms);
  CHECK(format_report(a, IsoConvention::StatesOnly) == format_report(b, IsoConvention::StatesOnly));
}

TEST_CASE("cyclic searches") {
  CHECK(cyclic_extremal_search(5, 2).max_sw == 7);
  CHECK(cyclic_extremal_search(3, 3).max_sw == 3);
  CHECK(cyclic_extremal_search(4, 3).max_sw == 6);
  CHECK_THROWS_AS(cyclic_extremal_search(10, 2), SearchGuard);
  CHECK_THROWS_AS(cyclic_extremal_search(4, 4), SearchGuard);
}

TEST_CASE("size guards") {
  CHECK_THROWS_AS(extremal_search(6, 2), SearchGuard);
  SearchOptions opts;
  opts.long_run = true;
  CHECK_THROWS_AS(extremal_search(7, 2, opts), SearchGuard);
}

TEST_CASE("report text") {
  const std::string text = format_report(extremal_search(3, 2), IsoConvention::StatesAndSymbols);
  CHECK(text.rfind("SEARCH n=3 k=2 scanned=729 max=3 forms_states=12 forms_states_symbols=6", 0) == 0);
  CHECK(text.find("# form 6") != std::string::npos);
  CHECK(text.find("# form 7") == std::string::npos);
}
