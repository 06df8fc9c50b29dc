#include "syncswitch/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "syncswitch/analysis.hpp"
#include "syncswitch/closure.hpp"
#include "syncswitch/families.hpp"
#include "syncswitch/oracle.hpp"
#include "syncswitch/search.hpp"
#include "syncswitch/synchro.hpp"

namespace syncswitch {

namespace {

template <typename T>
std::string join(const std::vector<T>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  return out.str();
}

CheckResult compare(std::string id, const std::string& expected, const std::string& got) {
  return {std::move(id), expected == got, expected, got};
}

// sw and ssl of a family over a range of n against closed forms.
CheckResult family_check(std::string id, const std::vector<std::size_t>& ns, const std::function<Dfa(std::size_t)>& make,
                         const std::function<std::size_t(std::size_t)>& sw,
                         const std::function<std::size_t(std::size_t)>& ssl = {}) {
  std::vector<std::size_t> want_sw, got_sw, want_ssl, got_ssl;
  for (std::size_t n : ns) {
    const Dfa a = make(n);
    want_sw.push_back(sw(n));
    got_sw.push_back(min_switch_count(a));
    if (ssl) {
      want_ssl.push_back(ssl(n));
      got_ssl.push_back(shortest_sync_length(a));
    }
  }
  std::string expected = "sw=" + join(want_sw);
  std::string got = "sw=" + join(got_sw);
  if (ssl) {
    expected += ";ssl=" + join(want_ssl);
    got += ";ssl=" + join(got_ssl);
  }
  return compare(std::move(id), expected, got);
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi, std::size_t step = 1) {
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n <= hi; n += step) out.push_back(n);
  return out;
}

Dfa random_dfa(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
  std::vector<State> delta(n * k);
  for (State& t : delta) t = pick(rng);
  return Dfa(n, k, std::move(delta));
}

CheckResult check_cerny() {
  return family_check("cerny", range(2, 16), cerny, [](std::size_t n) { return 2 * n - 3; },
                      [](std::size_t n) { return (n - 1) * (n - 1); });
}

CheckResult check_p_family() {
  auto half = [](std::size_t n) { return n * (n - 1) / 2; };
  return family_check("p-family", range(2, 12), p_family, half, half);
}

CheckResult check_p_variant() {
  return family_check("p-variant", range(2, 12), p_variant, [](std::size_t n) { return (n * n + n - 4) / 2; });
}

CheckResult check_r_family() {
  CheckResult r = family_check("r-family", range(5, 12), r_family, [](std::size_t n) { return n * (n + 1) / 2; });
  const Dfa r5 = r_family(5);
  r.expected += ";r5=16/15";
  r.got += ";r5=" + std::to_string(shortest_sync_length(r5)) + "/" + std::to_string(min_switch_count(r5));
  r.pass = r.expected == r.got;
  return r;
}

CheckResult check_q_family() {
  return family_check("q-family", range(4, 16, 2), q_family, [](std::size_t n) { return (n * n - 6 * n + 10) / 2; });
}

CheckResult check_a_family() {
  // ceil(2n(n-2)/3 - 1) in integers.
  return family_check("a-family", range(3, 18), a_family, [](std::size_t n) { return (2 * n * (n - 2) - 3 + 2) / 3; });
}

CheckResult check_transforms() {
  std::vector<std::pair<std::string, Dfa>> f_inputs, f2_inputs;
  for (std::size_t n = 2; n <= 7; ++n) f_inputs.emplace_back("C" + std::to_string(n), cerny(n));
  for (std::size_t n = 2; n <= 6; ++n) f2_inputs.emplace_back("C" + std::to_string(n), cerny(n));
  for (const char* name : {"t3", "t4", "t5"}) {
    f_inputs.emplace_back(name, fixture(name));
    f2_inputs.emplace_back(name, fixture(name));
  }
  std::vector<std::string> mismatches;
  for (const auto& [name, a] : f_inputs) {
    if (min_switch_count(f_transform(a)) != 2 * shortest_sync_length(a)) mismatches.push_back("F(" + name + ")");
  }
  for (const auto& [name, a] : f2_inputs) {
    const std::size_t sw = min_switch_count(f2_transform(a));
    const std::size_t want = 2 * shortest_sync_length(a);
    if (sw != want) mismatches.push_back("F2(" + name + ")=" + std::to_string(sw) + "/" + std::to_string(want));
  }
  const std::size_t fc4 = min_switch_count(f_transform(cerny(4)));
  std::string got = "sw(F(C4))=" + std::to_string(fc4) + ";mismatches=" + std::to_string(mismatches.size());
  if (!mismatches.empty()) got += "[" + join(mismatches) + "]";
  return compare("f-transform", "sw(F(C4))=18;mismatches=0", got);
}

CheckResult check_power_closure() {
  std::vector<std::pair<std::string, Dfa>> members;
  auto add = [&](const std::string& family, const std::vector<std::size_t>& ns) {
    for (std::size_t n : ns) members.emplace_back(family + std::to_string(n), generate(family, n));
  };
  add("cerny", range(2, 10));
  add("p", range(2, 10));
  add("p-variant", range(2, 10));
  add("r", range(5, 10));
  add("q", range(4, 10, 2));
  add("a", range(3, 10));
  for (const auto& info : fixture_catalog()) {
    if (info.states <= 10) members.emplace_back(std::string(info.name), fixture(info.name));
  }
  members.emplace_back("cyclic", cyclic_counterexample());

  std::mt19937_64 rng(0x636c6f73757265ULL);
  std::uniform_int_distribution<std::size_t> size(2, 8);
  std::size_t random_count = 0;
  while (random_count < 500) {
    const Dfa a = random_dfa(rng, size(rng), 2);
    if (!is_synchronizing(a)) continue;
    members.emplace_back("random" + std::to_string(random_count++), a);
  }

  std::vector<std::string> mismatches;
  for (const auto& [name, a] : members) {
    if (min_switch_count(a) != shortest_sync_length(power_closure(a).automaton)) mismatches.push_back(name);
  }
  std::string got = "checked=" + std::to_string(members.size()) + ";mismatches=" + std::to_string(mismatches.size());
  if (!mismatches.empty()) got += "[" + join(mismatches) + "]";
  return compare("power-closure", "checked=" + std::to_string(members.size()) + ";mismatches=0", got);
}

CheckResult check_binary_table(const VerifyOptions& options) {
  std::vector<std::size_t> ns = range(2, options.long_run ? 6 : 5);
  std::vector<std::string> want_max = {"1", "3", "7", "11", "19"};
  std::vector<std::string> want_forms = {"-", "6", "2", "6", "2"};
  want_max.resize(ns.size());
  want_forms.resize(ns.size());

  std::vector<std::string> got_max, got_forms, states_only;
  SearchOptions search;
  search.jobs = options.jobs;
  search.long_run = options.long_run;
  for (std::size_t n : ns) {
    const ExtremalReport r = extremal_search(n, 2, search);
    got_max.push_back(r.max_sw ? std::to_string(*r.max_sw) : "none");
    // The table gives no automaton count for n = 2.
    got_forms.push_back(n == 2 ? "-" : std::to_string(r.forms(IsoConvention::StatesAndSymbols).size()));
    states_only.push_back(std::to_string(r.forms(IsoConvention::StatesOnly).size()));
  }
  CheckResult r = compare("binary-table", "max=" + join(want_max) + ";forms=" + join(want_forms),
                          "max=" + join(got_max) + ";forms=" + join(got_forms));
  r.got += ";convention=states-symbols;states-only=" + join(states_only);
  r.expected += ";convention=states-symbols";
  return r;
}

// Expected triple of one catalog fixture, rendered the same way for both sides.
std::string fixture_line(std::string_view name, std::size_t sw, std::optional<std::size_t> ssl,
                         std::optional<std::uint64_t> count, bool words_ok) {
  std::string line = std::string(name) + ":sw=" + std::to_string(sw);
  if (ssl) line += ",ssl=" + std::to_string(*ssl);
  if (count) line += ",count=" + std::to_string(*count);
  if (!words_ok) line += ",words=bad";
  return line;
}

CheckResult check_fixtures() {
  std::vector<std::string> expected, got;
  for (const auto& info : fixture_catalog()) {
    const Dfa a = fixture(info.name);
    expected.push_back(fixture_line(info.name, info.switch_count, info.shortest_length, info.shortest_count, true));

    const std::size_t sw = min_switch_count(a);
    std::optional<std::size_t> ssl;
    std::optional<std::uint64_t> count;
    bool words_ok = true;
    if (info.shortest_length) {
      ssl = shortest_sync_length(a);
      count = count_optimal_words(a, Objective::Length);
      // Listed words are distinct shortest synchronizing words; with the count
      // matching they are all of them.
      std::set<Word> listed;
      for (std::string_view text : info.shortest_words) {
        std::string plain;
        for (char c : text) {
          if (c != ' ') plain += c;
        }
        const Word w = parse_word(plain);
        listed.insert(w);
        words_ok = words_ok && synchronizes(a, w) && w.size() == *ssl && switch_count(w) >= sw;
      }
      words_ok = words_ok && listed.size() == info.shortest_words.size() && listed.size() == *count;
    }
    if (info.switch_then_length_word) {
      const SyncResult best = optimal_sync_word(a, Objective::SwitchThenLength);
      words_ok = words_ok && best.word == parse_word(*info.switch_then_length_word) && best.switches == sw;
    }
    got.push_back(fixture_line(info.name, sw, ssl, count, words_ok));
  }

  // Word-level statements: t7 words all have sw 25; t8a shortest (42, 33) and
  // (switch, length) optimum (43, 31).
  const Dfa t7 = fixture("t7");
  std::set<std::size_t> t7_switches;
  for (std::string_view text : fixture_info("t7").shortest_words) {
    std::string plain;
    for (char c : text) {
      if (c != ' ') plain += c;
    }
    t7_switches.insert(switch_count(parse_word(plain)));
  }
  expected.push_back("t7-words-sw=25");
  got.push_back("t7-words-sw=" + join(std::vector<std::size_t>(t7_switches.begin(), t7_switches.end())));

  const Dfa t8a = fixture("t8a");
  const SyncResult shortest = optimal_sync_word(t8a, Objective::Length);
  const SyncResult stl = optimal_sync_word(t8a, Objective::SwitchThenLength);
  expected.push_back("t8a-length=42/33;t8a-switch=43/31");
  got.push_back("t8a-length=" + std::to_string(shortest.length) + "/" + std::to_string(shortest.switches) +
                ";t8a-switch=" + std::to_string(stl.length) + "/" + std::to_string(stl.switches));
  return compare("fixtures", join(expected), join(got));
}

CheckResult check_cyclic(const VerifyOptions& options) {
  SearchOptions search;
  search.jobs = options.jobs;
  std::vector<std::string> got;
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{5, 2}, {7, 2}, {3, 3}}) {
    const ExtremalReport r = cyclic_extremal_search(n, k, search);
    got.push_back("n" + std::to_string(n) + "k" + std::to_string(k) + "=" + (r.max_sw ? std::to_string(*r.max_sw) : "none"));
  }
  const Dfa c = cyclic_counterexample();
  got.push_back("counterexample=" + std::to_string(min_switch_count(c)));
  got.push_back(std::string("babacb=") + (synchronizes(c, parse_word("babacb")) ? "sync" : "no"));
  return compare("cyclic", "n5k2=7,n7k2=11,n3k3=3,counterexample=6,babacb=sync", join(got));
}

CheckResult check_lemmas() {
  std::vector<std::string> expected, got;
  for (std::size_t n : {6, 12}) {
    const std::string tag = "n" + std::to_string(n);
    std::size_t failed = 0;
    for (const auto& r : verify_lemmas(n)) failed += r.pass ? 0 : 1;
    expected.push_back(tag + ":lemma-failures=0");
    got.push_back(tag + ":lemma-failures=" + std::to_string(failed));

    const DistanceContext ctx(n);
    std::vector<std::size_t> want, have;
    for (std::size_t k = 2; k + 1 <= ctx.cycle_length(); ++k) {
      want.push_back(pair_increase_bound(n, k));
      have.push_back(min_sc_pair_increase(ctx, k));
    }
    expected.push_back(tag + ":pair=" + join(want));
    got.push_back(tag + ":pair=" + join(have));

    const Dfa a = a_family(n);
    const Word w = canonical_word(n);
    const SyncResult best = optimal_sync_word(a, Objective::SwitchThenLength);
    expected.push_back(tag + ":word=sync/" + std::to_string(2 * n * (n - 2) / 3 - 1) + "/optimal/unique");
    got.push_back(tag + ":word=" + (synchronizes(a, w) ? "sync/" : "nosync/") + std::to_string(switch_count(w)) +
                  (best.word == w ? "/optimal" : "/other") +
                  (count_optimal_words(a, Objective::SwitchThenLength) == 1 ? "/unique" : "/several"));
  }
  return compare("lemmas", join(expected), join(got));
}

CheckResult check_oracle() {
  std::vector<Dfa> inputs;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t i = 0; i < space_size(n, 2, SearchSpace::All); ++i) inputs.push_back(decode(n, 2, SearchSpace::All, i));
  }
  std::mt19937_64 rng(0x6f7261636c65ULL);
  for (int i = 0; i < 200; ++i) inputs.push_back(random_dfa(rng, 4, 2));

  std::size_t disagreements = 0;
  for (const Dfa& a : inputs) {
    const std::size_t bound = (a.states() - 1) * (a.states() - 1);
    if (!is_synchronizing(a)) {
      if (oracle::shortest_length(a, bound) || oracle::min_switches(a, bound)) ++disagreements;
      continue;
    }
    const std::size_t ssl = shortest_sync_length(a);
    const std::size_t sw = min_switch_count(a);
    if (oracle::shortest_length(a, ssl) != ssl) ++disagreements;
    if (oracle::min_switches(a, sw) != sw) ++disagreements;
  }
  return compare("oracle", "checked=" + std::to_string(inputs.size()) + ";disagreements=0",
                 "checked=" + std::to_string(inputs.size()) + ";disagreements=" + std::to_string(disagreements));
}

}  // namespace

std::vector<CheckResult> verify_paper(const VerifyOptions& options) {
  const std::vector<std::function<CheckResult()>> checks = {
      check_cerny,
      check_p_family,
      check_p_variant,
      check_r_family,
      check_q_family,
      check_a_family,
      check_transforms,
      check_power_closure,
      [&] { return check_binary_table(options); },
      check_fixtures,
      [&] { return check_cyclic(options); },
      check_lemmas,
      check_oracle,
  };
  std::vector<CheckResult> results;
  for (const auto& check : checks) {
    results.push_back(check());
    if (options.on_result) options.on_result(results.back());
  }
  return results;
}

std::string format_check(const CheckResult& result) {
  return "CHECK " + result.id + (result.pass ? " PASS" : " FAIL") + " expected=" + result.expected + " got=" + result.got;
}

}  // namespace syncswitch
