#include "syncswitch/analysis.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "syncswitch/synchro.hpp"

namespace syncswitch {

namespace {

constexpr Symbol kA = 0;
constexpr Symbol kB = 1;

void require_multiple_of_six(std::size_t n) {
  if (n < 6 || n % 6 != 0) throw std::invalid_argument("analysis needs n divisible by 6");
}

std::size_t idx(std::size_t n, int signed_value) { return SignedState{signed_value}.index(n); }

}  // namespace

DistanceContext::DistanceContext(std::size_t n)
    : n_((require_multiple_of_six(n), n)), b_(b_family(n)), s_(2 * n), c_(2 * n), projected_(2 * n), distance_(4 * n * n, 0) {
  const int sn = static_cast<int>(n);
  for (int k = 1; k <= sn / 2; ++k) {
    s_.insert(static_cast<State>(idx(n, 2 * k)));
    s_.insert(static_cast<State>(idx(n, -(2 * k - 1))));
  }
  for (State q : s_.members()) {
    if (SignedState::from_index(n, q).value >= -sn / 3 + 1) c_.insert(q);
  }

  const Word ab = parse_word("ab");
  auto apply = [&](State q, std::size_t times) {
    for (std::size_t i = 0; i < times; ++i) q = apply_state(b_, q, ab);
    return q;
  };
  for (State q : s_.members()) projected_[q] = apply(q, n / 3);

  const std::size_t len = cycle_length();
  for (State p : s_.members()) {
    for (State q : s_.members()) {
      State x = apply(projected_[p], 1);
      std::size_t k = 1;
      while (x != projected_[q] && k <= len) {
        x = apply(x, 1);
        ++k;
      }
      if (k > len) throw std::logic_error("projection left the cycle");
      distance_[p * 2 * n + q] = static_cast<std::uint16_t>(k);
      // d(p, q) = d(-q, -p) on the negated class.
      distance_[negate_index(n, q) * 2 * n + negate_index(n, p)] = static_cast<std::uint16_t>(k);
    }
  }
}

StateSet DistanceContext::negate(const StateSet& v) const {
  StateSet out(2 * n_);
  for (State q : v.members()) out.insert(static_cast<State>(negate_index(n_, q)));
  return out;
}

std::size_t DistanceContext::distance_index(std::size_t p, std::size_t q) const {
  if (p >= 2 * n_ || q >= 2 * n_) throw std::out_of_range("state index out of range");
  const std::size_t d = distance_[p * 2 * n_ + q];
  if (d == 0) throw std::invalid_argument("distance needs both states in S or both in -S");
  return d;
}

std::size_t DistanceContext::distance(SignedState p, SignedState q) const {
  return distance_index(p.index(n_), q.index(n_));
}

bool DistanceContext::equivalent(std::size_t p, std::size_t q) const {
  return distance_index(p, q) == cycle_length();
}

std::size_t DistanceContext::measure(const StateSet& a) const {
  if (a.empty()) throw std::invalid_argument("measure of the empty set");
  const auto members = a.members();
  std::size_t best = 0;
  for (State p : members) {
    std::size_t nearest = std::numeric_limits<std::size_t>::max();
    for (State q : members) nearest = std::min(nearest, distance_index(p, q));
    best = std::max(best, nearest);
  }
  return best;
}

std::size_t pair_increase_bound(std::size_t n, std::size_t k) {
  return k <= n / 3 ? 2 * n / 3 + 2 * k - 1 : 2 * n - 2 * k + 1;
}

std::size_t min_sc_pair_increase(const DistanceContext& ctx, std::size_t k) {
  const std::size_t n = ctx.n();
  const std::size_t len = ctx.cycle_length();
  if (k < 2 || k + 1 > len) throw std::invalid_argument("k out of range");

  // Node (p, q, last) with last == 2 before the first symbol.
  const std::size_t m = 2 * n;
  auto node = [&](std::size_t p, std::size_t q, std::size_t last) { return (p * m + q) * 3 + last; };
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(m * m * 3, kUnseen);
  std::deque<std::size_t> queue;

  const auto cycle = ctx.cycle().members();
  for (State p : cycle) {
    for (State q : cycle) {
      if (p == q) continue;
      const std::size_t d = ctx.distance_index(p, q);
      const bool admissible = k + 1 == len ? d == k - 1 : d <= k - 1;
      if (!admissible) continue;
      dist[node(p, q, 2)] = 0;
      queue.push_back(node(p, q, 2));
    }
  }

  const Dfa& b = ctx.automaton();
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const std::size_t last = cur % 3;
    const std::size_t p = cur / 3 / m;
    const std::size_t q = cur / 3 % m;
    if (dist[cur] > 0 && ctx.distance_index(p, q) == k + 1) return dist[cur];
    for (Symbol s : {kA, kB}) {
      const std::size_t next = node(b.next(static_cast<State>(p), s), b.next(static_cast<State>(q), s), s);
      const std::size_t cost = last == s ? 0 : 1;
      if (dist[cur] + cost >= dist[next]) continue;
      dist[next] = dist[cur] + cost;
      if (cost == 0) {
        queue.push_front(next);
      } else {
        queue.push_back(next);
      }
    }
  }
  throw std::logic_error("no pair reaches the target distance");
}

Word canonical_word(std::size_t n) {
  require_multiple_of_six(n);
  const Word b = parse_word("b");
  const Word ab = parse_word("ab");
  const Word ba = parse_word("ba");
  const std::size_t third = n / 3;

  Word w = b + ab.repeated(third - 1);
  for (std::size_t k = 2; k + 1 <= third; ++k) w += b + ba.repeated(k) + ab.repeated(third);
  w += b + ba.repeated(2 * third - 1) + b;
  for (std::size_t k = third + 1; k + 1 <= 2 * third; ++k) w += ba.repeated(n - k) + b;
  w += b;
  return w;
}

// ---------------------------------------------------------------- lemmas

namespace {

std::string describe(std::size_t checked, std::size_t violations) {
  return "checked=" + std::to_string(checked) + " violations=" + std::to_string(violations);
}

LemmaResult lemma_result(std::string id, std::size_t checked, std::size_t violations, std::string extra = {}) {
  std::string detail = describe(checked, violations);
  if (!extra.empty()) detail += " " + extra;
  return {std::move(id), violations == 0 && checked > 0, std::move(detail)};
}

// Every set reachable from a nonempty subset of C.
LemmaResult check_subset_lemma(const DistanceContext& ctx) {
  const std::size_t n = ctx.n();
  const Dfa& b = ctx.automaton();
  const StateSet neg_cycle = ctx.negate(ctx.cycle());
  const State top = static_cast<State>(idx(n, static_cast<int>(n)));
  const State bottom = static_cast<State>(idx(n, -static_cast<int>(n)));

  const auto cycle = ctx.cycle().members();
  std::unordered_set<std::uint64_t> seen;
  std::vector<StateSet> stack;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << cycle.size()); ++pick) {
    StateSet v(2 * n);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if ((pick >> i) & 1U) v.insert(cycle[i]);
    }
    if (seen.insert(v.mask()).second) stack.push_back(v);
  }
  std::size_t violations = 0;
  while (!stack.empty()) {
    const StateSet v = stack.back();
    stack.pop_back();
    if (v.contains(top) && !v.subset_of(ctx.cycle())) ++violations;
    if (v.contains(bottom) && !v.subset_of(neg_cycle)) ++violations;
    for (Symbol s : {kA, kB}) {
      const StateSet next = apply_set(b, v, s);
      if (seen.insert(next.mask()).second) stack.push_back(next);
    }
  }
  return lemma_result("L1", seen.size(), violations);
}

LemmaResult check_distance_lemma(const DistanceContext& ctx) {
  const std::size_t len = ctx.cycle_length();
  std::size_t checked = 0;
  std::size_t violations = 0;
  for (const StateSet& side : {ctx.target(), ctx.negate(ctx.target())}) {
    const auto members = side.members();
    for (State q : members) {
      ++checked;
      if (ctx.distance_index(q, q) != len) ++violations;
    }
    for (State p : members) {
      for (State q : members) {
        if (ctx.equivalent(p, q)) continue;
        const std::size_t pq = ctx.distance_index(p, q);
        ++checked;
        if (pq == 0 || pq >= len) ++violations;
        if (pq + ctx.distance_index(q, p) != len) ++violations;
        for (State r : members) {
          const std::size_t pr = ctx.distance_index(p, r);
          if (pq >= pr) continue;
          ++checked;
          if (pq + ctx.distance_index(q, r) != pr) ++violations;
        }
      }
    }
  }
  return lemma_result("L2", checked, violations);
}

// Every ordered pair reachable from a pair inside C.
LemmaResult check_pair_lemma(const DistanceContext& ctx) {
  const std::size_t m = 2 * ctx.n();
  const Dfa& b = ctx.automaton();
  std::vector<char> seen(m * m, 0);
  std::vector<std::pair<State, State>> stack;
  for (State p : ctx.cycle().members()) {
    for (State q : ctx.cycle().members()) {
      seen[p * m + q] = 1;
      stack.emplace_back(p, q);
    }
  }
  std::size_t checked = 0;
  std::size_t violations = 0;
  while (!stack.empty()) {
    const auto [p, q] = stack.back();
    stack.pop_back();
    ++checked;
    if (ctx.distance_index(p, q) == ctx.cycle_length() && p != q) ++violations;
    for (Symbol s : {kA, kB}) {
      const State np = b.next(p, s);
      const State nq = b.next(q, s);
      if (seen[np * m + nq]) continue;
      seen[np * m + nq] = 1;
      stack.emplace_back(np, nq);
    }
  }
  return lemma_result("L3", checked, violations);
}

// Nonempty subsets of S, all of them or a fixed-seed sample.
template <typename Visit>
std::string for_target_subsets(const DistanceContext& ctx, std::size_t budget, std::uint64_t seed, Visit visit) {
  const auto members = ctx.target().members();
  const std::size_t width = members.size();
  auto build = [&](std::uint64_t pick) {
    StateSet v(2 * ctx.n());
    for (std::size_t i = 0; i < width; ++i) {
      if ((pick >> i) & 1U) v.insert(members[i]);
    }
    return v;
  };
  const std::uint64_t total = std::uint64_t{1} << width;
  if (width < 63 && total - 1 <= budget) {
    for (std::uint64_t pick = 1; pick < total; ++pick) visit(build(pick));
    return "mode=exhaustive";
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> draw(1, total - 1);
  for (std::size_t i = 0; i < budget; ++i) visit(build(draw(rng)));
  return "mode=sampled seed=" + std::to_string(seed);
}

LemmaResult check_measure_lemma(const DistanceContext& ctx, std::size_t budget) {
  const std::size_t n = ctx.n();
  const Dfa& b = ctx.automaton();
  const State top = static_cast<State>(idx(n, static_cast<int>(n)));
  const State bottom = static_cast<State>(idx(n, -static_cast<int>(n)));
  std::size_t checked = 0;
  std::size_t violations = 0;
  auto check = [&](const StateSet& v, State corner) {
    const std::size_t mu = ctx.measure(v);
    const std::size_t mu_a = ctx.measure(apply_set(b, v, kA));
    const std::size_t mu_b = ctx.measure(apply_set(b, v, kB));
    ++checked;
    if (mu_a != mu) ++violations;
    if (mu_b > mu + 1) ++violations;
    if (!v.contains(corner) && mu_b != mu) ++violations;
  };
  const std::string mode = for_target_subsets(ctx, budget, 0x6c656d6d6136ULL, [&](const StateSet& v) {
    check(v, top);
    check(ctx.negate(v), bottom);
  });
  return lemma_result("L6", checked, violations, mode);
}

LemmaResult check_optimal_word_lemma(const DistanceContext& ctx) {
  const Dfa& b = ctx.automaton();
  const StateSet neg_cycle = ctx.negate(ctx.cycle());
  const Word w = optimal_sync_word(a_family(ctx.n()), Objective::SwitchThenLength).word;
  StateSet v = ctx.target();
  std::size_t mu = ctx.measure(v);
  std::size_t increases = 0;
  std::size_t violations = 0;
  for (Symbol s : w.symbols()) {
    const StateSet next = apply_set(b, v, s);
    const std::size_t next_mu = ctx.measure(next);
    if (s == kB && next_mu == mu + 1) {
      ++increases;
      if (!v.subset_of(ctx.cycle()) && !v.subset_of(neg_cycle)) ++violations;
    }
    v = next;
    mu = next_mu;
  }
  if (!v.is_singleton()) ++violations;
  return lemma_result("L7", increases, violations, "word_length=" + std::to_string(w.size()));
}

LemmaResult check_set_pair_lemma(const DistanceContext& ctx, std::size_t budget) {
  const std::size_t n = ctx.n();
  const Dfa& b = ctx.automaton();
  std::mt19937_64 rng(0x7365747061697221ULL);
  std::uniform_int_distribution<std::size_t> length(1, 2 * n);
  std::bernoulli_distribution coin(0.5);
  std::size_t checked = 0;
  std::size_t violations = 0;
  const std::string mode = for_target_subsets(ctx, budget, 0x73616d706c6573ULL, [&](const StateSet& v) {
    Word w;
    const std::size_t len = length(rng);
    for (std::size_t i = 0; i < len; ++i) w.push_back(coin(rng) ? kB : kA);
    const StateSet image = apply_set(b, v, w);
    const std::size_t mu = ctx.measure(v);
    const std::size_t mu_image = ctx.measure(image);
    bool found = false;
    bool found_tight = false;
    for (State p : v.members()) {
      for (State q : v.members()) {
        const std::size_t d = ctx.distance_index(p, q);
        const State pw = apply_state(b, p, w);
        const State qw = apply_state(b, q, w);
        if (ctx.distance_index(pw, qw) != mu_image) continue;
        if (d <= mu) found = true;
        if (d == mu) found_tight = true;
      }
    }
    ++checked;
    if (!found) ++violations;
    if (image.is_singleton() && !found_tight) ++violations;
  });
  return lemma_result("L-setpair", checked, violations, mode);
}

}  // namespace

std::vector<LemmaResult> verify_lemmas(std::size_t n, std::size_t budget) {
  const DistanceContext ctx(n);
  return {
      check_subset_lemma(ctx),
      check_distance_lemma(ctx),
      check_pair_lemma(ctx),
      check_measure_lemma(ctx, budget),
      check_optimal_word_lemma(ctx),
      check_set_pair_lemma(ctx, budget),
  };
}

std::string format_lemma_report(const std::vector<LemmaResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) out << "LEMMA " << r.id << (r.pass ? " PASS " : " FAIL ") << r.detail << '\n';
  return out.str();
}

}  // namespace syncswitch
