#include "syncswitch/synchro.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "syncswitch/error.hpp"

namespace syncswitch {

namespace {

using kernel::TableView;

bool is_singleton_mask(std::uint64_t m) { return m != 0 && (m & (m - 1)) == 0; }

std::uint64_t full_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Image of a state set under one symbol, through per-byte lookup tables.
class ImageTable {
 public:
  explicit ImageTable(TableView t) : k_(t.k), chunks_((t.n + 7) / 8), table_(t.k * chunks_ * 256, 0) {
    for (Symbol s = 0; s < t.k; ++s) {
      for (std::size_t c = 0; c < chunks_; ++c) {
        const std::size_t base = c * 8;
        const std::size_t bits = std::min<std::size_t>(8, t.n - base);
        std::uint64_t* row = &table_[(s * chunks_ + c) * 256];
        for (std::uint32_t m = 1; m < (1U << bits); ++m) {
          const auto low = static_cast<State>(std::countr_zero(m));
          row[m] = row[m & (m - 1)] | (std::uint64_t{1} << t.next(static_cast<State>(base + low), s));
        }
      }
    }
  }

  std::uint64_t image(std::uint64_t mask, Symbol s) const {
    std::uint64_t out = 0;
    const std::uint64_t* rows = &table_[s * chunks_ * 256];
    for (std::size_t c = 0; c < chunks_; ++c, mask >>= 8) out |= rows[c * 256 + (mask & 0xFF)];
    return out;
  }

 private:
  std::size_t k_;
  std::size_t chunks_;
  std::vector<std::uint64_t> table_;
};

// Slot allocator for (subset, last symbol) nodes. Dense when the node space is
// small, hashed otherwise.
class NodeStore {
 public:
  static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

  NodeStore(std::size_t n, std::size_t lasts) : lasts_(lasts) {
    if (n <= 24 && (std::uint64_t{1} << n) * lasts <= (std::uint64_t{1} << 24)) {
      dense_.assign((std::size_t{1} << n) * lasts, kAbsent);
    }
  }

  std::pair<std::uint32_t, bool> insert(std::uint64_t mask, std::uint32_t last) {
    const auto fresh = static_cast<std::uint32_t>(masks_.size());
    std::uint32_t* slot = nullptr;
    if (!dense_.empty()) {
      slot = &dense_[mask * lasts_ + last];
      if (*slot != kAbsent) return {*slot, false};
      *slot = fresh;
    } else {
      auto [it, inserted] = sparse_.try_emplace(Key{mask, last}, fresh);
      if (!inserted) return {it->second, false};
    }
    masks_.push_back(mask);
    lasts_of_.push_back(last);
    return {fresh, true};
  }

  std::uint32_t find(std::uint64_t mask, std::uint32_t last) const {
    if (!dense_.empty()) return dense_[mask * lasts_ + last];
    auto it = sparse_.find(Key{mask, last});
    return it == sparse_.end() ? kAbsent : it->second;
  }

  std::size_t size() const { return masks_.size(); }
  std::uint64_t mask(std::uint32_t slot) const { return masks_[slot]; }
  std::uint32_t last(std::uint32_t slot) const { return lasts_of_[slot]; }

 private:
  struct Key {
    std::uint64_t mask;
    std::uint32_t last;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& key) const noexcept {
      return std::hash<std::uint64_t>{}(key.mask * 0x9E3779B97F4A7C15ULL + key.last);
    }
  };

  std::size_t lasts_;
  std::vector<std::uint32_t> dense_;
  std::unordered_map<Key, std::uint32_t, KeyHash> sparse_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint32_t> lasts_of_;
};

enum class Mode { Length, SwitchThenLength };

// Packed lexicographic cost: switch count in the high word, length in the low word.
constexpr std::uint64_t pack(std::uint64_t sw, std::uint64_t len) { return (sw << 32) | len; }
constexpr std::size_t cost_length(std::uint64_t c) { return static_cast<std::size_t>(c & 0xFFFFFFFFULL); }

// All nodes whose optimal cost is at most the target optimum, in settle order.
struct Exploration {
  Mode mode;
  std::size_t k;
  ImageTable images;
  NodeStore store;
  std::vector<std::uint64_t> cost;
  std::vector<char> settled;
  std::vector<std::uint32_t> order;
  std::uint64_t optimum = 0;

  Exploration(const Dfa& a, Mode m)
      : mode(m),
        k(a.symbols()),
        images(kernel::view(a)),
        store(a.states(), m == Mode::Length ? 1 : a.symbols() + 1) {}

  std::uint32_t none() const { return mode == Mode::Length ? 0 : static_cast<std::uint32_t>(k); }

  std::uint64_t edge_cost(std::uint32_t from, Symbol s) const {
    if (mode == Mode::Length) return 1;
    return store.last(from) == s ? pack(0, 1) : pack(1, 1);
  }

  std::uint32_t successor_last(Symbol s) const { return mode == Mode::Length ? 0 : s; }

  bool is_target(std::uint32_t slot) const { return is_singleton_mask(store.mask(slot)); }

  // Successor along an edge of the optimal-cost DAG, or kAbsent.
  std::uint32_t tight_successor(std::uint32_t u, Symbol s) const {
    const std::uint64_t m = images.image(store.mask(u), s);
    const std::uint32_t v = store.find(m, successor_last(s));
    if (v == NodeStore::kAbsent || !settled[v]) return NodeStore::kAbsent;
    return cost[v] == cost[u] + edge_cost(u, s) ? v : NodeStore::kAbsent;
  }
};

Exploration explore(const Dfa& a, Mode mode) {
  check_capacity(a.states());
  Exploration ex(a, mode);
  const std::uint64_t source_mask = full_mask(a.states());
  ex.store.insert(source_mask, ex.none());
  ex.cost.push_back(0);
  ex.settled.push_back(0);
  bool found = false;

  if (mode == Mode::Length) {
    // Breadth-first; discovery order is settle order.
    ex.settled[0] = 1;
    ex.order.push_back(0);
    if (is_singleton_mask(source_mask)) return ex;
    for (std::size_t head = 0; head < ex.order.size(); ++head) {
      const std::uint32_t u = ex.order[head];
      if (found && ex.cost[u] >= ex.optimum) break;
      for (Symbol s = 0; s < ex.k; ++s) {
        const std::uint64_t m = ex.images.image(ex.store.mask(u), s);
        auto [v, inserted] = ex.store.insert(m, 0);
        if (!inserted) continue;
        ex.cost.push_back(ex.cost[u] + 1);
        ex.settled.push_back(1);
        ex.order.push_back(v);
        if (!found && is_singleton_mask(m)) {
          found = true;
          ex.optimum = ex.cost[v];
        }
      }
    }
  } else {
    using Entry = std::pair<std::uint64_t, std::uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    heap.emplace(0, 0);
    while (!heap.empty()) {
      auto [c, u] = heap.top();
      heap.pop();
      if (ex.settled[u] || c != ex.cost[u]) continue;
      if (found && c > ex.optimum) break;
      ex.settled[u] = 1;
      ex.order.push_back(u);
      if (ex.is_target(u)) {
        if (!found) {
          found = true;
          ex.optimum = c;
        }
        continue;
      }
      for (Symbol s = 0; s < ex.k; ++s) {
        const std::uint64_t m = ex.images.image(ex.store.mask(u), s);
        auto [v, inserted] = ex.store.insert(m, s);
        if (inserted) {
          ex.cost.push_back(std::numeric_limits<std::uint64_t>::max());
          ex.settled.push_back(0);
        }
        const std::uint64_t nc = c + ex.edge_cost(u, s);
        if (nc < ex.cost[v]) {
          ex.cost[v] = nc;
          heap.emplace(nc, v);
        }
      }
    }
  }
  if (!found) throw NotSynchronizing();
  return ex;
}

std::uint64_t count_paths(const Exploration& ex) {
  std::vector<std::uint64_t> ways(ex.store.size(), 0);
  ways[0] = 1;
  std::uint64_t total = 0;
  for (std::uint32_t u : ex.order) {
    if (ways[u] == 0) continue;
    if (ex.is_target(u)) {
      if (ex.cost[u] == ex.optimum && __builtin_add_overflow(total, ways[u], &total)) throw CountOverflow();
      continue;
    }
    for (Symbol s = 0; s < ex.k; ++s) {
      const std::uint32_t v = ex.tight_successor(u, s);
      if (v == NodeStore::kAbsent) continue;
      if (__builtin_add_overflow(ways[v], ways[u], &ways[v])) throw CountOverflow();
    }
  }
  return total;
}

Word smallest_optimal_word(const Exploration& ex) {
  std::vector<char> good(ex.store.size(), 0);
  for (auto it = ex.order.rbegin(); it != ex.order.rend(); ++it) {
    const std::uint32_t u = *it;
    if (ex.is_target(u)) {
      good[u] = ex.cost[u] == ex.optimum;
      continue;
    }
    for (Symbol s = 0; s < ex.k && !good[u]; ++s) {
      const std::uint32_t v = ex.tight_successor(u, s);
      good[u] = v != NodeStore::kAbsent && good[v];
    }
  }
  Word w;
  std::uint32_t u = 0;
  while (!ex.is_target(u)) {
    for (Symbol s = 0; s < ex.k; ++s) {
      const std::uint32_t v = ex.tight_successor(u, s);
      if (v != NodeStore::kAbsent && good[v]) {
        w.push_back(s);
        u = v;
        break;
      }
    }
  }
  return w;
}

struct ZeroOneResult {
  std::size_t distance;
  Word word;
};

// 0/1-weighted breadth-first search over (subset, last symbol) nodes.
ZeroOneResult zero_one_search(const Dfa& a) {
  check_capacity(a.states());
  const std::size_t k = a.symbols();
  const auto none = static_cast<std::uint32_t>(k);
  ImageTable images(kernel::view(a));
  NodeStore store(a.states(), k + 1);
  std::vector<std::uint32_t> dist;
  std::vector<std::uint32_t> parent;
  std::vector<char> done;

  auto touch = [&](std::uint64_t m, std::uint32_t last) {
    auto [slot, inserted] = store.insert(m, last);
    if (inserted) {
      dist.push_back(std::numeric_limits<std::uint32_t>::max());
      parent.push_back(NodeStore::kAbsent);
      done.push_back(0);
    }
    return slot;
  };

  const std::uint32_t source = touch(full_mask(a.states()), none);
  dist[source] = 0;
  std::deque<std::uint32_t> frontier{source};
  while (!frontier.empty()) {
    const std::uint32_t u = frontier.front();
    frontier.pop_front();
    if (done[u]) continue;
    done[u] = 1;
    if (is_singleton_mask(store.mask(u))) {
      Word reversed;
      for (std::uint32_t v = u; parent[v] != NodeStore::kAbsent; v = parent[v]) reversed.push_back(store.last(v));
      std::vector<Symbol> symbols(reversed.symbols().rbegin(), reversed.symbols().rend());
      return {dist[u], Word(std::move(symbols))};
    }
    for (Symbol s = 0; s < k; ++s) {
      const std::uint32_t v = touch(images.image(store.mask(u), s), s);
      const std::uint32_t w = store.last(u) == s ? 0 : 1;
      if (dist[u] + w < dist[v]) {
        dist[v] = dist[u] + w;
        parent[v] = u;
        if (w == 0) {
          frontier.push_front(v);
        } else {
          frontier.push_back(v);
        }
      }
    }
  }
  throw NotSynchronizing();
}

}  // namespace

SearchNode source_node(const Dfa& a) { return {StateSet::full(a.states()), std::nullopt}; }

std::pair<SearchNode, std::size_t> step(const Dfa& a, const SearchNode& node, Symbol s) {
  const std::size_t cost = node.last == s ? 0 : 1;
  return {SearchNode{apply_set(a, node.set, s), s}, cost};
}

bool is_synchronizing(const Dfa& a) {
  const std::size_t n = a.states();
  const std::size_t k = a.symbols();
  if (n == 1) return true;
  // Reverse edges of the pair graph, collected per (symbol, target state).
  std::vector<std::vector<State>> pre(n * k);
  for (State q = 0; q < n; ++q) {
    for (Symbol s = 0; s < k; ++s) pre[a.next(q, s) * k + s].push_back(q);
  }
  std::vector<char> mergeable(n * n, 0);
  std::vector<std::pair<State, State>> queue;
  auto mark = [&](State p, State q) {
    if (p == q) return;
    if (p > q) std::swap(p, q);
    if (mergeable[p * n + q]) return;
    mergeable[p * n + q] = 1;
    queue.emplace_back(p, q);
  };
  // Seeds: the diagonal. Any pair collapsing in one step is mergeable.
  for (State t = 0; t < n; ++t) {
    for (Symbol s = 0; s < k; ++s) {
      const auto& ps = pre[t * k + s];
      for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) mark(ps[i], ps[j]);
      }
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [x, y] = queue[head];
    for (Symbol s = 0; s < k; ++s) {
      for (State p : pre[x * k + s]) {
        for (State q : pre[y * k + s]) mark(p, q);
      }
    }
  }
  return queue.size() == n * (n - 1) / 2;
}

std::size_t shortest_sync_length(const Dfa& a) { return cost_length(explore(a, Mode::Length).optimum); }

std::size_t min_switch_count(const Dfa& a) { return zero_one_search(a).distance; }

SyncResult optimal_sync_word(const Dfa& a, Objective objective) {
  SyncResult result;
  if (objective == Objective::Switch) {
    result.word = zero_one_search(a).word;
  } else {
    const Exploration ex = explore(a, objective == Objective::Length ? Mode::Length : Mode::SwitchThenLength);
    result.word = smallest_optimal_word(ex);
    result.witness_count = count_paths(ex);
  }
  result.length = result.word.size();
  result.switches = switch_count(result.word);
  return result;
}

std::uint64_t count_optimal_words(const Dfa& a, Objective objective) {
  if (objective == Objective::Switch) {
    throw std::invalid_argument("words of minimal switch count are unbounded in number; use switch-then-length");
  }
  return count_paths(explore(a, objective == Objective::Length ? Mode::Length : Mode::SwitchThenLength));
}

namespace kernel {

bool has_non_injective_symbol(TableView t) {
  for (Symbol s = 0; s < t.k; ++s) {
    std::uint64_t seen = 0;
    for (State q = 0; q < t.n; ++q) seen |= std::uint64_t{1} << t.next(q, s);
    if (std::popcount(seen) != static_cast<int>(t.n)) return true;
  }
  return false;
}

bool pairs_mergeable(TableView t) {
  if (t.n > 64) throw CapacityError("pair criterion kernel supports at most 64 states");
  // merged[p] has bit q set once {p, q} is known to be mergeable.
  std::uint64_t merged[64];
  for (State p = 0; p < t.n; ++p) merged[p] = std::uint64_t{1} << p;
  const std::size_t pairs = t.n * (t.n - 1) / 2;
  std::size_t known = 0;
  bool changed = true;
  while (changed && known < pairs) {
    changed = false;
    for (State p = 0; p < t.n; ++p) {
      for (State q = p + 1; q < t.n; ++q) {
        if ((merged[p] >> q) & 1U) continue;
        for (Symbol s = 0; s < t.k; ++s) {
          const State x = t.next(p, s);
          const State y = t.next(q, s);
          if ((merged[x] >> y) & 1U) {
            merged[p] |= std::uint64_t{1} << q;
            merged[q] |= std::uint64_t{1} << p;
            ++known;
            changed = true;
            break;
          }
        }
      }
    }
  }
  return known == pairs;
}

std::optional<std::size_t> SwitchScratch::min_switch(TableView t) {
  if (t.n > 16) throw CapacityError("switch kernel supports at most 16 states");
  const std::size_t subsets = std::size_t{1} << t.n;
  const std::size_t lasts = t.k + 1;
  const std::size_t nodes = subsets * lasts;
  images_.resize(subsets * t.k);
  for (Symbol s = 0; s < t.k; ++s) {
    std::uint64_t* row = &images_[s * subsets];
    row[0] = 0;
    for (std::size_t m = 1; m < subsets; ++m) {
      row[m] = row[m & (m - 1)] | (std::uint64_t{1} << t.next(static_cast<State>(std::countr_zero(m)), s));
    }
  }
  constexpr std::uint16_t kInf = std::numeric_limits<std::uint16_t>::max();
  dist_.assign(nodes, kInf);
  // Double-ended queue in a flat buffer. A node is relaxed at most twice in a
  // 0/1 search, which bounds the pushes on either side of the start.
  const std::size_t room = 2 * nodes + 2;
  deque_.resize(2 * room + 1);
  std::size_t head = room;
  std::size_t tail = room;
  const std::size_t source = (subsets - 1) * lasts + t.k;
  dist_[source] = 0;
  deque_[tail++] = static_cast<std::uint32_t>(source);
  while (head != tail) {
    const std::uint32_t u = deque_[head++];
    const std::size_t m = u / lasts;
    const std::size_t last = u % lasts;
    const std::uint16_t du = dist_[u];
    if (is_singleton_mask(m)) return du;
    for (Symbol s = 0; s < t.k; ++s) {
      const std::size_t v = images_[s * subsets + m] * lasts + s;
      const std::uint16_t w = last == s ? 0 : 1;
      if (du + w < dist_[v]) {
        dist_[v] = static_cast<std::uint16_t>(du + w);
        if (w == 0) {
          deque_[--head] = static_cast<std::uint32_t>(v);
        } else {
          deque_[tail++] = static_cast<std::uint32_t>(v);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace kernel

}  // namespace syncswitch
