#include "syncswitch/oracle.hpp"

#include <functional>
#include <vector>

namespace syncswitch::oracle {

namespace {

using Column = std::vector<State>;

StateSet image(const StateSet& v, const Column& f) {
  StateSet out(v.width());
  for (State q : v.members()) out.insert(f[q]);
  return out;
}

// Visits every word of length <= max_length together with the image of Q.
void enumerate(const Dfa& a, std::size_t max_length,
               const std::function<void(const StateSet&, std::size_t, std::size_t)>& visit) {
  std::vector<Column> columns;
  for (Symbol s = 0; s < a.symbols(); ++s) columns.push_back(a.column(s));
  std::function<void(const StateSet&, std::size_t, std::size_t, Symbol)> go =
      [&](const StateSet& v, std::size_t length, std::size_t switches, Symbol last) {
        visit(v, length, switches);
        if (length == max_length) return;
        for (Symbol s = 0; s < a.symbols(); ++s) {
          const bool run = length > 0 && s == last;
          go(image(v, columns[s]), length + 1, switches + (run ? 0 : 1), s);
        }
      };
  go(StateSet::full(a.states()), 0, 0, 0);
}

}  // namespace

std::optional<std::size_t> shortest_length(const Dfa& a, std::size_t max_length) {
  std::optional<std::size_t> best;
  enumerate(a, max_length, [&](const StateSet& v, std::size_t length, std::size_t) {
    if (v.is_singleton() && (!best || length < *best)) best = length;
  });
  if (a.states() == 1) best = 0;
  return best;
}

std::optional<std::size_t> min_switches(const Dfa& a, std::size_t max_switches) {
  if (a.states() == 1) return 0;
  // Distinct powers f, f^2, ... of each symbol, stopping at the first repeat.
  std::vector<std::vector<Column>> powers(a.symbols());
  for (Symbol s = 0; s < a.symbols(); ++s) {
    const Column f = a.column(s);
    Column cur = f;
    while (true) {
      bool repeat = false;
      for (const Column& seen : powers[s]) repeat = repeat || seen == cur;
      if (repeat) break;
      powers[s].push_back(cur);
      Column next(cur.size());
      for (std::size_t q = 0; q < cur.size(); ++q) next[q] = f[cur[q]];
      cur = std::move(next);
    }
  }
  std::optional<std::size_t> best;
  std::function<void(const StateSet&, std::size_t, std::optional<Symbol>)> go =
      [&](const StateSet& v, std::size_t runs, std::optional<Symbol> last) {
        if (v.is_singleton()) {
          if (!best || runs < *best) best = runs;
          return;
        }
        if (runs == max_switches || (best && runs + 1 >= *best)) return;
        for (Symbol s = 0; s < a.symbols(); ++s) {
          if (last == s) continue;
          for (const Column& f : powers[s]) go(image(v, f), runs + 1, s);
        }
      };
  go(StateSet::full(a.states()), 0, std::nullopt);
  return best;
}

std::uint64_t count_sync_words(const Dfa& a, std::size_t length) {
  std::uint64_t count = 0;
  enumerate(a, length, [&](const StateSet& v, std::size_t len, std::size_t) {
    if (len == length && v.is_singleton()) ++count;
  });
  return count;
}

std::optional<std::size_t> shortest_length_within(const Dfa& a, std::size_t switches, std::size_t max_length) {
  std::optional<std::size_t> best;
  enumerate(a, max_length, [&](const StateSet& v, std::size_t length, std::size_t sw) {
    if (v.is_singleton() && sw <= switches && (!best || length < *best)) best = length;
  });
  return best;
}

}  // namespace syncswitch::oracle
