#include "syncswitch/closure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "syncswitch/error.hpp"

namespace syncswitch {

namespace {

using Column = std::vector<State>;

Column identity_column(std::size_t n) {
  Column id(n);
  std::iota(id.begin(), id.end(), State{0});
  return id;
}

// Powers f, f^2, ... up to (excluding) the first repeat.
std::vector<Column> distinct_powers(const Column& f) {
  std::vector<Column> powers{f};
  for (;;) {
    const Column& prev = powers.back();
    Column next(prev.size());
    for (std::size_t q = 0; q < prev.size(); ++q) next[q] = f[prev[q]];
    if (std::find(powers.begin(), powers.end(), next) != powers.end()) return powers;
    powers.push_back(std::move(next));
  }
}

Dfa from_columns(std::size_t n, const std::vector<Column>& columns) {
  const std::size_t k = columns.size();
  std::vector<State> delta(n * k);
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t q = 0; q < n; ++q) delta[q * k + s] = columns[s][q];
  }
  return Dfa(n, k, std::move(delta));
}

}  // namespace

PowerClosure power_closure(const Dfa& a) {
  const std::size_t n = a.states();
  const Column id = identity_column(n);
  std::vector<Column> columns;
  ClosureMap map;
  for (Symbol s = 0; s < a.symbols(); ++s) {
    columns.push_back(a.column(s));
    map.provenance.push_back({s, 1});
  }
  for (Symbol s = 0; s < a.symbols(); ++s) {
    const auto powers = distinct_powers(a.column(s));
    for (std::size_t e = 2; e <= powers.size(); ++e) {
      const Column& p = powers[e - 1];
      if (p == id || std::find(columns.begin(), columns.end(), p) != columns.end()) continue;
      columns.push_back(p);
      map.provenance.push_back({s, e});
    }
  }
  return {from_columns(n, columns), std::move(map)};
}

bool is_power_closed(const Dfa& a) {
  const Column id = identity_column(a.states());
  std::vector<Column> columns;
  for (Symbol s = 0; s < a.symbols(); ++s) columns.push_back(a.column(s));
  for (const Column& c : columns) {
    for (const Column& p : distinct_powers(c)) {
      if (p != id && std::find(columns.begin(), columns.end(), p) == columns.end()) return false;
    }
  }
  return true;
}

std::string serialize_closure(const PowerClosure& closure) {
  std::ostringstream out;
  out << serialize_dfa(closure.automaton);
  for (std::size_t i = 0; i < closure.map.provenance.size(); ++i) {
    const auto& p = closure.map.provenance[i];
    if (p.exponent == 1) continue;
    Word base;
    base.push_back(p.base);
    out << "# s" << i << " = " << to_string(base) << '^' << p.exponent << '\n';
  }
  return out.str();
}

Dfa f_transform(const Dfa& a) {
  const std::size_t n = a.states();
  const std::size_t k = a.symbols();
  const std::size_t k2 = k + 1;
  const auto c = static_cast<Symbol>(k);
  std::vector<State> delta(2 * n * k2);
  for (State q = 0; q < n; ++q) {
    const State primed = q + static_cast<State>(n);
    for (Symbol s = 0; s < k; ++s) {
      delta[q * k2 + s] = q;
      delta[primed * k2 + s] = a.next(q, s);
    }
    delta[q * k2 + c] = primed;
    delta[primed * k2 + c] = primed;
  }
  return Dfa(2 * n, k2, std::move(delta));
}

Dfa f2_transform(const Dfa& a) {
  if (a.symbols() != 2) {
    throw AlphabetMismatch("f2 transform needs a binary automaton, got " + std::to_string(a.symbols()) + " symbols");
  }
  constexpr Symbol kA = 0;
  constexpr Symbol kB = 1;
  const auto n = static_cast<State>(a.states());
  std::vector<State> delta(3 * n * 2);
  for (State q = 0; q < n; ++q) {
    const State primed = q + n;
    const State mid = q + 2 * n;
    delta[q * 2 + kA] = mid;
    delta[q * 2 + kB] = q;
    delta[primed * 2 + kA] = a.next(q, kA);
    delta[primed * 2 + kB] = a.next(q, kB);
    delta[mid * 2 + kA] = mid;
    delta[mid * 2 + kB] = primed;
  }
  return Dfa(3 * n, 2, std::move(delta));
}

}  // namespace syncswitch
