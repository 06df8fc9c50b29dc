#include "syncswitch/automaton.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "syncswitch/error.hpp"

namespace syncswitch {

std::size_t max_states() {
  static const std::size_t cap = [] {
    std::size_t value = 32;
    if (const char* env = std::getenv("SYNCSWITCH_MAX_STATES")) {
      std::size_t parsed = 0;
      const std::string_view text(env);
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
      if (ec == std::errc{} && ptr == text.data() + text.size() && parsed > 0) value = parsed;
    }
    return std::min(value, kStateSetBits);
  }();
  return cap;
}

void check_capacity(std::size_t n) {
  if (n > max_states()) {
    throw CapacityError("automaton has " + std::to_string(n) + " states, cap is " +
                        std::to_string(max_states()) + " (set SYNCSWITCH_MAX_STATES)");
  }
}

// ---------------------------------------------------------------- Dfa

Dfa::Dfa(std::size_t n, std::size_t k, std::vector<State> delta)
    : n_(n), k_(k), delta_(std::move(delta)) {
  if (n_ == 0 || k_ == 0) throw std::invalid_argument("a DFA needs at least one state and one symbol");
  if (delta_.size() != n_ * k_) throw std::invalid_argument("transition table size is not n*k");
  for (State t : delta_) {
    if (t >= n_) throw std::invalid_argument("transition target out of range");
  }
}

Dfa Dfa::identity(std::size_t n, std::size_t k) {
  std::vector<State> delta(n * k);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t s = 0; s < k; ++s) delta[q * k + s] = static_cast<State>(q);
  }
  return Dfa(n, k, std::move(delta));
}

std::vector<State> Dfa::column(Symbol s) const {
  std::vector<State> col(n_);
  for (std::size_t q = 0; q < n_; ++q) col[q] = delta_[q * k_ + s];
  return col;
}

// ---------------------------------------------------------------- Word

Word& Word::operator+=(const Word& other) {
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  return *this;
}

Word Word::repeated(std::size_t times) const {
  Word out;
  out.symbols_.reserve(symbols_.size() * times);
  for (std::size_t i = 0; i < times; ++i) out += *this;
  return out;
}

std::size_t switch_count(const Word& w) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i == 0 || w[i] != w[i - 1]) ++count;
  }
  return count;
}

namespace {

void append_symbol(std::string& out, Symbol s) {
  if (s < 26) {
    out.push_back(static_cast<char>('a' + s));
  } else {
    out += '[' + std::to_string(s) + ']';
  }
}

}  // namespace

std::string to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w.symbols()) append_symbol(out, s);
  return out;
}

std::string to_display_string(const Word& w) {
  constexpr std::size_t kMaxPeriod = 4;
  const auto sym = w.symbols();
  std::string out;
  std::size_t i = 0;
  while (i < sym.size()) {
    std::size_t best_period = 1;
    std::size_t best_reps = 1;
    for (std::size_t p = 1; p <= kMaxPeriod && i + 2 * p <= sym.size(); ++p) {
      // A block must not itself be a run, otherwise (aa)^2 would win over a^4.
      if (p > 1 && std::all_of(sym.begin() + i, sym.begin() + i + p, [&](Symbol s) { return s == sym[i]; })) continue;
      std::size_t reps = 1;
      while (i + (reps + 1) * p <= sym.size() &&
             std::equal(sym.begin() + i, sym.begin() + i + p, sym.begin() + i + reps * p)) {
        ++reps;
      }
      if (reps >= 2 && reps * p > best_reps * best_period) {
        best_period = p;
        best_reps = reps;
      }
    }
    if (best_period == 1) {
      append_symbol(out, sym[i]);
    } else {
      out.push_back('(');
      for (std::size_t j = 0; j < best_period; ++j) append_symbol(out, sym[i + j]);
      out.push_back(')');
    }
    if (best_reps > 1) out += '^' + std::to_string(best_reps);
    i += best_period * best_reps;
  }
  return out;
}

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = sequence();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(ParseError::Kind::MalformedWord,
                     "malformed word at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  std::size_t number() {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  Word sequence() {
    Word out;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') return out;
      Word atom;
      const char c = text_[pos_];
      if (c >= 'a' && c <= 'z') {
        atom.push_back(static_cast<Symbol>(c - 'a'));
        ++pos_;
      } else if (c == '[') {
        ++pos_;
        atom.push_back(static_cast<Symbol>(number()));
        if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
        ++pos_;
      } else if (c == '(') {
        ++pos_;
        atom = sequence();
        if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
        ++pos_;
      } else {
        fail("unexpected '" + std::string(1, c) + "'");
      }
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        skip_space();
        atom = atom.repeated(number());
      }
      out += atom;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

// ---------------------------------------------------------------- StateSet

StateSet::StateSet(std::size_t width) : width_(width) {
  if (width > kStateSetBits) throw CapacityError("StateSet width exceeds 64 bits");
}

StateSet StateSet::full(std::size_t width) {
  StateSet v(width);
  v.bits_ = width == kStateSetBits ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
  return v;
}

StateSet StateSet::singleton(std::size_t width, State q) {
  StateSet v(width);
  v.insert(q);
  return v;
}

StateSet StateSet::from_mask(std::size_t width, std::uint64_t mask) {
  StateSet v = full(width);
  if ((mask & ~v.bits_) != 0) throw std::invalid_argument("mask has bits beyond the set width");
  v.bits_ = mask;
  return v;
}

std::size_t StateSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

void StateSet::insert(State q) {
  if (q >= width_) throw std::out_of_range("state outside StateSet width");
  bits_ |= std::uint64_t{1} << q;
}

void StateSet::erase(State q) {
  if (q < width_) bits_ &= ~(std::uint64_t{1} << q);
}

std::vector<State> StateSet::members() const {
  std::vector<State> out;
  for (std::uint64_t m = bits_; m != 0; m &= m - 1) out.push_back(static_cast<State>(std::countr_zero(m)));
  return out;
}

StateSet StateSet::operator|(const StateSet& o) const {
  StateSet v(std::max(width_, o.width_));
  v.bits_ = bits_ | o.bits_;
  return v;
}

StateSet StateSet::operator&(const StateSet& o) const {
  StateSet v(std::max(width_, o.width_));
  v.bits_ = bits_ & o.bits_;
  return v;
}

std::string to_string(const StateSet& v) {
  std::string out = "{";
  bool first = true;
  for (State q : v.members()) {
    if (!first) out += ',';
    out += std::to_string(q);
    first = false;
  }
  return out + '}';
}

// ---------------------------------------------------------------- actions

namespace {

void check_word(const Dfa& a, const Word& w) {
  for (Symbol s : w.symbols()) {
    if (s >= a.symbols()) {
      throw ParseError(ParseError::Kind::MalformedWord,
                       "symbol index " + std::to_string(s) + " outside alphabet of size " +
                           std::to_string(a.symbols()));
    }
  }
}

}  // namespace

State apply_state(const Dfa& a, State q, const Word& w) {
  if (q >= a.states()) throw std::out_of_range("state index out of range");
  check_word(a, w);
  for (Symbol s : w.symbols()) q = a.next(q, s);
  return q;
}

StateSet apply_set(const Dfa& a, const StateSet& v, Symbol s) {
  if (s >= a.symbols()) {
    throw ParseError(ParseError::Kind::MalformedWord, "symbol index " + std::to_string(s) + " out of range");
  }
  StateSet out(a.states());
  for (State q : v.members()) out.insert(a.next(q, s));
  return out;
}

StateSet apply_set(const Dfa& a, const StateSet& v, const Word& w) {
  check_word(a, w);
  StateSet cur = v;
  for (Symbol s : w.symbols()) {
    if (cur.empty()) break;
    cur = apply_set(a, cur, s);
  }
  return cur;
}

StateSet preimage(const Dfa& a, const StateSet& v, Symbol s) {
  if (s >= a.symbols()) throw std::out_of_range("symbol index out of range");
  StateSet out(a.states());
  for (State q = 0; q < a.states(); ++q) {
    if (v.contains(a.next(q, s))) out.insert(q);
  }
  return out;
}

bool synchronizes(const Dfa& a, const Word& w) {
  return apply_set(a, StateSet::full(a.states()), w).is_singleton();
}

// ---------------------------------------------------------------- canonical form

namespace {

// Builds the relabeled table in new-index order and abandons it as soon as it
// compares greater than the incumbent.
bool relabel_if_smaller(const Dfa& a, std::span<const State> perm, std::span<const State> inv,
                        std::span<const Symbol> sym_inv, std::vector<State>& best, std::vector<State>& scratch,
                        bool have_best) {
  const std::size_t n = a.states();
  const std::size_t k = a.symbols();
  bool smaller = !have_best;
  for (std::size_t i = 0; i < n; ++i) {
    const State old_q = inv[i];
    for (std::size_t j = 0; j < k; ++j) {
      const State t = perm[a.next(old_q, sym_inv[j])];
      const std::size_t idx = i * k + j;
      scratch[idx] = t;
      if (!smaller) {
        if (t > best[idx]) return false;
        if (t < best[idx]) smaller = true;
      }
    }
  }
  if (smaller) best.swap(scratch);
  return smaller;
}

}  // namespace

Dfa canonical_form(const Dfa& a, IsoConvention convention) {
  const std::size_t n = a.states();
  const std::size_t k = a.symbols();
  std::vector<State> inv(n);
  std::vector<State> perm(n);
  std::vector<Symbol> sym_inv(k);
  std::iota(sym_inv.begin(), sym_inv.end(), Symbol{0});
  std::vector<State> best(n * k);
  std::vector<State> scratch(n * k);
  bool have_best = false;
  do {
    std::iota(inv.begin(), inv.end(), State{0});
    do {
      for (std::size_t i = 0; i < n; ++i) perm[inv[i]] = static_cast<State>(i);
      if (relabel_if_smaller(a, perm, inv, sym_inv, best, scratch, have_best)) have_best = true;
    } while (std::next_permutation(inv.begin(), inv.end()));
  } while (convention == IsoConvention::StatesAndSymbols && std::next_permutation(sym_inv.begin(), sym_inv.end()));
  return Dfa(n, k, std::move(best));
}

bool isomorphic(const Dfa& a, const Dfa& b, IsoConvention convention) {
  if (a.states() != b.states() || a.symbols() != b.symbols()) return false;
  return canonical_form(a, convention) == canonical_form(b, convention);
}

// ---------------------------------------------------------------- text format

namespace {

std::vector<std::vector<std::string_view>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<std::string_view>> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

bool to_number(std::string_view token, std::size_t& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

Dfa parse_dfa(std::string_view text) {
  using Kind = ParseError::Kind;
  const auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError(Kind::MalformedHeader, "empty input: expected header \"n k\"");
  std::size_t n = 0;
  std::size_t k = 0;
  const auto& header = lines.front();
  if (header.size() != 2 || !to_number(header[0], n) || !to_number(header[1], k) || n == 0 || k == 0) {
    throw ParseError(Kind::MalformedHeader, "header must be two positive integers \"n k\"");
  }
  if (lines.size() - 1 != n) {
    throw ParseError(Kind::WrongRowCount,
                     "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  }
  std::vector<State> delta;
  delta.reserve(n * k);
  for (std::size_t q = 0; q < n; ++q) {
    const auto& row = lines[q + 1];
    if (row.size() != k) {
      throw ParseError(Kind::MalformedRow, "row " + std::to_string(q) + " has " + std::to_string(row.size()) +
                                               " entries, expected " + std::to_string(k));
    }
    for (std::string_view token : row) {
      std::size_t t = 0;
      if (!to_number(token, t)) {
        throw ParseError(Kind::MalformedRow, "row " + std::to_string(q) + ": '" + std::string(token) +
                                                 "' is not a state index");
      }
      if (t >= n) {
        throw ParseError(Kind::OutOfRange, "row " + std::to_string(q) + ": state " + std::to_string(t) +
                                               " out of range [0, " + std::to_string(n) + ")");
      }
      delta.push_back(static_cast<State>(t));
    }
  }
  return Dfa(n, k, std::move(delta));
}

std::string serialize_dfa(const Dfa& a) {
  std::ostringstream out;
  out << a.states() << ' ' << a.symbols() << '\n';
  for (State q = 0; q < a.states(); ++q) {
    for (Symbol s = 0; s < a.symbols(); ++s) {
      if (s != 0) out << ' ';
      out << a.next(q, s);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace syncswitch
