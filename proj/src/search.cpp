#include "syncswitch/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "syncswitch/error.hpp"
#include "syncswitch/synchro.hpp"

namespace syncswitch {

namespace {

constexpr std::uint64_t kQuickSpace = 100'000'000;
constexpr std::uint64_t kLongSpace = 2'176'782'336;  // 6^12
constexpr std::uint64_t kShardSize = std::uint64_t{1} << 24;
// Raw extremal hits kept before folding them into canonical forms.
constexpr std::size_t kRawHitLimit = std::size_t{1} << 16;

// Table entries enumerated by the index digits.
std::vector<std::size_t> free_slots(std::size_t n, std::size_t k, SearchSpace space) {
  std::vector<std::size_t> slots;
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t s = space == SearchSpace::Cyclic ? 1 : 0; s < k; ++s) slots.push_back(q * k + s);
  }
  return slots;
}

std::vector<State> base_table(std::size_t n, std::size_t k, SearchSpace space) {
  std::vector<State> delta(n * k, 0);
  if (space == SearchSpace::Cyclic) {
    for (std::size_t q = 0; q < n; ++q) delta[q * k] = static_cast<State>((q + 1) % n);
  }
  return delta;
}

void check_shape(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) throw std::invalid_argument("search needs n >= 1 and k >= 1");
}

std::string form_count(const ExtremalReport& r, IsoConvention c) { return std::to_string(r.forms(c).size()); }

std::string max_text(const ExtremalReport& r) { return r.max_sw ? std::to_string(*r.max_sw) : "none"; }

}  // namespace

std::uint64_t space_size(std::size_t n, std::size_t k, SearchSpace space) {
  check_shape(n, k);
  std::uint64_t total = 1;
  for (std::size_t i = 0, digits = free_slots(n, k, space).size(); i < digits; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / n) throw SearchGuard("search space exceeds 64-bit indices");
    total *= n;
  }
  return total;
}

Dfa decode(std::size_t n, std::size_t k, SearchSpace space, std::uint64_t index) {
  if (index >= space_size(n, k, space)) throw std::out_of_range("enumeration index out of range");
  std::vector<State> delta = base_table(n, k, space);
  for (std::size_t slot : free_slots(n, k, space)) {
    delta[slot] = static_cast<State>(index % n);
    index /= n;
  }
  return Dfa(n, k, std::move(delta));
}

std::uint64_t encode(const Dfa& a, SearchSpace space) {
  const std::size_t n = a.states();
  const std::size_t k = a.symbols();
  if (space == SearchSpace::Cyclic && a.column(0) != Dfa(n, k, base_table(n, k, space)).column(0)) {
    throw std::invalid_argument("symbol 0 is not the standard cycle");
  }
  const auto slots = free_slots(n, k, space);
  std::uint64_t index = 0;
  for (auto it = slots.rbegin(); it != slots.rend(); ++it) index = index * n + a.table()[*it];
  return index;
}

std::vector<Shard> make_shards(std::size_t n, std::size_t k, SearchSpace space, std::size_t count) {
  const std::uint64_t total = space_size(n, k, space);
  count = std::max<std::size_t>(1, std::min<std::uint64_t>(count, total));
  std::vector<Shard> shards;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t lo = total / count * i + std::min<std::uint64_t>(i, total % count);
    const std::uint64_t hi = lo + total / count + (i < total % count ? 1 : 0);
    shards.push_back({n, k, space, lo, hi});
  }
  return shards;
}

// ---------------------------------------------------------------- reports

std::vector<Dfa> ExtremalReport::forms(IsoConvention convention) const {
  if (convention == IsoConvention::StatesOnly) return extremal_forms;
  std::set<Dfa> out;
  for (const Dfa& f : extremal_forms) out.insert(canonical_form(f, convention));
  return {out.begin(), out.end()};
}

ExtremalReport empty_report(std::size_t n, std::size_t k) {
  ExtremalReport r;
  r.n = n;
  r.k = k;
  return r;
}

ExtremalReport merge_reports(const ExtremalReport& a, const ExtremalReport& b) {
  if (a.n != b.n || a.k != b.k) throw std::invalid_argument("cannot merge reports of different shapes");
  ExtremalReport out = empty_report(a.n, a.k);
  out.scanned = a.scanned + b.scanned;
  out.elapsed_seconds = a.elapsed_seconds + b.elapsed_seconds;
  out.max_sw = a.max_sw && b.max_sw ? std::max(*a.max_sw, *b.max_sw) : (a.max_sw ? a.max_sw : b.max_sw);
  std::set<Dfa> forms;
  for (const ExtremalReport* r : {&a, &b}) {
    if (r->max_sw && r->max_sw == out.max_sw) forms.insert(r->extremal_forms.begin(), r->extremal_forms.end());
  }
  out.extremal_forms.assign(forms.begin(), forms.end());
  return out;
}

// ---------------------------------------------------------------- scanning

ExtremalReport scan_shard(const Shard& shard) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = shard.n;
  const std::size_t k = shard.k;
  if (shard.hi > space_size(n, k, shard.space) || shard.lo > shard.hi) throw std::out_of_range("shard outside the space");

  ExtremalReport report = empty_report(n, k);
  if (shard.lo == shard.hi) return report;

  const auto slots = free_slots(n, k, shard.space);
  const Dfa first = decode(n, k, shard.space, shard.lo);
  std::vector<State> delta(first.table().begin(), first.table().end());
  const kernel::TableView view{n, k, delta.data()};
  kernel::SwitchScratch scratch;

  std::set<Dfa> forms;
  std::vector<std::vector<State>> raw;
  auto fold = [&] {
    for (auto& table : raw) forms.insert(canonical_form(Dfa(n, k, std::move(table)), IsoConvention::StatesOnly));
    raw.clear();
  };

  for (std::uint64_t index = shard.lo; index < shard.hi; ++index) {
    std::optional<std::size_t> sw;
    if (n == 1) {
      sw = 0;
    } else if (kernel::has_non_injective_symbol(view) && kernel::pairs_mergeable(view)) {
      sw = scratch.min_switch(view);
    }
    if (sw) {
      if (!report.max_sw || *sw > *report.max_sw) {
        report.max_sw = sw;
        raw.clear();
        forms.clear();
      }
      if (*sw == *report.max_sw) {
        raw.push_back(delta);
        if (raw.size() >= kRawHitLimit) fold();
      }
    }
    // Odometer step over the free entries.
    for (std::size_t slot : slots) {
      if (++delta[slot] < n) break;
      delta[slot] = 0;
    }
  }
  fold();
  report.extremal_forms.assign(forms.begin(), forms.end());
  report.scanned = shard.hi - shard.lo;
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

ExtremalReport run_search(std::size_t n, std::size_t k, SearchSpace space, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = space_size(n, k, space);
  if (n > 16) throw SearchGuard("exhaustive search supports at most 16 states");
  if (total > kLongSpace && !options.force) {
    throw SearchGuard("search space of " + std::to_string(total) + " tables needs an explicit override");
  }
  if (total > kQuickSpace && !options.long_run && !options.force) {
    throw SearchGuard("search space of " + std::to_string(total) + " tables needs --long");
  }

  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  std::size_t count = options.shards;
  if (count == 0) count = std::max<std::uint64_t>(jobs, (total + kShardSize - 1) / kShardSize);
  const auto shards = make_shards(n, k, space, count);

  std::vector<ExtremalReport> results(shards.size());
  std::atomic<std::size_t> next{0};
  std::mutex progress_lock;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i = next++; i < shards.size(); i = next++) {
      try {
        results[i] = scan_shard(shards[i]);
      } catch (...) {
        std::lock_guard lock(progress_lock);
        if (!failure) failure = std::current_exception();
        return;
      }
      if (options.progress) {
        std::lock_guard lock(progress_lock);
        options.progress("SHARD " + std::to_string(shards[i].lo) + "-" + std::to_string(shards[i].hi) +
                         " DONE max=" + max_text(results[i]) +
                         " forms=" + std::to_string(results[i].extremal_forms.size()));
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < std::min(jobs, shards.size()); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  ExtremalReport report = empty_report(n, k);
  for (const auto& r : results) report = merge_reports(report, r);
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

ExtremalReport extremal_search(std::size_t n, std::size_t k, const SearchOptions& options) {
  check_shape(n, k);
  return run_search(n, k, SearchSpace::All, options);
}

ExtremalReport cyclic_extremal_search(std::size_t n, std::size_t k, const SearchOptions& options) {
  if (n < 2 || n > 9) throw SearchGuard("cyclic search needs 2 <= n <= 9");
  if (k != 2 && k != 3) throw SearchGuard("cyclic search needs k = 2 or k = 3");
  return run_search(n, k, SearchSpace::Cyclic, options);
}

std::string format_report(const ExtremalReport& report, IsoConvention convention) {
  const auto chosen = report.forms(convention);
  std::ostringstream out;
  out << "SEARCH n=" << report.n << " k=" << report.k << " scanned=" << report.scanned << " max=" << max_text(report)
      << " forms_states=" << form_count(report, IsoConvention::StatesOnly)
      << " forms_states_symbols=" << form_count(report, IsoConvention::StatesAndSymbols) << " convention="
      << (convention == IsoConvention::StatesOnly ? "states" : "states-symbols") << '\n';
  for (std::size_t i = 0; i < chosen.size(); ++i) out << "# form " << i + 1 << '\n' << serialize_dfa(chosen[i]);
  return out.str();
}

}  // namespace syncswitch
