#pragma once

// Exhaustive extremal searches over all transition tables of a given shape,
// split into index-range shards that can be scanned independently.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "syncswitch/automaton.hpp"

namespace syncswitch {

enum class SearchSpace {
  All,     // every table on n states and k symbols
  Cyclic,  // symbol 0 fixed to the cycle q -> q + 1 mod n, other columns free
};

// Half-open range [lo, hi) of enumeration indices. Index digits are the free
// table entries in row-major order, least significant first, each in base n.
struct Shard {
  std::size_t n;
  std::size_t k;
  SearchSpace space;
  std::uint64_t lo;
  std::uint64_t hi;
};

// Number of tables in the space; throws SearchGuard if it does not fit 64 bits.
std::uint64_t space_size(std::size_t n, std::size_t k, SearchSpace space);

Dfa decode(std::size_t n, std::size_t k, SearchSpace space, std::uint64_t index);
// Throws std::invalid_argument for a cyclic space whose symbol 0 is not the cycle.
std::uint64_t encode(const Dfa& a, SearchSpace space);

// Near-equal contiguous ranges covering the whole space.
std::vector<Shard> make_shards(std::size_t n, std::size_t k, SearchSpace space, std::size_t count);

struct ExtremalReport {
  std::size_t n = 0;
  std::size_t k = 0;
  // Unset while no synchronizing table has been seen.
  std::optional<std::size_t> max_sw;
  // Canonical forms (state relabeling only) of the tables attaining max_sw,
  // sorted and duplicate-free.
  std::vector<Dfa> extremal_forms;
  std::uint64_t scanned = 0;
  double elapsed_seconds = 0;

  // Extremal forms up to isomorphism under the convention, sorted.
  std::vector<Dfa> forms(IsoConvention convention) const;
};

ExtremalReport empty_report(std::size_t n, std::size_t k);

// Throws std::invalid_argument on mismatched shapes.
ExtremalReport merge_reports(const ExtremalReport& a, const ExtremalReport& b);

ExtremalReport scan_shard(const Shard& shard);

struct SearchOptions {
  std::size_t shards = 0;  // 0 picks a count from the space size
  std::size_t jobs = 1;
  // Spaces above 10^8 tables need long_run; above 6^12 they need force.
  bool long_run = false;
  bool force = false;
  // Called after each shard, serialized, with "SHARD <lo>-<hi> DONE max=<v> forms=<c>".
  std::function<void(const std::string&)> progress;
};

// All binary (or k-ary) tables on n states.
ExtremalReport extremal_search(std::size_t n, std::size_t k, const SearchOptions& options = {});

// Cyclic tables with symbol 0 the standard n-cycle. Needs n <= 9 and k in {2, 3}.
ExtremalReport cyclic_extremal_search(std::size_t n, std::size_t k, const SearchOptions& options = {});

// Summary header, counts under both conventions, then one DFA block per form
// under the convention.
std::string format_report(const ExtremalReport& report, IsoConvention convention);

}  // namespace syncswitch
