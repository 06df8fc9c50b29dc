#pragma once

// Distance, measure and the pair/set lemmas on the signed double cover B_n of
// the binary family A_n. Everything here needs n divisible by 6.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "syncswitch/automaton.hpp"
#include "syncswitch/families.hpp"

namespace syncswitch {

// B_n together with the sets S, C and the distance table on S and -S.
class DistanceContext {
 public:
  explicit DistanceContext(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  // 2n / 3: the length of the cycle C and the distance of a state to itself.
  std::size_t cycle_length() const noexcept { return 2 * n_ / 3; }
  const Dfa& automaton() const noexcept { return b_; }

  // S = {2k} u {-(2k-1)}, and C = S restricted to [-n/3 + 1, n].
  const StateSet& target() const noexcept { return s_; }
  const StateSet& cycle() const noexcept { return c_; }
  StateSet negate(const StateSet& v) const;

  bool in_target(std::size_t index) const { return s_.contains(static_cast<State>(index)); }

  // Throws std::invalid_argument unless both states lie in S or both in -S.
  std::size_t distance(SignedState p, SignedState q) const;
  std::size_t distance_index(std::size_t p, std::size_t q) const;

  // p(ab)^(n/3) == q(ab)^(n/3)
  bool equivalent(std::size_t p, std::size_t q) const;

  // Max over p of min over q of d(p, q). Throws on empty or mixed sets.
  std::size_t measure(const StateSet& a) const;

 private:
  std::size_t n_;
  Dfa b_;
  StateSet s_;
  StateSet c_;
  std::vector<State> projected_;        // index -> index(ab)^(n/3), for S
  std::vector<std::uint16_t> distance_;  // 2n x 2n, 0 for mixed pairs
};

// Minimal switch count of a word w with d(pw, qw) = k + 1, over ordered pairs
// p, q in C with d(p, q) <= k - 1 (exactly k - 1 when k = 2n/3 - 1).
// Requires 2 <= k <= 2n/3 - 1 (std::invalid_argument otherwise).
std::size_t min_sc_pair_increase(const DistanceContext& ctx, std::size_t k);

// Closed form of the above: 2n/3 + 2k - 1 for k <= n/3, else 2n - 2k + 1.
std::size_t pair_increase_bound(std::size_t n, std::size_t k);

// The product v_1 v_2 ... v_{2n/3} of measure-raising blocks, a minimal
// switch-count synchronizing word of a_family(n).
Word canonical_word(std::size_t n);

struct LemmaResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

// Checks the subset, distance, pair, measure and set-pair lemmas. Subset
// checks are exhaustive while 2^n <= budget and sampled (budget draws, fixed
// seed) beyond that.
std::vector<LemmaResult> verify_lemmas(std::size_t n, std::size_t budget = 10000);

// "LEMMA <id> PASS|FAIL <detail>" per entry.
std::string format_lemma_report(const std::vector<LemmaResult>& results);

}  // namespace syncswitch
