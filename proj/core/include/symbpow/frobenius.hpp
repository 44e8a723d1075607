#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symbpow/monomial_ideal.hpp"

namespace symbpow {

/// Outcome of a Fedder or Glassbrenner test at one q.
///
/// When `passed`, `witness` is a generator of `colon_ideal` = (I^{[q]} : I)
/// such that multiplier * witness lies outside m^{[q]}. Fedder reports have
/// no multiplier.
struct CriterionReport {
  unsigned q = 0;
  bool passed = false;
  std::optional<Monomial> witness;
  MonomialIdeal colon_ideal;
  std::optional<Monomial> multiplier;
};

/// Verdict of a containment check; `counterexample` is the first generator
/// of the smaller side (canonical order) outside the larger side.
struct Verdict {
  bool holds = true;
  std::optional<Monomial> counterexample;
  /// Set when a parameter is below the range where the containment is proved.
  bool below_threshold = false;

  explicit operator bool() const noexcept { return holds; }
};

/// Checks inner ⊆ outer.
Verdict check_containment(const MonomialIdeal& inner, const MonomialIdeal& outer);

bool is_prime(std::uint64_t n);
bool is_prime_power(std::uint64_t n);
/// Smallest prime power >= n (n >= 1; returns 2 for n <= 2).
std::uint64_t smallest_prime_power_at_least(std::uint64_t n);

/// m lies in m^{[q]} = (x_1^q, ..., x_v^q) iff some exponent reaches q.
bool in_bracket_maximal(const Monomial& m, unsigned q);

/// Fedder's test at a single q: (I^{[q]} : I) is not inside m^{[q]}.
/// Only q = p^e is meaningful; the value is not validated here.
CriterionReport fedder_check(const MonomialIdeal& ideal, unsigned q);

/// fedder_check at q = p, p^2, ..., p^{e_max}.
std::vector<CriterionReport> fedder_scan(const MonomialIdeal& ideal, unsigned p,
                                         unsigned e_max = 4, unsigned threads = 1);

/// Glassbrenner's test for one multiplier c, which must avoid every
/// minimal prime of I.
CriterionReport glassbrenner_check(const MonomialIdeal& ideal, const Monomial& c, unsigned q);

/// (u_1, ..., u_h)^{ht+kt-h+1} ⊆ (u_1^t, ..., u_h^t)^{k+1}, h = |gens|.
Verdict lemma_inclusion_check(std::span<const Monomial> gens, unsigned t, unsigned k);

/// I^{(hq+kq-h+1)} ⊆ (I^{(k+1)})^{[q]} for squarefree I.
Verdict lemma_qcomparison_check(const MonomialIdeal& ideal, unsigned k, unsigned q);

/// (2h-1)(n-1)+1, the q from which the F-pure key containment is proved.
unsigned fpure_key_threshold(std::size_t big_height, unsigned n);

/// (I^{[q]} : I) ⊆ (I^n : I^{(hn-h+1)})^{[q]} for squarefree I. Smaller q
/// than the threshold may be explored; the verdict is then flagged.
Verdict lemma_fpure_key_check(const MonomialIdeal& ideal, unsigned n, unsigned q);

/// (I^d : I^{(d)})(I^{[q]} : I) ⊆ (I I^{(d+1-h)} : I^{(d)})^{[q]} for
/// squarefree I with h >= 2 and d >= h - 1.
Verdict lemma_sfr_key_check(const MonomialIdeal& ideal, unsigned d, unsigned q);

}  // namespace symbpow
