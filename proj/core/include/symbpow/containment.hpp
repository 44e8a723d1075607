#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "symbpow/decomposition.hpp"
#include "symbpow/frobenius.hpp"
#include "symbpow/monomial_ideal.hpp"

namespace symbpow {

/// Result of asking whether I^{(a)} ⊆ I^b.
struct ContainmentReport {
  unsigned n = 0;  // sweep row; 0 outside sweeps
  unsigned a = 0;
  unsigned b = 0;
  bool holds = false;
  /// In I^{(a)} but not in I^b; present iff !holds.
  std::optional<Monomial> counterexample;
  /// Smallest a' with I^{(a')} ⊆ I^b, when requested.
  std::optional<unsigned> minimal_a;
};

/// Expands I^{(a)} and tests each generator against I^b. a = 0 is allowed
/// and means the unit ideal.
ContainmentReport contains_symbolic_in_power(const MonomialIdeal& ideal, unsigned a, unsigned b);

/// For n = 1..n_max: checks I^{(hn-h+1)} ⊆ I^n and scans downward for the
/// smallest symbolic exponent contained in I^n. Rows are returned in n order.
std::vector<ContainmentReport> harbourne_sweep(const MonomialIdeal& ideal, unsigned n_max,
                                               unsigned threads = 1);

/// Intersection of all coordinate primes generated by h of the v variables
/// x1..xv, i.e. the ideal of squarefree monomials of degree v - h + 1.
MonomialIdeal star_configuration(unsigned v, unsigned h);

/// True iff (x1...xv)^{n-1} lies in I^{(hn-h)} but not in I^n for the star
/// configuration, and the full containment query agrees.
bool star_sharpness_check(unsigned v, unsigned h, unsigned n);

/// I^{(d)} ⊆ I I^{(d+1-h)} on an explicit squarefree ideal, d >= h - 1.
Verdict sfr_step_check(const MonomialIdeal& ideal, unsigned d);

enum class Regime { ELS, FPURE, SFR, EQUALITY, LICCI };

std::string_view regime_name(Regime r);
std::optional<Regime> parse_regime(std::string_view name);

struct BoundQuery {
  Regime regime = Regime::ELS;
  unsigned h = 1;
  /// Target ordinary power.
  unsigned b = 1;
  /// k with I^{(k)} = I^k; EQUALITY only.
  unsigned k = 1;
};

/// Smallest a for which the regime guarantees I^{(a)} ⊆ I^b.
std::uint64_t bound(const BoundQuery& query);

}  // namespace symbpow
