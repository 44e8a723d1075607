#pragma once

#include "symbpow/decomposition.hpp"
#include "symbpow/monomial_ideal.hpp"

namespace symbpow {

/// Throws NotSquarefree unless every generator is squarefree.
void require_squarefree(const MonomialIdeal& ideal);

/// P^n: all monomials of degree exactly n in the variables of P.
MonomialIdeal prime_power_gens(const ContextPtr& ctx, const PrimeSupport& prime, unsigned n);

/// I^{(n)} for a proper nonzero squarefree monomial ideal, as the
/// intersection of P^n over the minimal primes. n = 0 gives the unit ideal.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned n);
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, const PrimeDecomposition& primes,
                             unsigned n);

/// m in I^{(n)} iff m has degree at least n along every minimal prime.
/// Never expands generators.
bool symbolic_membership(const Monomial& m, const MonomialIdeal& ideal, unsigned n);
bool symbolic_membership(const Monomial& m, const PrimeDecomposition& primes, unsigned n);

/// Minimal primes of a squarefree ideal; throws on any other input.
PrimeDecomposition squarefree_primes(const MonomialIdeal& ideal);

}  // namespace symbpow
