#include "symbpow/symbolic.hpp"

#include "symbpow/errors.hpp"

namespace symbpow {

using detail::Exps;

void require_squarefree(const MonomialIdeal& ideal) {
  if (!is_squarefree(ideal)) {
    throw NotSquarefree("symbolic powers implemented for radical monomial ideals only");
  }
}

PrimeDecomposition squarefree_primes(const MonomialIdeal& ideal) {
  require_squarefree(ideal);
  return minimal_primes(ideal);
}

namespace {

// Compositions of `remaining` into the slots vars[slot..], lexicographic.
void compositions(const std::vector<std::size_t>& vars, std::size_t slot, Exponent remaining,
                  Exps& current, std::vector<Exps>& out) {
  const std::size_t var = vars[slot];
  if (slot + 1 == vars.size()) {
    current[var] = remaining;
    out.push_back(current);
    current[var] = 0;
    return;
  }
  for (Exponent a = remaining + 1; a-- > 0;) {
    current[var] = a;
    compositions(vars, slot + 1, remaining - a, current, out);
  }
  current[var] = 0;
}

}  // namespace

MonomialIdeal prime_power_gens(const ContextPtr& ctx, const PrimeSupport& prime, unsigned n) {
  if (prime.variables.empty()) {
    throw InvalidArgument("prime support must be nonempty");
  }
  if (n == 0) {
    throw InvalidArgument("prime power exponent must be positive");
  }
  for (std::size_t i : prime.variables) {
    if (i >= ctx->num_vars()) throw InvalidArgument("prime variable index out of range");
  }
  if (n > ctx->exponent_cap()) {
    throw OverflowError("exponent exceeds cap " + std::to_string(ctx->exponent_cap()));
  }
  Exps current(ctx->num_vars(), 0);
  std::vector<Exps> gens;
  compositions(prime.variables, 0, n, current, gens);
  // Compositions of a fixed degree form an antichain; only the order needs fixing.
  return MonomialIdeal::from_canonical(ctx, detail::minimalize(std::move(gens)));
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned n) {
  return symbolic_power(ideal, squarefree_primes(ideal), n);
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, const PrimeDecomposition& primes,
                             unsigned n) {
  require_squarefree(ideal);
  if (ideal.is_zero() || ideal.is_unit()) {
    throw InvalidArgument("symbolic power requires a proper nonzero ideal");
  }
  if (n == 0) return MonomialIdeal::unit(ideal.context());
  std::vector<MonomialIdeal> parts;
  parts.reserve(primes.minimal_primes.size());
  for (const auto& p : primes.minimal_primes) {
    parts.push_back(prime_power_gens(ideal.context(), p, n));
  }
  return intersect(parts);
}

bool symbolic_membership(const Monomial& m, const MonomialIdeal& ideal, unsigned n) {
  require_same_context(m.context(), ideal.context());
  return symbolic_membership(m, squarefree_primes(ideal), n);
}

bool symbolic_membership(const Monomial& m, const PrimeDecomposition& primes, unsigned n) {
  for (const auto& p : primes.minimal_primes) {
    Exponent along = 0;
    for (std::size_t i : p.variables) along += m[i];
    if (along < n) return false;
  }
  return true;
}

}  // namespace symbpow
