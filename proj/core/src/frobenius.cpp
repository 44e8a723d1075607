#include "symbpow/frobenius.hpp"

#include "symbpow/decomposition.hpp"
#include "symbpow/errors.hpp"
#include "symbpow/parallel.hpp"
#include "symbpow/symbolic.hpp"

namespace symbpow {

Verdict check_containment(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  Verdict v;
  v.counterexample = first_outside(outer, inner);
  v.holds = !v.counterexample.has_value();
  return v;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t smallest_prime_power_at_least(std::uint64_t n) {
  std::uint64_t q = std::max<std::uint64_t>(n, 2);
  while (!is_prime_power(q)) ++q;
  return q;
}

bool in_bracket_maximal(const Monomial& m, unsigned q) {
  for (Exponent e : m.exponents()) {
    if (e >= q) return true;
  }
  return false;
}

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw InvalidArgument(std::string(what) + " requires a proper nonzero ideal");
  }
}

CriterionReport criterion(const MonomialIdeal& ideal, const Monomial* multiplier, unsigned q) {
  CriterionReport report{q, false, std::nullopt, colon_ideal(bracket_power(ideal, q), ideal),
                         std::nullopt};
  if (multiplier) report.multiplier = *multiplier;
  for (const auto& g : report.colon_ideal.generators()) {
    const bool outside = multiplier ? !in_bracket_maximal(*multiplier * g, q)
                                    : !in_bracket_maximal(g, q);
    if (outside) {
      report.passed = true;
      report.witness = g;
      break;
    }
  }
  return report;
}

}  // namespace

CriterionReport fedder_check(const MonomialIdeal& ideal, unsigned q) {
  require_proper_nonzero(ideal, "fedder_check");
  if (q < 2) throw InvalidArgument("fedder_check requires q >= 2");
  return criterion(ideal, nullptr, q);
}

std::vector<CriterionReport> fedder_scan(const MonomialIdeal& ideal, unsigned p, unsigned e_max,
                                         unsigned threads) {
  if (p < 2) throw InvalidArgument("characteristic must be at least 2");
  std::vector<unsigned> qs;
  std::uint64_t q = 1;
  for (unsigned e = 1; e <= e_max; ++e) {
    q *= p;
    if (q > kMaxFrobeniusQ) throw InvalidArgument("q = p^e exceeds " + std::to_string(kMaxFrobeniusQ));
    qs.push_back(static_cast<unsigned>(q));
  }
  return parallel_map(qs.size(), threads, [&](std::size_t i) { return fedder_check(ideal, qs[i]); });
}

CriterionReport glassbrenner_check(const MonomialIdeal& ideal, const Monomial& c, unsigned q) {
  require_proper_nonzero(ideal, "glassbrenner_check");
  require_same_context(ideal.context(), c.context());
  if (q < 2) throw InvalidArgument("glassbrenner_check requires q >= 2");
  for (const auto& p : minimal_primes(ideal).minimal_primes) {
    if (p.contains(c)) {
      throw InvalidArgument("multiplier " + c.to_string() + " lies in the minimal prime " +
                            p.to_string(*ideal.context()));
    }
  }
  return criterion(ideal, &c, q);
}

Verdict lemma_inclusion_check(std::span<const Monomial> gens, unsigned t, unsigned k) {
  if (gens.empty()) throw InvalidArgument("lemma_inclusion_check requires generators");
  if (t == 0) throw InvalidArgument("lemma_inclusion_check requires t >= 1");
  const ContextPtr& ctx = gens.front().context();
  const unsigned h = static_cast<unsigned>(gens.size());

  std::vector<Monomial> powered;
  for (const auto& u : gens) powered.push_back(pow(u, t));
  const MonomialIdeal ideal(ctx, std::vector<Monomial>(gens.begin(), gens.end()));
  const MonomialIdeal lhs = power(ideal, h * t + k * t - h + 1);
  const MonomialIdeal rhs = power(MonomialIdeal(ctx, std::move(powered)), k + 1);
  return check_containment(lhs, rhs);
}

Verdict lemma_qcomparison_check(const MonomialIdeal& ideal, unsigned k, unsigned q) {
  const PrimeDecomposition primes = squarefree_primes(ideal);
  const unsigned h = static_cast<unsigned>(primes.big_height);
  const MonomialIdeal lhs = symbolic_power(ideal, primes, h * q + k * q - h + 1);
  const MonomialIdeal rhs = bracket_power(symbolic_power(ideal, primes, k + 1), q);
  return check_containment(lhs, rhs);
}

unsigned fpure_key_threshold(std::size_t big_height, unsigned n) {
  return static_cast<unsigned>((2 * big_height - 1) * (n - 1) + 1);
}

Verdict lemma_fpure_key_check(const MonomialIdeal& ideal, unsigned n, unsigned q) {
  if (n == 0) throw InvalidArgument("lemma_fpure_key_check requires n >= 1");
  if (q == 0) throw InvalidArgument("lemma_fpure_key_check requires q >= 1");
  const PrimeDecomposition primes = squarefree_primes(ideal);
  const unsigned h = static_cast<unsigned>(primes.big_height);

  const MonomialIdeal lhs = colon_ideal(bracket_power(ideal, q), ideal);
  const MonomialIdeal inner =
      colon_ideal(power(ideal, n), symbolic_power(ideal, primes, h * n - h + 1));
  Verdict v = check_containment(lhs, bracket_power(inner, q));
  v.below_threshold = q < fpure_key_threshold(h, n);
  return v;
}

Verdict lemma_sfr_key_check(const MonomialIdeal& ideal, unsigned d, unsigned q) {
  const PrimeDecomposition primes = squarefree_primes(ideal);
  const unsigned h = static_cast<unsigned>(primes.big_height);
  if (h < 2) throw InvalidArgument("lemma_sfr_key_check requires big height >= 2");
  if (d + 1 < h) throw InvalidArgument("lemma_sfr_key_check requires d >= h - 1");

  const MonomialIdeal symb_d = symbolic_power(ideal, primes, d);
  const MonomialIdeal lhs = multiply(colon_ideal(power(ideal, d), symb_d),
                                     colon_ideal(bracket_power(ideal, q), ideal));
  const MonomialIdeal target = multiply(ideal, symbolic_power(ideal, primes, d + 1 - h));
  const MonomialIdeal rhs = bracket_power(colon_ideal(target, symb_d), q);
  return check_containment(lhs, rhs);
}

}  // namespace symbpow
