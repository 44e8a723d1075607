#include "symbpow/containment.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "symbpow/errors.hpp"
#include "symbpow/parallel.hpp"
#include "symbpow/symbolic.hpp"

namespace symbpow {
namespace {

ContainmentReport query(const MonomialIdeal& ideal, const PrimeDecomposition& primes,
                        const MonomialIdeal& ordinary, unsigned a, unsigned b) {
  ContainmentReport r;
  r.a = a;
  r.b = b;
  const MonomialIdeal symb = symbolic_power(ideal, primes, a);
  r.counterexample = first_outside(ordinary, symb);
  r.holds = !r.counterexample.has_value();
  return r;
}

void require_positive(unsigned x, const char* name) {
  if (x == 0) throw InvalidArgument(std::string(name) + " must be positive");
}

}  // namespace

ContainmentReport contains_symbolic_in_power(const MonomialIdeal& ideal, unsigned a, unsigned b) {
  require_positive(b, "b");
  const PrimeDecomposition primes = squarefree_primes(ideal);
  return query(ideal, primes, power(ideal, b), a, b);
}

std::vector<ContainmentReport> harbourne_sweep(const MonomialIdeal& ideal, unsigned n_max,
                                               unsigned threads) {
  require_positive(n_max, "n_max");
  const PrimeDecomposition primes = squarefree_primes(ideal);
  const unsigned h = static_cast<unsigned>(primes.big_height);

  return parallel_map(n_max, threads, [&](std::size_t idx) {
    const unsigned n = static_cast<unsigned>(idx + 1);
    const MonomialIdeal ordinary = power(ideal, n);
    ContainmentReport row = query(ideal, primes, ordinary, h * n - h + 1, n);
    row.n = n;

    unsigned minimal = row.a;
    if (row.holds) {
      while (minimal > 1 && query(ideal, primes, ordinary, minimal - 1, n).holds) --minimal;
    } else {
      // I^{(hn)} ⊆ I^n always holds, so this terminates.
      do {
        ++minimal;
      } while (!query(ideal, primes, ordinary, minimal, n).holds);
    }
    row.minimal_a = minimal;
    return row;
  });
}

MonomialIdeal star_configuration(unsigned v, unsigned h) {
  if (h < 1 || h >= v) {
    throw InvalidArgument("star configuration requires 1 <= h < v");
  }
  const ContextPtr ctx = indexed_context(v);
  const unsigned degree = v - h + 1;
  std::vector<Monomial> gens;
  // Every subset of size `degree`, via a selection mask.
  std::vector<bool> pick(v, false);
  std::fill(pick.begin(), pick.begin() + degree, true);
  do {
    std::vector<Exponent> e(v);
    for (unsigned i = 0; i < v; ++i) e[i] = pick[i] ? 1 : 0;
    gens.emplace_back(ctx, std::move(e));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return MonomialIdeal(ctx, std::move(gens));
}

bool star_sharpness_check(unsigned v, unsigned h, unsigned n) {
  if (h < 2 || h >= v) throw InvalidArgument("star sharpness requires 2 <= h < v");
  if (n < 2) throw InvalidArgument("star sharpness requires n >= 2");
  if (n * (h - 1) >= v) throw InvalidArgument("star sharpness requires n(h-1) < v");

  const MonomialIdeal ideal = star_configuration(v, h);
  const PrimeDecomposition primes = minimal_primes(ideal);
  const unsigned a = h * n - h;
  const Monomial witness(ideal.context(), std::vector<Exponent>(v, n - 1));

  const bool in_symbolic = symbolic_membership(witness, primes, a);
  const bool in_ordinary = contains_monomial(power(ideal, n), witness);
  const bool full_query_fails = !contains_symbolic_in_power(ideal, a, n).holds;
  return in_symbolic && !in_ordinary && full_query_fails;
}

Verdict sfr_step_check(const MonomialIdeal& ideal, unsigned d) {
  const PrimeDecomposition primes = squarefree_primes(ideal);
  const unsigned h = static_cast<unsigned>(primes.big_height);
  if (d + 1 < h) throw InvalidArgument("sfr_step_check requires d >= h - 1");
  const MonomialIdeal lhs = symbolic_power(ideal, primes, d);
  const MonomialIdeal rhs = multiply(ideal, symbolic_power(ideal, primes, d + 1 - h));
  return check_containment(lhs, rhs);
}

namespace {

constexpr std::array<std::pair<Regime, std::string_view>, 5> kRegimeNames{{
    {Regime::ELS, "ELS"},
    {Regime::FPURE, "FPURE"},
    {Regime::SFR, "SFR"},
    {Regime::EQUALITY, "EQUALITY"},
    {Regime::LICCI, "LICCI"},
}};

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace

std::string_view regime_name(Regime r) {
  for (const auto& [regime, name] : kRegimeNames) {
    if (regime == r) return name;
  }
  return "?";
}

std::optional<Regime> parse_regime(std::string_view name) {
  for (const auto& [regime, n] : kRegimeNames) {
    if (n.size() != name.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < n.size() && same; ++i) {
      same = n[i] == static_cast<char>(std::toupper(static_cast<unsigned char>(name[i])));
    }
    if (same) return regime;
  }
  return std::nullopt;
}

std::uint64_t bound(const BoundQuery& q) {
  if (q.h < 1) throw InvalidArgument("bound requires h >= 1");
  if (q.b < 1) throw InvalidArgument("bound requires b >= 1");
  const std::uint64_t h = q.h;
  const std::uint64_t b = q.b;
  switch (q.regime) {
    case Regime::ELS:
      return h * b;
    case Regime::FPURE:
      return h * b - h + 1;
    case Regime::SFR:
      if (h < 2) throw InvalidArgument("SFR bound requires h >= 2");
      return (h - 1) * (b - 1) + 1;
    case Regime::EQUALITY:
      if (q.k < 1) throw InvalidArgument("EQUALITY bound requires k >= 1");
      return ceil_div(b, q.k) * (h + q.k - 1);
    case Regime::LICCI:
      return ceil_div(b, 2) * (h + 1);
  }
  throw InvalidArgument("unknown regime");
}

}  // namespace symbpow
