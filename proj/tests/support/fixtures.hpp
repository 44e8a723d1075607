#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "symbpow/monomial_ideal.hpp"
#include "support/brute_force.hpp"

namespace fixtures {

using symbpow::ContextPtr;
using symbpow::Monomial;
using symbpow::MonomialIdeal;

inline ContextPtr xyz() { return symbpow::make_context({"x", "y", "z"}); }

inline MonomialIdeal ideal(const ContextPtr& ctx, std::vector<std::vector<symbpow::Exponent>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.emplace_back(ctx, std::move(g));
  return MonomialIdeal(ctx, std::move(ms));
}

inline MonomialIdeal triangle() { return ideal(xyz(), {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}); }

inline oracle::Gens raw(const MonomialIdeal& i) {
  oracle::Gens out;
  for (const auto& g : i.generators()) out.push_back(g.exponent_vector());
  return out;
}

/// Proper nonzero ideal with exponents in [0, max_exp].
inline MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t vars, std::size_t max_gens,
                                  unsigned max_exp) {
  const auto ctx = symbpow::indexed_context(vars);
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<std::size_t> pick(0, vars - 1);
  std::vector<Monomial> gens;
  const std::size_t n = count(rng);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<symbpow::Exponent> e(vars);
    for (auto& x : e) x = exp(rng);
    if (std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; })) e[pick(rng)] = 1;
    gens.emplace_back(ctx, std::move(e));
  }
  return MonomialIdeal(ctx, std::move(gens));
}

/// Proper nonzero squarefree ideal. Generators are random subsets of the
/// variables, mostly of size >= 2 so the ideal is rarely generated by variables.
inline MonomialIdeal random_squarefree(std::mt19937_64& rng, std::size_t vars, std::size_t max_gens) {
  const auto ctx = symbpow::indexed_context(vars);
  std::uniform_int_distribution<std::size_t> count(std::min<std::size_t>(2, max_gens), max_gens);
  const std::size_t low = std::min<std::size_t>(2, vars);
  std::uniform_int_distribution<std::size_t> size(low, std::max(low, vars - 1));
  std::uniform_int_distribution<int> singleton(0, 5);
  std::vector<std::size_t> order(vars);
  std::vector<Monomial> gens;
  const std::size_t n = count(rng);
  for (std::size_t k = 0; k < n; ++k) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t d = singleton(rng) == 0 ? 1 : size(rng);
    std::vector<symbpow::Exponent> e(vars, 0);
    for (std::size_t i = 0; i < d; ++i) e[order[i]] = 1;
    gens.emplace_back(ctx, std::move(e));
  }
  return MonomialIdeal(ctx, std::move(gens));
}

}  // namespace fixtures
