#pragma once

// Compares monomial-core results against the brute-force oracle on every
// monomial of a bounded box.

#include <optional>
#include <random>
#include <string>

#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "symbpow/monomial_ideal.hpp"
#include "symbpow/symbolic.hpp"

namespace oracle {

struct Case {
  std::string name;
  symbpow::MonomialIdeal result;
  std::function<bool(const Vec&)> defining;
};

/// Returns a description of the first disagreement, if any.
inline std::optional<std::string> compare_on_box(const std::vector<Case>& cases, std::size_t vars,
                                                 std::uint64_t cap) {
  std::optional<std::string> failure;
  for (const auto& c : cases) {
    for_each_in_box(vars, cap, [&](const Vec& m) {
      if (failure) return;
      const symbpow::Monomial mono(c.result.context(), m);
      if (symbpow::contains_monomial(c.result, mono) != c.defining(m)) {
        failure = c.name + " disagrees at " + mono.to_string() + " (result " +
                  c.result.to_string() + ")";
      }
    });
    if (failure) break;
  }
  return failure;
}

/// One random trial of every monomial-core construction.
inline std::optional<std::string> core_trial(std::mt19937_64& rng, std::size_t vars,
                                             unsigned max_exp, std::uint64_t cap) {
  using namespace symbpow;
  const MonomialIdeal i = fixtures::random_ideal(rng, vars, 4, max_exp);
  const MonomialIdeal j(i.context(), fixtures::random_ideal(rng, vars, 3, max_exp).generators());
  const Gens gi = fixtures::raw(i);
  const Gens gj = fixtures::raw(j);
  std::uniform_int_distribution<std::size_t> which(0, gj.size() - 1);
  const Monomial m = j.generators()[which(rng)];
  const Gens gm{m.exponent_vector()};

  std::vector<Case> cases{
      {"add", add(i, j), [&](const Vec& x) { return in_ideal(gi, x) || in_ideal(gj, x); }},
      {"multiply", multiply(i, j), [&](const Vec& x) { return in_product(gi, gj, x); }},
      {"power2", power(i, 2), [&](const Vec& x) { return in_power(gi, 2, x); }},
      {"power3", power(i, 3), [&](const Vec& x) { return in_power(gi, 3, x); }},
      {"intersect", intersect(i, j), [&](const Vec& x) { return in_ideal(gi, x) && in_ideal(gj, x); }},
      {"colon", colon(i, m), [&](const Vec& x) { return in_colon(gi, gm, x); }},
      {"colon_ideal", colon_ideal(i, j), [&](const Vec& x) { return in_colon(gi, gj, x); }},
      {"bracket2", bracket_power(i, 2), [&](const Vec& x) { return in_bracket(gi, 2, x); }},
      {"bracket3", bracket_power(i, 3), [&](const Vec& x) { return in_bracket(gi, 3, x); }},
      {"radical", radical(i), [&](const Vec& x) { return in_radical(gi, x); }},
  };
  return compare_on_box(cases, vars, cap);
}

/// One random trial of symbolic powers of a squarefree ideal.
inline std::optional<std::string> symbolic_trial(std::mt19937_64& rng, std::size_t vars,
                                                 unsigned n, std::uint64_t cap) {
  using namespace symbpow;
  const MonomialIdeal i = fixtures::random_squarefree(rng, vars, 6);
  const auto covers = minimal_covers(fixtures::raw(i), vars);
  const auto primes = minimal_primes(i);
  std::vector<Case> cases{
      {"symbolic_power", symbolic_power(i, n), [&](const Vec& x) { return in_symbolic(covers, n, x); }}};
  if (auto f = compare_on_box(cases, vars, cap)) return f;

  std::optional<std::string> failure;
  for_each_in_box(vars, cap, [&](const Vec& x) {
    if (failure) return;
    const Monomial mono(i.context(), x);
    if (symbolic_membership(mono, primes, n) != in_symbolic(covers, n, x)) {
      failure = "symbolic_membership disagrees at " + mono.to_string() + " for " + i.to_string();
    }
  });
  return failure;
}

}  // namespace oracle
