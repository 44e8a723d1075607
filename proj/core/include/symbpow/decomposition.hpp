#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "symbpow/monomial_ideal.hpp"

namespace symbpow {

/// A prime generated by a nonempty set of variables, stored as sorted
/// 0-based variable indices.
struct PrimeSupport {
  std::vector<std::size_t> variables;

  std::size_t height() const noexcept { return variables.size(); }
  bool contains_variable(std::size_t i) const;
  bool is_subset_of(const PrimeSupport& other) const;
  /// True iff the monomial lies in the prime, i.e. shares a variable with it.
  bool contains(const Monomial& m) const;
  MonomialIdeal ideal(const ContextPtr& ctx) const;
  std::string to_string(const RingContext& ctx) const;

  auto operator<=>(const PrimeSupport&) const = default;
};

/// (x_{i1}^{a1}, ..., x_{ik}^{ak}) with every a > 0.
struct IrreducibleComponent {
  ContextPtr context;
  std::map<std::size_t, Exponent> pure_powers;

  MonomialIdeal ideal() const;
  PrimeSupport support() const;
  /// True iff `other` is a subset of this component.
  bool contains(const IrreducibleComponent& other) const;
  std::string to_string() const;

  bool operator==(const IrreducibleComponent& o) const { return pure_powers == o.pure_powers; }
};

struct PrimeDecomposition {
  std::vector<PrimeSupport> minimal_primes;
  std::size_t big_height = 0;
};

/// Irredundant irreducible decomposition of a proper nonzero monomial ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal);

/// Minimal primes and big height. For squarefree ideals these are exactly
/// the associated primes.
PrimeDecomposition minimal_primes(const MonomialIdeal& ideal);

}  // namespace symbpow
