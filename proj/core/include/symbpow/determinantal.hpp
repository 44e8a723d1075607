#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Membership of products of minors of a generic n x n matrix in symbolic
// and ordinary powers of the ideal I_t of t-minors. A product of minors is
// modeled by the multiset of the minors' sizes; no polynomial is formed.

namespace symbpow::det {

/// Sizes s_i of the minors in a product, each in [1, n]. The empty vector
/// is the unit element.
class SizeVector {
 public:
  SizeVector(unsigned n, std::vector<unsigned> sizes);

  unsigned n() const noexcept { return n_; }
  /// Sorted descending.
  const std::vector<unsigned>& sizes() const noexcept { return sizes_; }
  std::size_t count() const noexcept { return sizes_.size(); }
  std::uint64_t total() const noexcept;
  std::string to_string() const;

  bool operator==(const SizeVector&) const = default;

 private:
  unsigned n_;
  std::vector<unsigned> sizes_;
};

/// Σ max(0, s_i - j + 1), 1 <= j <= n.
std::uint64_t gamma(const SizeVector& s, unsigned j);

/// Product lies in I_t^{(k)}: gamma(s, t) >= k.
bool in_symbolic(const SizeVector& s, unsigned t, std::uint64_t k);

/// Product lies in I_t^m: gamma(s, j) >= (t - j + 1) m for every j <= t.
bool in_ordinary(const SizeVector& s, unsigned t, std::uint64_t m);

/// Largest m with the product in I_t^m.
std::uint64_t max_ordinary_power(const SizeVector& s, unsigned t);

struct DetContainmentReport {
  unsigned n = 0;
  unsigned t = 0;
  unsigned k = 0;
  /// Largest m with I_t^{(k)} ⊆ I_t^m over the searched vectors.
  std::uint64_t sharp_m = 0;
  /// floor(nk / (t(n - t + 1))).
  std::uint64_t formula_m = 0;
  /// In I_t^{(k)} but not in I_t^{sharp_m + 1}.
  std::optional<SizeVector> witness;
  /// Longest size vector enumerated.
  unsigned search_bound = 0;
  std::uint64_t vectors_checked = 0;
  /// Characteristic hypothesis under which the model describes I_t.
  std::string characteristic = "char 0 or p > min(t, n - t)";

  bool matches_formula() const noexcept { return sharp_m == formula_m; }
};

std::uint64_t formula_m(unsigned n, unsigned t, unsigned k);

/// Exhaustive search over size vectors with entries in [t, n] and at most
/// search_bound entries (default k).
DetContainmentReport sharp_containment(unsigned n, unsigned t, unsigned k,
                                       std::optional<unsigned> search_bound = std::nullopt);

/// For entries all >= t: if s >= tm and s >= m + (t-1)u (s the total, u the
/// count) then the product lies in I_t^m.
bool convexity_check(const SizeVector& s, unsigned t, std::uint64_t m);

}  // namespace symbpow::det
