#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symbpow {

using Exponent = std::uint64_t;

inline constexpr Exponent kDefaultExponentCap = Exponent{1} << 32;

/// Largest Frobenius exponent q accepted by bracket powers.
inline constexpr unsigned kMaxFrobeniusQ = 1u << 16;

/// The ambient polynomial ring k[x_1, ..., x_v]. The field is implicit.
class RingContext {
 public:
  explicit RingContext(std::vector<std::string> var_names,
                       Exponent exponent_cap = kDefaultExponentCap);

  std::size_t num_vars() const noexcept { return names_.size(); }
  const std::vector<std::string>& var_names() const noexcept { return names_; }
  const std::string& var_name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  Exponent exponent_cap() const noexcept { return cap_; }

  bool operator==(const RingContext&) const = default;

 private:
  std::vector<std::string> names_;
  Exponent cap_;
};

using ContextPtr = std::shared_ptr<const RingContext>;

ContextPtr make_context(std::vector<std::string> var_names,
                        Exponent exponent_cap = kDefaultExponentCap);

/// Ring with variables prefix1, ..., prefixN.
ContextPtr indexed_context(std::size_t num_vars, std::string_view prefix = "x");

/// Throws ContextMismatch unless both pointers denote the same ring.
void require_same_context(const ContextPtr& a, const ContextPtr& b);

/// x_1^{a_1} ... x_v^{a_v} over a fixed ring.
class Monomial {
 public:
  Monomial(ContextPtr ctx, std::vector<Exponent> exponents);

  static Monomial one(ContextPtr ctx);
  static Monomial variable(ContextPtr ctx, std::size_t index, Exponent power = 1);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  const std::vector<Exponent>& exponent_vector() const noexcept { return exps_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::size_t num_vars() const noexcept { return exps_.size(); }

  Exponent degree() const noexcept;
  bool is_one() const noexcept;
  bool is_squarefree() const noexcept;
  std::vector<std::size_t> support() const;

  /// "x^2*y", or "1" for the unit monomial.
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b);
  /// Canonical order: descending lexicographic on exponent vectors.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  ContextPtr ctx_;
  std::vector<Exponent> exps_;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
/// a^q, exponents scaled by q.
Monomial pow(const Monomial& a, Exponent q);
/// a / gcd(a, b): the generator of ((a) : b).
Monomial colon(const Monomial& a, const Monomial& b);

/// Monomial from a string such as "x^2*y*z" or "1".
Monomial parse_monomial(const ContextPtr& ctx, std::string_view text);

namespace detail {

using Exps = std::vector<Exponent>;

Exponent checked_add(Exponent a, Exponent b, Exponent cap);
Exponent checked_mul(Exponent a, Exponent b, Exponent cap);

inline bool divides(const Exps& a, const Exps& b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

struct ExpsHash {
  std::size_t operator()(const Exps& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Exponent x : e) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace detail
}  // namespace symbpow
