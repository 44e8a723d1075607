#pragma once

#include <span>
#include <string>
#include <vector>

#include "symbpow/monomial.hpp"

namespace symbpow {

/// A monomial ideal stored by its minimal generating set, sorted in the
/// canonical monomial order. Equal ideals have equal representations.
///
/// The zero ideal has no generators; the unit ideal has the single
/// generator 1.
class MonomialIdeal {
 public:
  /// The zero ideal.
  explicit MonomialIdeal(ContextPtr ctx);

  /// Minimal generators of the ideal generated by `gens`.
  MonomialIdeal(ContextPtr ctx, std::vector<Monomial> gens);

  static MonomialIdeal zero(ContextPtr ctx) { return MonomialIdeal(std::move(ctx)); }
  static MonomialIdeal unit(ContextPtr ctx);
  /// The homogeneous maximal ideal (x_1, ..., x_v).
  static MonomialIdeal maximal(ContextPtr ctx);
  static MonomialIdeal principal(const Monomial& m);

  /// Builds from exponent vectors that are already minimal and canonically
  /// sorted. Only used by the library's own kernels.
  static MonomialIdeal from_canonical(ContextPtr ctx, std::vector<detail::Exps> gens);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;
  bool is_proper() const noexcept { return !is_unit(); }

  /// "(x^2*y, z)"; "(0)" for the zero ideal.
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  ContextPtr ctx_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(const ContextPtr& ctx, std::vector<Monomial> gens);

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
/// I^n; I^0 is the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned n);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// Intersection of a nonempty family, folded smallest-first.
MonomialIdeal intersect(std::span<const MonomialIdeal> ideals);

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
/// (I : J). Throws InvalidArgument when J is the zero ideal.
MonomialIdeal colon_ideal(const MonomialIdeal& ideal, const MonomialIdeal& by);

/// I^{[q]}: every generator raised to the q-th power, 1 <= q <= kMaxFrobeniusQ.
MonomialIdeal bracket_power(const MonomialIdeal& ideal, unsigned q);

bool contains_monomial(const MonomialIdeal& ideal, const Monomial& m);
/// True iff `inner` is contained in `outer`.
bool ideal_contains(const MonomialIdeal& outer, const MonomialIdeal& inner);
/// First generator of `inner` outside `outer`, in canonical order.
std::optional<Monomial> first_outside(const MonomialIdeal& outer, const MonomialIdeal& inner);

MonomialIdeal radical(const MonomialIdeal& ideal);
bool is_squarefree(const MonomialIdeal& ideal);

namespace detail {

/// Minimal elements of `gens` under divisibility, deduplicated and sorted
/// canonically.
std::vector<Exps> minimalize(std::vector<Exps> gens);

}  // namespace detail
}  // namespace symbpow
