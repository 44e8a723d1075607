#include "symbpow/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "symbpow/errors.hpp"

namespace symbpow {
namespace detail {
namespace {

Exponent total_degree(const Exps& e) {
  return std::accumulate(e.begin(), e.end(), Exponent{0});
}

void sort_canonical(std::vector<Exps>& gens) {
  std::sort(gens.begin(), gens.end(), std::greater<>());
}

}  // namespace

std::vector<Exps> minimalize(std::vector<Exps> gens) {
  if (gens.size() <= 1) return gens;

  std::vector<std::pair<Exponent, Exps>> by_degree;
  by_degree.reserve(gens.size());
  for (auto& g : gens) {
    const Exponent d = total_degree(g);
    by_degree.emplace_back(d, std::move(g));
  }
  std::sort(by_degree.begin(), by_degree.end());
  by_degree.erase(std::unique(by_degree.begin(), by_degree.end()), by_degree.end());

  // A generator can only be divided by one of no larger degree.
  std::vector<Exps> kept;
  for (auto& [deg, g] : by_degree) {
    const bool redundant = std::any_of(kept.begin(), kept.end(),
                                       [&](const Exps& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  sort_canonical(kept);
  return kept;
}

}  // namespace detail

using detail::Exps;

namespace {

std::vector<Exps> raw(const std::vector<Monomial>& gens) {
  std::vector<Exps> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.exponent_vector());
  return out;
}

void require_same(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a.context(), b.context());
}

}  // namespace

MonomialIdeal::MonomialIdeal(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw InvalidArgument("ideal requires a ring context");
}

MonomialIdeal::MonomialIdeal(ContextPtr ctx, std::vector<Monomial> gens) : ctx_(std::move(ctx)) {
  if (!ctx_) throw InvalidArgument("ideal requires a ring context");
  for (const auto& g : gens) require_same_context(ctx_, g.context());
  for (auto& e : detail::minimalize(raw(gens))) gens_.emplace_back(ctx_, std::move(e));
}

MonomialIdeal MonomialIdeal::unit(ContextPtr ctx) {
  auto one = Monomial::one(ctx);
  return MonomialIdeal(std::move(ctx), {std::move(one)});
}

MonomialIdeal MonomialIdeal::maximal(ContextPtr ctx) {
  std::vector<Monomial> vars;
  for (std::size_t i = 0; i < ctx->num_vars(); ++i) vars.push_back(Monomial::variable(ctx, i));
  return MonomialIdeal(std::move(ctx), std::move(vars));
}

MonomialIdeal MonomialIdeal::principal(const Monomial& m) {
  return MonomialIdeal(m.context(), {m});
}

MonomialIdeal MonomialIdeal::from_canonical(ContextPtr ctx, std::vector<Exps> gens) {
  MonomialIdeal out(std::move(ctx));
  out.gens_.reserve(gens.size());
  for (auto& e : gens) out.gens_.emplace_back(out.ctx_, std::move(e));
  return out;
}

bool MonomialIdeal::is_unit() const noexcept {
  return gens_.size() == 1 && gens_.front().is_one();
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ctx_ != b.ctx_ && !(*a.ctx_ == *b.ctx_)) return false;
  if (a.gens_.size() != b.gens_.size()) return false;
  for (std::size_t i = 0; i < a.gens_.size(); ++i) {
    if (a.gens_[i].exponent_vector() != b.gens_[i].exponent_vector()) return false;
  }
  return true;
}

MonomialIdeal minimalize(const ContextPtr& ctx, std::vector<Monomial> gens) {
  return MonomialIdeal(ctx, std::move(gens));
}

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  auto gens = raw(a.generators());
  for (const auto& g : b.generators()) gens.push_back(g.exponent_vector());
  return MonomialIdeal::from_canonical(a.context(), detail::minimalize(std::move(gens)));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  const Exponent cap = a.context()->exponent_cap();
  const std::size_t v = a.context()->num_vars();
  std::unordered_set<Exps, detail::ExpsHash> products;
  products.reserve(a.size() * b.size());
  Exps e(v);
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) {
      for (std::size_t i = 0; i < v; ++i) e[i] = detail::checked_add(g[i], h[i], cap);
      products.insert(e);
    }
  }
  return MonomialIdeal::from_canonical(
      a.context(), detail::minimalize(std::vector<Exps>(products.begin(), products.end())));
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned n) {
  if (n == 0) return MonomialIdeal::unit(ideal.context());
  MonomialIdeal result = ideal;
  for (unsigned i = 1; i < n; ++i) result = multiply(result, ideal);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same(a, b);
  const std::size_t v = a.context()->num_vars();
  std::unordered_set<Exps, detail::ExpsHash> lcms;
  lcms.reserve(a.size() * b.size());
  Exps e(v);
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) {
      for (std::size_t i = 0; i < v; ++i) e[i] = std::max(g[i], h[i]);
      lcms.insert(e);
    }
  }
  return MonomialIdeal::from_canonical(
      a.context(), detail::minimalize(std::vector<Exps>(lcms.begin(), lcms.end())));
}

MonomialIdeal intersect(std::span<const MonomialIdeal> ideals) {
  if (ideals.empty()) {
    throw InvalidArgument("intersection of an empty family");
  }
  std::vector<const MonomialIdeal*> order;
  for (const auto& i : ideals) order.push_back(&i);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto* x, const auto* y) { return x->size() < y->size(); });
  MonomialIdeal result = *order.front();
  for (std::size_t i = 1; i < order.size(); ++i) result = intersect(result, *order[i]);
  return result;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  require_same_context(ideal.context(), m.context());
  const std::size_t v = m.num_vars();
  std::vector<Exps> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    Exps e(v);
    for (std::size_t i = 0; i < v; ++i) e[i] = g[i] > m[i] ? g[i] - m[i] : 0;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal::from_canonical(ideal.context(), detail::minimalize(std::move(gens)));
}

MonomialIdeal colon_ideal(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same(ideal, by);
  if (by.is_zero()) {
    throw InvalidArgument("colon by the zero ideal is not supported");
  }
  std::vector<MonomialIdeal> parts;
  parts.reserve(by.size());
  for (const auto& h : by.generators()) parts.push_back(colon(ideal, h));
  return intersect(parts);
}

MonomialIdeal bracket_power(const MonomialIdeal& ideal, unsigned q) {
  if (q == 0 || q > kMaxFrobeniusQ) {
    throw InvalidArgument("bracket power exponent must lie in [1, " +
                          std::to_string(kMaxFrobeniusQ) + "]");
  }
  const Exponent cap = ideal.context()->exponent_cap();
  std::vector<Exps> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    Exps e = g.exponent_vector();
    for (auto& x : e) x = detail::checked_mul(x, q, cap);
    gens.push_back(std::move(e));
  }
  // Scaling preserves both minimality and the canonical order.
  return MonomialIdeal::from_canonical(ideal.context(), std::move(gens));
}

bool contains_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  require_same_context(ideal.context(), m.context());
  const auto& e = m.exponent_vector();
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial& g) { return detail::divides(g.exponent_vector(), e); });
}

bool ideal_contains(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  return !first_outside(outer, inner).has_value();
}

std::optional<Monomial> first_outside(const MonomialIdeal& outer, const MonomialIdeal& inner) {
  require_same(outer, inner);
  for (const auto& g : inner.generators()) {
    if (!contains_monomial(outer, g)) return g;
  }
  return std::nullopt;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Exps> gens = raw(ideal.generators());
  for (auto& e : gens) {
    for (auto& x : e) x = x > 0 ? 1 : 0;
  }
  return MonomialIdeal::from_canonical(ideal.context(), detail::minimalize(std::move(gens)));
}

bool is_squarefree(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

}  // namespace symbpow
