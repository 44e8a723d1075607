#include "symbpow/decomposition.hpp"

#include <algorithm>
#include <unordered_map>

#include "symbpow/errors.hpp"

namespace symbpow {

using detail::Exps;

bool PrimeSupport::contains_variable(std::size_t i) const {
  return std::binary_search(variables.begin(), variables.end(), i);
}

bool PrimeSupport::is_subset_of(const PrimeSupport& other) const {
  return std::includes(other.variables.begin(), other.variables.end(), variables.begin(),
                       variables.end());
}

bool PrimeSupport::contains(const Monomial& m) const {
  return std::any_of(variables.begin(), variables.end(),
                     [&](std::size_t i) { return i < m.num_vars() && m[i] > 0; });
}

MonomialIdeal PrimeSupport::ideal(const ContextPtr& ctx) const {
  std::vector<Monomial> gens;
  for (std::size_t i : variables) gens.push_back(Monomial::variable(ctx, i));
  return MonomialIdeal(ctx, std::move(gens));
}

std::string PrimeSupport::to_string(const RingContext& ctx) const {
  std::string out = "(";
  for (std::size_t k = 0; k < variables.size(); ++k) {
    if (k) out += ", ";
    out += ctx.var_name(variables[k]);
  }
  return out + ")";
}

MonomialIdeal IrreducibleComponent::ideal() const {
  std::vector<Monomial> gens;
  for (const auto& [i, a] : pure_powers) gens.push_back(Monomial::variable(context, i, a));
  return MonomialIdeal(context, std::move(gens));
}

PrimeSupport IrreducibleComponent::support() const {
  PrimeSupport p;
  for (const auto& [i, a] : pure_powers) p.variables.push_back(i);
  return p;
}

bool IrreducibleComponent::contains(const IrreducibleComponent& other) const {
  // other's generator x_i^b lies in this component iff it has x_i^a with a <= b.
  for (const auto& [i, b] : other.pure_powers) {
    auto it = pure_powers.find(i);
    if (it == pure_powers.end() || it->second > b) return false;
  }
  return true;
}

std::string IrreducibleComponent::to_string() const { return ideal().to_string(); }

namespace {

using RawComponent = std::map<std::size_t, Exponent>;

bool raw_contains(const RawComponent& outer, const RawComponent& inner) {
  for (const auto& [i, b] : inner) {
    auto it = outer.find(i);
    if (it == outer.end() || it->second > b) return false;
  }
  return true;
}

/// Drops duplicates and every component containing another one.
void prune(std::vector<RawComponent>& comps) {
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<RawComponent> kept;
  for (std::size_t a = 0; a < comps.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < comps.size() && !redundant; ++b) {
      redundant = a != b && raw_contains(comps[a], comps[b]);
    }
    if (!redundant) kept.push_back(comps[a]);
  }
  comps = std::move(kept);
}

struct GensHash {
  std::size_t operator()(const std::vector<Exps>& gens) const noexcept {
    std::size_t h = gens.size();
    detail::ExpsHash eh;
    for (const auto& g : gens) h ^= eh(g) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

/// Recursive splitting on generators with mixed support, memoized on the
/// canonical generator list.
class Splitter {
 public:
  std::vector<RawComponent> run(const std::vector<Exps>& gens) {
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;
    auto result = split(gens);
    memo_.emplace(gens, result);
    return result;
  }

 private:
  std::vector<RawComponent> split(const std::vector<Exps>& gens) {
    // Generators are canonically sorted; split the first one with mixed support.
    for (const auto& g : gens) {
      std::size_t first = g.size();
      std::size_t count = 0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] > 0) {
          if (count++ == 0) first = i;
        }
      }
      if (count < 2) continue;

      Exps u(g.size(), 0);
      u[first] = g[first];
      Exps w = g;
      w[first] = 0;

      auto with_u = gens;
      with_u.push_back(std::move(u));
      auto with_w = gens;
      with_w.push_back(std::move(w));

      auto comps = run(detail::minimalize(std::move(with_u)));
      auto more = run(detail::minimalize(std::move(with_w)));
      comps.insert(comps.end(), more.begin(), more.end());
      prune(comps);
      return comps;
    }

    RawComponent c;
    for (const auto& g : gens) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] > 0) c[i] = g[i];
      }
    }
    return {c};
  }

  std::unordered_map<std::vector<Exps>, std::vector<RawComponent>, GensHash> memo_;
};

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidArgument("decomposition of the zero ideal");
  if (ideal.is_unit()) throw InvalidArgument("decomposition of the unit ideal");
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal);
  std::vector<Exps> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.exponent_vector());

  Splitter splitter;
  auto raw_comps = splitter.run(gens);
  std::vector<IrreducibleComponent> out;
  out.reserve(raw_comps.size());
  for (auto& c : raw_comps) out.push_back({ideal.context(), std::move(c)});
  return out;
}

PrimeDecomposition minimal_primes(const MonomialIdeal& ideal) {
  std::vector<PrimeSupport> supports;
  for (const auto& c : irreducible_decomposition(ideal)) supports.push_back(c.support());
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());

  PrimeDecomposition out;
  for (const auto& p : supports) {
    const bool minimal = std::none_of(supports.begin(), supports.end(), [&](const PrimeSupport& o) {
      return o != p && o.is_subset_of(p);
    });
    if (minimal) {
      out.big_height = std::max(out.big_height, p.height());
      out.minimal_primes.push_back(p);
    }
  }
  return out;
}

}  // namespace symbpow
