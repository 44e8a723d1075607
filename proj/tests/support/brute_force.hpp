#pragma once

// Independent membership oracle: answers "is m in the ideal?" straight from
// the defining condition of each construction, on raw exponent vectors.
// Nothing here calls into the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Vec = std::vector<std::uint64_t>;
using Gens = std::vector<Vec>;

inline bool divides(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline bool in_ideal(const Gens& gens, const Vec& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Vec& g) { return divides(g, m); });
}

/// Some product of n generators (with repetition) divides m.
inline bool in_power(const Gens& gens, unsigned n, const Vec& m, std::size_t start = 0) {
  if (n == 0) return true;
  for (std::size_t i = start; i < gens.size(); ++i) {
    if (!divides(gens[i], m)) continue;
    Vec rest(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) rest[j] = m[j] - gens[i][j];
    if (in_power(gens, n - 1, rest, i)) return true;
  }
  return false;
}

inline bool in_product(const Gens& a, const Gens& b, const Vec& m) {
  for (const auto& g : a) {
    for (const auto& h : b) {
      if (divides(add(g, h), m)) return true;
    }
  }
  return false;
}

/// m in (I : J) iff m * g in I for every generator g of J.
inline bool in_colon(const Gens& i, const Gens& j, const Vec& m) {
  return std::all_of(j.begin(), j.end(), [&](const Vec& g) { return in_ideal(i, add(m, g)); });
}

/// m in I^{[q]} iff g^q | m for some generator g.
inline bool in_bracket(const Gens& gens, std::uint64_t q, const Vec& m) {
  for (const auto& g : gens) {
    Vec gq(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) gq[i] = g[i] * q;
    if (divides(gq, m)) return true;
  }
  return false;
}

/// m in rad(I) iff m^N in I for N = the largest generator exponent.
inline bool in_radical(const Gens& gens, const Vec& m) {
  std::uint64_t big = 1;
  for (const auto& g : gens) {
    for (auto e : g) big = std::max(big, e);
  }
  Vec mn(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) mn[i] = m[i] * big;
  return in_ideal(gens, mn);
}

/// Minimal vertex covers of the generator supports, found by scanning all
/// variable subsets. For a squarefree ideal these are its minimal primes.
inline std::vector<std::vector<std::size_t>> minimal_covers(const Gens& gens, std::size_t v) {
  std::vector<std::uint32_t> covers;
  for (std::uint32_t mask = 1; mask < (1u << v); ++mask) {
    const bool covers_all = std::all_of(gens.begin(), gens.end(), [&](const Vec& g) {
      for (std::size_t i = 0; i < v; ++i) {
        if (g[i] > 0 && (mask >> i & 1u)) return true;
      }
      return false;
    });
    if (covers_all) covers.push_back(mask);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto c : covers) {
    const bool minimal = std::none_of(covers.begin(), covers.end(),
                                      [&](std::uint32_t o) { return o != c && (o & c) == o; });
    if (!minimal) continue;
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < v; ++i) {
      if (c >> i & 1u) vars.push_back(i);
    }
    out.push_back(vars);
  }
  return out;
}

/// m in I^{(n)} for squarefree I: degree >= n along every minimal cover.
inline bool in_symbolic(const std::vector<std::vector<std::size_t>>& covers, unsigned n,
                        const Vec& m) {
  for (const auto& c : covers) {
    std::uint64_t along = 0;
    for (auto i : c) along += m[i];
    if (along < n) return false;
  }
  return true;
}

/// Calls fn on every exponent vector in [0, cap]^v.
inline void for_each_in_box(std::size_t v, std::uint64_t cap, const std::function<void(const Vec&)>& fn) {
  Vec m(v, 0);
  while (true) {
    fn(m);
    std::size_t i = 0;
    while (i < v && m[i] == cap) m[i++] = 0;
    if (i == v) return;
    ++m[i];
  }
}

}  // namespace oracle
