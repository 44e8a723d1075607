#pragma once

// Brute-force reference for the size-vector model: scans every multiset of
// minor sizes in [1, n] (including sizes below t) up to a length cap, and
// evaluates the membership conditions inline.

#include <cstdint>
#include <functional>
#include <vector>

namespace det_oracle {

inline std::uint64_t order_along(const std::vector<unsigned>& s, unsigned j) {
  std::uint64_t g = 0;
  for (unsigned x : s) g += x >= j ? x - j + 1 : 0;
  return g;
}

inline bool symbolic(const std::vector<unsigned>& s, unsigned t, std::uint64_t k) {
  return order_along(s, t) >= k;
}

inline bool ordinary(const std::vector<unsigned>& s, unsigned t, std::uint64_t m) {
  for (unsigned j = 1; j <= t; ++j) {
    if (order_along(s, j) < (t - j + 1) * m) return false;
  }
  return true;
}

inline void for_each_multiset(unsigned n, unsigned max_len,
                              const std::function<void(const std::vector<unsigned>&)>& fn) {
  std::vector<unsigned> s;
  std::function<void(unsigned)> rec = [&](unsigned top) {
    fn(s);
    if (s.size() == max_len) return;
    for (unsigned x = top; x >= 1; --x) {
      s.push_back(x);
      rec(x);
      s.pop_back();
    }
  };
  rec(n);
}

/// Largest m such that every scanned vector in I_t^{(k)} lies in I_t^m.
inline std::uint64_t sharp_m(unsigned n, unsigned t, unsigned k, unsigned max_len) {
  std::uint64_t m = 0;
  while (true) {
    bool all = true;
    for_each_multiset(n, max_len, [&](const std::vector<unsigned>& s) {
      if (all && symbolic(s, t, k) && !ordinary(s, t, m + 1)) all = false;
    });
    if (!all) return m;
    ++m;
  }
}

}  // namespace det_oracle
