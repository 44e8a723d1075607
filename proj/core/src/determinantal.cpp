#include "symbpow/determinantal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "symbpow/errors.hpp"

namespace symbpow::det {

SizeVector::SizeVector(unsigned n, std::vector<unsigned> sizes) : n_(n), sizes_(std::move(sizes)) {
  if (n_ == 0) throw InvalidArgument("matrix size must be positive");
  for (unsigned s : sizes_) {
    if (s < 1 || s > n_) {
      throw InvalidArgument("minor size " + std::to_string(s) + " outside [1, " +
                            std::to_string(n_) + "]");
    }
  }
  std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
}

std::uint64_t SizeVector::total() const noexcept {
  return std::accumulate(sizes_.begin(), sizes_.end(), std::uint64_t{0});
}

std::string SizeVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sizes_[i]);
  }
  return out + ")";
}

namespace {

void require_order(const SizeVector& s, unsigned j, const char* what) {
  if (j < 1 || j > s.n()) {
    throw InvalidArgument(std::string(what) + " must lie in [1, n]");
  }
}

}  // namespace

std::uint64_t gamma(const SizeVector& s, unsigned j) {
  require_order(s, j, "gamma index");
  std::uint64_t g = 0;
  for (unsigned x : s.sizes()) {
    if (x + 1 > j) g += x + 1 - j;
  }
  return g;
}

bool in_symbolic(const SizeVector& s, unsigned t, std::uint64_t k) {
  require_order(s, t, "t");
  return gamma(s, t) >= k;
}

bool in_ordinary(const SizeVector& s, unsigned t, std::uint64_t m) {
  require_order(s, t, "t");
  for (unsigned j = 1; j <= t; ++j) {
    if (gamma(s, j) < (t - j + 1) * m) return false;
  }
  return true;
}

std::uint64_t max_ordinary_power(const SizeVector& s, unsigned t) {
  require_order(s, t, "t");
  std::uint64_t best = gamma(s, 1) / t;
  for (unsigned j = 2; j <= t; ++j) best = std::min(best, gamma(s, j) / (t - j + 1));
  return best;
}

std::uint64_t formula_m(unsigned n, unsigned t, unsigned k) {
  return (std::uint64_t{n} * k) / (std::uint64_t{t} * (n - t + 1));
}

DetContainmentReport sharp_containment(unsigned n, unsigned t, unsigned k,
                                       std::optional<unsigned> search_bound) {
  if (t < 1 || t > n) throw InvalidArgument("sharp_containment requires 1 <= t <= n");
  if (k < 1) throw InvalidArgument("sharp_containment requires k >= 1");

  DetContainmentReport report;
  report.n = n;
  report.t = t;
  report.k = k;
  report.formula_m = formula_m(n, t, k);
  report.search_bound = search_bound.value_or(k);

  // Non-increasing sequences with entries in [t, n], lengths 1..search_bound.
  std::optional<std::uint64_t> best;
  std::vector<unsigned> sizes;
  std::function<void(unsigned)> extend = [&](unsigned max_entry) {
    if (!sizes.empty()) {
      const SizeVector s(n, sizes);
      ++report.vectors_checked;
      if (in_symbolic(s, t, k)) {
        const std::uint64_t m = max_ordinary_power(s, t);
        if (!best || m < *best) {
          best = m;
          report.witness = s;
        }
      }
    }
    if (sizes.size() == report.search_bound) return;
    for (unsigned x = max_entry; x >= t; --x) {
      sizes.push_back(x);
      extend(x);
      sizes.pop_back();
    }
  };
  extend(n);

  // Every product in I_t^{(k)} lies in I_t^{(k)} ⊆ I_t^{best}. Without any
  // symbolic vector the search bound was too small to say anything.
  report.sharp_m = best.value_or(0);
  return report;
}

bool convexity_check(const SizeVector& s, unsigned t, std::uint64_t m) {
  require_order(s, t, "t");
  for (unsigned x : s.sizes()) {
    if (x < t) throw InvalidArgument("convexity_check requires every size >= t");
  }
  const std::uint64_t total = s.total();
  const std::uint64_t u = s.count();
  const bool premise = total >= t * m && total >= m + (t - 1) * u;
  return !premise || in_ordinary(s, t, m);
}

}  // namespace symbpow::det
