#include "symbpow/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "symbpow/errors.hpp"

namespace symbpow {

RingContext::RingContext(std::vector<std::string> var_names, Exponent exponent_cap)
    : names_(std::move(var_names)), cap_(exponent_cap) {
  if (names_.empty()) {
    throw InvalidArgument("ring must have at least one variable");
  }
  if (cap_ == 0) {
    throw InvalidArgument("exponent cap must be positive");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) {
      throw InvalidArgument("variable names must be nonempty");
    }
    if (!seen.insert(name).second) {
      throw InvalidArgument("duplicate variable name '" + name + "'");
    }
  }
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

ContextPtr make_context(std::vector<std::string> var_names, Exponent exponent_cap) {
  return std::make_shared<const RingContext>(std::move(var_names), exponent_cap);
}

ContextPtr indexed_context(std::size_t num_vars, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(num_vars);
  for (std::size_t i = 1; i <= num_vars; ++i) {
    names.push_back(std::string(prefix) + std::to_string(i));
  }
  return make_context(std::move(names));
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) {
    throw ContextMismatch("operands belong to different rings");
  }
}

namespace detail {

Exponent checked_add(Exponent a, Exponent b, Exponent cap) {
  if (a > cap || b > cap - a) {
    throw OverflowError("exponent exceeds cap " + std::to_string(cap));
  }
  return a + b;
}

Exponent checked_mul(Exponent a, Exponent b, Exponent cap) {
  if (a != 0 && b > cap / a) {
    throw OverflowError("exponent exceeds cap " + std::to_string(cap));
  }
  return a * b;
}

}  // namespace detail

Monomial::Monomial(ContextPtr ctx, std::vector<Exponent> exponents)
    : ctx_(std::move(ctx)), exps_(std::move(exponents)) {
  if (!ctx_) {
    throw InvalidArgument("monomial requires a ring context");
  }
  if (exps_.size() != ctx_->num_vars()) {
    throw ContextMismatch("exponent vector has length " + std::to_string(exps_.size()) +
                          ", ring has " + std::to_string(ctx_->num_vars()) + " variables");
  }
  for (Exponent e : exps_) {
    if (e > ctx_->exponent_cap()) {
      throw OverflowError("exponent exceeds cap " + std::to_string(ctx_->exponent_cap()));
    }
  }
}

Monomial Monomial::one(ContextPtr ctx) {
  const std::size_t n = ctx->num_vars();
  return Monomial(std::move(ctx), std::vector<Exponent>(n, 0));
}

Monomial Monomial::variable(ContextPtr ctx, std::size_t index, Exponent power) {
  if (index >= ctx->num_vars()) {
    throw InvalidArgument("variable index out of range");
  }
  std::vector<Exponent> e(ctx->num_vars(), 0);
  e[index] = power;
  return Monomial(std::move(ctx), std::move(e));
}

Exponent Monomial::degree() const noexcept {
  Exponent d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0) s.push_back(i);
  }
  return s;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx_->var_name(i);
    if (exps_[i] > 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

bool operator==(const Monomial& a, const Monomial& b) {
  if (a.exps_ != b.exps_) return false;
  return a.ctx_ == b.ctx_ || *a.ctx_ == *b.ctx_;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  // Larger exponent vectors come first, so x^2 < x*y < y in this order.
  return b.exps_ <=> a.exps_;
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_context(a.context(), b.context());
  return detail::divides(a.exponent_vector(), b.exponent_vector());
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_context(a.context(), b.context());
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(a.context(), std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_context(a.context(), b.context());
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(a.context(), std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_context(a.context(), b.context());
  const Exponent cap = a.context()->exponent_cap();
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = detail::checked_add(a[i], b[i], cap);
  return Monomial(a.context(), std::move(e));
}

Monomial pow(const Monomial& a, Exponent q) {
  const Exponent cap = a.context()->exponent_cap();
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = detail::checked_mul(a[i], q, cap);
  return Monomial(a.context(), std::move(e));
}

Monomial colon(const Monomial& a, const Monomial& b) {
  require_same_context(a.context(), b.context());
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return Monomial(a.context(), std::move(e));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

Monomial parse_monomial(const ContextPtr& ctx, std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) {
    throw ParseError("empty monomial string");
  }
  std::vector<Exponent> e(ctx->num_vars(), 0);
  if (body == "1") return Monomial(ctx, std::move(e));

  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t star = body.find('*', pos);
    const std::string_view factor =
        trim(body.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    if (factor.empty()) {
      throw ParseError("empty factor in monomial '" + std::string(body) + "'");
    }
    std::string_view name = factor;
    Exponent power = 1;
    if (const std::size_t caret = factor.find('^'); caret != std::string_view::npos) {
      name = trim(factor.substr(0, caret));
      const std::string_view digits = trim(factor.substr(caret + 1));
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), power);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw ParseError("bad exponent in factor '" + std::string(factor) + "'");
      }
    }
    const auto idx = ctx->index_of(name);
    if (idx) {
      e[*idx] = detail::checked_add(e[*idx], power, ctx->exponent_cap());
    } else if (name != "1") {
      throw ParseError("unknown variable '" + std::string(name) + "'");
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return Monomial(ctx, std::move(e));
}

}  // namespace symbpow
