#include "symbpow/io.hpp"

#include <ostream>

#include "symbpow/errors.hpp"

namespace symbpow::io {

using nlohmann::json;

namespace {

std::string field(std::string_view path, std::size_t i) {
  return std::string(path) + "[" + std::to_string(i) + "]";
}

Monomial generator_from_json(const ContextPtr& ctx, const json& g, const std::string& path) {
  if (g.is_string()) {
    try {
      return parse_monomial(ctx, g.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  if (!g.is_array()) {
    throw ParseError(path + ": expected an exponent array or a monomial string");
  }
  if (g.size() != ctx->num_vars()) {
    throw ParseError(path + ": expected " + std::to_string(ctx->num_vars()) +
                     " exponents, got " + std::to_string(g.size()));
  }
  std::vector<Exponent> e;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i].is_number_unsigned() && !(g[i].is_number_integer() && g[i].get<std::int64_t>() >= 0)) {
      throw ParseError(field(path, i) + ": expected a nonnegative integer");
    }
    e.push_back(g[i].get<Exponent>());
  }
  try {
    return Monomial(ctx, std::move(e));
  } catch (const OverflowError& err) {
    throw ParseError(path + ": " + err.what());
  }
}

}  // namespace

MonomialIdeal ideal_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("ideal: expected a JSON object");
  if (!doc.contains("vars")) throw ParseError("ideal: missing field 'vars'");
  if (!doc.contains("generators")) throw ParseError("ideal: missing field 'generators'");
  const json& vars = doc["vars"];
  if (!vars.is_array() || vars.empty()) throw ParseError("vars: expected a nonempty array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string()) throw ParseError(field("vars", i) + ": expected a string");
    names.push_back(vars[i].get<std::string>());
  }
  ContextPtr ctx;
  try {
    ctx = make_context(std::move(names));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("vars: ") + e.what());
  }
  const json& gens = doc["generators"];
  if (!gens.is_array()) throw ParseError("generators: expected an array");
  std::vector<Monomial> monomials;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    monomials.push_back(generator_from_json(ctx, gens[i], field("generators", i)));
  }
  return MonomialIdeal(ctx, std::move(monomials));
}

MonomialIdeal parse_ideal(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  return ideal_from_json(doc);
}

json to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.exponent_vector());
  return json{{"vars", ideal.context()->var_names()}, {"generators", std::move(gens)}};
}

MonomialIdeal parse_generator_list(const ContextPtr& ctx, std::string_view text) {
  std::vector<Monomial> gens;
  std::size_t pos = 0;
  std::size_t index = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const auto piece = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    try {
      gens.push_back(parse_monomial(ctx, piece));
    } catch (const ParseError& e) {
      throw ParseError(field("generators", index) + ": " + e.what());
    }
    ++index;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return MonomialIdeal(ctx, std::move(gens));
}

json to_json(const PrimeDecomposition& d, const RingContext& ctx) {
  json primes = json::array();
  for (const auto& p : d.minimal_primes) {
    json vars = json::array();
    for (std::size_t i : p.variables) vars.push_back(ctx.var_name(i));
    primes.push_back(std::move(vars));
  }
  return json{{"minimal_primes", std::move(primes)}, {"big_height", d.big_height}};
}

json to_json(const std::vector<IrreducibleComponent>& comps) {
  json out = json::array();
  for (const auto& c : comps) {
    json powers = json::object();
    for (const auto& [i, a] : c.pure_powers) powers[c.context->var_name(i)] = a;
    out.push_back(std::move(powers));
  }
  return out;
}

json to_json(const CriterionReport& r) {
  json out{{"q", r.q},
           {"passed", r.passed},
           {"witness", r.witness ? json(r.witness->to_string()) : json(nullptr)},
           {"colon_ideal", to_json(r.colon_ideal)}};
  if (r.multiplier) out["multiplier"] = r.multiplier->to_string();
  return out;
}

json to_json(const Verdict& v) {
  return json{{"holds", v.holds},
              {"counterexample", v.counterexample ? json(v.counterexample->to_string()) : json(nullptr)},
              {"below_threshold", v.below_threshold}};
}

json to_json(const ContainmentReport& r) {
  json out{{"a", r.a},
           {"b", r.b},
           {"holds", r.holds},
           {"counterexample", r.counterexample ? json(r.counterexample->to_string()) : json(nullptr)}};
  if (r.n) out["n"] = r.n;
  if (r.minimal_a) out["minimal_a"] = *r.minimal_a;
  return out;
}

json to_json(const det::SizeVector& s) { return json(s.sizes()); }

json to_json(const det::DetContainmentReport& r) {
  return json{{"n", r.n},
              {"t", r.t},
              {"k", r.k},
              {"sharp_m", r.sharp_m},
              {"formula_m", r.formula_m},
              {"matches_formula", r.matches_formula()},
              {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
              {"search_bound", r.search_bound},
              {"vectors_checked", r.vectors_checked},
              {"characteristic", r.characteristic}};
}

void write_csv(std::ostream& out, std::span<const ContainmentReport> reports) {
  out << "n,a,b,holds,counterexample,minimal_a\n";
  for (const auto& r : reports) {
    out << r.n << ',' << r.a << ',' << r.b << ',' << (r.holds ? "true" : "false") << ','
        << (r.counterexample ? r.counterexample->to_string() : "") << ','
        << (r.minimal_a ? std::to_string(*r.minimal_a) : "") << '\n';
  }
}

}  // namespace symbpow::io
