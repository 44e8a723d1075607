#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "symbpow/containment.hpp"
#include "symbpow/decomposition.hpp"
#include "symbpow/determinantal.hpp"
#include "symbpow/frobenius.hpp"
#include "symbpow/monomial_ideal.hpp"

// Shared ideal format:
//   {"vars": ["x", "y", "z"], "generators": [[1,1,0], [1,0,1], "y*z"]}
// Generators are exponent vectors in var order or monomial strings such as
// "x^2*y". Output always uses exponent vectors.

namespace symbpow::io {

MonomialIdeal ideal_from_json(const nlohmann::json& doc);
/// Parses JSON text; syntax errors report line and column.
MonomialIdeal parse_ideal(std::string_view text);
nlohmann::json to_json(const MonomialIdeal& ideal);

/// Comma-separated monomial strings, e.g. "x*y, x*z, y*z".
MonomialIdeal parse_generator_list(const ContextPtr& ctx, std::string_view text);

nlohmann::json to_json(const PrimeDecomposition& d, const RingContext& ctx);
nlohmann::json to_json(const std::vector<IrreducibleComponent>& comps);
nlohmann::json to_json(const CriterionReport& r);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const ContainmentReport& r);
nlohmann::json to_json(const det::SizeVector& s);
nlohmann::json to_json(const det::DetContainmentReport& r);

/// Header "n,a,b,holds,counterexample,minimal_a" followed by one row per report.
void write_csv(std::ostream& out, std::span<const ContainmentReport> reports);

}  // namespace symbpow::io
