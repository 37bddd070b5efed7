#ifndef ORDCALC_JSON_IO_HPP
#define ORDCALC_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "ordcalc/coloring.hpp"
#include "ordcalc/derivation.hpp"
#include "ordcalc/interval_set.hpp"
#include "ordcalc/ordinal.hpp"

namespace ordcalc {

inline constexpr int kSchemaVersion = 1;

// Wraps a body object as a versioned payload: {schema_version, kind, ...body}.
nlohmann::json payload(const std::string& kind, nlohmann::json body);

// {canonical, terms: [{exponent: <ordinal>, coefficient: "<decimal>"}]}
nlohmann::json ordinal_to_json(const Ordinal& a);
Ordinal ordinal_from_json(const nlohmann::json& j);

// {canonical, intervals: [{lo, hi}]} with canonical-expression endpoints.
nlohmann::json interval_set_to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const nlohmann::json& j);

// Table form: {form: "table", k, ground: [...], pairs: [{a, b, color}]}.
// Rule form: {form: "rule", rule, k, bound, ...rule parameters}.
nlohmann::json coloring_to_json(const PairColoring& c);
PairColoring coloring_from_json(const nlohmann::json& j);

// {source, goals: [g0, g1], exponent: 2}
nlohmann::json statement_to_json(const PartitionStatement& s);
PartitionStatement statement_from_json(const nlohmann::json& j);

// {root: {rule, conclusion, evidence: [{condition, values, ok}], premises}}
nlohmann::json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const nlohmann::json& j);

}  // namespace ordcalc

#endif
