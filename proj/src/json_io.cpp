#include "ordcalc/json_io.hpp"

#include "ordcalc/parse.hpp"

namespace ordcalc {

using nlohmann::json;

namespace {

json require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw error(std::string("missing JSON field '") + key + "'");
    return j.at(key);
}

Ordinal ordinal_from_string(const json& j) {
    if (!j.is_string())
        throw error("expected an ordinal expression string");
    return parse_ordinal(j.get<std::string>());
}

}  // namespace

json payload(const std::string& kind, json body) {
    body["schema_version"] = kSchemaVersion;
    body["kind"] = kind;
    return body;
}

json ordinal_to_json(const Ordinal& a) {
    json terms = json::array();
    for (const CnfTerm& t : a.terms())
        terms.push_back({{"exponent", ordinal_to_json(t.exponent)},
                         {"coefficient", t.coefficient.str()}});
    return {{"canonical", render(a)}, {"terms", terms}};
}

Ordinal ordinal_from_json(const json& j) {
    if (j.is_string())
        return parse_ordinal(j.get<std::string>());
    return parse_ordinal(require(j, "canonical").get<std::string>());
}

json interval_set_to_json(const IntervalSet& s) {
    json ranges = json::array();
    for (const OrdInterval& r : s.intervals())
        ranges.push_back({{"lo", render(r.lo)}, {"hi", render(r.hi)}});
    return {{"canonical", render_interval_set(s)}, {"intervals", ranges}};
}

IntervalSet interval_set_from_json(const json& j) {
    if (j.is_string())
        return parse_interval_set(j.get<std::string>());
    std::vector<OrdInterval> ranges;
    for (const json& r : require(j, "intervals"))
        ranges.push_back({ordinal_from_string(require(r, "lo")),
                          ordinal_from_string(require(r, "hi"))});
    return IntervalSet::from_intervals(std::move(ranges));
}

json coloring_to_json(const PairColoring& c) {
    if (c.is_table()) {
        const TableColoring& t = c.as_table();
        json ground = json::array();
        for (const Ordinal& x : t.ground.elements())
            ground.push_back(render(x));
        json pairs = json::array();
        const auto& elems = t.ground.elements();
        for (std::size_t j2 = 1; j2 < elems.size(); ++j2)
            for (std::size_t i = 0; i < j2; ++i)
                pairs.push_back({{"a", render(elems[i])},
                                 {"b", render(elems[j2])},
                                 {"color", t.colors[j2 * (j2 - 1) / 2 + i]}});
        return {{"form", "table"}, {"k", t.k}, {"ground", ground}, {"pairs", pairs}};
    }
    const RuleColoring& r = c.as_rule();
    json out = {{"form", "rule"}, {"k", 2}, {"bound", render(r.bound)}};
    if (r.kind == RuleColoring::Kind::sierpinski) {
        out["rule"] = "sierpinski";
    } else {
        out["rule"] = "decomposable";
        out["split"] = render(r.split_lo);
    }
    return out;
}

PairColoring coloring_from_json(const json& j) {
    std::string form = require(j, "form").get<std::string>();
    if (form == "rule") {
        std::string rule = require(j, "rule").get<std::string>();
        Ordinal bound = ordinal_from_string(require(j, "bound"));
        if (rule == "sierpinski")
            return sierpinski_coloring(bound);
        if (rule == "decomposable")
            return decomposable_coloring(bound);
        throw error("unknown coloring rule '" + rule + "'");
    }
    if (form != "table")
        throw error("unknown coloring form '" + form + "'");

    int k = require(j, "k").get<int>();
    std::vector<Ordinal> ground;
    for (const json& g : require(j, "ground"))
        ground.push_back(ordinal_from_string(g));
    FinOrdSet gs = FinOrdSet::from_elements(std::move(ground));
    if (gs.size() != require(j, "ground").size())
        throw error("coloring ground set contains duplicates");

    const std::size_t n = gs.size();
    std::vector<int> colors(n < 2 ? 0 : n * (n - 1) / 2, -1);
    for (const json& p : require(j, "pairs")) {
        auto a = gs.index_of(ordinal_from_string(require(p, "a")));
        auto b = gs.index_of(ordinal_from_string(require(p, "b")));
        if (!a || !b)
            throw error("coloring pair element not in the ground set");
        if (*a == *b)
            throw error("coloring pair with equal elements");
        std::size_t lo = std::min(*a, *b), hi = std::max(*a, *b);
        colors[hi * (hi - 1) / 2 + lo] = require(p, "color").get<int>();
    }
    for (int c : colors)
        if (c < 0)
            throw error("coloring leaves some pair unassigned");
    return PairColoring::table(std::move(gs), k, std::move(colors));
}

json statement_to_json(const PartitionStatement& s) {
    return {{"source", render(s.source)},
            {"goals", {render(s.goals[0]), render(s.goals[1])}},
            {"exponent", 2}};
}

PartitionStatement statement_from_json(const json& j) {
    json goals = require(j, "goals");
    if (!goals.is_array() || goals.size() != 2)
        throw error("statement must have exactly two goals");
    if (j.contains("exponent") && j.at("exponent") != 2)
        throw error("statements are pair partitions (exponent 2)");
    return PartitionStatement{ordinal_from_string(require(j, "source")),
                              {ordinal_from_string(goals[0]), ordinal_from_string(goals[1])}};
}

namespace {

json node_to_json(const Derivation& d) {
    json evidence = json::array();
    for (const Evidence& e : d.evidence) {
        json values = json::object();
        for (const auto& [name, v] : e.values)
            values[name] = render(v);
        evidence.push_back({{"condition", e.condition}, {"values", values}, {"ok", e.ok}});
    }
    json premises = json::array();
    for (const Derivation& p : d.premises)
        premises.push_back(node_to_json(p));
    return {{"rule", rule_name(d.rule)},
            {"conclusion", statement_to_json(d.conclusion)},
            {"evidence", evidence},
            {"premises", premises}};
}

Rule rule_from_name(const std::string& name) {
    if (name == "degenerate")
        return Rule::degenerate;
    if (name == "trivial_pair")
        return Rule::trivial_pair;
    if (name == "swap")
        return Rule::swap_goals;
    if (name == "monotone")
        return Rule::monotone;
    if (name == "em_step")
        return Rule::em_step;
    throw error("unknown derivation rule '" + name + "'");
}

Derivation node_from_json(const json& j) {
    Derivation d;
    d.rule = rule_from_name(require(j, "rule").get<std::string>());
    d.conclusion = statement_from_json(require(j, "conclusion"));
    for (const json& e : require(j, "evidence")) {
        Evidence ev;
        ev.condition = require(e, "condition").get<std::string>();
        ev.ok = require(e, "ok").get<bool>();
        const json values = require(e, "values");
        for (const auto& [name, v] : values.items())
            ev.values.emplace_back(name, parse_ordinal(v.get<std::string>()));
        d.evidence.push_back(std::move(ev));
    }
    for (const json& p : require(j, "premises"))
        d.premises.push_back(node_from_json(p));
    return d;
}

}  // namespace

json derivation_to_json(const Derivation& d) {
    return {{"root", node_to_json(d)}};
}

Derivation derivation_from_json(const json& j) {
    return node_from_json(require(j, "root"));
}

}  // namespace ordcalc
