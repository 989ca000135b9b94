#include "stakeopt/io.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace stakeopt {

using nlohmann::json;

std::string format_long_double(long double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*Lf", decimals, v);
    return buf;
}

json family_to_json(const SubsetFamily& family) {
    auto sets = family.to_index_sets();
    std::sort(sets.begin(), sets.end());
    json members = json::array();
    for (const auto& s : sets) members.push_back(s);
    return json{{"n", family.ground_size}, {"members", members}};
}

SubsetFamily family_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::vector<int>> sets = j.at("members").get<std::vector<std::vector<int>>>();
    return SubsetFamily::from_index_sets(n, sets);
}

namespace {

json stakes_to_json(const Stakes& stakes) {
    json arr = json::array();
    for (const Rational& c : stakes) arr.push_back(c.to_string());
    return arr;
}

}  // namespace

json witness_to_json(const RealizabilityWitness& witness) {
    json j;
    j["stakes"] = witness.stakes ? stakes_to_json(*witness.stakes) : json(nullptr);
    j["margin"] = witness.margin.to_string();
    return j;
}

json strategy_to_json(const StrategyValue& strategy, int decimals) {
    json j;
    switch (strategy.kind) {
        case StrategyKind::bold: j["kind"] = "bold"; break;
        case StrategyKind::average: j["kind"] = "average"; break;
        case StrategyKind::general: j["kind"] = "general"; break;
    }
    if (strategy.kind != StrategyKind::general) j["bets"] = strategy.bets;
    if (strategy.stakes) j["stakes"] = stakes_to_json(*strategy.stakes);
    j["value"] = strategy.value.to_string();
    j["decimal"] = strategy.value.to_decimal(decimals);
    return j;
}

json report_to_json(const SearchReport& report, int decimals) {
    json maximizers = json::array();
    for (const Stakes& s : report.all_maximizers) maximizers.push_back(stakes_to_json(s));
    json j;
    j["method"] = std::string(to_string(report.method));
    j["n_cap"] = report.n_cap;
    j["best"] = strategy_to_json(report.best, decimals);
    j["maximizers"] = maximizers;
    j["certificate"] = report.certificate ? json(*report.certificate) : json(nullptr);
    return j;
}

json verdict_to_json(const Params& params, const ConjectureVerdict& verdict, int decimals) {
    json j;
    j["p"] = params.p.to_string();
    j["t"] = params.t.to_string();
    j["n_max"] = verdict.n_cap;
    j["class"] = "stake vectors with at most " + std::to_string(verdict.n_cap) + " entries";
    j["confirmed"] = verdict.confirmed;
    if (verdict.confirmed) {
        j["optimal_k"] = verdict.optimal_k;
        j["bold"] = verdict.bold;
    }
    j["value"] = verdict.value.to_string();
    j["decimal"] = verdict.value.to_decimal(decimals);
    j["counterexample"] =
        verdict.counterexample ? stakes_to_json(*verdict.counterexample) : json(nullptr);
    j["report"] = report_to_json(verdict.report, decimals);
    return j;
}

void write_region_csv(std::ostream& os, const std::vector<GridPoint>& grid, int decimals) {
    os << "p,t,status,justification\n";
    for (const GridPoint& g : grid) {
        os << g.p.to_decimal(decimals) << ',' << g.t.to_decimal(decimals) << ','
           << to_string(g.verdict.status) << ',' << to_string(g.verdict.rule) << '\n';
    }
}

void write_bounds_csv(std::ostream& os, const std::vector<HypotenuseBounds>& rows, int decimals) {
    os << "p,lower,upper_pz,upper_feige\n";
    for (const HypotenuseBounds& b : rows) {
        os << b.p.to_decimal(decimals) << ',' << b.lower.to_decimal(decimals) << ','
           << format_long_double(b.upper_pz, decimals) << ','
           << format_long_double(b.upper_feige, decimals) << '\n';
    }
}

}  // namespace stakeopt
