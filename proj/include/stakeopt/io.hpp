#pragma once

#include <iosfwd>

#include "json.hpp"
#include "stakeopt/analysis.hpp"
#include "stakeopt/families.hpp"
#include "stakeopt/optimizer.hpp"

namespace stakeopt {

// All exact quantities cross these interfaces as rational strings
// ("11/27"); decimal columns are rendering only.

nlohmann::json family_to_json(const SubsetFamily& family);
SubsetFamily family_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const RealizabilityWitness& witness);
nlohmann::json strategy_to_json(const StrategyValue& strategy, int decimals);
nlohmann::json report_to_json(const SearchReport& report, int decimals);
nlohmann::json verdict_to_json(const Params& params, const ConjectureVerdict& verdict,
                               int decimals);

void write_region_csv(std::ostream& os, const std::vector<GridPoint>& grid, int decimals);
void write_bounds_csv(std::ostream& os, const std::vector<HypotenuseBounds>& rows, int decimals);

std::string format_long_double(long double v, int decimals);

}  // namespace stakeopt
