#include "xva/perspective.hpp"

#include <stdexcept>

namespace xva {

void PerspectiveConfig::validate() const {
    if (funding_symmetry == FundingSymmetry::asymmetric) {
        if (funding_aggregation != FundingAggregation::legal_entity_single_set)
            throw std::invalid_argument(
                "PerspectiveConfig: asymmetric funding rates require legal_entity_single_set "
                "aggregation");
        if (lend_curve_id.empty())
            throw std::invalid_argument(
                "PerspectiveConfig: asymmetric funding rates need a lend_curve_id");
    }
    if (funding_rate_source == FundingRateSource::explicit_curve && explicit_curve_id.empty())
        throw std::invalid_argument("PerspectiveConfig: explicit funding source needs a curve id");
}

PerspectiveConfig PerspectiveConfig::accounting() {
    PerspectiveConfig c;
    c.name = "accounting";
    c.funding_rate_source = FundingRateSource::accounting_liquidity;
    c.survival_mode = SurvivalMode::unilateral;
    c.include_dva = true;
    c.funding_symmetry = FundingSymmetry::symmetric;
    c.funding_aggregation = FundingAggregation::per_netting_set_sum;
    c.bank_default_free = false;
    return c;
}

PerspectiveConfig PerspectiveConfig::management() {
    PerspectiveConfig c;
    c.name = "management";
    c.funding_rate_source = FundingRateSource::management_yield;
    c.survival_mode = SurvivalMode::first_to_default; // degenerates: bank is default free
    c.include_dva = false;
    c.funding_symmetry = FundingSymmetry::symmetric;
    c.funding_aggregation = FundingAggregation::per_netting_set_sum;
    c.bank_default_free = true;
    return c;
}

} // namespace xva
