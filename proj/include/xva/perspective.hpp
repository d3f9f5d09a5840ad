#ifndef XVA_PERSPECTIVE_HPP
#define XVA_PERSPECTIVE_HPP

#include <string>

namespace xva {

enum class FundingRateSource { accounting_liquidity, management_yield, explicit_curve };
enum class SurvivalMode { unilateral, first_to_default };
enum class FundingSymmetry { symmetric, asymmetric };
enum class FundingAggregation { per_netting_set_sum, legal_entity_single_set };

// The switches that select a calculation perspective. The solution route is
// fixed: the invariance rate equals the funding rate and the exit price is
// the system marking, so only these inputs move between perspectives.
struct PerspectiveConfig {
    std::string name = "custom";
    FundingRateSource funding_rate_source = FundingRateSource::explicit_curve;
    std::string explicit_curve_id; // explicit funding source or management override
    SurvivalMode survival_mode = SurvivalMode::unilateral;
    bool include_dva = true;
    FundingSymmetry funding_symmetry = FundingSymmetry::symmetric;
    std::string lend_curve_id; // asymmetric: lending side (borrow side = funding curve)
    FundingAggregation funding_aggregation = FundingAggregation::per_netting_set_sum;
    bool bank_default_free = false; // management: bank hazard forced to zero

    void validate() const;

    static PerspectiveConfig accounting();
    static PerspectiveConfig management();
};

} // namespace xva

#endif
