#ifndef XVA_COLLATERAL_HPP
#define XVA_COLLATERAL_HPP

#include "xva/curves.hpp"
#include "xva/simulate.hpp"

#include <string>
#include <vector>

namespace xva {

enum class CsaMode { bilateral_full, unilateral_counterparty_posts, unilateral_bank_posts, threshold };

struct CSATerms {
    std::string id;
    CsaMode mode = CsaMode::bilateral_full;
    double threshold_bank = 0.0;
    double threshold_cpty = 0.0;
    std::string remuneration_curve_id;
    TermCurve remuneration;
    bool rehypothecable = true;
    std::vector<std::string> deal_ids;
};

struct NettingSet {
    std::string id;
    TermCurve counterparty_hazard;
    RecoverySchedule counterparty_recovery;
    std::vector<CSATerms> csas;
    std::vector<std::string> uncovered_deal_ids;
};

struct NettingHierarchy {
    std::vector<NettingSet> netting_sets;

    // Reconciles the hierarchy with the portfolio's deal list: deals carrying
    // a csa_id are added to that CSA's perimeter, deals in no CSA become
    // uncovered, and the usual consistency checks run. Call before use.
    void bind(const std::vector<Deal>& deals);
    const NettingSet& find(const std::string& id) const;
};

// Variation margin from the CSA-netted value, sign convention M > 0 held by
// the desk.
double csa_margin(CsaMode mode, double netted_value, double threshold_bank, double threshold_cpty);

// M[path * n_times + j] for one CSA from the cube.
std::vector<double> margin_paths(const ScenarioCube& cube, const CSATerms& csa);

// Pathwise aggregation grids, all [path * n_times + j].
struct FundingPositions {
    std::vector<std::string> netting_set_ids;
    std::vector<std::vector<double>> value;   // V per netting set
    std::vector<std::vector<double>> margin;  // M per netting set
    std::vector<std::vector<double>> funding; // F = V - M per netting set
    std::vector<double> le_margin;
    std::vector<double> le_funding;
};

FundingPositions funding_positions(const ScenarioCube& cube, const NettingHierarchy& hierarchy);

} // namespace xva

#endif
