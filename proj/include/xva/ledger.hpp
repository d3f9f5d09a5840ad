#ifndef XVA_LEDGER_HPP
#define XVA_LEDGER_HPP

#include "xva/curves.hpp"

#include <vector>

namespace xva {

// One bond issue, with its yield decomposition recorded at issuance.
// Per-issue term structures are flattened to constant rates; only the
// weighted averages matter downstream.
struct BondIssuance {
    double issue_time = 0.0; // <= 0, years relative to today
    double maturity = 0.0;   // years relative to today
    double notional = 0.0;   // > 0
    double ois = 0.0;
    double cds_spread = 0.0;
    double liquidity_spread = 0.0;

    double yield() const { return ois + cds_spread + liquidity_spread; }
    bool outstanding(double t) const { return issue_time < t && t < maturity; }
};

// The bank's issuance history plus its current credit standing. The bank
// hazard is implied from the quoted CDS and the recovery schedule:
// lambda(s) = current_cds / (1 - R(s)).
class IssuanceLedger {
  public:
    IssuanceLedger(std::vector<BondIssuance> bonds, double current_cds,
                   RecoverySchedule bank_recovery);

    const std::vector<BondIssuance>& bonds() const { return bonds_; }
    double current_cds() const { return current_cds_; }
    const RecoverySchedule& bank_recovery() const { return bank_recovery_; }
    const TermCurve& bank_hazard() const { return bank_hazard_; }

    // notionals outstanding at t; throws if none
    double total_notional(double t) const;
    std::vector<double> weights(double t) const; // aligned with bonds(), 0 for expired
    double max_maturity(double t) const;

  private:
    std::vector<BondIssuance> bonds_;
    double current_cds_;
    RecoverySchedule bank_recovery_;
    TermCurve bank_hazard_;
};

// FTP estimate under the defaultable-bank hypothesis: weighted OIS plus
// weighted liquidity spread plus the (average CDS - current CDS) correction.
// approximate=true drops the CDS correction (the observable-market form).
TermCurve ftp_accounting(const IssuanceLedger& ledger, double t, bool approximate = false);

// FTP estimate under the default-free hypothesis: weighted average yield of
// the outstanding issues.
TermCurve ftp_management(const IssuanceLedger& ledger, double t);

// Financial-area balance when the internal transfer curve is `ftp`. With
// defaultable_bank the external bonds carry the bank's survival and recovery
// leg; without it the bank is treated as default free. Evaluated in closed
// form (integrands are piecewise exponential).
double financial_area_balance(const IssuanceLedger& ledger, const TermCurve& ftp,
                              const TermCurve& risk_free, double t, bool defaultable_bank);

} // namespace xva

#endif
