#include "xva/ledger.hpp"

#include <cmath>
#include <stdexcept>

namespace xva {

IssuanceLedger::IssuanceLedger(std::vector<BondIssuance> bonds, double current_cds,
                               RecoverySchedule bank_recovery)
    : bonds_(std::move(bonds)), current_cds_(current_cds), bank_recovery_(std::move(bank_recovery)) {
    if (bonds_.empty())
        throw std::invalid_argument("IssuanceLedger: no bonds");
    if (current_cds_ < 0.0)
        throw std::invalid_argument("IssuanceLedger: negative CDS spread");
    for (const auto& b : bonds_) {
        if (!(b.notional > 0.0))
            throw std::invalid_argument("IssuanceLedger: bond notional must be positive");
        if (!(b.issue_time < b.maturity))
            throw std::invalid_argument("IssuanceLedger: bond issue_time must precede maturity");
    }
    // implied hazard, stepped with the recovery schedule
    std::vector<std::pair<double, double>> pillars;
    for (std::size_t i = 0; i < bank_recovery_.times().size(); ++i) {
        double r = bank_recovery_.values()[i];
        if (current_cds_ > 0.0 && r >= 1.0)
            throw std::invalid_argument("IssuanceLedger: recovery 1 with positive CDS spread");
        double lambda = (current_cds_ > 0.0) ? current_cds_ / (1.0 - r) : 0.0;
        pillars.emplace_back(bank_recovery_.times()[i], lambda);
    }
    bank_hazard_ = TermCurve(std::move(pillars), true);
}

double IssuanceLedger::total_notional(double t) const {
    double total = 0.0;
    for (const auto& b : bonds_)
        if (b.outstanding(t))
            total += b.notional;
    if (!(total > 0.0))
        throw std::domain_error("IssuanceLedger: no bonds outstanding at valuation time");
    return total;
}

std::vector<double> IssuanceLedger::weights(double t) const {
    double total = total_notional(t);
    std::vector<double> w(bonds_.size(), 0.0);
    for (std::size_t i = 0; i < bonds_.size(); ++i)
        if (bonds_[i].outstanding(t))
            w[i] = bonds_[i].notional / total;
    return w;
}

double IssuanceLedger::max_maturity(double t) const {
    double m = t;
    for (const auto& b : bonds_)
        if (b.outstanding(t) && b.maturity > m)
            m = b.maturity;
    return m;
}

TermCurve ftp_accounting(const IssuanceLedger& ledger, double t, bool approximate) {
    auto w = ledger.weights(t);
    double ois = 0.0, liq = 0.0, cds_avg = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        ois += w[i] * ledger.bonds()[i].ois;
        liq += w[i] * ledger.bonds()[i].liquidity_spread;
        cds_avg += w[i] * ledger.bonds()[i].cds_spread;
    }
    double rate = ois + liq;
    if (!approximate)
        rate += cds_avg - ledger.current_cds();
    return TermCurve::flat(rate);
}

TermCurve ftp_management(const IssuanceLedger& ledger, double t) {
    auto w = ledger.weights(t);
    double yield = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        yield += w[i] * ledger.bonds()[i].yield();
    return TermCurve::flat(yield);
}

double financial_area_balance(const IssuanceLedger& ledger, const TermCurve& ftp,
                              const TermCurve& risk_free, double t, bool defaultable_bank) {
    double total = ledger.total_notional(t);
    auto w = ledger.weights(t);
    double horizon = ledger.max_maturity(t);
    if (horizon <= t)
        return 0.0;

    double avg_yield = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        avg_yield += w[i] * ledger.bonds()[i].yield();

    // integrand: ftp(s) - average yield (+ current CDS leg when defaultable)
    TermCurve spread = curve_combine(ftp, TermCurve::flat(avg_yield), CombineOp::subtract);
    TermCurve rho = risk_free;
    if (defaultable_bank) {
        TermCurve cds = cds_spread_curve(ledger.bank_hazard(), ledger.bank_recovery());
        spread = curve_combine(spread, cds, CombineOp::add);
        rho = curve_combine(risk_free, ledger.bank_hazard(), CombineOp::add);
    }
    return total * weighted_exp_integral(rho, spread, t, horizon);
}

} // namespace xva
