#ifndef XVA_PORTFOLIO_HPP
#define XVA_PORTFOLIO_HPP

#include "xva/curves.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xva {

enum class DealKind { deterministic_exposure, fx_forward, european_option, interest_flow_strip };
enum class OptionPayoff { call, put };

struct Deal {
    std::string id;
    DealKind kind = DealKind::deterministic_exposure;
    double notional = 1.0; // signed by direction, must be nonzero
    double strike = 0.0;
    double maturity = 0.0;
    double rate = 0.0;      // coupon rate for interest_flow_strip
    std::string underlying; // fx_forward / european_option
    OptionPayoff payoff = OptionPayoff::call;
    // deterministic_exposure: value profile under a zero rate, linear between
    // pillars, final repayment at maturity
    std::vector<std::pair<double, double>> profile;
    std::string csa_id; // empty = uncovered
    std::string netting_set_id;
};

struct Underlying {
    std::string id;
    double spot = 0.0;      // > 0
    double volatility = 0.0; // >= 0
    TermCurve drift;
};

// Correlated lognormal risk factors. The correlation matrix is validated
// symmetric PSD with unit diagonal; its Cholesky factor drives the paths.
class RiskFactorModel {
  public:
    RiskFactorModel() = default;
    RiskFactorModel(std::vector<Underlying> underlyings, std::vector<double> correlation);

    const std::vector<Underlying>& underlyings() const { return underlyings_; }
    const std::vector<double>& cholesky() const { return cholesky_; }
    std::size_t n_factors() const { return underlyings_.size(); }
    std::optional<std::size_t> index_of(const std::string& id) const;

  private:
    std::vector<Underlying> underlyings_;
    std::vector<double> correlation_; // row-major n x n
    std::vector<double> cholesky_;    // lower triangular, row-major
};

struct Portfolio {
    RiskFactorModel model;
    std::vector<Deal> deals;

    void validate() const;
    double gross_notional() const;
};

struct TimeGrid {
    std::vector<double> times; // starts at 0, strictly increasing

    std::size_t size() const { return times.size(); }
    double operator[](std::size_t i) const { return times[i]; }
    double horizon() const { return times.back(); }
};

// Uniform grid of the given step with every maturity inserted.
TimeGrid make_grid(double step, const std::vector<double>& maturities);

} // namespace xva

#endif
