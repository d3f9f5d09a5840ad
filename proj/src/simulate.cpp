#include "xva/simulate.hpp"

#include "xva/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xva {

std::size_t ScenarioCube::deal_index(const std::string& id) const {
    for (std::size_t i = 0; i < deal_ids.size(); ++i)
        if (deal_ids[i] == id)
            return i;
    throw std::invalid_argument("ScenarioCube: unknown deal id '" + id + "'");
}

PathRecursion::PathRecursion(const RiskFactorModel& model, const TimeGrid& grid)
    : n_times(grid.size()), n_factors(model.n_factors()) {
    log_spot0.resize(n_factors);
    drift_increment.resize(n_factors * (n_times > 0 ? n_times - 1 : 0));
    vol_sqrt_dt.resize(drift_increment.size());
    for (std::size_t u = 0; u < n_factors; ++u) {
        const auto& und = model.underlyings()[u];
        log_spot0[u] = std::log(und.spot);
        for (std::size_t j = 0; j + 1 < n_times; ++j) {
            double h = grid[j + 1] - grid[j];
            double half_var = 0.5 * und.volatility * und.volatility * h;
            drift_increment[u * (n_times - 1) + j] = und.drift.integral(grid[j], grid[j + 1]) - half_var;
            vol_sqrt_dt[u * (n_times - 1) + j] = und.volatility * std::sqrt(h);
        }
    }
}

void generate_path(const RiskFactorModel& model, const PathRecursion& rec, std::uint64_t seed,
                   std::uint64_t path, std::vector<double>& out) {
    std::size_t n = rec.n_times;
    std::size_t nf = rec.n_factors;
    out.resize(nf * n);
    std::vector<double> z(nf);
    const auto& chol = model.cholesky();
    for (std::size_t u = 0; u < nf; ++u)
        out[u * n] = rec.log_spot0[u];
    for (std::size_t j = 0; j + 1 < n; ++j) {
        for (std::size_t u = 0; u < nf; ++u)
            z[u] = normal_draw(seed, static_cast<std::uint32_t>(u), path,
                               static_cast<std::uint32_t>(j));
        for (std::size_t u = 0; u < nf; ++u) {
            double corr = 0.0;
            for (std::size_t k = 0; k <= u; ++k)
                corr += chol[u * nf + k] * z[k];
            out[u * n + j + 1] = out[u * n + j] + rec.drift_increment[u * (n - 1) + j] +
                                 rec.vol_sqrt_dt[u * (n - 1) + j] * corr;
        }
    }
}

UnderlyingPaths simulate(const RiskFactorModel& model, const TimeGrid& grid, std::size_t n_paths,
                         std::uint64_t seed) {
    if (n_paths == 0)
        throw std::invalid_argument("simulate: n_paths must be at least 1");
    if (grid.size() < 1 || grid[0] != 0.0)
        throw std::invalid_argument("simulate: grid must start at time 0");

    UnderlyingPaths paths;
    paths.grid = grid;
    paths.n_paths = n_paths;
    paths.values.assign(model.n_factors(), std::vector<double>(n_paths * grid.size()));

    PathRecursion rec(model, grid);
    std::vector<double> buf;
    for (std::size_t p = 0; p < n_paths; ++p) {
        generate_path(model, rec, seed, p, buf);
        for (std::size_t u = 0; u < model.n_factors(); ++u)
            for (std::size_t j = 0; j < grid.size(); ++j)
                paths.values[u][p * grid.size() + j] = std::exp(buf[u * grid.size() + j]);
    }
    return paths;
}

double deterministic_profile_value(const std::vector<std::pair<double, double>>& profile,
                                   const TermCurve& curve, double s) {
    double maturity = profile.back().first;
    if (s > maturity)
        return 0.0;

    // implied cash flows: continuous stream -profile'(u) du plus the final
    // repayment profile(T); discount them under `curve`
    double value = profile.back().second * discount_factor(curve, s, maturity);
    for (std::size_t i = 0; i + 1 < profile.size(); ++i) {
        double t0 = std::max(s, profile[i].first);
        double t1 = profile[i + 1].first;
        if (t1 <= t0)
            continue;
        double slope =
            (profile[i + 1].second - profile[i].second) / (profile[i + 1].first - profile[i].first);
        // \int_{t0}^{t1} p(s,u) * (-slope) du
        value -= slope * discount_factor(curve, s, t0) * annuity_integral(curve, t0, t1);
    }
    return value;
}

DealPricer::DealPricer(const Deal& deal, const RiskFactorModel& model, const TimeGrid& grid,
                       const TermCurve& marking_curve)
    : deal_(&deal) {
    std::size_t n = grid.size();
    switch (deal.kind) {
    case DealKind::deterministic_exposure: {
        det_values_.resize(n);
        for (std::size_t j = 0; j < n; ++j)
            det_values_[j] =
                deal.notional * deterministic_profile_value(deal.profile, marking_curve, grid[j]);
        break;
    }
    case DealKind::interest_flow_strip: {
        det_values_.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (grid[j] > deal.maturity) {
                det_values_[j] = 0.0;
            } else {
                det_values_[j] =
                    deal.notional * deal.rate * annuity_integral(marking_curve, grid[j], deal.maturity);
            }
        }
        break;
    }
    case DealKind::fx_forward:
    case DealKind::european_option: {
        auto idx = model.index_of(deal.underlying);
        if (!idx)
            throw std::invalid_argument("DealPricer: deal '" + deal.id +
                                        "' references unknown underlying '" + deal.underlying +
                                        "'");
        underlying_index_ = static_cast<int>(*idx);
        const auto& und = model.underlyings()[*idx];
        sigma_ = und.volatility;
        discount_.resize(n);
        forward_growth_.resize(n);
        sqrt_var_.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            double s = grid[j];
            if (s > deal.maturity) {
                discount_[j] = forward_growth_[j] = sqrt_var_[j] = 0.0;
            } else {
                discount_[j] = discount_factor(marking_curve, s, deal.maturity);
                forward_growth_[j] = std::exp(und.drift.integral(s, deal.maturity));
                sqrt_var_[j] = sigma_ * std::sqrt(deal.maturity - s);
            }
        }
        break;
    }
    }
}

double DealPricer::value(std::size_t j, double spot) const {
    const Deal& d = *deal_;
    if (underlying_index_ < 0)
        return det_values_[j];
    if (discount_[j] == 0.0 && forward_growth_[j] == 0.0)
        return 0.0; // past maturity
    double fwd = spot * forward_growth_[j];
    if (d.kind == DealKind::fx_forward)
        return d.notional * (fwd - d.strike) * discount_[j];

    double omega = (d.payoff == OptionPayoff::call) ? 1.0 : -1.0;
    double sv = sqrt_var_[j];
    if (sv <= 0.0 || d.strike <= 0.0) {
        double intrinsic = std::max(omega * (fwd - d.strike), 0.0);
        return d.notional * intrinsic * discount_[j];
    }
    double d1 = (std::log(fwd / d.strike) + 0.5 * sv * sv) / sv;
    double d2 = d1 - sv;
    double black = omega * (fwd * normal_cdf(omega * d1) - d.strike * normal_cdf(omega * d2));
    return d.notional * black * discount_[j];
}

ScenarioCube mark_to_future(const std::vector<Deal>& deals, const UnderlyingPaths& paths,
                            const RiskFactorModel& model, const TermCurve& marking_curve,
                            const std::string& marking_curve_id) {
    for (const auto& d : deals) {
        double maturity =
            d.kind == DealKind::deterministic_exposure ? d.profile.back().first : d.maturity;
        bool on_grid = std::any_of(paths.grid.times.begin(), paths.grid.times.end(),
                                   [&](double t) { return std::fabs(t - maturity) < 1e-9; });
        if (!on_grid)
            throw std::invalid_argument("mark_to_future: grid misses maturity of deal '" + d.id +
                                        "'");
    }

    ScenarioCube cube;
    cube.grid = paths.grid;
    cube.n_paths = paths.n_paths;
    cube.marking_curve_id = marking_curve_id;
    std::size_t n = paths.grid.size();
    cube.values.assign(deals.size(), std::vector<double>(paths.n_paths * n));

    for (std::size_t di = 0; di < deals.size(); ++di) {
        cube.deal_ids.push_back(deals[di].id);
        DealPricer pricer(deals[di], model, paths.grid, marking_curve);
        for (std::size_t p = 0; p < paths.n_paths; ++p) {
            for (std::size_t j = 0; j < n; ++j) {
                double spot = pricer.deterministic()
                                  ? 0.0
                                  : paths.spot(static_cast<std::size_t>(pricer.underlying_index()),
                                               p, j);
                cube.values[di][p * n + j] = pricer.value(j, spot);
            }
        }
    }
    return cube;
}

} // namespace xva
