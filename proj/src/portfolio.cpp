#include "xva/portfolio.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xva {

namespace {

// Lower Cholesky factor with a PSD tolerance; rank-deficient columns are
// zeroed, genuinely indefinite matrices are rejected.
std::vector<double> cholesky_lower(const std::vector<double>& a, std::size_t n) {
    std::vector<double> l(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < j; ++k)
                sum += l[i * n + k] * l[j * n + k];
            if (i == j) {
                double diag = a[i * n + i] - sum;
                if (diag < -1e-10)
                    throw std::invalid_argument(
                        "RiskFactorModel: correlation matrix is not positive semidefinite");
                l[i * n + j] = diag > 0.0 ? std::sqrt(diag) : 0.0;
            } else {
                double denom = l[j * n + j];
                l[i * n + j] = denom > 0.0 ? (a[i * n + j] - sum) / denom : 0.0;
            }
        }
    }
    return l;
}

} // namespace

RiskFactorModel::RiskFactorModel(std::vector<Underlying> underlyings,
                                 std::vector<double> correlation)
    : underlyings_(std::move(underlyings)), correlation_(std::move(correlation)) {
    std::size_t n = underlyings_.size();
    if (correlation_.size() != n * n)
        throw std::invalid_argument("RiskFactorModel: correlation matrix size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        const auto& u = underlyings_[i];
        if (!(u.spot > 0.0))
            throw std::invalid_argument("RiskFactorModel: underlying '" + u.id +
                                        "' must have positive spot");
        if (u.volatility < 0.0)
            throw std::invalid_argument("RiskFactorModel: underlying '" + u.id +
                                        "' has negative volatility");
        if (std::fabs(correlation_[i * n + i] - 1.0) > 1e-12)
            throw std::invalid_argument("RiskFactorModel: correlation diagonal must be 1");
        for (std::size_t j = 0; j < n; ++j)
            if (std::fabs(correlation_[i * n + j] - correlation_[j * n + i]) > 1e-12)
                throw std::invalid_argument("RiskFactorModel: correlation matrix not symmetric");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (underlyings_[i].id == underlyings_[j].id)
                throw std::invalid_argument("RiskFactorModel: duplicate underlying id '" +
                                            underlyings_[i].id + "'");
    cholesky_ = cholesky_lower(correlation_, n);
}

std::optional<std::size_t> RiskFactorModel::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < underlyings_.size(); ++i)
        if (underlyings_[i].id == id)
            return i;
    return std::nullopt;
}

void Portfolio::validate() const {
    for (const auto& d : deals) {
        if (d.id.empty())
            throw std::invalid_argument("Portfolio: deal with empty id");
        if (d.notional == 0.0)
            throw std::invalid_argument("Portfolio: deal '" + d.id + "' has zero notional");
        if (d.netting_set_id.empty())
            throw std::invalid_argument("Portfolio: deal '" + d.id + "' has no netting set");
        switch (d.kind) {
        case DealKind::deterministic_exposure:
            if (d.profile.empty())
                throw std::invalid_argument("Portfolio: deal '" + d.id + "' needs a profile");
            for (std::size_t i = 1; i < d.profile.size(); ++i)
                if (!(d.profile[i].first > d.profile[i - 1].first))
                    throw std::invalid_argument("Portfolio: deal '" + d.id +
                                                "' profile times must increase");
            if (!(d.profile.back().first > 0.0))
                throw std::invalid_argument("Portfolio: deal '" + d.id + "' matures at time 0");
            break;
        case DealKind::fx_forward:
        case DealKind::european_option:
            if (d.underlying.empty())
                throw std::invalid_argument("Portfolio: deal '" + d.id + "' needs an underlying");
            if (!model.index_of(d.underlying))
                throw std::invalid_argument("Portfolio: deal '" + d.id +
                                            "' references unknown underlying '" + d.underlying +
                                            "'");
            [[fallthrough]];
        case DealKind::interest_flow_strip:
            if (!(d.maturity > 0.0))
                throw std::invalid_argument("Portfolio: deal '" + d.id +
                                            "' must have positive maturity");
            break;
        }
    }
    for (std::size_t i = 0; i < deals.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (deals[i].id == deals[j].id)
                throw std::invalid_argument("Portfolio: duplicate deal id '" + deals[i].id + "'");
}

double Portfolio::gross_notional() const {
    double g = 0.0;
    for (const auto& d : deals) {
        double scale = 1.0;
        if (d.kind == DealKind::deterministic_exposure) {
            scale = 0.0;
            for (const auto& [t, v] : d.profile)
                scale = std::max(scale, std::fabs(v));
        }
        g += std::fabs(d.notional) * scale;
    }
    return g;
}

TimeGrid make_grid(double step, const std::vector<double>& maturities) {
    if (!(step > 0.0))
        throw std::invalid_argument("make_grid: step must be positive");
    double horizon = 0.0;
    for (double m : maturities)
        horizon = std::max(horizon, m);
    if (horizon <= 0.0)
        throw std::invalid_argument("make_grid: empty horizon");

    std::vector<double> times;
    std::size_t n = static_cast<std::size_t>(std::ceil(horizon / step - 1e-9));
    times.reserve(n + maturities.size() + 1);
    for (std::size_t i = 0; i <= n; ++i)
        times.push_back(std::min(static_cast<double>(i) * step, horizon));
    times.insert(times.end(), maturities.begin(), maturities.end());
    std::sort(times.begin(), times.end());
    // drop near-duplicates so kernel segments never collapse
    std::vector<double> unique_times;
    for (double t : times)
        if (unique_times.empty() || t - unique_times.back() > 1e-10)
            unique_times.push_back(t);
    return TimeGrid{std::move(unique_times)};
}

} // namespace xva
