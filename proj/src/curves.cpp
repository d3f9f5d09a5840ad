#include "xva/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace xva {

namespace {

// (1 - exp(-x*h)) / x, stable as x -> 0
double expm1_ratio(double x, double h) {
    if (x == 0.0)
        return h;
    return -std::expm1(-x * h) / x;
}

} // namespace

TermCurve::TermCurve(std::vector<std::pair<double, double>> pillars, bool require_nonnegative) {
    if (pillars.empty())
        throw std::invalid_argument("TermCurve: at least one pillar required");
    if (pillars.front().first != 0.0)
        throw std::invalid_argument("TermCurve: first pillar must be at time 0");
    times_.reserve(pillars.size());
    rates_.reserve(pillars.size());
    double prev = -1.0;
    for (const auto& [t, r] : pillars) {
        if (!(t > prev))
            throw std::invalid_argument("TermCurve: pillar times must be strictly increasing");
        if (!std::isfinite(t) || !std::isfinite(r))
            throw std::invalid_argument("TermCurve: pillar values must be finite");
        if (require_nonnegative && r < 0.0)
            throw std::invalid_argument("TermCurve: negative rate on a nonnegative curve");
        times_.push_back(t);
        rates_.push_back(r);
        prev = t;
    }
}

double TermCurve::rate(double t) const {
    if (t < 0.0)
        throw std::domain_error("TermCurve::rate: negative time");
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    std::size_t idx = static_cast<std::size_t>(it - times_.begin());
    return rates_[idx == 0 ? 0 : idx - 1];
}

double TermCurve::integral(double t, double s) const {
    if (t < 0.0 || s < t)
        throw std::domain_error("TermCurve::integral: requires 0 <= t <= s");
    if (s == t)
        return 0.0;
    double acc = 0.0;
    // segment [times_[i], times_[i+1]) carries rates_[i]; last segment open-ended
    for (std::size_t i = 0; i < times_.size(); ++i) {
        double lo = std::max(t, times_[i]);
        double hi = (i + 1 < times_.size()) ? std::min(s, times_[i + 1]) : s;
        if (hi > lo)
            acc += rates_[i] * (hi - lo);
    }
    return acc;
}

std::vector<std::pair<double, double>> TermCurve::pillars() const {
    std::vector<std::pair<double, double>> out;
    out.reserve(times_.size());
    for (std::size_t i = 0; i < times_.size(); ++i)
        out.emplace_back(times_[i], rates_[i]);
    return out;
}

bool TermCurve::nonnegative() const {
    return std::all_of(rates_.begin(), rates_.end(), [](double r) { return r >= 0.0; });
}

TermCurve curve_combine(const TermCurve& a, const TermCurve& b, CombineOp op) {
    std::vector<double> grid;
    grid.reserve(a.size() + b.size());
    grid.insert(grid.end(), a.times().begin(), a.times().end());
    grid.insert(grid.end(), b.times().begin(), b.times().end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<std::pair<double, double>> pillars;
    pillars.reserve(grid.size());
    for (double t : grid) {
        double v = (op == CombineOp::add) ? a.rate(t) + b.rate(t) : a.rate(t) - b.rate(t);
        pillars.emplace_back(t, v);
    }
    return TermCurve(std::move(pillars));
}

double discount_factor(const TermCurve& curve, double t, double s) {
    if (s < t)
        throw std::domain_error("discount_factor: requires t <= s");
    return std::exp(-curve.integral(t, s));
}

double survival_probability(const TermCurve& hazard, double t, double s) {
    if (!hazard.nonnegative())
        throw std::invalid_argument("survival_probability: hazard curve must be nonnegative");
    return discount_factor(hazard, t, s);
}

double weighted_exp_integral(const TermCurve& rho, const TermCurve& sigma, double a, double b) {
    if (a < 0.0 || b < a)
        throw std::domain_error("weighted_exp_integral: requires 0 <= a <= b");
    if (b == a)
        return 0.0;

    std::vector<double> grid;
    grid.push_back(a);
    for (double t : rho.times())
        if (t > a && t < b)
            grid.push_back(t);
    for (double t : sigma.times())
        if (t > a && t < b)
            grid.push_back(t);
    grid.push_back(b);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    double acc = 0.0;
    double running = 1.0; // exp(-\int_a^{grid[i]} rho)
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        double lo = grid[i], hi = grid[i + 1];
        double h = hi - lo;
        double r = rho.rate(lo);
        double s = sigma.rate(lo);
        acc += running * s * expm1_ratio(r, h);
        running *= std::exp(-r * h);
    }
    return acc;
}

double annuity_integral(const TermCurve& rho, double a, double b) {
    return weighted_exp_integral(rho, TermCurve::flat(1.0), a, b);
}

RecoverySchedule::RecoverySchedule(double constant) : times_{0.0}, values_{constant} {
    if (!(constant >= 0.0 && constant <= 1.0))
        throw std::invalid_argument("RecoverySchedule: recovery must be in [0,1]");
}

RecoverySchedule::RecoverySchedule(std::vector<std::pair<double, double>> steps) {
    if (steps.empty())
        throw std::invalid_argument("RecoverySchedule: at least one step required");
    if (steps.front().first != 0.0)
        throw std::invalid_argument("RecoverySchedule: first step must be at time 0");
    double prev = -1.0;
    for (const auto& [t, v] : steps) {
        if (!(t > prev))
            throw std::invalid_argument("RecoverySchedule: step times must be strictly increasing");
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("RecoverySchedule: recovery must be in [0,1]");
        times_.push_back(t);
        values_.push_back(v);
        prev = t;
    }
}

double RecoverySchedule::at(double t) const {
    if (t < 0.0)
        throw std::domain_error("RecoverySchedule::at: negative time");
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    std::size_t idx = static_cast<std::size_t>(it - times_.begin());
    return values_[idx == 0 ? 0 : idx - 1];
}

TermCurve cds_spread_curve(const TermCurve& hazard, const RecoverySchedule& recovery) {
    std::vector<double> grid(hazard.times());
    grid.insert(grid.end(), recovery.times().begin(), recovery.times().end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<std::pair<double, double>> pillars;
    pillars.reserve(grid.size());
    for (double t : grid)
        pillars.emplace_back(t, (1.0 - recovery.at(t)) * hazard.rate(t));
    return TermCurve(std::move(pillars));
}

} // namespace xva
