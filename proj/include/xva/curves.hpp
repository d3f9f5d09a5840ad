#ifndef XVA_CURVES_HPP
#define XVA_CURVES_HPP

#include <string>
#include <utility>
#include <vector>

namespace xva {

// Term structure of instantaneous forward rates, piecewise constant between
// pillars. The first pillar sits at time 0 and the last rate extrapolates
// flat, so a curve is defined for every horizon. Integrals are exact sums.
class TermCurve {
  public:
    TermCurve() : times_{0.0}, rates_{0.0} {}

    // pillars: (time, instantaneous rate), times strictly increasing from 0.
    // require_nonnegative is set for hazard curves.
    explicit TermCurve(std::vector<std::pair<double, double>> pillars,
                       bool require_nonnegative = false);

    static TermCurve flat(double rate) { return TermCurve({{0.0, rate}}); }

    // instantaneous forward rate at time t (t >= 0)
    double rate(double t) const;

    // exact \int_t^s rate(u) du, requires 0 <= t <= s
    double integral(double t, double s) const;

    std::size_t size() const { return times_.size(); }
    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& rates() const { return rates_; }
    std::vector<std::pair<double, double>> pillars() const;

    bool nonnegative() const;

  private:
    std::vector<double> times_;
    std::vector<double> rates_;
};

enum class CombineOp { add, subtract };

// Pointwise op of two curves; pillar set is the union of the input pillars.
TermCurve curve_combine(const TermCurve& a, const TermCurve& b, CombineOp op);

// exp(-\int_t^s r), 0 <= t <= s
double discount_factor(const TermCurve& curve, double t, double s);

// exp(-\int_t^s lambda) for a nonnegative hazard curve
double survival_probability(const TermCurve& hazard, double t, double s);

// \int_a^b sigma(s) * exp(-\int_a^s rho(u) du) ds, exact for piecewise-constant
// curves. The workhorse behind every deterministic adjustment kernel.
double weighted_exp_integral(const TermCurve& rho, const TermCurve& sigma,
                             double a, double b);

// \int_a^b exp(-\int_a^u rho) du  (an annuity factor under rho)
double annuity_integral(const TermCurve& rho, double a, double b);

// Recovery fraction in [0,1], constant or stepped in time.
class RecoverySchedule {
  public:
    RecoverySchedule() : times_{0.0}, values_{0.4} {}
    explicit RecoverySchedule(double constant);
    explicit RecoverySchedule(std::vector<std::pair<double, double>> steps);

    double at(double t) const;
    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& values() const { return values_; }

  private:
    std::vector<double> times_;
    std::vector<double> values_;
};

// (1 - R(s)) * lambda(s) as a stepped curve on the merged breakpoints.
TermCurve cds_spread_curve(const TermCurve& hazard, const RecoverySchedule& recovery);

} // namespace xva

#endif
