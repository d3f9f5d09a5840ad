#ifndef XVA_SIMULATE_HPP
#define XVA_SIMULATE_HPP

#include "xva/portfolio.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace xva {

// Correlated GBM spot paths on a grid. values[u][path * n_times + j].
struct UnderlyingPaths {
    TimeGrid grid;
    std::size_t n_paths = 0;
    std::vector<std::vector<double>> values;

    double spot(std::size_t u, std::size_t path, std::size_t j) const {
        return values[u][path * grid.size() + j];
    }
};

// Mark-to-future values per deal. Node values are pre-payment: a node at a
// payment date includes that payment, nodes past maturity are exactly 0.
struct ScenarioCube {
    TimeGrid grid;
    std::size_t n_paths = 0;
    std::string marking_curve_id;
    std::vector<std::string> deal_ids;
    std::vector<std::vector<double>> values; // [deal][path * n_times + j]

    double value(std::size_t deal, std::size_t path, std::size_t j) const {
        return values[deal][path * grid.size() + j];
    }
    std::size_t deal_index(const std::string& id) const;
};

// Deterministic draws keyed by (seed, underlying, path, step): identical
// inputs give bit-identical paths regardless of evaluation order.
UnderlyingPaths simulate(const RiskFactorModel& model, const TimeGrid& grid,
                         std::size_t n_paths, std::uint64_t seed);

ScenarioCube mark_to_future(const std::vector<Deal>& deals, const UnderlyingPaths& paths,
                            const RiskFactorModel& model, const TermCurve& marking_curve,
                            const std::string& marking_curve_id = "");

// Per-deal marking context with the deterministic factors cached per node.
// Shared by mark_to_future and the streaming engine.
class DealPricer {
  public:
    DealPricer(const Deal& deal, const RiskFactorModel& model, const TimeGrid& grid,
               const TermCurve& marking_curve);

    // value at node j given the underlying spot there (ignored when the deal
    // is deterministic)
    double value(std::size_t j, double spot) const;
    bool deterministic() const { return underlying_index_ < 0; }
    int underlying_index() const { return underlying_index_; }

  private:
    const Deal* deal_;
    int underlying_index_ = -1;
    double sigma_ = 0.0;
    std::vector<double> det_values_;    // deterministic kinds: value per node
    std::vector<double> discount_;      // p(s_j, T)
    std::vector<double> forward_growth_; // exp(\int_{s_j}^T drift)
    std::vector<double> sqrt_var_;      // sigma * sqrt(T - s_j)
};

// Value of a zero-rate-referenced profile re-marked under `curve` at time s.
double deterministic_profile_value(const std::vector<std::pair<double, double>>& profile,
                                   const TermCurve& curve, double s);

// GBM log-increment helper used by both the batch and streaming paths.
struct PathRecursion {
    std::vector<double> log_spot0;       // per underlying
    std::vector<double> drift_increment; // [u * (n-1) + j]: \int drift - sigma^2/2 h
    std::vector<double> vol_sqrt_dt;     // [u * (n-1) + j]
    std::size_t n_times = 0;
    std::size_t n_factors = 0;

    PathRecursion(const RiskFactorModel& model, const TimeGrid& grid);
};

// Fill log-spots for one path into out[u * n_times + j].
void generate_path(const RiskFactorModel& model, const PathRecursion& rec, std::uint64_t seed,
                   std::uint64_t path, std::vector<double>& out);

} // namespace xva

#endif
