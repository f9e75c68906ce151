#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netcomp/dynamics.hpp"
#include "netcomp/ensemble.hpp"
#include "netcomp/graph.hpp"

namespace netcomp {

/// Observed group fractions over calendar time, the fitting target.
struct EmpiricalSeries {
    std::vector<double> years;                     // strictly increasing
    std::vector<GroupLabel> groups;                // tracked columns, in file order
    std::vector<std::vector<double>> values;       // values[i][j] = fraction of groups[j] at years[i]

    /// Throws std::invalid_argument on schema violations.
    void validate() const;
};

/// One fitted scalar: fixed when points == 1, else a uniform grid.
struct ParamAxis {
    double lo = 0.0;
    double hi = 0.0;
    int points = 1;

    double value(int i) const {
        return points > 1 ? lo + (hi - lo) * i / (points - 1) : lo;
    }
    double spacing() const { return points > 1 ? (hi - lo) / (points - 1) : 0.0; }
};

struct SearchSpace {
    ParamAxis alpha{1.0, 1.0, 1};
    ParamAxis gamma{1.0, 1.0, 1};
    ParamAxis s_a{0.5, 0.5, 1};
    ParamAxis s_b{0.5, 0.5, 1};          // ignored when complement_status
    bool complement_status = false;      // s_b = 1 - s_a
    ParamAxis init_frac_a{0.5, 0.5, 1};
    ParamAxis init_frac_b{0.5, 0.5, 1};  // ignored when complement_init
    bool complement_init = false;        // init_frac_b = 1 - init_frac_a
    ParamAxis steps_per_year{1.0, 1.0, 1};
    int refine_depth = 2;                // halved-grid passes around the incumbent
};

/// One fully resolved candidate (complement constraints applied).
struct CandidatePoint {
    double alpha = 0, gamma = 0, s_a = 0, s_b = 0;
    double init_frac_a = 0, init_frac_b = 0;
    double steps_per_year = 1;

    ModelParams to_params(const ModelParams& base) const;
};

struct FitSample {
    CandidatePoint point;
    double loss = 0.0;
};

struct FitResult {
    CandidatePoint best;          // after refinement
    double best_loss = 0.0;
    CandidatePoint grid_best;     // argmin of the base grid, before refinement
    double grid_best_loss = 0.0;
    std::vector<FitSample> samples;
    std::size_t ensemble_size = 0;
    std::vector<std::uint64_t> seeds;
};

/// RMSE between observations and the linearly interpolated ensemble mean.
/// Observation times map to simulation steps via (year - first_year) *
/// steps_per_year, anchored at t=0. An observation outside the simulated span
/// raises std::domain_error naming the time stamp.
double loss(const EnsembleResult& sim, const EmpiricalSeries& data, double steps_per_year);

/// Exhaustive grid search with common random numbers: every candidate is
/// scored with the same seed set, so loss differences reflect parameters
/// rather than sampling noise. Ties break to the lexicographically smallest
/// candidate in axis order (alpha, gamma, s_a, s_b, init_frac_a, init_frac_b,
/// steps_per_year). Repeated calls with identical inputs return identical
/// results regardless of thread count. After the base grid, refine_depth
/// passes re-search a halved grid around the incumbent.
FitResult fit(const EmpiricalSeries& data, const WsConfig& ws, const SearchSpace& space,
              std::size_t ensemble_size, std::uint64_t seed_base,
              const ModelParams& base_params = {}, unsigned threads = 0);

/// Samples the ensemble-mean trajectory into the empirical schema: one
/// observation every `sample_every` steps, time stamps start_year + t/spy.
/// This is the synthetic-fixture generator used where no real data exists.
EmpiricalSeries synthesize_series(const EnsembleResult& sim, std::span<const GroupLabel> groups,
                                  std::uint32_t sample_every, double steps_per_year,
                                  double start_year);

} // namespace netcomp
