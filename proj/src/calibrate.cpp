#include "netcomp/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace netcomp {

void EmpiricalSeries::validate() const {
    if (years.empty()) throw std::invalid_argument("empirical series is empty");
    if (groups.empty()) throw std::invalid_argument("empirical series tracks no groups");
    if (values.size() != years.size())
        throw std::invalid_argument("empirical series rows do not match time stamps");
    for (std::size_t i = 0; i < years.size(); ++i) {
        if (i > 0 && !(years[i] > years[i - 1]))
            throw std::invalid_argument("time stamps must be strictly increasing at year " +
                                        std::to_string(years[i]));
        if (values[i].size() != groups.size())
            throw std::invalid_argument("row " + std::to_string(i) + " has wrong column count");
        double sum = 0.0;
        for (double f : values[i]) {
            if (!(f >= 0.0 && f <= 1.0))
                throw std::invalid_argument("fraction out of [0,1] at year " +
                                            std::to_string(years[i]));
            sum += f;
        }
        if (groups.size() == 3 && sum > 1.0 + 0.01)
            throw std::invalid_argument("three-group fractions sum to " + std::to_string(sum) +
                                        " > 1.01 at year " + std::to_string(years[i]));
    }
}

ModelParams CandidatePoint::to_params(const ModelParams& base) const {
    ModelParams p = base;
    p.alpha = alpha;
    p.gamma = gamma;
    p.s_a = s_a;
    p.s_b = s_b;
    p.init_frac_a = init_frac_a;
    p.init_frac_b = init_frac_b;
    return p;
}

namespace {

double mean_of(const StepStats& s, GroupLabel g) {
    switch (g) {
        case GroupLabel::GroupA: return s.mean_a;
        case GroupLabel::GroupB: return s.mean_b;
        case GroupLabel::Unassigned: return s.mean_u;
    }
    return 0.0;
}

double interpolate_mean(const EnsembleResult& sim, double t, GroupLabel g) {
    const auto lo = static_cast<std::size_t>(std::floor(t));
    if (lo + 1 >= sim.steps.size()) return mean_of(sim.steps.back(), g);
    const double w = t - static_cast<double>(lo);
    return (1.0 - w) * mean_of(sim.steps[lo], g) + w * mean_of(sim.steps[lo + 1], g);
}

} // namespace

double loss(const EnsembleResult& sim, const EmpiricalSeries& data, double steps_per_year) {
    data.validate();
    if (!(steps_per_year > 0.0)) throw std::invalid_argument("steps_per_year must be positive");
    const double t_last = static_cast<double>(sim.steps.size() - 1);
    double sq = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < data.years.size(); ++i) {
        const double t = (data.years[i] - data.years[0]) * steps_per_year;
        if (t < 0.0 || t > t_last + 1e-9)
            throw std::domain_error("observation at year " + std::to_string(data.years[i]) +
                                    " is outside the simulated span");
        for (std::size_t j = 0; j < data.groups.size(); ++j) {
            const double diff = data.values[i][j] - interpolate_mean(sim, std::min(t, t_last),
                                                                     data.groups[j]);
            sq += diff * diff;
            ++count;
        }
    }
    return std::sqrt(sq / static_cast<double>(count));
}

namespace {

struct ResolvedAxes {
    std::vector<double> alpha, gamma, s_a, s_b, init_a, init_b, spy;
};

std::vector<double> axis_values(const ParamAxis& a) {
    std::vector<double> v(a.points);
    for (int i = 0; i < a.points; ++i) v[i] = a.value(i);
    return v;
}

std::vector<CandidatePoint> enumerate_grid(const ResolvedAxes& ax, const SearchSpace& space) {
    std::vector<CandidatePoint> grid;
    for (double alpha : ax.alpha)
        for (double gamma : ax.gamma)
            for (double s_a : ax.s_a)
                for (double s_b : space.complement_status ? std::vector<double>{1.0 - s_a} : ax.s_b)
                    for (double ia : ax.init_a)
                        for (double ib : space.complement_init ? std::vector<double>{1.0 - ia}
                                                               : ax.init_b)
                            for (double spy : ax.spy)
                                grid.push_back({alpha, gamma, s_a, s_b, ia, ib, spy});
    return grid;
}

// Evaluation loop shared by the base grid and the refinement passes.
// Candidates are scored in parallel but selected in enumeration order.
void evaluate(const std::vector<CandidatePoint>& grid, const EmpiricalSeries& data,
              const WsConfig& ws, const ModelParams& base, std::span<const std::uint64_t> seeds,
              unsigned threads, std::vector<double>& losses) {
    losses.assign(grid.size(), 0.0);
    const double span_years = data.years.back() - data.years.front();
    auto eval_one = [&](std::size_t i) {
        const CandidatePoint& c = grid[i];
        const auto t_max = static_cast<std::uint32_t>(std::ceil(span_years * c.steps_per_year));
        EnsembleOptions opts;
        opts.threads = 1; // parallelism lives at the candidate level
        const EnsembleResult sim = run_ensemble(ws, c.to_params(base), t_max, seeds, opts);
        losses[i] = loss(sim, data, c.steps_per_year);
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(grid.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) eval_one(i);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < grid.size(); i += threads) eval_one(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
    }
}

ParamAxis refined_axis(const ParamAxis& original, double center, double halved_spacing) {
    if (original.points <= 1) return original;
    const double lo = std::max(original.lo, center - halved_spacing);
    const double hi = std::min(original.hi, center + halved_spacing);
    return ParamAxis{lo, hi, 3};
}

} // namespace

FitResult fit(const EmpiricalSeries& data, const WsConfig& ws, const SearchSpace& space,
              std::size_t ensemble_size, std::uint64_t seed_base, const ModelParams& base_params,
              unsigned threads) {
    data.validate();
    ws.validate();
    if (ensemble_size == 0) throw std::invalid_argument("ensemble_size must be positive");

    ResolvedAxes ax{axis_values(space.alpha),       axis_values(space.gamma),
                    axis_values(space.s_a),         axis_values(space.s_b),
                    axis_values(space.init_frac_a), axis_values(space.init_frac_b),
                    axis_values(space.steps_per_year)};
    std::vector<CandidatePoint> grid = enumerate_grid(ax, space);
    if (grid.empty()) throw std::invalid_argument("search space resolves to an empty grid");

    FitResult res;
    res.ensemble_size = ensemble_size;
    res.seeds = consecutive_seeds(seed_base, ensemble_size);

    std::vector<double> losses;
    evaluate(grid, data, ws, base_params, res.seeds, threads, losses);
    std::size_t best = 0;
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (losses[i] < losses[best]) best = i;
    res.samples.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) res.samples.push_back({grid[i], losses[i]});
    res.grid_best = grid[best];
    res.grid_best_loss = losses[best];
    res.best = res.grid_best;
    res.best_loss = res.grid_best_loss;

    // Refinement: re-search a 3-point grid per swept axis, spacing halved each
    // pass, windows clamped to the original bounds.
    double scale = 0.5;
    for (int depth = 0; depth < space.refine_depth; ++depth) {
        SearchSpace local = space;
        local.alpha = refined_axis(space.alpha, res.best.alpha, space.alpha.spacing() * scale);
        local.gamma = refined_axis(space.gamma, res.best.gamma, space.gamma.spacing() * scale);
        local.s_a = refined_axis(space.s_a, res.best.s_a, space.s_a.spacing() * scale);
        local.s_b = refined_axis(space.s_b, res.best.s_b, space.s_b.spacing() * scale);
        local.init_frac_a =
            refined_axis(space.init_frac_a, res.best.init_frac_a, space.init_frac_a.spacing() * scale);
        local.init_frac_b =
            refined_axis(space.init_frac_b, res.best.init_frac_b, space.init_frac_b.spacing() * scale);
        local.steps_per_year = refined_axis(space.steps_per_year, res.best.steps_per_year,
                                            space.steps_per_year.spacing() * scale);
        ResolvedAxes rax{axis_values(local.alpha),       axis_values(local.gamma),
                         axis_values(local.s_a),         axis_values(local.s_b),
                         axis_values(local.init_frac_a), axis_values(local.init_frac_b),
                         axis_values(local.steps_per_year)};
        std::vector<CandidatePoint> refined = enumerate_grid(rax, space);
        evaluate(refined, data, ws, base_params, res.seeds, threads, losses);
        for (std::size_t i = 0; i < refined.size(); ++i) {
            res.samples.push_back({refined[i], losses[i]});
            if (losses[i] < res.best_loss) {
                res.best_loss = losses[i];
                res.best = refined[i];
            }
        }
        scale *= 0.5;
    }
    return res;
}

EmpiricalSeries synthesize_series(const EnsembleResult& sim, std::span<const GroupLabel> groups,
                                  std::uint32_t sample_every, double steps_per_year,
                                  double start_year) {
    if (sample_every == 0) throw std::invalid_argument("sample_every must be positive");
    if (!(steps_per_year > 0.0)) throw std::invalid_argument("steps_per_year must be positive");
    EmpiricalSeries out;
    out.groups.assign(groups.begin(), groups.end());
    for (std::size_t t = 0; t < sim.steps.size(); t += sample_every) {
        out.years.push_back(start_year + static_cast<double>(t) / steps_per_year);
        std::vector<double> row;
        row.reserve(groups.size());
        for (GroupLabel g : groups) row.push_back(mean_of(sim.steps[t], g));
        out.values.push_back(std::move(row));
    }
    return out;
}

} // namespace netcomp
