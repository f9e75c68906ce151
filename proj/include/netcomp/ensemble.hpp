#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "netcomp/dynamics.hpp"
#include "netcomp/graph.hpp"

namespace netcomp {

struct StepStats {
    double mean_a = 0, std_a = 0;
    double mean_b = 0, std_b = 0;
    double mean_u = 0, std_u = 0;
};

struct EnsembleResult {
    std::vector<std::uint64_t> seeds;
    std::size_t run_count = 0;
    std::uint32_t n = 0;
    std::vector<StepStats> steps;     // one entry per recorded step, t=0 first
    std::vector<double> min_a;        // per-step envelope of frac_a over runs
    std::vector<double> max_a;
};

struct EnsembleOptions {
    /// Build one graph from ws.seed and reuse it for every run instead of
    /// regenerating per seed (separates dynamics noise from topology noise).
    bool shared_graph = false;
    /// 0 = hardware default. The result is independent of this value.
    unsigned threads = 0;
};

/// One independent (graph, dynamics) run per seed, aggregated per step into
/// mean and population standard deviation. Per-run stream consumption order:
/// construction, rewiring, initial assignment, dynamics. Group counts are
/// accumulated as integers, so aggregation is exact and permutation-invariant.
EnsembleResult run_ensemble(const WsConfig& ws, const ModelParams& params, std::uint32_t t_max,
                            std::span<const std::uint64_t> seeds,
                            const EnsembleOptions& opts = {});

/// seeds base, base+1, ..., base+count-1.
std::vector<std::uint64_t> consecutive_seeds(std::uint64_t base, std::size_t count);

} // namespace netcomp
