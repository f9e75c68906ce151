#include "netcomp/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace netcomp {

std::vector<std::uint64_t> consecutive_seeds(std::uint64_t base, std::size_t count) {
    std::vector<std::uint64_t> seeds(count);
    for (std::size_t i = 0; i < count; ++i) seeds[i] = base + i;
    return seeds;
}

EnsembleResult run_ensemble(const WsConfig& ws, const ModelParams& params, std::uint32_t t_max,
                            std::span<const std::uint64_t> seeds, const EnsembleOptions& opts) {
    if (seeds.empty()) throw std::invalid_argument("seed list must be nonempty");
    if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() != seeds.size())
        throw std::invalid_argument("seed list must be distinct");
    params.validate();
    // ws is validated inside each run so that a bad configuration surfaces as
    // a per-seed failure naming the seed

    Graph shared(0);
    if (opts.shared_graph) shared = watts_strogatz(ws);

    std::vector<Trajectory> runs(seeds.size());
    auto run_one = [&](std::size_t i) {
        try {
            Rng rng(seeds[i]);
            if (opts.shared_graph) {
                runs[i] = run(shared, params, t_max, rng);
            } else {
                WsConfig per_seed = ws;
                per_seed.seed = seeds[i];
                Graph ring = build_ring_lattice(per_seed);
                Graph g = rewire(ring, per_seed, rng);
                runs[i] = run(g, params, t_max, rng);
            }
        } catch (const std::exception& e) {
            throw std::runtime_error("run with seed " + std::to_string(seeds[i]) +
                                     " failed: " + e.what());
        }
    };

    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(seeds.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < seeds.size(); ++i) run_one(i);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < seeds.size(); i += threads) run_one(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    EnsembleResult res;
    res.seeds.assign(seeds.begin(), seeds.end());
    res.run_count = seeds.size();
    res.n = ws.n;
    const std::size_t n_steps = t_max + 1;
    res.steps.resize(n_steps);
    res.min_a.resize(n_steps);
    res.max_a.resize(n_steps);

    const double n = ws.n;
    const double r = static_cast<double>(res.run_count);
    for (std::size_t t = 0; t < n_steps; ++t) {
        std::uint64_t sa = 0, sb = 0, su = 0, qa = 0, qb = 0, qu = 0;
        std::uint32_t lo_a = ws.n, hi_a = 0;
        for (const Trajectory& traj : runs) {
            const GroupCounts& c = traj.counts[t];
            sa += c.a; qa += std::uint64_t(c.a) * c.a;
            sb += c.b; qb += std::uint64_t(c.b) * c.b;
            su += c.u; qu += std::uint64_t(c.u) * c.u;
            lo_a = std::min(lo_a, c.a);
            hi_a = std::max(hi_a, c.a);
        }
        auto stats = [&](std::uint64_t sum, std::uint64_t sq, double& mean, double& sd) {
            const double m = static_cast<double>(sum) / r;
            const double var = static_cast<double>(sq) / r - m * m;
            mean = m / n;
            sd = std::sqrt(std::max(0.0, var)) / n;
        };
        StepStats& st = res.steps[t];
        stats(sa, qa, st.mean_a, st.std_a);
        stats(sb, qb, st.mean_b, st.std_b);
        stats(su, qu, st.mean_u, st.std_u);
        res.min_a[t] = static_cast<double>(lo_a) / n;
        res.max_a[t] = static_cast<double>(hi_a) / n;
    }
    return res;
}

} // namespace netcomp
