#include "netcomp/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace netcomp {

char group_char(GroupLabel g) {
    switch (g) {
        case GroupLabel::GroupA: return 'A';
        case GroupLabel::GroupB: return 'B';
        case GroupLabel::Unassigned: return 'U';
    }
    return '?';
}

GroupLabel group_from_char(char c) {
    switch (c) {
        case 'A': return GroupLabel::GroupA;
        case 'B': return GroupLabel::GroupB;
        case 'U': return GroupLabel::Unassigned;
    }
    throw std::invalid_argument(std::string("unknown group label '") + c + "'");
}

void ModelParams::validate() const {
    if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be >= 0");
    if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be >= 0");
    if (!(s_a >= 0.0 && s_a <= 1.0)) throw std::invalid_argument("s_a must be in [0,1]");
    if (!(s_b >= 0.0 && s_b <= 1.0)) throw std::invalid_argument("s_b must be in [0,1]");
    if (!(init_frac_a >= 0.0 && init_frac_b >= 0.0))
        throw std::invalid_argument("initial fractions must be >= 0");
    if (init_frac_a + init_frac_b > 1.0 + 1e-12)
        throw std::invalid_argument("init_frac_a + init_frac_b must be <= 1");
}

GroupCounts count_groups(const AgentStateVector& states) {
    GroupCounts c;
    for (GroupLabel s : states) {
        switch (s) {
            case GroupLabel::GroupA: ++c.a; break;
            case GroupLabel::GroupB: ++c.b; break;
            case GroupLabel::Unassigned: ++c.u; break;
        }
    }
    return c;
}

AgentStateVector init_states(const Graph& g, const ModelParams& params, Rng& rng) {
    params.validate();
    const std::uint32_t n = g.node_count();
    auto na = static_cast<std::uint32_t>(std::llround(params.init_frac_a * n));
    auto nb = static_cast<std::uint32_t>(std::llround(params.init_frac_b * n));
    if (na > n) na = n;
    if (na + nb > n) nb = n - na;

    // Partial Fisher-Yates: the first na+nb entries are a uniform sample
    // without replacement.
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    AgentStateVector states(n, GroupLabel::Unassigned);
    for (std::uint32_t i = 0; i < na + nb; ++i) {
        const auto j = i + static_cast<std::uint32_t>(rng.uniform_below(n - i));
        std::swap(perm[i], perm[j]);
        states[perm[i]] = i < na ? GroupLabel::GroupA : GroupLabel::GroupB;
    }
    return states;
}

namespace {

std::uint32_t neighbors_in_group(const Graph& g, std::uint32_t node, GroupLabel target,
                                 const AgentStateVector& states) {
    std::uint32_t k = 0;
    for (std::uint32_t w : g.neighbors(node))
        if (states[w] == target) ++k;
    return k;
}

double status_of(GroupLabel target, const ModelParams& p) {
    switch (target) {
        case GroupLabel::GroupA: return p.s_a;
        case GroupLabel::GroupB: return p.s_b;
        case GroupLabel::Unassigned: return 0.0;
    }
    return 0.0;
}

// Per-run lookup tables for the transition law. Values are the same pow()
// products transition_probability computes, cached by (degree, k).
class TransitionTable {
public:
    TransitionTable(const Graph& g, const ModelParams& p) : params_(p) {
        std::uint32_t max_deg = 0;
        for (std::uint32_t v = 0; v < g.node_count(); ++v)
            max_deg = std::max(max_deg, g.degree(v));
        s_pow_[0] = std::pow(p.s_a, p.gamma);
        s_pow_[1] = std::pow(p.s_b, p.gamma);
        if (p.weighting == NeighborWeighting::Fraction) {
            k_pow_.resize(max_deg + 1);
            for (std::uint32_t deg = 1; deg <= max_deg; ++deg) {
                k_pow_[deg].resize(deg + 1);
                for (std::uint32_t k = 0; k <= deg; ++k)
                    k_pow_[deg][k] = std::pow(static_cast<double>(k) / deg, p.alpha);
            }
        } else {
            raw_pow_.resize(max_deg + 1);
            for (std::uint32_t k = 0; k <= max_deg; ++k)
                raw_pow_[k] = std::pow(static_cast<double>(k), p.alpha);
        }
    }

    double probability(std::uint32_t k, std::uint32_t deg, GroupLabel target) const {
        const double s = s_pow_[static_cast<int>(target)];
        if (params_.weighting == NeighborWeighting::Fraction)
            return k_pow_[deg][k] * s;
        return std::min(1.0, raw_pow_[k] * s);
    }

private:
    const ModelParams& params_;
    double s_pow_[2];
    std::vector<std::vector<double>> k_pow_;
    std::vector<double> raw_pow_;
};

// Candidate evaluation shared by both schemes. Returns the accepted target
// or the current label when no move is accepted.
GroupLabel evaluate_agent(const Graph& g, const AgentStateVector& states, std::uint32_t node,
                          const TransitionTable& table, Rng& rng) {
    const std::uint32_t deg = g.degree(node);
    if (deg == 0) return states[node];

    const GroupLabel current = states[node];
    GroupLabel candidates[2];
    int n_cand = 0;
    if (current == GroupLabel::GroupA) {
        candidates[n_cand++] = GroupLabel::GroupB;
    } else if (current == GroupLabel::GroupB) {
        candidates[n_cand++] = GroupLabel::GroupA;
    } else {
        const bool a_first = rng.bernoulli(0.5);
        candidates[n_cand++] = a_first ? GroupLabel::GroupA : GroupLabel::GroupB;
        candidates[n_cand++] = a_first ? GroupLabel::GroupB : GroupLabel::GroupA;
    }
    for (int i = 0; i < n_cand; ++i) {
        const GroupLabel target = candidates[i];
        const std::uint32_t k = neighbors_in_group(g, node, target, states);
        if (rng.bernoulli(table.probability(k, deg, target))) return target;
    }
    return current;
}

} // namespace

double transition_probability(std::uint32_t node, GroupLabel target, const Graph& g,
                              const AgentStateVector& states, const ModelParams& params) {
    if (node >= g.node_count())
        throw std::domain_error("unknown node id " + std::to_string(node));
    if (states.size() != g.node_count())
        throw std::domain_error("state vector length does not match graph");
    if (states[node] == target)
        throw std::domain_error("target equals current group");
    const std::uint32_t deg = g.degree(node);
    if (deg == 0)
        throw std::domain_error("degree-0 node has no transition probability");

    const std::uint32_t k = neighbors_in_group(g, node, target, states);
    const double s = status_of(target, params);
    // std::pow follows the 0^0 = 1 convention required here.
    if (params.weighting == NeighborWeighting::Fraction)
        return std::pow(static_cast<double>(k) / deg, params.alpha) * std::pow(s, params.gamma);
    return std::min(1.0, std::pow(static_cast<double>(k), params.alpha) * std::pow(s, params.gamma));
}

void step(const Graph& g, AgentStateVector& states, const ModelParams& params, Rng& rng) {
    const std::uint32_t n = g.node_count();
    const TransitionTable table(g, params);
    if (params.scheme == UpdateScheme::AsyncRandomSweep) {
        for (std::uint32_t i = 0; i < n; ++i) {
            const auto node = static_cast<std::uint32_t>(rng.uniform_below(n));
            states[node] = evaluate_agent(g, states, node, table, rng);
        }
    } else {
        const AgentStateVector frozen = states;
        for (std::uint32_t node = 0; node < n; ++node)
            states[node] = evaluate_agent(g, frozen, node, table, rng);
    }
}

Trajectory run(const Graph& g, const ModelParams& params, std::uint32_t t_max, Rng& rng) {
    return run_from(g, init_states(g, params, rng), params, t_max, rng);
}

Trajectory run_from(const Graph& g, AgentStateVector states, const ModelParams& params,
                    std::uint32_t t_max, Rng& rng) {
    if (states.size() != g.node_count())
        throw std::invalid_argument("state vector length does not match graph");
    Trajectory traj;
    traj.n = g.node_count();
    traj.counts.reserve(t_max + 1);
    traj.counts.push_back(count_groups(states));
    for (std::uint32_t t = 0; t < t_max; ++t) {
        step(g, states, params, rng);
        traj.counts.push_back(count_groups(states));
    }
    return traj;
}

double homophily(const Graph& g, const AgentStateVector& states) {
    if (g.edge_count() == 0) throw std::domain_error("homophily of edgeless graph");
    std::size_t same = 0;
    for (std::uint32_t v = 0; v < g.node_count(); ++v)
        for (std::uint32_t w : g.neighbors(v))
            if (w > v && states[v] == states[w]) ++same;
    return static_cast<double>(same) / static_cast<double>(g.edge_count());
}

UpdateScheme scheme_from_string(const std::string& s) {
    if (s == "async") return UpdateScheme::AsyncRandomSweep;
    if (s == "sync") return UpdateScheme::Synchronous;
    throw std::invalid_argument("unknown scheme '" + s + "' (expected async|sync)");
}

std::string to_string(UpdateScheme s) {
    return s == UpdateScheme::AsyncRandomSweep ? "async" : "sync";
}

NeighborWeighting weighting_from_string(const std::string& s) {
    if (s == "fraction") return NeighborWeighting::Fraction;
    if (s == "rawclamp") return NeighborWeighting::RawCountClamped;
    throw std::invalid_argument("unknown weighting '" + s + "' (expected fraction|rawclamp)");
}

std::string to_string(NeighborWeighting w) {
    return w == NeighborWeighting::Fraction ? "fraction" : "rawclamp";
}

} // namespace netcomp
