#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netcomp/graph.hpp"
#include "netcomp/rng.hpp"

namespace netcomp {

enum class GroupLabel : std::uint8_t { GroupA = 0, GroupB = 1, Unassigned = 2 };

char group_char(GroupLabel g);                  // 'A', 'B', 'U'
GroupLabel group_from_char(char c);             // throws std::invalid_argument

enum class UpdateScheme { AsyncRandomSweep, Synchronous };

/// How the neighbor term of the transition law is normalized. Fraction keeps
/// the law inside [0,1]; RawCountClamped uses the bare neighbor count and
/// clamps the product at 1, kept for side-by-side comparison.
enum class NeighborWeighting { Fraction, RawCountClamped };

struct ModelParams {
    double alpha = 1.0;           // exponent on the neighbor term
    double gamma = 1.0;           // exponent on the perceived status
    double s_a = 0.5;             // perceived status of GroupA, in [0,1]
    double s_b = 0.5;             // perceived status of GroupB, in [0,1]
    // The unassigned pool carries status 0: nobody promotes leaving.
    UpdateScheme scheme = UpdateScheme::AsyncRandomSweep;
    NeighborWeighting weighting = NeighborWeighting::Fraction;
    double init_frac_a = 0.5;
    double init_frac_b = 0.5;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

using AgentStateVector = std::vector<GroupLabel>;

struct GroupCounts {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint32_t u = 0;
    bool operator==(const GroupCounts&) const = default;
};

GroupCounts count_groups(const AgentStateVector& states);

/// Per-step group populations of one run. Counts are exact; fractions are
/// derived views. counts.size() == t_max + 1 (step 0 included).
struct Trajectory {
    std::uint32_t n = 0;
    std::vector<GroupCounts> counts;

    std::size_t steps() const { return counts.size(); }
    double frac_a(std::size_t t) const { return static_cast<double>(counts[t].a) / n; }
    double frac_b(std::size_t t) const { return static_cast<double>(counts[t].b) / n; }
    double frac_u(std::size_t t) const { return static_cast<double>(counts[t].u) / n; }
};

/// Assigns round(init_frac_a*n) agents to GroupA and round(init_frac_b*n) to
/// GroupB, drawn uniformly without replacement; the rest stay Unassigned.
/// Should rounding push the two counts past n (only possible when the
/// fractions sum to exactly 1 with both halves rounding up), the GroupB count
/// yields the excess.
AgentStateVector init_states(const Graph& g, const ModelParams& params, Rng& rng);

/// Transition law: probability that `node` moves to `target` given the
/// current states. Fraction weighting: (k_target/deg)^alpha * s_target^gamma
/// with the 0^0 = 1 convention; s_unassigned = 0, so transitions into the
/// unassigned pool vanish for gamma > 0. Requires target != states[node] and
/// degree >= 1.
double transition_probability(std::uint32_t node, GroupLabel target, const Graph& g,
                              const AgentStateVector& states, const ModelParams& params);

/// Advances one model step in place.
///
/// AsyncRandomSweep: n single-agent updates; each picks a uniformly random
/// agent, evaluates its candidate targets against the current state and
/// applies at most one move (candidate order randomized for unassigned
/// agents; first Bernoulli success wins). Synchronous: every agent evaluates
/// against the step-start state in node order; accepted moves commit together.
///
/// Candidate targets never include Unassigned, so the unassigned pool can
/// only shrink. Degree-0 nodes never transition.
///
/// Draw order per agent update: [order coin if unassigned], then one uniform
/// per candidate until the first success. This order is part of the
/// reproducibility contract.
void step(const Graph& g, AgentStateVector& states, const ModelParams& params, Rng& rng);

/// init_states + t_max steps, recording counts at every step including t=0.
Trajectory run(const Graph& g, const ModelParams& params, std::uint32_t t_max, Rng& rng);

/// Same, but starting from a caller-supplied state vector (imported graphs).
Trajectory run_from(const Graph& g, AgentStateVector states, const ModelParams& params,
                    std::uint32_t t_max, Rng& rng);

/// Fraction of edges whose endpoints share a group label.
/// Throws std::domain_error on an edgeless graph.
double homophily(const Graph& g, const AgentStateVector& states);

UpdateScheme scheme_from_string(const std::string& s);      // "async" | "sync"
std::string to_string(UpdateScheme s);
NeighborWeighting weighting_from_string(const std::string& s); // "fraction" | "rawclamp"
std::string to_string(NeighborWeighting w);

} // namespace netcomp
