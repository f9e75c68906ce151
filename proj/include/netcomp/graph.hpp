#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "netcomp/rng.hpp"

namespace netcomp {

/// Undirected simple graph over nodes 0..n-1.
///
/// Neighbor lists are kept sorted, so two graphs constructed through the same
/// sequence of edge operations compare equal member-for-member and exports
/// are canonical.
class Graph {
public:
    explicit Graph(std::uint32_t n) : adj_(n) {}

    std::uint32_t node_count() const { return static_cast<std::uint32_t>(adj_.size()); }
    std::size_t edge_count() const { return edges_; }

    std::span<const std::uint32_t> neighbors(std::uint32_t v) const { return adj_[v]; }
    std::uint32_t degree(std::uint32_t v) const { return static_cast<std::uint32_t>(adj_[v].size()); }

    bool has_edge(std::uint32_t u, std::uint32_t v) const;

    /// Inserts an undirected edge. Throws std::invalid_argument on self-loops,
    /// duplicates, or out-of-range node ids.
    void add_edge(std::uint32_t u, std::uint32_t v);

    /// Removes an existing undirected edge. Throws std::invalid_argument if absent.
    void remove_edge(std::uint32_t u, std::uint32_t v);

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<std::uint32_t>> adj_;
    std::size_t edges_ = 0;
};

/// Watts-Strogatz construction parameters.
struct WsConfig {
    std::uint32_t n = 0;
    std::uint32_t k_ws = 0;     // even, 2 <= k_ws < n; neighbors per node in the ring lattice
    double rho_ws = 0.0;        // rewiring probability in [0,1]
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct RewireStats {
    std::size_t rewired = 0;    // edges whose far endpoint moved
    std::size_t exhausted = 0;  // edges left in place after the redraw budget ran out
};

/// Ring lattice: node i is connected to the k_ws/2 nearest neighbors on each side.
Graph build_ring_lattice(const WsConfig& cfg);

/// Watts-Strogatz rewiring pass over a ring lattice.
///
/// Lattice edges are visited in canonical order (source ascending, clockwise
/// offset ascending). With probability rho_ws the far endpoint is reattached
/// to a uniformly random node; candidates creating a self-loop or duplicate
/// edge are redrawn, and after max_redraws failures the edge stays in place.
/// Edge count is preserved.
Graph rewire(const Graph& ring, const WsConfig& cfg, Rng& rng, RewireStats* stats = nullptr);

/// build_ring_lattice + rewire with the stream seeded from cfg.seed.
/// Consumption order: construction (no draws), then rewiring.
Graph watts_strogatz(const WsConfig& cfg, RewireStats* stats = nullptr);

/// Mean over nodes of triangles(v) / (deg(v) choose 2); nodes of degree < 2
/// contribute 0. Throws std::domain_error on an empty graph.
double clustering_coefficient(const Graph& g);

/// Clustering coefficient of the unrewired ring lattice, 3(k-2)/(4(k-1)) for k >= 4.
double ring_lattice_clustering(std::uint32_t k_ws);

struct PathLengthResult {
    double mean = 0.0;           // average shortest-path hops over unordered pairs
    bool disconnected = false;   // true if the graph has more than one component
    std::uint32_t largest_component = 0;
};

/// Average shortest-path length via all-sources BFS. Disconnected graphs are
/// averaged over pairs inside the largest component and flagged, never rejected.
/// `threads` 0 picks the hardware default; the result is independent of it.
PathLengthResult characteristic_path_length(const Graph& g, unsigned threads = 0);

/// histogram[d] = number of nodes of degree d.
std::vector<std::size_t> degree_histogram(const Graph& g);

} // namespace netcomp
