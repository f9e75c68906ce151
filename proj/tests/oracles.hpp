// Independent reference implementations used to freeze expected values.
// Deliberately naive (adjacency matrices, O(n^3) loops) and kept apart from
// the library code paths they check.
#pragma once

#include <cstdint>
#include <vector>

#include "netcomp/graph.hpp"

namespace oracle {

inline std::vector<std::vector<bool>> adjacency_matrix(const netcomp::Graph& g) {
    const std::uint32_t n = g.node_count();
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (std::uint32_t v = 0; v < n; ++v)
        for (std::uint32_t w : g.neighbors(v)) m[v][w] = true;
    return m;
}

// Mean local clustering via exhaustive neighbor-pair checks on the matrix.
inline double brute_force_clustering(const netcomp::Graph& g) {
    const auto m = adjacency_matrix(g);
    const std::uint32_t n = g.node_count();
    double total = 0.0;
    for (std::uint32_t v = 0; v < n; ++v) {
        std::vector<std::uint32_t> nb;
        for (std::uint32_t w = 0; w < n; ++w)
            if (m[v][w]) nb.push_back(w);
        if (nb.size() < 2) continue;
        std::size_t closed = 0, pairs = 0;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                ++pairs;
                if (m[nb[i]][nb[j]]) ++closed;
            }
        total += static_cast<double>(closed) / static_cast<double>(pairs);
    }
    return total / static_cast<double>(n);
}

// Mean shortest-path length over connected unordered pairs, Floyd-Warshall.
inline double floyd_warshall_mean_path(const netcomp::Graph& g) {
    const std::uint32_t n = g.node_count();
    constexpr int kInf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (std::uint32_t v = 0; v < n; ++v) d[v][v] = 0;
    for (std::uint32_t v = 0; v < n; ++v)
        for (std::uint32_t w : g.neighbors(v)) d[v][w] = 1;
    for (std::uint32_t k = 0; k < n; ++k)
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    std::uint64_t sum = 0, pairs = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (d[i][j] < kInf) {
                sum += static_cast<std::uint64_t>(d[i][j]);
                ++pairs;
            }
    return static_cast<double>(sum) / static_cast<double>(pairs);
}

} // namespace oracle
