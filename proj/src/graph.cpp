#include "netcomp/graph.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <stdexcept>
#include <string>
#include <thread>

namespace netcomp {

namespace {

constexpr int kMaxRedraws = 128;

void check_node(const Graph& g, std::uint32_t v) {
    if (v >= g.node_count())
        throw std::invalid_argument("node id " + std::to_string(v) + " out of range");
}

} // namespace

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
    check_node(*this, u);
    check_node(*this, v);
    if (u == v) throw std::invalid_argument("self-loop rejected at node " + std::to_string(u));
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v)
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    a.insert(it, v);
    auto& b = adj_[v];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    ++edges_;
}

void Graph::remove_edge(std::uint32_t u, std::uint32_t v) {
    check_node(*this, u);
    check_node(*this, v);
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v)
        throw std::invalid_argument("missing edge " + std::to_string(u) + "-" + std::to_string(v));
    a.erase(it);
    auto& b = adj_[v];
    b.erase(std::lower_bound(b.begin(), b.end(), u));
    --edges_;
}

void WsConfig::validate() const {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (k_ws < 2 || k_ws % 2 != 0)
        throw std::invalid_argument("k_ws must be even and >= 2, got " + std::to_string(k_ws));
    if (k_ws >= n)
        throw std::invalid_argument("k_ws must be < n, got k_ws=" + std::to_string(k_ws) +
                                    " n=" + std::to_string(n));
    if (!(rho_ws >= 0.0 && rho_ws <= 1.0))
        throw std::invalid_argument("rho_ws must be in [0,1]");
}

Graph build_ring_lattice(const WsConfig& cfg) {
    cfg.validate();
    Graph g(cfg.n);
    const std::uint32_t half = cfg.k_ws / 2;
    for (std::uint32_t i = 0; i < cfg.n; ++i)
        for (std::uint32_t off = 1; off <= half; ++off)
            g.add_edge(i, (i + off) % cfg.n);
    return g;
}

Graph rewire(const Graph& ring, const WsConfig& cfg, Rng& rng, RewireStats* stats) {
    cfg.validate();
    Graph g = ring;
    RewireStats local;
    const std::uint32_t half = cfg.k_ws / 2;
    for (std::uint32_t src = 0; src < cfg.n; ++src) {
        for (std::uint32_t off = 1; off <= half; ++off) {
            const std::uint32_t far = (src + off) % cfg.n;
            if (!rng.bernoulli(cfg.rho_ws)) continue;
            bool moved = false;
            for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
                const auto cand = static_cast<std::uint32_t>(rng.uniform_below(cfg.n));
                if (cand == src || g.has_edge(src, cand)) continue;
                g.remove_edge(src, far);
                g.add_edge(src, cand);
                moved = true;
                break;
            }
            if (moved)
                ++local.rewired;
            else
                ++local.exhausted;
        }
    }
    if (stats) *stats = local;
    return g;
}

Graph watts_strogatz(const WsConfig& cfg, RewireStats* stats) {
    Graph ring = build_ring_lattice(cfg);
    Rng rng(cfg.seed);
    return rewire(ring, cfg, rng, stats);
}

double clustering_coefficient(const Graph& g) {
    const std::uint32_t n = g.node_count();
    if (n == 0) throw std::domain_error("clustering coefficient of empty graph");
    double sum = 0.0;
    for (std::uint32_t v = 0; v < n; ++v) {
        const auto nb = g.neighbors(v);
        const std::size_t deg = nb.size();
        if (deg < 2) continue;
        // triangles through v: ordered neighbor pairs (i<j) that are themselves adjacent
        std::size_t closed = 0;
        for (std::size_t i = 0; i < deg; ++i)
            for (std::size_t j = i + 1; j < deg; ++j)
                if (g.has_edge(nb[i], nb[j])) ++closed;
        sum += static_cast<double>(closed) / (static_cast<double>(deg) * (deg - 1) / 2.0);
    }
    return sum / static_cast<double>(n);
}

double ring_lattice_clustering(std::uint32_t k_ws) {
    const double k = k_ws;
    return 3.0 * (k - 2.0) / (4.0 * (k - 1.0));
}

namespace {

std::vector<std::uint32_t> largest_component(const Graph& g, bool& disconnected) {
    const std::uint32_t n = g.node_count();
    std::vector<std::int32_t> comp(n, -1);
    std::int32_t ncomp = 0;
    std::vector<std::uint32_t> queue;
    std::vector<std::size_t> sizes;
    for (std::uint32_t start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        std::size_t size = 0;
        queue.clear();
        queue.push_back(start);
        comp[start] = ncomp;
        while (!queue.empty()) {
            const std::uint32_t v = queue.back();
            queue.pop_back();
            ++size;
            for (std::uint32_t w : g.neighbors(v)) {
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    queue.push_back(w);
                }
            }
        }
        sizes.push_back(size);
        ++ncomp;
    }
    disconnected = ncomp > 1;
    const auto best = static_cast<std::int32_t>(
        std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<std::uint32_t> members;
    members.reserve(sizes[best]);
    for (std::uint32_t v = 0; v < n; ++v)
        if (comp[v] == best) members.push_back(v);
    return members;
}

// Sum of BFS distances from `source` to every node of its component.
std::uint64_t bfs_distance_sum(const Graph& g, std::uint32_t source,
                               std::vector<std::int32_t>& dist,
                               std::vector<std::uint32_t>& frontier,
                               std::vector<std::uint32_t>& next) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[source] = 0;
    frontier.clear();
    frontier.push_back(source);
    std::uint64_t sum = 0;
    std::int32_t level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (std::uint32_t v : frontier) {
            for (std::uint32_t w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = level;
                    sum += static_cast<std::uint64_t>(level);
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
    return sum;
}

} // namespace

PathLengthResult characteristic_path_length(const Graph& g, unsigned threads) {
    const std::uint32_t n = g.node_count();
    if (n == 0) throw std::domain_error("characteristic path length of empty graph");

    PathLengthResult res;
    std::vector<std::uint32_t> members = largest_component(g, res.disconnected);
    res.largest_component = static_cast<std::uint32_t>(members.size());
    if (members.size() < 2) {
        res.mean = 0.0;
        return res;
    }

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(members.size()));

    // Distance sums are integers, so per-source results combine exactly and
    // the total is independent of the thread count.
    std::vector<std::uint64_t> partial(threads, 0);
    std::atomic<std::size_t> cursor{0};
    auto worker = [&](unsigned tid) {
        std::vector<std::int32_t> dist(n);
        std::vector<std::uint32_t> frontier, next;
        frontier.reserve(n);
        next.reserve(n);
        std::uint64_t sum = 0;
        constexpr std::size_t kChunk = 16;
        for (;;) {
            const std::size_t begin = cursor.fetch_add(kChunk);
            if (begin >= members.size()) break;
            const std::size_t end = std::min(begin + kChunk, members.size());
            for (std::size_t i = begin; i < end; ++i)
                sum += bfs_distance_sum(g, members[i], dist, frontier, next);
        }
        partial[tid] = sum;
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& t : pool) t.join();
    }

    std::uint64_t total = 0;
    for (std::uint64_t p : partial) total += p;

    const auto sz = static_cast<double>(members.size());
    res.mean = static_cast<double>(total) / (sz * (sz - 1.0)); // ordered pairs = unordered mean
    return res;
}

std::vector<std::size_t> degree_histogram(const Graph& g) {
    std::vector<std::size_t> hist;
    for (std::uint32_t v = 0; v < g.node_count(); ++v) {
        const std::size_t d = g.degree(v);
        if (d >= hist.size()) hist.resize(d + 1, 0);
        ++hist[d];
    }
    return hist;
}

} // namespace netcomp
