#include "arg/graph.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace arg {

std::string to_string(const VertexRef& v) {
    return (v.side == Side::Left ? "L" : "R") + std::to_string(v.index);
}

BipartiteGraph::BipartiteGraph(int n_left, int n_right)
    : n_left_(n_left), n_right_(n_right) {
    if (n_left < 1 || n_right < 1) {
        throw std::invalid_argument("BipartiteGraph: both sides must have at least one vertex");
    }
    adj_left_.resize(n_left);
    adj_right_.resize(n_right);
}

void BipartiteGraph::check_vertex(const VertexRef& v) const {
    const int limit = v.side == Side::Left ? n_left_ : n_right_;
    if (v.index < 1 || v.index > limit) {
        throw std::out_of_range("BipartiteGraph: vertex " + to_string(v) + " out of range");
    }
}

bool BipartiteGraph::has_edge(int left, int right) const {
    const auto& nbrs = adj_left_[left - 1];
    return std::find(nbrs.begin(), nbrs.end(), right) != nbrs.end();
}

void BipartiteGraph::add_edge(int left, int right) {
    check_vertex({Side::Left, left});
    check_vertex({Side::Right, right});
    if (has_edge(left, right)) {
        throw std::invalid_argument("BipartiteGraph: parallel edge (L" + std::to_string(left) +
                                    ",R" + std::to_string(right) + ")");
    }
    adj_left_[left - 1].push_back(right);
    adj_right_[right - 1].push_back(left);
    edges_.emplace_back(left, right);
    ++edge_count_;
}

void BipartiteGraph::add_edge(const VertexRef& u, const VertexRef& v) {
    if (u.side != Side::Left || v.side != Side::Right) {
        throw std::invalid_argument("BipartiteGraph: add_edge expects (left, right)");
    }
    add_edge(u.index, v.index);
}

int BipartiteGraph::degree(const VertexRef& v) const {
    check_vertex(v);
    const auto& adj = v.side == Side::Left ? adj_left_ : adj_right_;
    return static_cast<int>(adj[v.index - 1].size());
}

std::span<const int> BipartiteGraph::neighbors(const VertexRef& v) const {
    check_vertex(v);
    const auto& adj = v.side == Side::Left ? adj_left_ : adj_right_;
    return adj[v.index - 1];
}

namespace {

// BFS work area shared by the distance and girth routines. Vertices are
// encoded 0..n-1 for left, n..n+m-1 for right.
struct Bfs {
    std::vector<int> dist;
    std::vector<int> queue;

    // skip_l/skip_r (1-based) name one edge excluded from traversal;
    // target < 0 runs to exhaustion, otherwise stops once target is reached.
    // depth_limit bounds the explored radius.
    int run(const BipartiteGraph& g, int src, int target, int skip_l, int skip_r,
            int depth_limit) {
        const int n = g.n_left();
        const int total = n + g.n_right();
        dist.assign(total, kUnreachable);
        queue.clear();
        queue.push_back(src);
        dist[src] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            const int du = dist[u];
            if (u == target) return du;
            if (du >= depth_limit) continue;
            const bool is_left = u < n;
            const VertexRef ref{is_left ? Side::Left : Side::Right, is_left ? u + 1 : u - n + 1};
            for (int w : g.neighbors(ref)) {
                if (is_left && ref.index == skip_l && w == skip_r) continue;
                if (!is_left && ref.index == skip_r && w == skip_l) continue;
                const int code = is_left ? n + w - 1 : w - 1;
                if (dist[code] == kUnreachable) {
                    dist[code] = du + 1;
                    queue.push_back(code);
                }
            }
        }
        return target >= 0 ? dist[target] : kUnreachable;
    }
};

}  // namespace

DistanceMap bfs_distances(const BipartiteGraph& g, const VertexRef& source) {
    g.check_vertex(source);
    const int n = g.n_left();
    const int src = source.side == Side::Left ? source.index - 1 : n + source.index - 1;
    Bfs bfs;
    bfs.run(g, src, -1, 0, 0, kUnreachable - 1);
    DistanceMap map{source, {}, {}};
    map.left.assign(bfs.dist.begin(), bfs.dist.begin() + n);
    map.right.assign(bfs.dist.begin() + n, bfs.dist.end());
    return map;
}

namespace {

// Shortest cycle through edge (l,r) = dist(l,r) in G - (l,r), plus one.
// A path longer than limit-2 cannot beat the best cycle found so far.
int cycle_through_edge(const BipartiteGraph& g, Bfs& bfs, int l, int r, int limit) {
    const int d = bfs.run(g, l - 1, g.n_left() + r - 1, l, r, limit - 2);
    return d == kUnreachable || d + 1 >= limit ? kUnreachable : d + 1;
}

}  // namespace

CycleLength girth_serial(const BipartiteGraph& g) {
    Bfs bfs;
    int best = kUnreachable;
    for (const auto& [l, r] : g.edges()) {
        const int c = cycle_through_edge(g, bfs, l, r, best);
        best = std::min(best, c);
    }
    return CycleLength{best};
}

CycleLength girth(const BipartiteGraph& g) {
    const auto edges = g.edges();
    std::atomic<int> best{kUnreachable};
#pragma omp parallel
    {
        Bfs bfs;
#pragma omp for schedule(dynamic, 16)
        for (long i = 0; i < static_cast<long>(edges.size()); ++i) {
            const int limit = best.load(std::memory_order_relaxed);
            const int c = cycle_through_edge(g, bfs, edges[i].first, edges[i].second, limit);
            int cur = best.load(std::memory_order_relaxed);
            while (c < cur && !best.compare_exchange_weak(cur, c)) {
            }
        }
    }
    return CycleLength{best.load()};
}

DegreeProfile degree_profile(const BipartiteGraph& g) {
    DegreeProfile profile;
    for (int l = 1; l <= g.n_left(); ++l) ++profile.left[g.degree({Side::Left, l})];
    for (int r = 1; r <= g.n_right(); ++r) ++profile.right[g.degree({Side::Right, r})];
    return profile;
}

}  // namespace arg
