// Bipartite (Tanner) graph: adjacency, BFS distances, exact girth.
#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace arg {

// Distances use this sentinel for "no path"; it orders above every finite
// distance, so farthest-vertex selection prefers disconnected vertices.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

enum class Side : std::uint8_t { Left, Right };

// 1-based vertex handle. Left vertices are code bits, right vertices checks.
struct VertexRef {
    Side side = Side::Left;
    int index = 1;

    friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

std::string to_string(const VertexRef& v);

class BipartiteGraph {
  public:
    // Both sides must be non-empty.
    BipartiteGraph(int n_left, int n_right);

    int n_left() const { return n_left_; }
    int n_right() const { return n_right_; }
    long edge_count() const { return edge_count_; }

    bool has_edge(int left, int right) const;

    // Rejects parallel edges and out-of-range endpoints.
    void add_edge(int left, int right);
    void add_edge(const VertexRef& u, const VertexRef& v);

    int degree(const VertexRef& v) const;
    // Opposite-side neighbor indices (1-based), in insertion order.
    std::span<const int> neighbors(const VertexRef& v) const;
    // (left, right) pairs in global insertion order.
    std::span<const std::pair<int, int>> edges() const { return edges_; }

    void check_vertex(const VertexRef& v) const;

  private:
    int n_left_;
    int n_right_;
    long edge_count_ = 0;
    std::vector<std::vector<int>> adj_left_;   // [l-1] -> right indices
    std::vector<std::vector<int>> adj_right_;  // [r-1] -> left indices
    std::vector<std::pair<int, int>> edges_;
};

// Single-source shortest path lengths to every vertex.
struct DistanceMap {
    VertexRef source;
    std::vector<int> left;   // [i] = distance to left vertex i+1
    std::vector<int> right;  // [i] = distance to right vertex i+1

    int at(const VertexRef& v) const {
        return v.side == Side::Left ? left[v.index - 1] : right[v.index - 1];
    }
};

DistanceMap bfs_distances(const BipartiteGraph& g, const VertexRef& source);

// Shortest cycle length; kUnreachable marks an acyclic graph. Always even
// when finite (bipartite graphs have no odd cycles).
struct CycleLength {
    int value = kUnreachable;
    bool acyclic() const { return value == kUnreachable; }

    friend bool operator==(const CycleLength&, const CycleLength&) = default;
};

// Exact girth: min over edges (u,v) of shortest u-v path avoiding that edge,
// plus one. The edge loop runs under OpenMP; girth_serial is the reference.
CycleLength girth(const BipartiteGraph& g);
CycleLength girth_serial(const BipartiteGraph& g);

struct DegreeProfile {
    std::map<int, int> left;   // degree -> count
    std::map<int, int> right;
};

DegreeProfile degree_profile(const BipartiteGraph& g);

}  // namespace arg
