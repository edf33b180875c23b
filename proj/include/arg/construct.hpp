// Greedy edge-growth construction of near-regular high-girth Tanner graphs.
//
// Edges are added one at a time. Odd-numbered edges start from a minimum
// degree left vertex, even-numbered ones from a minimum-degree right vertex;
// the other endpoint is a farthest vertex on the opposite side whose degree
// is still below the running phase cap. Unreachable counts as farther than
// any finite distance, so early edges join disconnected components.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "arg/graph.hpp"

namespace arg {

struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConstructionParams {
    int n = 0;  // left (variable) vertices
    int m = 0;  // right (check) vertices
    int p = 0;
    int q = 0;
    int d = 0;
    // True when d <= (m+3)/(3(p+q)); completion of all phases is then
    // guaranteed. Otherwise construction is best-effort and may stall.
    bool guaranteed = false;

    long total_edges() const { return static_cast<long>(n) * p * d; }
};

// Requires n > m > 1, p < q, np = mq, d >= 1; each violation named.
ConstructionParams validate_params(int n, int m, int p, int q, int d);

// Edge counter e with left phase i = ceil(e/n) and right phase j = ceil(e/m).
struct PhaseState {
    long e = 1;
    int i = 1;
    int j = 1;
};

PhaseState phase_of(long e, int n, int m);

struct TieBreakPolicy {
    enum class Mode { Deterministic, SeededRandom };
    Mode mode = Mode::Deterministic;
    std::uint64_t seed = 0;

    static TieBreakPolicy deterministic() { return {}; }
    static TieBreakPolicy seeded(std::uint64_t seed) {
        return {Mode::SeededRandom, seed};
    }
};

// The candidate set S was empty: no opposite-side vertex is both non-adjacent
// to the source and below the phase degree cap.
struct StallEvent {
    long e = 0;
    int i = 0;
    int j = 0;
    VertexRef source;

    bool odd_edge() const { return e % 2 != 0; }
};

struct TraceEntry {
    long e;
    int i;
    int j;
    VertexRef source;
    VertexRef target;
    long s_size;   // |S| at selection time
    int distance;  // delta(source, target) at selection time, kUnreachable if none
};

struct ConstructionTrace {
    std::vector<TraceEntry> entries;
    std::optional<StallEvent> stall;
};

struct SelectedEdge {
    VertexRef source;
    VertexRef target;
    long s_size;
    int distance;
};

// One selection step. rng is only consulted under the seeded-random policy.
std::variant<SelectedEdge, StallEvent> select_edge(const BipartiteGraph& g,
                                                   const PhaseState& state,
                                                   const TieBreakPolicy& policy,
                                                   std::mt19937_64* rng = nullptr);

struct ConstructResult {
    BipartiteGraph graph;
    ConstructionTrace trace;

    bool stalled() const { return trace.stall.has_value(); }
};

// Runs the full loop e = 1..npd. On a stall the partial graph and trace are
// returned with trace.stall set. Deterministic policy gives bit-identical
// traces across runs.
ConstructResult construct(const ConstructionParams& params, const TieBreakPolicy& policy);

struct InvariantReport {
    bool ok = true;
    std::string message;  // names the first violated phase and vertex
    long e = 0;
    int i = 0;
    int j = 0;
    VertexRef vertex;
};

// Replays a trace against a fresh graph, checking side alternation, parallel
// edges, in-phase degree caps, and at every phase boundary the degree window
// [i-1, i+1] together with the deficit/surplus balance n- = n+ <= floor(n/2).
InvariantReport verify_phase_invariants(const ConstructionTrace& trace,
                                        const ConstructionParams& params);

// One line per edge: "e i j source target distance", distance "inf" when the
// endpoints were in different components. A stall appends a final line
// "stall e i j source".
std::string trace_to_text(const ConstructionTrace& trace);

}  // namespace arg
