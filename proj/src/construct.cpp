#include "arg/construct.hpp"

#include <algorithm>
#include <cstdio>

namespace arg {

ConstructionParams validate_params(int n, int m, int p, int q, int d) {
    if (n <= 0 || m <= 0 || p <= 0 || q <= 0 || d <= 0) {
        throw ParamError("params: n, m, p, q, d must all be positive");
    }
    if (m <= 1) throw ParamError("params: m must exceed 1");
    if (n <= m) throw ParamError("params: n must exceed m");
    if (p >= q) throw ParamError("params: p must be less than q");
    if (static_cast<long>(n) * p != static_cast<long>(m) * q) {
        throw ParamError("params: np = mq violated (np = " + std::to_string(static_cast<long>(n) * p) +
                         ", mq = " + std::to_string(static_cast<long>(m) * q) + ")");
    }
    ConstructionParams params{n, m, p, q, d, false};
    params.guaranteed = 3L * d * (p + q) <= m + 3;
    return params;
}

PhaseState phase_of(long e, int n, int m) {
    if (e < 1) throw std::invalid_argument("phase_of: edge counter starts at 1");
    return PhaseState{e, static_cast<int>((e + n - 1) / n), static_cast<int>((e + m - 1) / m)};
}

namespace {

// Minimum-degree vertex on one side. Ties fall to the lowest index, or to a
// uniformly random tied vertex under the seeded policy.
VertexRef pick_source(const BipartiteGraph& g, Side side, std::mt19937_64* rng) {
    const int count = side == Side::Left ? g.n_left() : g.n_right();
    int best_deg = kUnreachable;
    std::vector<int> ties;
    for (int idx = 1; idx <= count; ++idx) {
        const int deg = g.degree({side, idx});
        if (deg < best_deg) {
            best_deg = deg;
            ties.assign(1, idx);
        } else if (deg == best_deg && rng != nullptr) {
            ties.push_back(idx);
        }
    }
    int chosen = ties.front();
    if (rng != nullptr && ties.size() > 1) {
        chosen = ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(*rng)];
    }
    return {side, chosen};
}

}  // namespace

std::variant<SelectedEdge, StallEvent> select_edge(const BipartiteGraph& g,
                                                   const PhaseState& state,
                                                   const TieBreakPolicy& policy,
                                                   std::mt19937_64* rng) {
    const bool odd = state.e % 2 != 0;
    const Side source_side = odd ? Side::Left : Side::Right;
    const Side target_side = odd ? Side::Right : Side::Left;
    const int degree_cap = odd ? state.j + 1 : state.i + 1;  // target degree must stay below
    std::mt19937_64* tie_rng =
        policy.mode == TieBreakPolicy::Mode::SeededRandom ? rng : nullptr;

    const VertexRef source = pick_source(g, source_side, tie_rng);
    const DistanceMap dist = bfs_distances(g, source);

    // S = opposite-side vertices at distance > 1 with degree below the cap.
    // Scan keeps the farthest distance, then minimum degree within it.
    const int target_count = target_side == Side::Left ? g.n_left() : g.n_right();
    long s_size = 0;
    int far_dist = -1;
    int far_deg = kUnreachable;
    std::vector<int> ties;
    for (int idx = 1; idx <= target_count; ++idx) {
        const VertexRef z{target_side, idx};
        const int dz = dist.at(z);
        if (dz <= 1) continue;
        const int deg = g.degree(z);
        if (deg >= degree_cap) continue;
        ++s_size;
        if (dz > far_dist || (dz == far_dist && deg < far_deg)) {
            far_dist = dz;
            far_deg = deg;
            ties.assign(1, idx);
        } else if (dz == far_dist && deg == far_deg && tie_rng != nullptr) {
            ties.push_back(idx);
        }
    }
    if (s_size == 0) {
        return StallEvent{state.e, state.i, state.j, source};
    }
    int chosen = ties.front();
    if (tie_rng != nullptr && ties.size() > 1) {
        chosen = ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(*tie_rng)];
    }
    return SelectedEdge{source, {target_side, chosen}, s_size, far_dist};
}

ConstructResult construct(const ConstructionParams& params, const TieBreakPolicy& policy) {
    ConstructResult result{BipartiteGraph(params.n, params.m), {}};
    std::mt19937_64 rng(policy.seed);
    const long total = params.total_edges();
    result.trace.entries.reserve(total);

    for (long e = 1; e <= total; ++e) {
        const PhaseState state = phase_of(e, params.n, params.m);
        auto outcome = select_edge(result.graph, state, policy, &rng);
        if (std::holds_alternative<StallEvent>(outcome)) {
            result.trace.stall = std::get<StallEvent>(outcome);
            break;
        }
        const SelectedEdge& sel = std::get<SelectedEdge>(outcome);
        const VertexRef left = sel.source.side == Side::Left ? sel.source : sel.target;
        const VertexRef right = sel.source.side == Side::Left ? sel.target : sel.source;
        result.graph.add_edge(left, right);
        result.trace.entries.push_back(
            TraceEntry{e, state.i, state.j, sel.source, sel.target, sel.s_size, sel.distance});
    }
    return result;
}

namespace {

InvariantReport violation(const TraceEntry& entry, const VertexRef& vertex, std::string what) {
    return InvariantReport{false,
                           "phase (" + std::to_string(entry.i) + "," + std::to_string(entry.j) +
                               ") edge " + std::to_string(entry.e) + " vertex " + to_string(vertex) +
                               ": " + std::move(what),
                           entry.e, entry.i, entry.j, vertex};
}

// Window [phase-1, phase+1] for every vertex on one side, and the count
// balance n- = n+ <= floor(count/2) that follows from the side average
// being exactly `phase` at a phase boundary.
InvariantReport check_side_window(const BipartiteGraph& g, Side side, int phase,
                                  const TraceEntry& at) {
    const int count = side == Side::Left ? g.n_left() : g.n_right();
    int deficit = 0, surplus = 0;
    for (int idx = 1; idx <= count; ++idx) {
        const int deg = g.degree({side, idx});
        if (deg < phase - 1 || deg > phase + 1) {
            return violation(at, {side, idx},
                             "degree " + std::to_string(deg) + " outside window [" +
                                 std::to_string(phase - 1) + "," + std::to_string(phase + 1) + "]");
        }
        if (deg == phase - 1) ++deficit;
        if (deg == phase + 1) ++surplus;
    }
    if (deficit != surplus || deficit > count / 2) {
        return violation(at, at.target,
                         "deficit/surplus imbalance: n-=" + std::to_string(deficit) +
                             " n+=" + std::to_string(surplus) + " limit " + std::to_string(count / 2));
    }
    return {};
}

}  // namespace

InvariantReport verify_phase_invariants(const ConstructionTrace& trace,
                                        const ConstructionParams& params) {
    BipartiteGraph g(params.n, params.m);
    long expected_e = 1;
    for (const TraceEntry& entry : trace.entries) {
        if (entry.e != expected_e) {
            return violation(entry, entry.source, "edge counter skips (expected " +
                                                      std::to_string(expected_e) + ")");
        }
        const PhaseState state = phase_of(entry.e, params.n, params.m);
        if (state.i != entry.i || state.j != entry.j) {
            return violation(entry, entry.source, "phase mismatch with edge counter");
        }
        const bool odd = entry.e % 2 != 0;
        if (entry.source.side != (odd ? Side::Left : Side::Right)) {
            return violation(entry, entry.source, odd ? "odd edge must start from L"
                                                      : "even edge must start from R");
        }
        if (entry.target.side == entry.source.side) {
            return violation(entry, entry.target, "edge endpoints on the same side");
        }
        const VertexRef left = odd ? entry.source : entry.target;
        const VertexRef right = odd ? entry.target : entry.source;
        if (g.has_edge(left.index, right.index)) {
            return violation(entry, entry.target, "parallel edge");
        }
        const int cap = odd ? entry.j + 1 : entry.i + 1;
        if (g.degree(entry.target) >= cap) {
            return violation(entry, entry.target,
                             "target degree " + std::to_string(g.degree(entry.target)) +
                                 " not below cap " + std::to_string(cap));
        }
        g.add_edge(left, right);
        // In-phase upper caps; only the touched endpoints changed.
        if (g.degree(left) > entry.i + 1) {
            return violation(entry, left, "left degree exceeds i+1 during phase");
        }
        if (g.degree(right) > entry.j + 1) {
            return violation(entry, right, "right degree exceeds j+1 during phase");
        }
        if (entry.e % params.n == 0) {
            if (auto r = check_side_window(g, Side::Left, entry.i, entry); !r.ok) return r;
        }
        if (entry.e % params.m == 0) {
            if (auto r = check_side_window(g, Side::Right, entry.j, entry); !r.ok) return r;
        }
        ++expected_e;
    }
    if (!trace.stall && expected_e != params.total_edges() + 1) {
        return InvariantReport{false,
                               "trace ends at edge " + std::to_string(expected_e - 1) +
                                   " of " + std::to_string(params.total_edges()),
                               expected_e - 1, 0, 0, {}};
    }
    return {};
}

std::string trace_to_text(const ConstructionTrace& trace) {
    std::string out;
    char buf[96];
    for (const TraceEntry& entry : trace.entries) {
        const std::string dist =
            entry.distance == kUnreachable ? "inf" : std::to_string(entry.distance);
        std::snprintf(buf, sizeof(buf), "%ld %d %d %s %s %s\n", entry.e, entry.i, entry.j,
                      to_string(entry.source).c_str(), to_string(entry.target).c_str(),
                      dist.c_str());
        out += buf;
    }
    if (trace.stall) {
        const StallEvent& s = *trace.stall;
        std::snprintf(buf, sizeof(buf), "stall %ld %d %d %s\n", s.e, s.i, s.j,
                      to_string(s.source).c_str());
        out += buf;
    }
    return out;
}

}  // namespace arg
