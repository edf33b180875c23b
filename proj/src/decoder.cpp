#include "arg/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arg {

BpGraph::BpGraph(const SparseMatrixGF2& h) : n(h.cols), m(h.rows) {
    check_begin.reserve(m + 1);
    check_begin.push_back(0);
    var_edges.resize(n);
    for (const auto& row : h.row_cols) {
        for (int c : row) {
            var_edges[c].push_back(n_edges);
            edge_var.push_back(c);
            ++n_edges;
        }
        check_begin.push_back(n_edges);
    }
}

bool BpGraph::zero_syndrome(const BitVector& word) const {
    for (int chk = 0; chk < m; ++chk) {
        bool parity = false;
        for (int e = check_begin[chk]; e < check_begin[chk + 1]; ++e) {
            parity ^= word.get(edge_var[e]);
        }
        if (parity) return false;
    }
    return true;
}

namespace {

double clip(double x, double limit) { return std::clamp(x, -limit, limit); }

// atanh argument guard; keeps check outputs finite even when a message
// saturates tanh to exactly +-1.
constexpr double kAtanhGuard = 1.0 - 1e-15;

}  // namespace

BpState init_bp_state(const BpGraph& graph, const LlrVector& channel,
                      const DecoderConfig& cfg) {
    if (static_cast<int>(channel.size()) != graph.n) {
        throw std::invalid_argument("decode: channel length must equal variable count");
    }
    BpState state;
    state.graph = &graph;
    state.channel = channel;
    state.v2c.resize(graph.n_edges);
    state.c2v.assign(graph.n_edges, 0.0);
    state.posterior = channel;
    for (int e = 0; e < graph.n_edges; ++e) {
        state.v2c[e] = clip(channel[graph.edge_var[e]], cfg.llr_clip);
    }
    return state;
}

void bp_iteration(BpState& state, const DecoderConfig& cfg) {
    const BpGraph& g = *state.graph;
    const bool min_sum = cfg.variant == DecoderConfig::Variant::MinSum;

    // Check pass. Forward/backward partial combines give each edge the
    // product over the other edges without dividing.
    std::vector<double> fwd, bwd;
    for (int chk = 0; chk < g.m; ++chk) {
        const int begin = g.check_begin[chk];
        const int deg = g.check_begin[chk + 1] - begin;
        if (deg == 0) continue;
        fwd.assign(deg + 1, 0.0);
        bwd.assign(deg + 1, 0.0);
        if (min_sum) {
            // Identity: full certainty at the clip level.
            fwd[0] = cfg.llr_clip;
            bwd[deg] = cfg.llr_clip;
            auto combine = [](double a, double b) {
                return std::copysign(std::min(std::abs(a), std::abs(b)), a * b >= 0 ? 1.0 : -1.0);
            };
            for (int k = 0; k < deg; ++k) fwd[k + 1] = combine(fwd[k], state.v2c[begin + k]);
            for (int k = deg - 1; k >= 0; --k) bwd[k] = combine(bwd[k + 1], state.v2c[begin + k]);
            for (int k = 0; k < deg; ++k) {
                state.c2v[begin + k] = combine(fwd[k], bwd[k + 1]);
            }
        } else {
            fwd[0] = 1.0;
            bwd[deg] = 1.0;
            for (int k = 0; k < deg; ++k) fwd[k + 1] = fwd[k] * std::tanh(state.v2c[begin + k] / 2.0);
            for (int k = deg - 1; k >= 0; --k) bwd[k] = bwd[k + 1] * std::tanh(state.v2c[begin + k] / 2.0);
            for (int k = 0; k < deg; ++k) {
                const double prod = std::clamp(fwd[k] * bwd[k + 1], -kAtanhGuard, kAtanhGuard);
                state.c2v[begin + k] = 2.0 * std::atanh(prod);
            }
        }
    }

    // Variable pass.
    for (int v = 0; v < g.n; ++v) {
        double total = state.channel[v];
        for (int e : g.var_edges[v]) total += state.c2v[e];
        state.posterior[v] = total;
        for (int e : g.var_edges[v]) {
            state.v2c[e] = clip(total - state.c2v[e], cfg.llr_clip);
        }
    }
}

BitVector hard_decision(const LlrVector& llrs) {
    BitVector bits(static_cast<int>(llrs.size()));
    for (std::size_t i = 0; i < llrs.size(); ++i) {
        if (llrs[i] < 0.0) bits.set(static_cast<int>(i), true);
    }
    return bits;
}

namespace {

bool committed(const LlrVector& posterior) {
    for (double x : posterior) {
        if (x == 0.0) return false;
    }
    return true;
}

}  // namespace

DecodeResult decode(const BpGraph& graph, const LlrVector& channel, const DecoderConfig& cfg) {
    if (cfg.max_iterations < 1) {
        throw std::invalid_argument("decode: max_iterations must be at least 1");
    }
    BpState state = init_bp_state(graph, channel, cfg);
    for (int iter = 0;; ++iter) {
        BitVector word = hard_decision(state.posterior);
        if (committed(state.posterior) && graph.zero_syndrome(word)) {
            return DecodeResult{std::move(word), true, iter, std::move(state.posterior)};
        }
        if (iter == cfg.max_iterations) {
            return DecodeResult{std::move(word), false, iter, std::move(state.posterior)};
        }
        bp_iteration(state, cfg);
    }
}

DecodeResult decode(const SparseMatrixGF2& h, const LlrVector& channel, const DecoderConfig& cfg) {
    return decode(BpGraph(h), channel, cfg);
}

}  // namespace arg
