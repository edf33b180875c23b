// Log-domain belief propagation over the Tanner graph, flooding schedule.
// Channel and message values are log-likelihood ratios log(P(0)/P(1)):
// positive means bit 0 is more likely.
#pragma once

#include <vector>

#include "arg/gf2.hpp"

namespace arg {

using LlrVector = std::vector<double>;

struct DecoderConfig {
    enum class Variant { SumProduct, MinSum };

    int max_iterations = 100;
    double llr_clip = 25.0;  // variable-to-check messages saturate here
    Variant variant = Variant::SumProduct;
};

// Immutable edge structure of a parity-check matrix, shared across decodes.
struct BpGraph {
    int n = 0;        // variables
    int m = 0;        // checks
    int n_edges = 0;
    std::vector<int> check_begin;            // CSR offsets, size m+1
    std::vector<int> edge_var;               // edge -> variable, grouped by check
    std::vector<std::vector<int>> var_edges; // variable -> incident edges

    explicit BpGraph(const SparseMatrixGF2& h);

    bool zero_syndrome(const BitVector& word) const;
};

struct BpState {
    const BpGraph* graph = nullptr;
    LlrVector channel;
    std::vector<double> v2c;   // per edge
    std::vector<double> c2v;   // per edge
    LlrVector posterior;       // channel plus all check-to-variable messages
};

BpState init_bp_state(const BpGraph& graph, const LlrVector& channel,
                      const DecoderConfig& cfg);

// One full pass: every check update, then every variable update.
void bp_iteration(BpState& state, const DecoderConfig& cfg);

// bit = 0 iff llr >= 0 (exact ties decide 0).
BitVector hard_decision(const LlrVector& llrs);

struct DecodeResult {
    BitVector hard_decision;
    bool converged = false;  // a committed hard decision reached zero syndrome
    int iterations_used = 0;
    LlrVector posterior;
};

// Stops at the first zero-syndrome hard decision or after max_iterations.
// A hard decision is only committed when every posterior is nonzero: an
// exact-zero LLR carries no information, so its tie-broken bit would be
// arbitrary.
DecodeResult decode(const BpGraph& graph, const LlrVector& channel, const DecoderConfig& cfg);
DecodeResult decode(const SparseMatrixGF2& h, const LlrVector& channel, const DecoderConfig& cfg);

}  // namespace arg
