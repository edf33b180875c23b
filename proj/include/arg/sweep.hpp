// Block-length search: smallest n in a stepped range whose constructed graph
// reaches a target girth.
#pragma once

#include <cstdint>

#include "arg/construct.hpp"

namespace arg {

struct SweepRequest {
    int d = 3;
    int target_girth = 6;
    int p = 1;
    int q = 2;
    int n_start = 0;   // rounded up to a multiple of q so m = np/q is integral
    int n_max = 0;
    int step = 0;      // rounded up to a positive multiple of q
    int seeds = 0;     // 0: one deterministic attempt; k>0: k seeded-random attempts
    std::uint64_t seed_base = 1;
};

struct SweepRow {
    int d = 0;
    int target_girth = 0;
    bool found = false;
    int n_found = 0;            // smallest tried n reaching the target
    int m_found = 0;
    CycleLength achieved_girth; // acyclic counts as infinite and passes
    std::uint64_t seed_used = 0;
    int attempts = 0;           // constructions executed over the whole range
};

// Scans n ascending. Per n the best girth over the configured attempts is
// compared against the target; stalled attempts simply do not qualify.
SweepRow cmd_sweep(const SweepRequest& request);

}  // namespace arg
