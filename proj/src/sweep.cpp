#include "arg/sweep.hpp"

#include <stdexcept>

#include "arg/graph.hpp"

namespace arg {

namespace {

struct Attempt {
    CycleLength girth_found;
    std::uint64_t seed = 0;
    bool completed = false;
};

Attempt try_one(const ConstructionParams& params, const TieBreakPolicy& policy) {
    const ConstructResult result = construct(params, policy);
    if (result.stalled()) return {};
    return Attempt{girth(result.graph), policy.seed, true};
}

}  // namespace

SweepRow cmd_sweep(const SweepRequest& req) {
    if (req.p <= 0 || req.p >= req.q || req.d < 1) {
        throw ParamError("sweep: requires 0 < p < q and d >= 1");
    }
    if (req.target_girth < 4 || req.target_girth % 2 != 0) {
        throw ParamError("sweep: target girth must be an even value >= 4");
    }
    if (req.n_start < 1 || req.n_max < req.n_start) {
        throw ParamError("sweep: need 1 <= n_start <= n_max");
    }
    const auto round_up = [&](int v) { return (v + req.q - 1) / req.q * req.q; };
    const int step = std::max(1, (req.step + req.q - 1) / req.q) * req.q;

    SweepRow row;
    row.d = req.d;
    row.target_girth = req.target_girth;
    for (int n = round_up(req.n_start); n <= req.n_max; n += step) {
        const long m = static_cast<long>(n) * req.p / req.q;
        if (m <= 1 || m >= n) continue;
        const ConstructionParams params =
            validate_params(n, static_cast<int>(m), req.p, req.q, req.d);

        Attempt best;
        if (req.seeds <= 0) {
            ++row.attempts;
            best = try_one(params, TieBreakPolicy::deterministic());
        } else {
            for (int s = 0; s < req.seeds; ++s) {
                ++row.attempts;
                const Attempt a =
                    try_one(params, TieBreakPolicy::seeded(req.seed_base + static_cast<std::uint64_t>(s)));
                if (a.completed && (!best.completed || a.girth_found.value > best.girth_found.value)) {
                    best = a;
                }
            }
        }
        if (best.completed && best.girth_found.value >= req.target_girth) {
            row.found = true;
            row.n_found = n;
            row.m_found = static_cast<int>(m);
            row.achieved_girth = best.girth_found;
            row.seed_used = best.seed;
            return row;
        }
    }
    return row;
}

}  // namespace arg
