#include "arg/channel.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "arg/rng.hpp"

namespace arg {

LlrVector awgn_llr(const BitVector& codeword, double ebno_db, double rate,
                   std::mt19937_64& noise) {
    if (rate <= 0.0 || rate > 1.0) {
        throw std::invalid_argument("awgn_llr: rate must lie in (0, 1]");
    }
    const double sigma2 = 1.0 / (2.0 * rate * std::pow(10.0, ebno_db / 10.0));
    const double sigma = std::sqrt(sigma2);
    std::normal_distribution<double> gauss(0.0, 1.0);
    LlrVector llrs(codeword.size());
    for (int i = 0; i < codeword.size(); ++i) {
        const double x = codeword.get(i) ? -1.0 : 1.0;
        const double y = x + sigma * gauss(noise);
        llrs[i] = 2.0 * y / sigma2;
    }
    return llrs;
}

std::pair<double, double> wilson_interval(long errors, long trials) {
    if (trials < 1) throw std::invalid_argument("wilson_interval: trials must be positive");
    if (errors < 0 || errors > trials) {
        throw std::invalid_argument("wilson_interval: errors must lie in [0, trials]");
    }
    constexpr double z = 1.959963984540054;  // 97.5th normal percentile
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(errors) / n;
    const double z2n = z * z / n;
    const double center = (phat + z2n / 2.0) / (1.0 + z2n);
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2n / (4.0 * n)) / (1.0 + z2n);
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

struct Counts {
    long bit_errors = 0;
    long word_errors = 0;
    long bits = 0;
};

struct TrialRunner {
    const BpGraph& graph;
    const GeneratorMatrix* gen;
    const ChannelConfig& cfg;
    const DecoderConfig& decoder_cfg;
    int n;

    Counts run(std::size_t grid_index, long trial) const {
        std::mt19937_64 rng = trial_engine(cfg.seed, grid_index, static_cast<std::uint64_t>(trial));
        BitVector codeword(n);
        if (!cfg.all_zero_mode) {
            BitVector message(gen->k);
            std::uniform_int_distribution<int> bit(0, 1);
            for (int i = 0; i < gen->k; ++i) message.set(i, bit(rng) != 0);
            codeword = encode(*gen, message);
        }
        const LlrVector llrs =
            awgn_llr(codeword, cfg.ebno_db_grid[grid_index], cfg.rate_for_normalization, rng);
        const DecodeResult result = decode(graph, llrs, decoder_cfg);

        Counts counts;
        bool word_error = false;
        if (cfg.all_zero_mode) {
            counts.bits = n;
            for (int i = 0; i < n; ++i) {
                if (result.hard_decision.get(i) != codeword.get(i)) {
                    ++counts.bit_errors;
                    word_error = true;
                }
            }
        } else {
            counts.bits = gen->k;
            for (int i = 0; i < n; ++i) {
                if (result.hard_decision.get(i) != codeword.get(i)) word_error = true;
            }
            for (int pos : gen->message_positions) {
                if (result.hard_decision.get(pos) != codeword.get(pos)) ++counts.bit_errors;
            }
        }
        if (word_error) ++counts.word_errors;
        return counts;
    }
};

// Stopping decisions happen only at batch boundaries so that any partition
// of a batch over threads yields the same totals.
constexpr long kBatchTrials = 128;

BerCurve run_impl(const SparseMatrixGF2& h, const GeneratorMatrix* gen,
                  const ChannelConfig& cfg, const StoppingRule& rule,
                  const DecoderConfig& decoder_cfg, bool parallel) {
    if (!cfg.all_zero_mode && gen == nullptr) {
        throw std::invalid_argument("run_monte_carlo: encoded mode needs a generator");
    }
    if (gen != nullptr && gen->n != h.cols) {
        throw std::invalid_argument("run_monte_carlo: generator/matrix width mismatch");
    }
    for (std::size_t i = 1; i < cfg.ebno_db_grid.size(); ++i) {
        if (cfg.ebno_db_grid[i] <= cfg.ebno_db_grid[i - 1]) {
            throw std::invalid_argument("run_monte_carlo: Eb/N0 grid must be strictly increasing");
        }
    }
    if (rule.min_word_errors <= 0 && rule.max_trials <= 0) {
        throw std::invalid_argument("run_monte_carlo: stopping rule has no finite bound");
    }

    const BpGraph graph(h);
    const TrialRunner runner{graph, gen, cfg, decoder_cfg, h.cols};
    BerCurve curve;
    for (std::size_t gi = 0; gi < cfg.ebno_db_grid.size(); ++gi) {
        BerPoint point;
        point.ebno_db = cfg.ebno_db_grid[gi];
        while (true) {
            const bool enough_errors =
                rule.min_word_errors > 0 && point.word_errors >= rule.min_word_errors;
            const bool out_of_trials = rule.max_trials > 0 && point.trials >= rule.max_trials;
            if (enough_errors || out_of_trials) break;
            long batch = kBatchTrials;
            if (rule.max_trials > 0) batch = std::min(batch, rule.max_trials - point.trials);
            const long first = point.trials;
            long bit_errors = 0, word_errors = 0, bits = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : bit_errors, word_errors, bits) if (parallel)
            for (long t = first; t < first + batch; ++t) {
                const Counts c = runner.run(gi, t);
                bit_errors += c.bit_errors;
                word_errors += c.word_errors;
                bits += c.bits;
            }
            point.trials += batch;
            point.bits += bits;
            point.bit_errors += bit_errors;
            point.word_errors += word_errors;
        }
        point.ber = point.bits > 0 ? static_cast<double>(point.bit_errors) / point.bits : 0.0;
        point.wer = point.trials > 0 ? static_cast<double>(point.word_errors) / point.trials : 0.0;
        if (point.bits > 0) {
            std::tie(point.ci_low, point.ci_high) = wilson_interval(point.bit_errors, point.bits);
        }
        curve.points.push_back(point);
    }
    return curve;
}

}  // namespace

BerCurve run_monte_carlo(const SparseMatrixGF2& h, const GeneratorMatrix* gen,
                         const ChannelConfig& cfg, const StoppingRule& rule,
                         const DecoderConfig& decoder_cfg) {
    return run_impl(h, gen, cfg, rule, decoder_cfg, true);
}

BerCurve run_monte_carlo_serial(const SparseMatrixGF2& h, const GeneratorMatrix* gen,
                                const ChannelConfig& cfg, const StoppingRule& rule,
                                const DecoderConfig& decoder_cfg) {
    return run_impl(h, gen, cfg, rule, decoder_cfg, false);
}

std::string to_csv(const BerCurve& curve) {
    std::string out = "ebno_db,trials,bits,bit_errors,word_errors,ber,wer,ci_low,ci_high\n";
    char buf[200];
    for (const BerPoint& p : curve.points) {
        std::snprintf(buf, sizeof(buf), "%.6g,%ld,%ld,%ld,%ld,%.6g,%.6g,%.6g,%.6g\n", p.ebno_db,
                      p.trials, p.bits, p.bit_errors, p.word_errors, p.ber, p.wer, p.ci_low,
                      p.ci_high);
        out += buf;
    }
    return out;
}

}  // namespace arg
