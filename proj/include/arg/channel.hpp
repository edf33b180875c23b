// BPSK-over-AWGN Monte Carlo harness: bit/word error rates per Eb/N0 point
// with Wilson confidence intervals. Trials run in fixed-size batches whose
// counts merge commutatively, so the OpenMP path and the serial reference
// produce identical curves for the same seed.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "arg/decoder.hpp"
#include "arg/gf2.hpp"

namespace arg {

struct ChannelConfig {
    std::vector<double> ebno_db_grid;     // strictly increasing
    double rate_for_normalization = 0.5;  // in (0, 1]
    bool all_zero_mode = true;
    std::uint64_t seed = 0;
};

struct StoppingRule {
    long min_word_errors = 100;
    long max_trials = 10'000'000;
};

struct BerPoint {
    double ebno_db = 0.0;
    long trials = 0;
    long bits = 0;  // transmitted bits counted toward BER
    long bit_errors = 0;
    long word_errors = 0;
    double ber = 0.0;
    double wer = 0.0;
    double ci_low = 0.0;  // Wilson 95% interval on BER
    double ci_high = 0.0;
};

struct BerCurve {
    std::vector<BerPoint> points;
};

// BPSK maps bit b to 1-2b; noise variance sigma^2 = 1/(2 * rate * 10^(dB/10));
// LLR = 2y/sigma^2.
LlrVector awgn_llr(const BitVector& codeword, double ebno_db, double rate,
                   std::mt19937_64& noise);

// 95% Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(long errors, long trials);

// gen may be null only in all-zero mode. In encoded mode bit errors are
// counted over the k message positions; in all-zero mode over all n.
BerCurve run_monte_carlo(const SparseMatrixGF2& h, const GeneratorMatrix* gen,
                         const ChannelConfig& cfg, const StoppingRule& rule,
                         const DecoderConfig& decoder_cfg);

// Serial reference with identical batch semantics.
BerCurve run_monte_carlo_serial(const SparseMatrixGF2& h, const GeneratorMatrix* gen,
                                const ChannelConfig& cfg, const StoppingRule& rule,
                                const DecoderConfig& decoder_cfg);

// CSV: header ebno_db,trials,bits,bit_errors,word_errors,ber,wer,ci_low,ci_high
// one row per grid point, floats at 6 significant digits, trailing newline.
std::string to_csv(const BerCurve& curve);

}  // namespace arg
