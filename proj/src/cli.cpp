#include "arg/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "arg/bounds.hpp"
#include "arg/channel.hpp"
#include "arg/construct.hpp"
#include "arg/formats.hpp"
#include "arg/gf2.hpp"
#include "arg/graph.hpp"
#include "arg/sweep.hpp"

namespace arg {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << content;
    if (!out) throw IoError("write failed for " + path);
}

std::string format_girth(const CycleLength& g) {
    return g.acyclic() ? "acyclic" : std::to_string(g.value);
}

std::string format_profile(const std::map<int, int>& histogram) {
    std::string out;
    for (const auto& [deg, count] : histogram) {
        if (!out.empty()) out += ' ';
        out += std::to_string(deg) + ":" + std::to_string(count);
    }
    return out;
}

BipartiteGraph graph_from_matrix(const SparseMatrixGF2& h) {
    BipartiteGraph g(h.cols, h.rows);
    for (int r = 0; r < h.rows; ++r) {
        for (int c : h.row_cols[r]) g.add_edge(c + 1, r + 1);
    }
    return g;
}

// Eb/N0 grid: "a", "a,b,c" or "start:stop:step" (inclusive).
std::vector<double> parse_ebno(const std::string& spec) {
    std::vector<double> grid;
    if (spec.find(':') != std::string::npos) {
        double start, stop, step;
        char c1, c2;
        std::istringstream in(spec);
        if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0) {
            throw CLI::ValidationError("--ebno", "expected start:stop:step with step > 0");
        }
        for (double v = start; v <= stop + 1e-9; v += step) grid.push_back(v);
    } else {
        std::string token;
        std::istringstream in(spec);
        while (std::getline(in, token, ',')) {
            grid.push_back(std::stod(token));
        }
    }
    if (grid.empty()) throw CLI::ValidationError("--ebno", "empty grid");
    return grid;
}

struct CodeInfo {
    SparseMatrixGF2 h;
    std::optional<ConstructionParams> params;  // known or inferred
};

// Recover (p, q, d) from dimensions and edge count when they are consistent
// with an exact construction; bounds are reported only in that case.
std::optional<ConstructionParams> infer_params(const SparseMatrixGF2& h) {
    const long n = h.cols, m = h.rows, e = h.nonzeros();
    if (m <= 1 || n <= m || e == 0) return std::nullopt;
    const long g = std::gcd(n, m);
    const long p = m / g, q = n / g;
    if (e % (n * p) != 0) return std::nullopt;
    const long d = e / (n * p);
    if (d < 1) return std::nullopt;
    try {
        return validate_params(static_cast<int>(n), static_cast<int>(m), static_cast<int>(p),
                               static_cast<int>(q), static_cast<int>(d));
    } catch (const ParamError&) {
        return std::nullopt;
    }
}

int run_construct(const ConstructionParams& params, const TieBreakPolicy& policy,
                  const std::string& out_alist, const std::string& out_dot,
                  const std::string& out_trace) {
    const ConstructResult result = construct(params, policy);
    if (!out_trace.empty()) spill(out_trace, trace_to_text(result.trace));
    if (result.stalled()) {
        const StallEvent& s = *result.trace.stall;
        const bool consistent = stall_consistency_check(s, params.n, params.m);
        std::cout << "stalled at edge " << s.e << " phase (" << s.i << "," << s.j << ") source "
                  << to_string(s.source) << "\n"
                  << "stall_consistent " << (consistent ? "true" : "false") << "\n";
        return kStall;
    }
    if (!out_alist.empty()) spill(out_alist, write_alist(parity_matrix(result.graph)));
    if (!out_dot.empty()) spill(out_dot, write_dot(result.graph));

    const DegreeProfile profile = degree_profile(result.graph);
    std::cout << "n " << params.n << "\nm " << params.m << "\np " << params.p << "\nq " << params.q
              << "\nd " << params.d << "\nguaranteed " << (params.guaranteed ? "true" : "false")
              << "\nedges " << result.graph.edge_count() << "\ngirth "
              << format_girth(girth(result.graph)) << "\nleft_degrees "
              << format_profile(profile.left) << "\nright_degrees " << format_profile(profile.right)
              << "\n"
              << to_text(bound_report(params.m, params.p, params.q, params.d));
    return kOk;
}

int run_analyze(const CodeInfo& info) {
    const SparseMatrixGF2& h = info.h;
    const BipartiteGraph g = graph_from_matrix(h);
    const CycleLength girth_value = girth(g);
    const int rank = rank_gf2(h);
    const double measured_rate = 1.0 - static_cast<double>(rank) / h.cols;
    const DegreeProfile profile = degree_profile(g);

    std::cout << "n " << h.cols << "\nm " << h.rows << "\nedges " << h.nonzeros() << "\ngirth "
              << format_girth(girth_value) << "\nrank " << rank << "\nmeasured_rate "
              << measured_rate << "\nleft_degrees " << format_profile(profile.left)
              << "\nright_degrees " << format_profile(profile.right) << "\n";

    if (!info.params) {
        std::cout << "bounds n/a (dimensions and edge count do not match an exact construction)\n";
        return kOk;
    }
    const ConstructionParams& params = *info.params;
    std::cout << "p " << params.p << "\nq " << params.q << "\nd " << params.d << "\n"
              << to_text(bound_report(params.m, params.p, params.q, params.d));

    const int pd = params.p * params.d, qd = params.q * params.d;
    bool window_ok = true;
    for (const auto& [deg, count] : profile.left) {
        if (deg < pd - 1 || deg > pd + 1) window_ok = false;
    }
    for (const auto& [deg, count] : profile.right) {
        if (deg < qd - 1 || deg > qd + 1) window_ok = false;
    }
    const Rational rate = design_rate(params.p, params.q);
    const bool rate_ok = measured_rate >= rate.value() - 1e-12;
    const double bound = girth_lower_bound(params.m, params.p, params.q, params.d);
    const bool girth_ok = girth_value.acyclic() || girth_value.value >= bound;

    std::cout << "degree_window " << (window_ok ? "pass" : "fail") << "\nrate_bound "
              << (rate_ok ? "pass" : "fail") << "\ngirth_bound " << (girth_ok ? "pass" : "fail")
              << "\n";
    return kOk;
}

int run_sweep(const SweepRequest& request) {
    const SweepRow row = cmd_sweep(request);
    std::cout << "d target_girth n m achieved_girth attempts\n";
    if (!row.found) {
        std::cout << "# no block length in [" << request.n_start << ", " << request.n_max
                  << "] reached girth " << request.target_girth << " (" << row.attempts
                  << " attempts)\n";
        return kNotFound;
    }
    std::cout << row.d << " " << row.target_girth << " " << row.n_found << " " << row.m_found
              << " " << format_girth(row.achieved_girth) << " " << row.attempts << "\n";
    return kOk;
}

int dispatch(const std::vector<std::string>& argv) {
    CLI::App app{"near-regular high-girth LDPC codes: construction, analysis, simulation"};
    app.require_subcommand(1);

    // construct
    auto* c_cmd = app.add_subcommand("construct", "build a code graph and export it");
    int cn = 0, cm = 0, cp = 1, cq = 2, cd = 3;
    std::uint64_t seed = 0;
    bool seeded = false;
    std::string out_alist, out_dot, out_trace;
    c_cmd->add_option("-n,--n", cn, "left (variable) vertices")->required();
    c_cmd->add_option("-m,--m", cm, "right (check) vertices")->required();
    c_cmd->add_option("-p,--p", cp, "rate numerator parameter");
    c_cmd->add_option("-q,--q", cq, "rate denominator parameter");
    c_cmd->add_option("-d,--d", cd, "degree multiplier");
    c_cmd->add_option("--seed", seed, "seeded-random tie-breaking")->trigger_on_parse();
    c_cmd->add_flag("--random", seeded, "use seeded-random tie-breaking (default with --seed)");
    c_cmd->add_option("--out-alist", out_alist, "write parity-check matrix (alist), - for stdout");
    c_cmd->add_option("--out-dot", out_dot, "write Tanner graph (DOT), - for stdout");
    c_cmd->add_option("--out-trace", out_trace, "write construction trace, - for stdout");

    // analyze
    auto* a_cmd = app.add_subcommand("analyze", "report graph, code and bound checks");
    std::string a_file;
    int an = 0, am = 0, ap = 0, aq = 0, ad = 0;
    std::uint64_t a_seed = 0;
    bool a_seeded = false;
    a_cmd->add_option("file", a_file, "alist file, - for stdin");
    a_cmd->add_option("-n,--n", an, "construct instead: left vertices");
    a_cmd->add_option("-m,--m", am, "construct instead: right vertices");
    a_cmd->add_option("-p,--p", ap, "p (override inference for alist input)");
    a_cmd->add_option("-q,--q", aq, "q (override inference for alist input)");
    a_cmd->add_option("-d,--d", ad, "d (override inference for alist input)");
    a_cmd->add_option("--seed", a_seed, "construct with seeded-random ties")->trigger_on_parse();
    a_cmd->add_flag("--random", a_seeded, "construct with seeded-random ties");

    // sweep
    auto* s_cmd = app.add_subcommand("sweep", "smallest block length reaching a target girth");
    SweepRequest sweep_req;
    s_cmd->add_option("-d,--d", sweep_req.d, "degree multiplier")->required();
    s_cmd->add_option("-g,--girth", sweep_req.target_girth, "target girth (even, >= 4)")->required();
    s_cmd->add_option("-p,--p", sweep_req.p, "rate numerator parameter");
    s_cmd->add_option("-q,--q", sweep_req.q, "rate denominator parameter");
    s_cmd->add_option("--n-start", sweep_req.n_start, "first block length")->required();
    s_cmd->add_option("--n-max", sweep_req.n_max, "last block length")->required();
    s_cmd->add_option("--step", sweep_req.step, "block length step (rounded to multiple of q)");
    s_cmd->add_option("--seeds", sweep_req.seeds, "random attempts per n (0 = deterministic)");
    s_cmd->add_option("--seed-base", sweep_req.seed_base, "first seed for --seeds");

    // simulate
    auto* m_cmd = app.add_subcommand("simulate", "BPSK/AWGN Monte Carlo BER curve");
    std::string sim_file, ebno_spec = "1:4:0.5", out_csv = "-";
    ChannelConfig channel_cfg;
    StoppingRule rule;
    DecoderConfig decoder_cfg;
    bool encode_mode = false, design_rate_norm = false, min_sum = false, serial = false;
    m_cmd->add_option("file", sim_file, "alist file, - for stdin")->required();
    m_cmd->add_option("--ebno", ebno_spec, "grid: start:stop:step or comma list (dB)");
    m_cmd->add_option("--seed", channel_cfg.seed, "noise seed");
    m_cmd->add_option("--min-word-errors", rule.min_word_errors, "stop after this many word errors");
    m_cmd->add_option("--max-trials", rule.max_trials, "trial cap per grid point");
    m_cmd->add_option("--max-iterations", decoder_cfg.max_iterations, "decoder iteration cap");
    m_cmd->add_option("--llr-clip", decoder_cfg.llr_clip, "message saturation level");
    m_cmd->add_flag("--min-sum", min_sum, "min-sum check update instead of sum-product");
    m_cmd->add_flag("--encode", encode_mode, "transmit random encoded messages, not the zero word");
    m_cmd->add_flag("--design-rate-norm", design_rate_norm,
                    "normalize Eb/N0 by 1 - m/n instead of the measured rate");
    m_cmd->add_option("-o,--out", out_csv, "CSV destination, - for stdout");
    m_cmd->add_flag("--serial", serial, "single-threaded reference path");

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    if (c_cmd->parsed()) {
        const ConstructionParams params = validate_params(cn, cm, cp, cq, cd);
        const TieBreakPolicy policy = (seeded || c_cmd->count("--seed") > 0)
                                          ? TieBreakPolicy::seeded(seed)
                                          : TieBreakPolicy::deterministic();
        return run_construct(params, policy, out_alist, out_dot, out_trace);
    }
    if (a_cmd->parsed()) {
        CodeInfo info;
        if (!a_file.empty()) {
            info.h = read_alist(slurp(a_file));
            if (ap > 0 && aq > 0 && ad > 0) {
                info.params = validate_params(info.h.cols, info.h.rows, ap, aq, ad);
            } else {
                info.params = infer_params(info.h);
            }
        } else {
            if (an == 0 || am == 0) {
                std::cerr << "analyze: give an alist file or full construction parameters\n";
                return kUsage;
            }
            const ConstructionParams params =
                validate_params(an, am, ap > 0 ? ap : 1, aq > 0 ? aq : 2, ad > 0 ? ad : 3);
            const TieBreakPolicy policy = (a_seeded || a_cmd->count("--seed") > 0)
                                              ? TieBreakPolicy::seeded(a_seed)
                                              : TieBreakPolicy::deterministic();
            const ConstructResult result = construct(params, policy);
            if (result.stalled()) {
                const StallEvent& s = *result.trace.stall;
                std::cout << "stalled at edge " << s.e << " phase (" << s.i << "," << s.j << ")\n";
                return kStall;
            }
            info.h = parity_matrix(result.graph);
            info.params = params;
        }
        return run_analyze(info);
    }
    if (s_cmd->parsed()) {
        return run_sweep(sweep_req);
    }
    if (m_cmd->parsed()) {
        const SparseMatrixGF2 h = read_alist(slurp(sim_file));
        channel_cfg.ebno_db_grid = parse_ebno(ebno_spec);
        channel_cfg.all_zero_mode = !encode_mode;
        decoder_cfg.variant =
            min_sum ? DecoderConfig::Variant::MinSum : DecoderConfig::Variant::SumProduct;

        GeneratorMatrix gen;
        const GeneratorMatrix* gen_ptr = nullptr;
        int rank = 0;
        if (encode_mode || !design_rate_norm) {
            gen = systematic_generator(h);
            rank = h.cols - gen.k;
            gen_ptr = &gen;
        }
        channel_cfg.rate_for_normalization =
            design_rate_norm ? 1.0 - static_cast<double>(h.rows) / h.cols
                             : 1.0 - static_cast<double>(rank) / h.cols;
        if (channel_cfg.rate_for_normalization <= 0.0) {
            throw ParamError("simulate: code rate is not positive");
        }
        const BerCurve curve = serial
                                   ? run_monte_carlo_serial(h, encode_mode ? gen_ptr : nullptr,
                                                            channel_cfg, rule, decoder_cfg)
                                   : run_monte_carlo(h, encode_mode ? gen_ptr : nullptr,
                                                     channel_cfg, rule, decoder_cfg);
        spill(out_csv, to_csv(curve));
        return kOk;
    }
    return kUsage;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& argv) {
    try {
        return dispatch(argv);
    } catch (const ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationError;
    } catch (const AlistError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationError;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationError;
    }
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_dispatch(args);
}

}  // namespace arg
