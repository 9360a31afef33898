#include "lenscs/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "lenscs/analysis_reports.hpp"
#include "lenscs/equilibrium.hpp"
#include "lenscs/exact_partition.hpp"
#include "lenscs/json_io.hpp"
#include "lenscs/lattice_geometry.hpp"
#include "lenscs/matrix_integrals.hpp"
#include "lenscs/newton_polynomial.hpp"
#include "lenscs/spectral_curve.hpp"
#include "lenscs/svg.hpp"
#include "lenscs/toric_fan.hpp"
#include "lenscs/triangulation.hpp"
#include "lenscs/version.hpp"

namespace lenscs {

namespace {

// Evaluation is single-threaded throughout, so any cap >= 1 is honored as
// stated; the variable is still validated so misconfiguration fails loudly.
int thread_budget() {
    const char* env = std::getenv("LENSCS_THREADS");
    if (env == nullptr) return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 1024)
        throw std::invalid_argument("LENSCS_THREADS must be an integer in [1, 1024], got '" + std::string(env) +
                                    "'");
    return static_cast<int>(v);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw std::invalid_argument("write to '" + path + "' failed");
}

ojson json_of_complex_list(const std::vector<cplx>& vs) {
    ojson arr = ojson::array();
    for (const auto& v : vs) arr.push_back(json_of(v));
    return arr;
}

struct CommonOpts {
    std::string out_path;
    bool timings = false;
};

void add_common(CLI::App* sub, CommonOpts& c) {
    sub->add_option("--out", c.out_path, "write the JSON report to this file instead of stdout");
    sub->add_flag("--timings", c.timings,
                  "record real elapsed milliseconds (reports 0 otherwise so reruns are byte-identical)");
}

// ---- subcommand option blocks ------------------------------------------

struct FanOpts {
    int p = 0, q = 0;
    std::string svg;
    CommonOpts common;
};

struct MirrorOpts {
    int p = 0, q = 0;
    CommonOpts common;
};

struct ExactZOpts {
    int p = 0, q = 0, N = 0, k = 0;
    std::vector<int> m;
    bool sum_flat = false;
    bool orbit_weights = false;
    CommonOpts common;
};

struct MatrixZOpts {
    std::string rep = "mmcs";
    int p = 0, q = 0, N = 0;
    double gs = 0;
    std::vector<int> m;
    std::string method = "quad";
    long samples = 200000;
    unsigned seed = 1;
    double rel_tol = 1e-9;
    CommonOpts common;
};

struct SaddleOpts {
    int p = 0, q = 0, N = 0;
    double t = 0, S0 = -1, tol = 1e-9;
    std::vector<double> fillings;
    int max_iter = 200;
    std::string svg;  // density-svg only
    CommonOpts common;
};

struct CurveQ1Opts {
    int p = 0;
    double t = 0, S0 = -1, tol = 1e-9;
    CommonOpts common;
};

struct Claim1Opts {
    int p = 0, q = 0;
    CommonOpts common;
};

// ---- dispatch ------------------------------------------------------------

void run_fan(const FanOpts& o, ojson& in, ojson& outv) {
    const LensSpace ls(o.p, o.q);
    in["p"] = o.p;
    in["q"] = o.q;
    if (!o.svg.empty()) in["svg"] = o.svg;
    const auto fan = build_fan(ls);
    const auto tri = triangulate(fan);
    outv["fan"] = json_of(fan);
    {
        ojson arr = ojson::array();
        for (const auto& v : interior_points(fan)) arr.push_back(json_of(v));
        outv["interior_points"] = arr;
    }
    outv["lattice_width"] = lattice_width(fan.points);
    outv["triangulation"] = json_of(tri);
    outv["topology"] = json_of(topology(fan, tri));
    if (!o.svg.empty()) {
        write_file(o.svg, render_fan(fan, tri).to_xml());
        outv["svg_file"] = o.svg;
    }
}

void run_mirror(const MirrorOpts& o, ojson& in, ojson& outv) {
    const LensSpace ls(o.p, o.q);
    in["p"] = o.p;
    in["q"] = o.q;
    const auto np = newton_polynomial(ls, std::vector<MirrorCoeff>(o.p, std::nullopt));
    const auto fan = build_fan(ls);
    outv["newton_polynomial"] = json_of(np);
    outv["invariants"] = json_of(curve_invariants(np));
    const auto map = support_map(np, fan);
    outv["support_map"] = map ? json_of(*map) : ojson(nullptr);
}

void run_exact_z(const ExactZOpts& o, ojson& in, ojson& outv) {
    const LensSpace ls(o.p, o.q);
    std::vector<int> m = o.m.empty() ? std::vector<int>(o.N, 0) : o.m;
    in["p"] = o.p;
    in["q"] = o.q;
    in["N"] = o.N;
    in["k"] = o.k;
    in["m"] = m;
    in["sum_flat"] = o.sum_flat;
    in["orbit_weights"] = o.orbit_weights;
    PartitionValue pv{};
    if (o.sum_flat) {
        pv = z_full(ls, o.N, o.k, o.orbit_weights);
    } else {
        pv = z_exact(ExactCSInput::from_level(ls, o.N, o.k, m));
    }
    outv["p"] = o.p;
    outv["q"] = o.q;
    outv["N"] = o.N;
    outv["k"] = o.k;
    outv["m"] = o.sum_flat ? ojson(nullptr) : ojson(canonical_flat(ls, m).m);
    outv["re"] = pv.value.real();
    outv["im"] = pv.value.imag();
    outv["convention"] = pv.convention;
}

void run_matrix_z(const MatrixZOpts& o, ojson& in, ojson& outv) {
    static const std::map<std::string, MatrixRep> reps = {
        {"mmcs", MatrixRep::MMCS}, {"mmcs2", MatrixRep::MMCS2}, {"mmcs1a", MatrixRep::MMCS1a}};
    const LensSpace ls(o.p, o.q);
    const std::vector<int> m = o.m.empty() ? std::vector<int>(o.N, 0) : o.m;
    const MatrixModelSpec spec(ls, o.N, o.gs, m, reps.at(o.rep));
    in["rep"] = o.rep;
    in["p"] = o.p;
    in["q"] = o.q;
    in["N"] = o.N;
    in["gs"] = o.gs;
    in["m"] = spec.m;
    in["method"] = o.method;
    if (o.method == "mc") {
        in["samples"] = o.samples;
        in["seed"] = o.seed;
    } else {
        in["rel_tol"] = o.rel_tol;
    }
    const QuadratureResult r =
        o.method == "mc" ? z_monte_carlo(spec, o.samples, o.seed) : z_quadrature(spec, o.rel_tol);
    outv["value_re"] = r.value.real();
    outv["value_im"] = r.value.imag();
    outv["err"] = r.abs_error_estimate;
    outv["evals"] = r.evaluations;
}

TooftData resolve_fillings(int p, double t, double S0, const std::vector<double>& fillings) {
    if (!fillings.empty() && S0 >= 0)
        throw std::invalid_argument("give either --S0 or --fillings, not both");
    if (fillings.empty() && S0 < 0) throw std::invalid_argument("one of --S0 or --fillings is required");
    return fillings.empty() ? symmetric_fillings(p, t, S0) : TooftData(t, fillings);
}

void run_saddle(const SaddleOpts& o, ojson& in, ojson& outv, bool want_svg) {
    const LensSpace ls(o.p, o.q);
    const TooftData data = resolve_fillings(o.p, o.t, o.S0, o.fillings);
    in["p"] = o.p;
    in["q"] = o.q;
    in["N"] = o.N;
    in["t"] = o.t;
    in["fillings"] = data.fillings;
    in["tol"] = o.tol;
    if (want_svg) in["svg"] = o.svg;
    const auto cfg = saddle_solve(ls, o.N, data, o.tol, o.max_iter);
    outv["residual"] = cfg.residual;
    outv["im_residual"] = cfg.im_residual;
    outv["iterations"] = cfg.iterations;
    ojson endpoints = ojson::array();
    std::vector<Density> densities(o.p);
    ojson dens_json = ojson::array();
    for (int I = 0; I < o.p; ++I) {
        const bool usable = cfg.groups[I].size() >= 3;
        endpoints.push_back(cfg.groups[I].empty() ? ojson(nullptr) : ojson(estimate_cut_endpoint(cfg, I)));
        if (usable) {
            densities[I] = empirical_density(cfg, data, I);
            dens_json.push_back(json_of(densities[I]));
        } else {
            dens_json.push_back(nullptr);
        }
    }
    outv["endpoints"] = endpoints;
    outv["densities"] = dens_json;
    outv["groups"] = cfg.groups;
    if (want_svg) {
        write_file(o.svg, render_density(o.p, densities).to_xml());
        outv["svg_file"] = o.svg;
    }
}

void run_curve_q1(const CurveQ1Opts& o, ojson& in, ojson& outv) {
    in["p"] = o.p;
    in["t"] = o.t;
    in["S0"] = o.S0;
    in["tol"] = o.tol;
    const auto curve = build_curve_q1(o.p, o.t, o.S0, o.tol);
    outv["curve"] = json_of(curve);
    outv["branch_points"] = json_of_complex_list(curve_branch_points(curve));
    outv["cut_endpoints"] = cut_endpoints(curve);
    ojson periods = ojson::array();
    for (int I = 0; I < o.p; ++I) periods.push_back(json_of(a_period(curve, I)));
    outv["periods"] = periods;
}

void run_claim1(const Claim1Opts& o, ojson& in, ojson& outv) {
    const LensSpace ls(o.p, o.q);
    in["p"] = o.p;
    in["q"] = o.q;
    outv = json_of(claim1_report(ls));
}

void run_web_svg(const FanOpts& o, ojson& in, ojson& outv) {
    const LensSpace ls(o.p, o.q);
    in["p"] = o.p;
    in["q"] = o.q;
    in["svg"] = o.svg;
    const auto fan = build_fan(ls);
    const auto tri = triangulate(fan);
    const auto web = pq_web(tri);
    outv["web"] = json_of(web);
    outv["node_count"] = web.internal_nodes.size();
    outv["internal_edge_count"] = web.internal_edges.size();
    outv["external_leg_count"] = web.external_legs.size();
    write_file(o.svg, render_web(web).to_xml());
    outv["svg_file"] = o.svg;
}

void emit(std::ostream& out, const CommonOpts& common, const ojson& envelope) {
    const std::string text = envelope.dump(2) + "\n";
    if (common.out_path.empty())
        out << text;
    else
        write_file(common.out_path, text);
}

void emit_error(std::ostream& out, const std::string& command, const std::string& type,
                const std::string& message) {
    ojson env;
    env["tool_version"] = kToolVersion;
    env["command"] = command;
    env["error"] = ojson{{"type", type}, {"message", message}};
    out << env.dump(2) << "\n";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"lens space Chern-Simons calculator"};
    app.name("lenscs");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    FanOpts fan_o;
    auto* fan_cmd = app.add_subcommand("fan", "toric fan, triangulation and topology of L(p,q)");
    fan_cmd->add_option("--p", fan_o.p, "order of the quotient")->required();
    fan_cmd->add_option("--q", fan_o.q, "twisting")->required();
    fan_cmd->add_option("--svg", fan_o.svg, "also draw the triangulated fan to this file");
    add_common(fan_cmd, fan_o.common);

    MirrorOpts mirror_o;
    auto* mirror_cmd = app.add_subcommand("mirror", "Newton polynomial of the mirror curve");
    mirror_cmd->add_option("--p", mirror_o.p, "order of the quotient")->required();
    mirror_cmd->add_option("--q", mirror_o.q, "twisting")->required();
    add_common(mirror_cmd, mirror_o.common);

    ExactZOpts exact_o;
    auto* exact_cmd = app.add_subcommand("exact-z", "finite-sum partition value at integer level k");
    exact_cmd->add_option("--p", exact_o.p, "order of the quotient")->required();
    exact_cmd->add_option("--q", exact_o.q, "twisting")->required();
    exact_cmd->add_option("--N", exact_o.N, "rank (budget-capped)")->required();
    exact_cmd->add_option("--k", exact_o.k, "level")->required();
    exact_cmd->add_option("--m", exact_o.m, "flat-connection labels, comma separated (default all zero)")
        ->delimiter(',');
    exact_cmd->add_flag("--sum-flat", exact_o.sum_flat, "sum phase-weighted sectors over all representatives");
    exact_cmd->add_flag("--orbit-weights", exact_o.orbit_weights,
                        "with --sum-flat, weight each sector by its permutation orbit size");
    add_common(exact_cmd, exact_o.common);

    MatrixZOpts matrix_o;
    auto* matrix_cmd = app.add_subcommand("matrix-z", "eigenvalue-integral partition value");
    matrix_cmd->add_option("--rep", matrix_o.rep, "integral representation")
        ->check(CLI::IsMember({"mmcs", "mmcs2", "mmcs1a"}))
        ->capture_default_str();
    matrix_cmd->add_option("--p", matrix_o.p, "order of the quotient")->required();
    matrix_cmd->add_option("--q", matrix_o.q, "twisting")->required();
    matrix_cmd->add_option("--N", matrix_o.N, "rank (budget-capped)")->required();
    matrix_cmd->add_option("--gs", matrix_o.gs, "string coupling, must be positive")->required();
    matrix_cmd->add_option("--m", matrix_o.m, "flat-connection labels, comma separated (default all zero)")
        ->delimiter(',');
    matrix_cmd->add_option("--method", matrix_o.method, "integrator")
        ->check(CLI::IsMember({"quad", "mc"}))
        ->capture_default_str();
    matrix_cmd->add_option("--samples", matrix_o.samples, "Monte Carlo sample count")->capture_default_str();
    matrix_cmd->add_option("--seed", matrix_o.seed, "Monte Carlo seed")->capture_default_str();
    matrix_cmd->add_option("--rel-tol", matrix_o.rel_tol, "quadrature relative tolerance")
        ->capture_default_str();
    add_common(matrix_cmd, matrix_o.common);

    SaddleOpts saddle_o;
    auto* saddle_cmd = app.add_subcommand("saddle", "finite-N eigenvalue equilibrium");
    saddle_cmd->add_option("--p", saddle_o.p, "order of the quotient")->required();
    saddle_cmd->add_option("--q", saddle_o.q, "twisting")->required();
    saddle_cmd->add_option("--N", saddle_o.N, "total eigenvalue count")->required();
    saddle_cmd->add_option("--t", saddle_o.t, "'t Hooft coupling g_s N")->required();
    saddle_cmd->add_option("--S0", saddle_o.S0, "trivial-group filling; the rest is split evenly");
    saddle_cmd->add_option("--fillings", saddle_o.fillings, "explicit fillings, comma separated")
        ->delimiter(',');
    saddle_cmd->add_option("--tol", saddle_o.tol, "residual tolerance")->capture_default_str();
    saddle_cmd->add_option("--max-iter", saddle_o.max_iter, "Newton iteration cap")->capture_default_str();
    add_common(saddle_cmd, saddle_o.common);

    CurveQ1Opts curve_o;
    auto* curve_cmd = app.add_subcommand("curve-q1", "spectral curve on the symmetric slice at q = 1");
    curve_cmd->add_option("--p", curve_o.p, "order of the quotient")->required();
    curve_cmd->add_option("--t", curve_o.t, "'t Hooft coupling")->required();
    curve_cmd->add_option("--S0", curve_o.S0, "trivial-group filling")->required();
    curve_cmd->add_option("--tol", curve_o.tol, "period-matching tolerance")->capture_default_str();
    add_common(curve_cmd, curve_o.common);

    Claim1Opts claim_o;
    auto* claim_cmd = app.add_subcommand("claim1", "duality verdict from the width obstruction");
    claim_cmd->add_option("--p", claim_o.p, "order of the quotient")->required();
    claim_cmd->add_option("--q", claim_o.q, "twisting")->required();
    add_common(claim_cmd, claim_o.common);

    FanOpts web_o;
    auto* web_cmd = app.add_subcommand("web-svg", "draw the dual pq-web");
    web_cmd->add_option("--p", web_o.p, "order of the quotient")->required();
    web_cmd->add_option("--q", web_o.q, "twisting")->required();
    web_cmd->add_option("--svg", web_o.svg, "output file")->required();
    add_common(web_cmd, web_o.common);

    SaddleOpts dens_o;
    auto* dens_cmd = app.add_subcommand("density-svg", "solve the equilibrium and draw the group densities");
    dens_cmd->add_option("--p", dens_o.p, "order of the quotient")->required();
    dens_cmd->add_option("--q", dens_o.q, "twisting")->required();
    dens_cmd->add_option("--N", dens_o.N, "total eigenvalue count")->required();
    dens_cmd->add_option("--t", dens_o.t, "'t Hooft coupling g_s N")->required();
    dens_cmd->add_option("--S0", dens_o.S0, "trivial-group filling; the rest is split evenly");
    dens_cmd->add_option("--fillings", dens_o.fillings, "explicit fillings, comma separated")->delimiter(',');
    dens_cmd->add_option("--tol", dens_o.tol, "residual tolerance")->capture_default_str();
    dens_cmd->add_option("--max-iter", dens_o.max_iter, "Newton iteration cap")->capture_default_str();
    dens_cmd->add_option("--svg", dens_o.svg, "output file")->required();
    add_common(dens_cmd, dens_o.common);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        emit_error(out, args.empty() ? "" : args.front(), "usage", e.what());
        return 2;
    }

    std::string command;
    const CommonOpts* common = nullptr;
    const auto t0 = std::chrono::steady_clock::now();
    ojson inputs = ojson::object(), outputs = ojson::object();
    try {
        thread_budget();
        if (app.got_subcommand(fan_cmd)) {
            command = "fan", common = &fan_o.common;
            run_fan(fan_o, inputs, outputs);
        } else if (app.got_subcommand(mirror_cmd)) {
            command = "mirror", common = &mirror_o.common;
            run_mirror(mirror_o, inputs, outputs);
        } else if (app.got_subcommand(exact_cmd)) {
            command = "exact-z", common = &exact_o.common;
            run_exact_z(exact_o, inputs, outputs);
        } else if (app.got_subcommand(matrix_cmd)) {
            command = "matrix-z", common = &matrix_o.common;
            run_matrix_z(matrix_o, inputs, outputs);
        } else if (app.got_subcommand(saddle_cmd)) {
            command = "saddle", common = &saddle_o.common;
            run_saddle(saddle_o, inputs, outputs, false);
        } else if (app.got_subcommand(curve_cmd)) {
            command = "curve-q1", common = &curve_o.common;
            run_curve_q1(curve_o, inputs, outputs);
        } else if (app.got_subcommand(claim_cmd)) {
            command = "claim1", common = &claim_o.common;
            run_claim1(claim_o, inputs, outputs);
        } else if (app.got_subcommand(web_cmd)) {
            command = "web-svg", common = &web_o.common;
            run_web_svg(web_o, inputs, outputs);
        } else if (app.got_subcommand(dens_cmd)) {
            command = "density-svg", common = &dens_o.common;
            run_saddle(dens_o, inputs, outputs, true);
        }
    } catch (const BudgetError& e) {
        emit_error(out, command, "budget", e.what());
        return 4;
    } catch (const std::invalid_argument& e) {
        emit_error(out, command, "usage", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error(out, command, "numeric", e.what());
        return 3;
    }

    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    ojson envelope;
    envelope["tool_version"] = kToolVersion;
    envelope["command"] = command;
    envelope["inputs"] = inputs;
    envelope["outputs"] = outputs;
    envelope["timings"] = ojson{{"total_ms", common->timings ? ms : 0.0}};
    try {
        emit(out, *common, envelope);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace lenscs
