// Command-line entry point: simulation, decay experiments, power-law
// fitting, symbol analysis, the verification suite and snapshot norms.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "nserlx/core/numfmt.hpp"
#include "nserlx/experiments/decay.hpp"
#include "nserlx/experiments/functionals.hpp"
#include "nserlx/io/config_file.hpp"
#include "nserlx/io/manifest.hpp"
#include "nserlx/io/ndjson.hpp"
#include "nserlx/io/snapshot.hpp"
#include "nserlx/linear/verify.hpp"

namespace fs = std::filesystem;
using namespace nserlx;

namespace {

std::string out_path(const std::string& out_dir, const std::string& name) {
    fs::create_directories(out_dir);
    return (fs::path(out_dir) / name).string();
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir) {
    auto kv = io::KeyValueFile::parse_file(config_path);
    solver::SimConfig cfg = io::parse_sim_config(kv);

    io::RunManifest manifest;
    manifest.command = "simulate";
    manifest.config_digest = io::fnv1a_digest(kv.raw_text());
    manifest.started = io::now_iso8601();
    std::string manifest_path = out_path(out_dir, cfg.name + "_manifest.json");
    manifest.write(manifest_path);

    std::string ndjson_path = out_path(out_dir, cfg.name + ".ndjson");
    io::NdjsonWriter writer(ndjson_path);
    manifest.outputs.push_back(ndjson_path);

    solver::RunSinks sinks;
    sinks.on_row = [&](const solver::DiagnosticsRow& row) { writer.write_row(row); };
    sinks.on_snapshot = [&](const model::FlowState& st, double t, int index) {
        std::string p =
            out_path(out_dir, cfg.name + "_snap_" + std::to_string(index) + ".bin");
        io::write_snapshot(p, st, t);
        manifest.outputs.push_back(p);
    };

    experiments::InitialDataSpec spec;
    spec.sigma0 = cfg.sigma0;
    spec.epsilon = cfg.epsilon;
    spec.seed = cfg.seed;
    spec.components = cfg.components;
    spec.cutoff = cfg.cutoff;
    model::FlowState initial = experiments::make_perturbation(spec, cfg.grid);
    auto res = solver::run(cfg, initial, sinks);

    auto fs_series = experiments::composite_functionals(res, cfg.grid.d, cfg.sigma0);
    std::string func_path = out_path(out_dir, cfg.name + "_functionals.csv");
    {
        std::ofstream f(func_path, std::ios::trunc);
        f << "t,X,X_theta,Z\n";
        for (std::size_t i = 0; i < fs_series.times.size(); ++i)
            f << format_double(fs_series.times[i]) << "," << format_double(fs_series.x[i]) << ","
              << format_double(fs_series.xtheta[i]) << "," << format_double(fs_series.z[i])
              << "\n";
    }
    manifest.outputs.push_back(func_path);
    std::cout << "run '" << cfg.name << "': " << res.times.size() << " ticks, X(0) = "
              << format_double(fs_series.x.front())
              << ", X(T) = " << format_double(fs_series.x.back())
              << ", min density = " << format_double(res.rows.back().min_density) << "\n";

    manifest.status = "ok";
    manifest.finished = io::now_iso8601();
    manifest.write(manifest_path);
    return 0;
}

void write_report_csv(const std::string& path, const experiments::DecayReport& rep) {
    std::ofstream out(path, std::ios::trunc);
    out << "quantity,sigma,r,theory,fitted,delta,r_squared,pass,informational\n";
    for (const auto& row : rep.rows) {
        out << row.quantity << "," << format_double(row.sigma) << ","
            << (row.r == lp::SumExp::One ? "1" : "inf") << "," << format_double(row.theory)
            << "," << format_double(row.fit.exponent) << "," << format_double(row.delta) << ","
            << format_double(row.fit.r_squared) << "," << (row.pass ? "1" : "0") << ","
            << (row.informational ? "1" : "0") << "\n";
    }
}

void write_curves_csv(const std::string& path, const experiments::DecayReport& rep) {
    std::ofstream out(path, std::ios::trunc);
    out << "t";
    for (const auto& [label, curve] : rep.curves) out << "," << label;
    out << "\n";
    for (std::size_t i = 0; i < rep.times.size(); ++i) {
        out << format_double(rep.times[i]);
        for (const auto& [label, curve] : rep.curves) out << "," << format_double(curve[i]);
        out << "\n";
    }
}

int cmd_decay(const std::string& kind, const std::string& config_path,
              const std::string& out_dir) {
    experiments::DecayKind k;
    if (kind == "linear")
        k = experiments::DecayKind::LinearContinuum;
    else if (kind == "torus")
        k = experiments::DecayKind::NonlinearTorus;
    else
        throw ConfigError("--kind must be linear or torus");

    auto kv = io::KeyValueFile::parse_file(config_path);
    auto cfg = io::parse_experiment_config(kv, k);

    io::RunManifest manifest;
    manifest.command = "decay";
    manifest.config_digest = io::fnv1a_digest(kv.raw_text());
    manifest.started = io::now_iso8601();
    std::string base = kind == "linear" ? "decay_linear" : cfg.sim.name;
    std::string manifest_path = out_path(out_dir, base + "_manifest.json");
    manifest.write(manifest_path);

    auto rep = experiments::decay_experiment(cfg);

    std::string report_path = out_path(out_dir, base + "_report.csv");
    std::string curves_path = out_path(out_dir, base + "_curves.csv");
    write_report_csv(report_path, rep);
    write_curves_csv(curves_path, rep);
    manifest.outputs = {report_path, curves_path};

    for (const auto& row : rep.rows) {
        std::cout << (row.informational ? "[info] " : (row.pass ? "[pass] " : "[FAIL] "))
                  << row.quantity << " sigma=" << format_double(row.sigma)
                  << (row.r == lp::SumExp::Inf ? " (l-inf)" : "")
                  << ": theory " << format_double(row.theory) << ", fitted "
                  << format_double(row.fit.exponent) << ", delta " << format_double(row.delta)
                  << (row.note.empty() ? "" : " [" + row.note + "]") << "\n";
    }
    manifest.status = rep.all_pass() ? "ok" : "failed";
    manifest.finished = io::now_iso8601();
    manifest.write(manifest_path);
    return rep.all_pass() ? 0 : 1;
}

int cmd_fit(const std::string& input, double tlo, double thi) {
    std::ifstream in(input);
    if (!in) throw DomainError("cannot open '" + input + "'");
    std::vector<double> ts, ns;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) continue;
        try {
            double t = parse_double(line.substr(0, comma));
            double n = parse_double(line.substr(comma + 1));
            ts.push_back(t);
            ns.push_back(n);
        } catch (const ConfigError&) {
            continue;  // header or stray line
        }
    }
    auto fit = experiments::fit_power_law(ts, ns, tlo, thi);
    std::cout << "samples " << fit.samples << " window [" << format_double(fit.t_lo) << ", "
              << format_double(fit.t_hi) << "]\n"
              << "exponent " << format_double(fit.exponent) << "\n"
              << "prefactor " << format_double(fit.prefactor) << "\n"
              << "r_squared " << format_double(fit.r_squared) << "\n"
              << "residual_max " << format_double(fit.residual_max) << "\n";
    return 0;
}

int cmd_analyze_symbol(const io::AnalysisConfig& cfg, const std::string& out_dir) {
    std::string path = out_path(out_dir, cfg.name + "_eigenvalues.csv");
    std::ofstream out(path, std::ios::trunc);
    out << "xi";
    for (int i = 1; i <= 6; ++i) out << ",re_lambda_" << i;
    for (int i = 1; i <= 6; ++i) out << ",im_lambda_" << i;
    out << "\n";
    for (int i = 0; i < cfg.xi_count; ++i) {
        double xi = cfg.xi_lo *
                    std::pow(cfg.xi_hi / cfg.xi_lo, static_cast<double>(i) / (cfg.xi_count - 1));
        auto ev = linear::symbol_eigenvalues(linear::symbol_blocks(xi, cfg.params));
        out << format_double(xi);
        for (const auto& e : ev) out << "," << format_double(e.real());
        for (const auto& e : ev) out << "," << format_double(e.imag());
        out << "\n";
    }
    std::cout << "wrote " << path << " (" << cfg.xi_count << " frequencies, d = " << cfg.d
              << ")\n";
    return 0;
}

int cmd_verify(uint64_t seed) {
    auto rep = linear::run_verification_suite(seed);
    for (const auto& row : rep.rows) {
        std::printf("%-55s %s  measured % .3e  (bound % .3e)\n", row.name.c_str(),
                    row.pass ? "[pass]" : "[FAIL]", row.measured, row.threshold);
    }
    std::printf("%zu checks, %s\n", rep.rows.size(), rep.all_pass() ? "all green" : "FAILURES");
    return rep.all_pass() ? 0 : 1;
}

int cmd_norms(const std::string& snapshot_path, const std::string& specs) {
    auto snap = io::read_snapshot(snapshot_path);
    auto bank = lp::build_filter_bank(snap.state.grid);
    std::vector<solver::NormRequest> reqs = io::parse_norm_requests(
        specs.empty() ? "composite:0:1:all,composite:1:1:all,relvel:0:1:all" : specs);
    std::cout << "snapshot t = " << format_double(snap.t) << ", d = " << snap.state.grid.d
              << ", N = " << snap.state.grid.N << "\n";
    for (const auto& req : reqs) {
        double v = 0.0;
        const auto& st = snap.state;
        if (req.field == "a")
            v = lp::besov_norm(st.a, req.spec, bank, true);
        else if (req.field == "b")
            v = lp::besov_norm(st.b, req.spec, bank, true);
        else if (req.field == "u")
            v = lp::besov_norm(st.u, req.spec, bank, true);
        else if (req.field == "w")
            v = lp::besov_norm(st.w, req.spec, bank, true);
        else if (req.field == "relvel") {
            std::vector<SpectralField> diff;
            for (int i = 0; i < st.grid.d; ++i) {
                SpectralField d(st.grid);
                for (std::size_t s = 0; s < d.size(); ++s) d.c[s] = st.u[i].c[s] - st.w[i].c[s];
                diff.push_back(std::move(d));
            }
            v = lp::besov_norm(diff, req.spec, bank, true);
        } else if (req.field == "composite") {
            v = lp::besov_norm(st.a, req.spec, bank, true) +
                lp::besov_norm(st.u, req.spec, bank, true) +
                lp::besov_norm(st.b, req.spec, bank, true) +
                lp::besov_norm(st.w, req.spec, bank, true);
        } else {
            throw ConfigError("unknown field '" + req.field + "' in norm request");
        }
        std::cout << req.label << " = " << format_double(v) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for the two-phase relaxation system"};
    app.require_subcommand(1);
    std::string out_dir = "./out";
    app.add_option("--out-dir", out_dir, "output directory (default ./out)");

    auto* sim = app.add_subcommand("simulate", "integrate the nonlinear system");
    std::string sim_config;
    sim->add_option("--config", sim_config, "config file")->required();

    auto* decay = app.add_subcommand("decay", "decay-rate experiment");
    std::string decay_kind = "linear", decay_config;
    decay->add_option("--kind", decay_kind, "linear | torus");
    decay->add_option("--config", decay_config, "config file")->required();

    auto* fit = app.add_subcommand("fit", "fit a power law to a (t, norm) csv");
    std::string fit_input;
    double fit_tlo = 10.0, fit_thi = 1000.0;
    fit->add_option("--input", fit_input, "csv file")->required();
    fit->add_option("--tlo", fit_tlo, "window start");
    fit->add_option("--thi", fit_thi, "window end");

    auto* sym = app.add_subcommand("analyze-symbol", "eigenvalues of the linear symbol");
    std::string sym_config, xi_grid;
    int sym_d = 3;
    sym->add_option("--config", sym_config, "config file (optional)");
    sym->add_option("--d", sym_d, "dimension (2 or 3)");
    sym->add_option("--xi-grid", xi_grid, "log:<lo>:<hi>:<count>");

    auto* verify = app.add_subcommand("verify", "run the inequality/property suite");
    uint64_t verify_seed = 2024;
    verify->add_option("--seed", verify_seed, "rng seed");

    auto* norms = app.add_subcommand("norms", "Besov norms of a snapshot");
    std::string norms_snapshot, norms_specs;
    norms->add_option("--snapshot", norms_snapshot, "NSERLX1 snapshot file")->required();
    norms->add_option("--spec", norms_specs, "comma list field:s:r:band");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) return cmd_simulate(sim_config, out_dir);
        if (decay->parsed()) return cmd_decay(decay_kind, decay_config, out_dir);
        if (fit->parsed()) return cmd_fit(fit_input, fit_tlo, fit_thi);
        if (sym->parsed()) {
            io::AnalysisConfig cfg;
            if (!sym_config.empty()) {
                auto kv = io::KeyValueFile::parse_file(sym_config);
                cfg = io::parse_analysis_config(kv);
            }
            if (sym->count("--d")) cfg.d = sym_d;
            if (!xi_grid.empty()) {
                int lo_pos = 0;
                if (xi_grid.rfind("log:", 0) != 0)
                    throw ConfigError("--xi-grid must look like log:1e-3:1e3:512");
                (void)lo_pos;
                std::string rest = xi_grid.substr(4);
                auto c1 = rest.find(':');
                auto c2 = rest.find(':', c1 + 1);
                if (c1 == std::string::npos || c2 == std::string::npos)
                    throw ConfigError("--xi-grid must look like log:1e-3:1e3:512");
                cfg.xi_lo = parse_double(rest.substr(0, c1));
                cfg.xi_hi = parse_double(rest.substr(c1 + 1, c2 - c1 - 1));
                cfg.xi_count = static_cast<int>(parse_int(rest.substr(c2 + 1)));
            }
            if (cfg.d != 2 && cfg.d != 3) throw ConfigError("--d must be 2 or 3");
            return cmd_analyze_symbol(cfg, out_dir);
        }
        if (verify->parsed()) return cmd_verify(verify_seed);
        if (norms->parsed()) return cmd_norms(norms_snapshot, norms_specs);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
