#include "flns/cli.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "flns/config.hpp"
#include "flns/errors.hpp"
#include "flns/field_io.hpp"
#include "flns/report.hpp"
#include "flns/solver.hpp"
#include "flns/verify.hpp"

namespace flns {
namespace {

std::string f17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int run_gen(const std::string& kind, const std::string& out_path, int n, int d, double L, double slope,
            std::uint64_t seed, double amp, std::ostream& out) {
    RunConfig cfg;
    cfg.d = d;
    cfg.n = n;
    cfg.L = L;
    cfg.initial.kind = kind;
    cfg.initial.amp = amp;
    cfg.initial.slope = slope;
    cfg.initial.seed = seed;
    const SpectralField f = make_initial_data(cfg);
    write_field(out_path, f);
    out << "wrote " << out_path << " (kind " << kind << ", d " << d << ", n " << n << ", " << f.components
        << " components)\n";
    return 0;
}

int run_norm(const std::string& field_path, double s, double p, double r, bool surrogate, std::ostream& out) {
    const SpectralField f = read_field(field_path);
    NormSpec spec{s, p, r, surrogate ? InfinityPolicy::sup_surrogate : InfinityPolicy::literal};
    spec.validate();
    const SflValue v = sfl_norm_ex(f, spec);
    out << f17(v.value) << "\n";
    if (v.divergent) out << "divergent Lorentz pair (p = " << p << ", r = " << r << "): literal value is infinite\n";
    return 0;
}

int run_simulate(const std::string& config_path, const std::string& out_dir, std::ostream& out) {
    const ParsedConfig cfg = parse_config_file(config_path);
    auto [traj, rep] = run_mild_solution(cfg.run);
    (void)traj;
    emit_solve_report(rep, out_dir);
    out << "verdict " << to_string(rep.picard.verdict) << " after " << rep.picard.iterations << " iteration(s); caloric "
        << f17(rep.caloric);
    if (rep.eta_hat > 0.0)
        out << "; threshold 1/(4 eta) " << f17(rep.threshold) << " (" << (rep.below_threshold ? "below" : "above")
            << " threshold)";
    out << "; wrote " << out_dir << "/trajectory.csv, " << out_dir << "/report.json\n";
    return 0;
}

int run_verify(const std::string& suite, const std::string& config_path, const std::string& out_dir,
               std::ostream& out) {
    const ParsedConfig cfg = parse_config_file(config_path);
    const SuiteResult res = run_suite(suite, cfg.suite);
    emit_suite_report(res, out_dir);
    out << "suite " << res.suite << ": " << (res.pass ? "pass" : "FAIL") << " (" << res.detail << "); wrote "
        << out_dir << "/suite.csv, " << out_dir << "/report.json\n";
    return res.pass ? 0 : 2;
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pseudo-spectral periodic Navier-Stokes laboratory: mild solutions, "
                 "Sobolev-Fourier-Lorentz norms, and the verification harness"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate an initial datum and write it as a field file");
    std::string gen_kind, gen_out;
    int gen_n = 32, gen_d = 2;
    double gen_L = kTwoPi, gen_slope = 0.0, gen_amp = 1.0;
    std::uint64_t gen_seed = 1;
    gen->add_option("--kind", gen_kind, "taylor-green or random-divfree")->required();
    gen->add_option("--out", gen_out, "output field file")->required();
    gen->add_option("--n", gen_n, "grid points per axis");
    gen->add_option("--d", gen_d, "dimension (2 or 3)");
    gen->add_option("--L", gen_L, "box size");
    gen->add_option("--slope", gen_slope, "spectral envelope exponent (0 -> d - 1)");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--amp", gen_amp, "amplitude");

    // norm
    auto* norm = app.add_subcommand("norm", "Print a weighted spectral norm of a field file");
    std::string norm_field;
    double norm_s = 0.0, norm_p = 2.0, norm_r = 2.0;
    bool norm_surrogate = false;
    norm->add_option("--field", norm_field, "input field file")->required();
    norm->add_option("--s", norm_s, "regularity exponent")->required();
    norm->add_option("--p", norm_p, "integrability exponent")->required();
    norm->add_option("--r", norm_r, "Lorentz fine index (inf accepted)")->required();
    norm->add_flag("--surrogate", norm_surrogate, "use the sup surrogate for the degenerate Lorentz pair");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Run the mild-solution iteration from a config file");
    std::string sim_config, sim_out_dir = ".";
    sim->add_option("--config", sim_config, "config file")->required();
    sim->add_option("--out-dir", sim_out_dir, "output directory (default .)");

    // verify
    auto* ver = app.add_subcommand("verify", "Run a verification suite from a config file");
    std::string ver_suite, ver_config, ver_out_dir = ".";
    ver->add_option("--suite", ver_suite, "suite name")->required();
    ver->add_option("--config", ver_config, "config file")->required();
    ver->add_option("--out-dir", ver_out_dir, "output directory (default .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (gen->parsed()) return run_gen(gen_kind, gen_out, gen_n, gen_d, gen_L, gen_slope, gen_seed, gen_amp, out);
        if (norm->parsed()) return run_norm(norm_field, norm_s, norm_p, norm_r, norm_surrogate, out);
        if (sim->parsed()) return run_simulate(sim_config, sim_out_dir, out);
        if (ver->parsed()) return run_verify(ver_suite, ver_config, ver_out_dir, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "numeric error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace flns
