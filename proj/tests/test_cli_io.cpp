// Configuration parsing, binary field container, CSV/JSON report emission,
// and the in-process command-line driver (gen / norm / simulate / verify).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "flns/cli.hpp"
#include "flns/config.hpp"
#include "flns/errors.hpp"
#include "flns/field_io.hpp"
#include "flns/report.hpp"
#include "flns/solver.hpp"

#include "test_util.hpp"

using namespace flns;
using flns_test::TempDir;
using nlohmann::json;

namespace {

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

// Runs parse_config_text and requires a ConfigError naming the given line.
void check_parse_error(const std::string& text, int line, const std::string& needle) {
    bool threw = false;
    try {
        parse_config_text(text);
    } catch (const ConfigError& e) {
        threw = true;
        INFO("message: " << e.what());
        CHECK(contains(e.what(), "config line " + std::to_string(line) + ":"));
        CHECK(contains(e.what(), needle));
    }
    CHECK(threw);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(static_cast<bool>(in));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(static_cast<bool>(out));
    out << content;
}

// In-process CLI invocation with captured streams.
int run_cli(std::initializer_list<std::string> args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::vector<std::string> store{"fl-nse"};
    store.insert(store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(store.size());
    for (const auto& s : store) argv.push_back(s.c_str());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

// Drops every line containing `needle` (used to ignore wall-clock entries).
std::string drop_lines_with(const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line))
        if (!contains(line, needle)) out += line + "\n";
    return out;
}

SolveReport demo_report() {
    SolveReport rep;
    rep.picard.verdict = PicardVerdict::converged;
    rep.picard.iterations = 3;
    rep.picard.tol = 1e-10;
    rep.picard.y_norm = 0.25;
    rep.picard.final_norm = 0.26;
    rep.picard.iterate_norms = {0.25, 0.26, 0.26, 0.26};
    rep.picard.diff_norms = {1e-2, 1e-5, 1e-11};
    rep.picard.ratios = {1e-3, 1e-6};
    rep.picard.eta_used = 0.5;
    rep.picard.threshold_check = true;
    rep.picard.bound_check = true;
    rep.alpha = 0.5;
    rep.critical_sup = 0.75;
    rep.caloric = 0.125;
    rep.eta_hat = 0.5;
    rep.threshold = 0.5;
    rep.below_threshold = true;
    rep.mild_residual = 2.5e-12;
    rep.div_residual_max = 3e-16;
    rep.limit_condition_ok = true;
    rep.wall_time_s = 0.02;
    rep.table = {{0.0, 0.0, 0.75, 0.0}, {0.5, 0.3, 0.6, 1e-16}, {1.0, 0.2, 0.5, 2e-16}};
    return rep;
}

} // namespace

TEST_CASE("config text: sections, comments, and mirrored suite knobs") {
    const std::string text =
        "# full configuration exercising every section\n"
        "\n"
        "[grid]\n"
        "d = 3\n"
        "n = 24   # inline comment\n"
        "L = 3.5\n"
        "[norms]\n"
        "p = 2.5\n"
        "r = 1.5\n"
        "p_tilde = 5\n"
        "s_aux = 2.25\n"
        "tol_exact = 1e-9\n"
        "[time]\n"
        "T = 0.75\n"
        "M = 12\n"
        "gamma = 2.5\n"
        "[picard]\n"
        "tol = 1e-8\n"
        "max_iter = 21\n"
        "eta_trials = 5\n"
        "limit_fraction = 0.6\n"
        "[initial]\n"
        "kind = random-divfree\n"
        "amp = 0.125\n"
        "slope = 1.75\n"
        "seed = 99\n"
        "[suite]\n"
        "name = holder\n"
        "trials = 17\n"
        "seed = 7\n";
    const ParsedConfig cfg = parse_config_text(text);

    CHECK(cfg.run.d == 3);
    CHECK(cfg.run.n == 24);
    CHECK(cfg.run.L == 3.5);
    CHECK(cfg.run.p == 2.5);
    CHECK(cfg.run.r == 1.5);
    CHECK(cfg.run.p_tilde == 5.0);
    CHECK(cfg.run.s_aux == 2.25);
    CHECK(cfg.run.tol_exact == 1e-9);
    CHECK(cfg.run.T == 0.75);
    CHECK(cfg.run.M == 12);
    CHECK(cfg.run.gamma == 2.5);
    CHECK(cfg.run.tol == 1e-8);
    CHECK(cfg.run.max_iter == 21);
    CHECK(cfg.run.eta_trials == 5);
    CHECK(cfg.run.limit_fraction == 0.6);
    CHECK(cfg.run.initial.kind == "random-divfree");
    CHECK(cfg.run.initial.amp == 0.125);
    CHECK(cfg.run.initial.slope == 1.75);
    CHECK(cfg.run.initial.seed == 99);

    // Grid and norm knobs mirror into the suite options; [suite] sets the rest.
    CHECK(cfg.suite.d == 3);
    CHECK(cfg.suite.n == 24);
    CHECK(cfg.suite.L == 3.5);
    CHECK(cfg.suite.p == 2.5);
    CHECK(cfg.suite.r == 1.5);
    CHECK(cfg.suite.p_tilde == 5.0);
    CHECK(cfg.suite.s_aux == 2.25);
    CHECK(cfg.suite.trials == 17);
    CHECK(cfg.suite.seed == 7);
    CHECK(cfg.suite_name == "holder");

    // Untouched knobs keep their defaults.
    const ParsedConfig empty = parse_config_text("# nothing but comments\n\n");
    CHECK(empty.suite_name.empty());
    CHECK(empty.run.d == RunConfig{}.d);
    CHECK(empty.run.n == RunConfig{}.n);
    CHECK(empty.suite.trials == SuiteOptions{}.trials);

    // "inf" is a legal floating-point value for the fine index.
    const ParsedConfig inf_cfg = parse_config_text("[norms]\nr = inf\n");
    CHECK(std::isinf(inf_cfg.run.r));
}

TEST_CASE("config text: malformed input is rejected with the offending line") {
    check_parse_error("p = 2\n", 1, "appears before any [section]");
    check_parse_error("[nope]\n", 1, "unknown section [nope]");
    check_parse_error("[grid\n", 1, "malformed section header");
    check_parse_error("[grid]\nq = 1\n", 2, "unknown key 'q' in section [grid]");
    check_parse_error("[norms]\nT = 1\n", 2, "unknown key 'T' in section [norms]");
    check_parse_error("[grid]\nn 16\n", 2, "expected 'key = value'");
    check_parse_error("[grid]\nn =\n", 2, "empty value for 'n'");
    check_parse_error("[grid]\n= 4\n", 2, "empty key");
    check_parse_error("[grid]\nn = 16x\n", 2, "trailing junk");
    check_parse_error("[grid]\nn = abc\n", 2, "expected an integer for 'n'");
    check_parse_error("[time]\nT = abc\n", 2, "expected a number for 'T'");
    check_parse_error("[time]\nT = 1..5\n", 2, "trailing junk");
    check_parse_error("[initial]\nseed = abc\n", 2, "expected a nonnegative integer for 'seed'");
    check_parse_error("\n\n[picard]\nwhat = 1\n", 4, "unknown key 'what' in section [picard]");
}

TEST_CASE("config file wrapper: reads from disk and reports missing paths") {
    TempDir td;
    const std::string path = td.file("run.cfg");
    spit(path, "[grid]\nn = 48\n");
    CHECK(parse_config_file(path).run.n == 48);

    bool threw = false;
    try {
        parse_config_file(td.file("absent.cfg"));
    } catch (const ConfigError& e) {
        threw = true;
        CHECK(contains(e.what(), "cannot open config file"));
    }
    CHECK(threw);
}

TEST_CASE("field container: byte-exact round trip and exact file size") {
    TempDir td;
    const Grid g{2, 16, 5.0};
    const SpectralField f = flns_test::random_field(g, 321, 2);
    const std::string path = td.file("f.bin");
    write_field(path, f);

    // 24 header bytes + 4 per axis + 16 per stored coefficient.
    const auto expected_size = 24u + 4u * 2u + 16u * 2u * 256u;
    CHECK(std::filesystem::file_size(path) == expected_size);

    const SpectralField back = read_field(path);
    CHECK(back.grid == g);
    CHECK(back.components == 2);
    CHECK(back.coeffs == f.coeffs);
    CHECK(back.mean_zero == f.mean_zero);

    // Re-serialization is byte-identical.
    const std::string path2 = td.file("f2.bin");
    write_field(path2, back);
    CHECK(slurp(path) == slurp(path2));

    // A field with a nonzero mean reads back with the flag cleared.
    SpectralField m(g, 1);
    m.coeffs[0] = std::complex<double>(2.0, 0.0);
    const std::string path3 = td.file("m.bin");
    write_field(path3, m);
    CHECK(!read_field(path3).mean_zero);
}

TEST_CASE("field container: corrupted headers and sizes are rejected") {
    TempDir td;
    const Grid g{2, 8, kTwoPi};
    const SpectralField f = flns_test::random_field(g, 5, 1);
    const std::string good = td.file("good.bin");
    write_field(good, f);
    const std::string bytes = slurp(good);

    auto expect_error = [&](const std::string& mutated, const std::string& needle) {
        const std::string path = td.file("bad.bin");
        spit(path, mutated);
        bool threw = false;
        try {
            (void)read_field(path);
        } catch (const ConfigError& e) {
            threw = true;
            INFO("message: " << e.what());
            CHECK(contains(e.what(), needle));
        }
        CHECK(threw);
    };

    { // magic
        std::string b = bytes;
        b[0] = 'X';
        expect_error(b, "bad magic");
    }
    { // version (u32 at offset 4)
        std::string b = bytes;
        b[4] = 2;
        expect_error(b, "unsupported field file version 2");
    }
    { // dimension (u32 at offset 8)
        std::string b = bytes;
        b[8] = 4;
        expect_error(b, "dimension must be 2 or 3");
    }
    { // components (u32 at offset 12)
        std::string b = bytes;
        b[12] = 0;
        expect_error(b, "component count out of range");
    }
    { // anisotropic axes (second n at offset 20)
        std::string b = bytes;
        b[20] = 16;
        expect_error(b, "anisotropic");
    }
    { // odd axis count rejected by the grid constructor
        std::string b = bytes;
        b[16] = 7;
        b[20] = 7;
        expect_error(b, "field file header invalid");
    }
    { // truncation inside the header and inside the payload
        expect_error(bytes.substr(0, 20), "truncated");
        expect_error(bytes.substr(0, bytes.size() - 3), "truncated");
    }
    { // trailing bytes
        expect_error(bytes + "x", "trailing bytes");
    }

    bool threw = false;
    try {
        (void)read_field(td.file("missing.bin"));
    } catch (const ConfigError& e) {
        threw = true;
        CHECK(contains(e.what(), "cannot open field file"));
    }
    CHECK(threw);
}

TEST_CASE("trajectory CSV: header, one row per time, 17-digit round trip") {
    const SolveReport rep = demo_report();
    const std::string csv = trajectory_csv(rep);

    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "t,weighted_norm,critical_norm,div_residual");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        // Parse the four comma-separated doubles back; they must be bit-exact.
        std::istringstream cells(line);
        std::string cell;
        double got[4];
        for (double& slot : got) {
            REQUIRE(std::getline(cells, cell, ','));
            slot = std::strtod(cell.c_str(), nullptr);
        }
        const SolveRow& row = rep.table[rows];
        CHECK(got[0] == row.t);
        CHECK(got[1] == row.weighted_norm);
        CHECK(got[2] == row.critical_norm);
        CHECK(got[3] == row.div_residual);
        ++rows;
    }
    CHECK(rows == rep.table.size());

    SolveReport empty = rep;
    empty.table.clear();
    CHECK(trajectory_csv(empty) == "t,weighted_norm,critical_norm,div_residual\n");
}

TEST_CASE("suite CSV: x column uses the abscissae when present, else the index") {
    SuiteResult res;
    res.xs = {0.5, 1.0, 2.0};
    res.values = {3.0, 1.0 / 3.0, 0.125};
    const std::string csv = suite_csv(res);
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "index,x,value");
    for (std::size_t i = 0; i < res.values.size(); ++i) {
        REQUIRE(std::getline(in, line));
        std::istringstream cells(line);
        std::string idx, x, v;
        std::getline(cells, idx, ',');
        std::getline(cells, x, ',');
        std::getline(cells, v, ',');
        CHECK(idx == std::to_string(i));
        CHECK(std::strtod(x.c_str(), nullptr) == res.xs[i]);
        CHECK(std::strtod(v.c_str(), nullptr) == res.values[i]);
    }
    CHECK(!std::getline(in, line));

    res.xs.clear(); // mismatched abscissae fall back to the index
    const std::string csv2 = suite_csv(res);
    CHECK(contains(csv2, "\n1,1,"));
    CHECK(contains(csv2, "\n2,2,"));
}

TEST_CASE("solve report JSON: parses, round-trips doubles, encodes the optionals") {
    const SolveReport rep = demo_report();
    const json j = json::parse(solve_report_json(rep));

    CHECK(j["verdict"] == "converged");
    CHECK(j["iterations"] == 3);
    CHECK(j["tol"].get<double>() == 1e-10);
    CHECK(j["y_norm"].get<double>() == 0.25);
    CHECK(j["iterate_norms"].size() == 4u);
    CHECK(j["diff_norms"][2].get<double>() == 1e-11);
    CHECK(j["eta_used"].get<double>() == 0.5);
    CHECK(j["threshold_check"] == true);
    CHECK(j["bound_check"] == true);
    CHECK(j["failure_index"].is_null());
    CHECK(j["blowup_time"].is_null());
    CHECK(j["mild_residual"].get<double>() == 2.5e-12);
    CHECK(j["below_threshold"] == true);
    CHECK(j["limit_condition_ok"] == true);
    CHECK(j["lorentz_surrogate_used"] == false);
    CHECK(j["table"].size() == 3u);
    CHECK(j["table"][1]["critical_norm"].get<double>() == 0.6);

    // Unconverged bookkeeping: negative residual encodes as null, non-finite
    // samples as strings (JSON has no inf), blowup time as a number.
    SolveReport bad = rep;
    bad.picard.verdict = PicardVerdict::diverged;
    bad.picard.failure_index = 2;
    bad.mild_residual = -1.0;
    bad.critical_sup = std::numeric_limits<double>::infinity();
    bad.blowup_time = 0.375;
    bad.picard.eta_used.reset();
    bad.picard.threshold_check.reset();
    const json jb = json::parse(solve_report_json(bad));
    CHECK(jb["verdict"] == "diverged");
    CHECK(jb["failure_index"] == 2);
    CHECK(jb["mild_residual"].is_null());
    CHECK(jb["critical_sup"] == "inf");
    CHECK(jb["blowup_time"].get<double>() == 0.375);
    CHECK(jb["eta_used"].is_null());
    CHECK(jb["threshold_check"].is_null());

    SolveReport none = rep;
    none.table.clear();
    CHECK(json::parse(solve_report_json(none))["table"].size() == 0u);
}

TEST_CASE("suite JSON: escaping, null optionals, exact arrays") {
    SuiteResult res;
    res.suite = "demo";
    res.trials = 4;
    res.seed = 11;
    res.pass = false;
    res.empirical_max = 2.0;
    res.median = 1.0;
    res.detail = "line \"one\"\nline\ttwo \\ end";
    res.xs = {1.0, 2.0};
    res.values = {1.0 / 3.0, 2.0 / 7.0};

    const json j = json::parse(suite_json(res));
    CHECK(j["suite"] == "demo");
    CHECK(j["trials"] == 4);
    CHECK(j["seed"] == 11);
    CHECK(j["pass"] == false);
    CHECK(j["detail"].get<std::string>() == res.detail);
    CHECK(j["fitted_exponent"].is_null());
    CHECK(j["target_exponent"].is_null());
    CHECK(j["tolerance"].is_null());
    REQUIRE(j["values"].size() == 2u);
    CHECK(j["values"][0].get<double>() == res.values[0]);
    CHECK(j["values"][1].get<double>() == res.values[1]);
    CHECK(j["xs"][1].get<double>() == 2.0);

    res.fitted_exponent = -0.25;
    res.target_exponent = -0.25;
    res.tolerance = 0.05;
    const json j2 = json::parse(suite_json(res));
    CHECK(j2["fitted_exponent"].get<double>() == -0.25);
    CHECK(j2["tolerance"].get<double>() == 0.05);
}

TEST_CASE("report emission creates nested directories with the exact content") {
    TempDir td;
    const SolveReport rep = demo_report();
    const std::string dir = td.file("a/b/c");
    emit_solve_report(rep, dir);
    CHECK(slurp(dir + "/trajectory.csv") == trajectory_csv(rep));
    CHECK(slurp(dir + "/report.json") == solve_report_json(rep));

    SuiteResult res;
    res.suite = "demo";
    res.values = {1.0};
    const std::string dir2 = td.file("x/y");
    emit_suite_report(res, dir2);
    CHECK(slurp(dir2 + "/suite.csv") == suite_csv(res));
    CHECK(slurp(dir2 + "/report.json") == suite_json(res));
}

TEST_CASE("cli: usage errors and help") {
    std::string out, err;
    CHECK(run_cli({}, &out, &err) == 1);
    CHECK(contains(err, "config error"));

    CHECK(run_cli({"frobnicate"}, &out, &err) == 1);
    CHECK(contains(err, "config error"));

    CHECK(run_cli({"--help"}, &out, &err) == 0);
    CHECK(contains(out, "gen"));
    CHECK(contains(out, "simulate"));

    // Missing required option.
    CHECK(run_cli({"norm", "--s", "0", "--p", "2", "--r", "2"}, &out, &err) == 1);
    CHECK(contains(err, "config error"));
}

TEST_CASE("cli: gen then norm reproduces the reference vortex norm") {
    TempDir td;
    const std::string field = td.file("tg.bin");
    std::string out, err;
    REQUIRE(run_cli({"gen", "--kind", "taylor-green", "--out", field}, &out, &err) == 0);
    CHECK(contains(out, "wrote " + field));
    CHECK(contains(out, "2 components"));

    REQUIRE(run_cli({"norm", "--field", field, "--s", "0", "--p", "2", "--r", "2"}, &out, &err) == 0);
    const double value = std::strtod(out.c_str(), nullptr);
    CHECK(value == doctest::Approx(std::sqrt(2.0) * 3.14159265358979323846).epsilon(1e-13));

    // The infinite fine index parses on the command line.
    REQUIRE(run_cli({"norm", "--field", field, "--s", "0", "--p", "2", "--r", "inf"}, &out, &err) == 0);
    CHECK(std::strtod(out.c_str(), nullptr) > 0.0);

    // The degenerate literal pair reports divergence but still exits 0.
    REQUIRE(run_cli({"norm", "--field", field, "--s", "0", "--p", "1", "--r", "2"}, &out, &err) == 0);
    CHECK(contains(out, "inf"));
    CHECK(contains(out, "divergent Lorentz pair"));
    REQUIRE(run_cli({"norm", "--field", field, "--s", "0", "--p", "1", "--r", "2", "--surrogate"}, &out, &err) == 0);
    CHECK(!contains(out, "divergent"));
    CHECK(std::isfinite(std::strtod(out.c_str(), nullptr)));

    // Unknown generator kinds and unsupported dimensions are config errors.
    CHECK(run_cli({"gen", "--kind", "vortex-soup", "--out", td.file("x.bin")}, &out, &err) == 1);
    CHECK(contains(err, "config error"));
    CHECK(run_cli({"gen", "--kind", "taylor-green", "--d", "3", "--out", td.file("y.bin")}, &out, &err) == 1);
    CHECK(contains(err, "defined for d = 2"));
}

TEST_CASE("cli: simulate emits deterministic reports into a fresh directory") {
    TempDir td;
    const std::string cfg = td.file("run.cfg");
    spit(cfg,
         "[grid]\nd = 2\nn = 16\n"
         "[norms]\np = 2\nr = 2\np_tilde = 4\n"
         "[time]\nT = 0.25\nM = 8\ngamma = 2\n"
         "[picard]\ntol = 1e-10\nmax_iter = 16\neta_trials = 2\n"
         "[initial]\nkind = taylor-green\namp = 0.05\n");

    std::string out, err;
    const std::string dir1 = td.file("out/first");
    REQUIRE(run_cli({"simulate", "--config", cfg, "--out-dir", dir1}, &out, &err) == 0);
    CHECK(contains(out, "verdict converged"));
    CHECK(contains(out, "threshold 1/(4 eta)"));
    CHECK(std::filesystem::exists(dir1 + "/trajectory.csv"));
    CHECK(std::filesystem::exists(dir1 + "/report.json"));
    const json j = json::parse(slurp(dir1 + "/report.json"));
    CHECK(j["verdict"] == "converged");
    CHECK(j["table"].size() == 9u); // t = 0 plus the M graded samples

    // Same config, second directory: identical trajectory bytes, identical
    // JSON except the wall-clock entry.
    const std::string dir2 = td.file("out/second");
    REQUIRE(run_cli({"simulate", "--config", cfg, "--out-dir", dir2}, &out, &err) == 0);
    CHECK(slurp(dir1 + "/trajectory.csv") == slurp(dir2 + "/trajectory.csv"));
    CHECK(drop_lines_with(slurp(dir1 + "/report.json"), "wall_time_s") ==
          drop_lines_with(slurp(dir2 + "/report.json"), "wall_time_s"));

    // A baseless amplitude diverges but the driver still reports and exits 0.
    const std::string cfg2 = td.file("big.cfg");
    spit(cfg2,
         "[grid]\nd = 2\nn = 16\n"
         "[time]\nT = 0.25\nM = 8\n"
         "[picard]\nmax_iter = 12\neta_trials = 2\n"
         "[initial]\nkind = random-divfree\namp = 10000\nseed = 4\n");
    REQUIRE(run_cli({"simulate", "--config", cfg2, "--out-dir", td.file("out/big")}, &out, &err) == 0);
    CHECK(contains(out, "verdict diverged"));

    // Missing config file.
    CHECK(run_cli({"simulate", "--config", td.file("absent.cfg"), "--out-dir", td.file("z")}, &out, &err) == 1);
    CHECK(contains(err, "cannot open config file"));
}

TEST_CASE("cli: verify runs suites, exits 2 on failure, and is reproducible") {
    TempDir td;
    const std::string cfg = td.file("suite.cfg");
    spit(cfg, "[grid]\nd = 2\nn = 16\n[suite]\ntrials = 6\nseed = 3\n");

    std::string out, err;
    const std::string dir1 = td.file("v1");
    REQUIRE(run_cli({"verify", "--suite", "holder", "--config", cfg, "--out-dir", dir1}, &out, &err) == 0);
    CHECK(contains(out, "suite holder: pass"));
    const json j = json::parse(slurp(dir1 + "/report.json"));
    CHECK(j["pass"] == true);
    CHECK(j["trials"] == 6);

    const std::string dir2 = td.file("v2");
    REQUIRE(run_cli({"verify", "--suite", "holder", "--config", cfg, "--out-dir", dir2}, &out, &err) == 0);
    CHECK(slurp(dir1 + "/report.json") == slurp(dir2 + "/report.json"));
    CHECK(slurp(dir1 + "/suite.csv") == slurp(dir2 + "/suite.csv"));

    // An unresolved exponent suite fails: exit code 2 and FAIL in the summary.
    const std::string cfg32 = td.file("suite32.cfg");
    spit(cfg32, "[grid]\nd = 2\nn = 32\n[suite]\ntrials = 1\nseed = 3\n");
    CHECK(run_cli({"verify", "--suite", "kernel_scaling", "--config", cfg32, "--out-dir", td.file("v3")}, &out,
                  &err) == 2);
    CHECK(contains(out, "suite kernel_scaling: FAIL"));
    CHECK(contains(out, "not resolved"));

    // Unknown suite names are configuration errors.
    CHECK(run_cli({"verify", "--suite", "nope", "--config", cfg, "--out-dir", td.file("v4")}, &out, &err) == 1);
    CHECK(contains(err, "unknown suite 'nope'"));
}
