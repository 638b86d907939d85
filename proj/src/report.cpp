#include "flns/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

#include "flns/errors.hpp"

namespace flns {
namespace {

std::string f17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

// JSON numbers cannot be inf/nan; encode those as strings.
std::string json_number(double v) {
    if (std::isfinite(v)) return f17(v);
    if (std::isnan(v)) return "\"nan\"";
    return v > 0 ? "\"inf\"" : "\"-inf\"";
}

std::string json_array(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += json_number(v[i]);
    }
    return out + "]";
}

std::string json_bool(bool b) { return b ? "true" : "false"; }

std::string opt_num(const std::optional<double>& v) { return v ? json_number(*v) : std::string("null"); }
std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("null"); }
std::string opt_bool(const std::optional<bool>& v) { return v ? json_bool(*v) : std::string("null"); }

} // namespace

std::string trajectory_csv(const SolveReport& rep) {
    std::string out = "t,weighted_norm,critical_norm,div_residual\n";
    for (const SolveRow& row : rep.table)
        out += f17(row.t) + "," + f17(row.weighted_norm) + "," + f17(row.critical_norm) + "," +
               f17(row.div_residual) + "\n";
    return out;
}

std::string solve_report_json(const SolveReport& rep) {
    const PicardReport& p = rep.picard;
    std::string out = "{\n";
    out += "  \"verdict\": \"" + std::string(to_string(p.verdict)) + "\",\n";
    out += "  \"iterations\": " + std::to_string(p.iterations) + ",\n";
    out += "  \"tol\": " + json_number(p.tol) + ",\n";
    out += "  \"y_norm\": " + json_number(p.y_norm) + ",\n";
    out += "  \"final_norm\": " + json_number(p.final_norm) + ",\n";
    out += "  \"iterate_norms\": " + json_array(p.iterate_norms) + ",\n";
    out += "  \"diff_norms\": " + json_array(p.diff_norms) + ",\n";
    out += "  \"ratios\": " + json_array(p.ratios) + ",\n";
    out += "  \"eta_used\": " + opt_num(p.eta_used) + ",\n";
    out += "  \"threshold_check\": " + opt_bool(p.threshold_check) + ",\n";
    out += "  \"bound_check\": " + opt_bool(p.bound_check) + ",\n";
    out += "  \"failure_index\": " + opt_int(p.failure_index) + ",\n";
    out += "  \"alpha\": " + json_number(rep.alpha) + ",\n";
    out += "  \"caloric\": " + json_number(rep.caloric) + ",\n";
    out += "  \"eta_hat\": " + json_number(rep.eta_hat) + ",\n";
    out += "  \"threshold\": " + json_number(rep.threshold) + ",\n";
    out += "  \"below_threshold\": " + json_bool(rep.below_threshold) + ",\n";
    out += "  \"critical_sup\": " + json_number(rep.critical_sup) + ",\n";
    out += "  \"mild_residual\": " +
           (rep.mild_residual >= 0.0 ? json_number(rep.mild_residual) : std::string("null")) + ",\n";
    out += "  \"div_residual_max\": " + json_number(rep.div_residual_max) + ",\n";
    out += "  \"limit_condition_ok\": " + json_bool(rep.limit_condition_ok) + ",\n";
    out += "  \"lorentz_surrogate_used\": " + json_bool(rep.lorentz_surrogate_used) + ",\n";
    out += "  \"blowup_time\": " + opt_num(rep.blowup_time) + ",\n";
    out += "  \"wall_time_s\": " + json_number(rep.wall_time_s) + ",\n";
    out += "  \"table\": [";
    for (std::size_t i = 0; i < rep.table.size(); ++i) {
        const SolveRow& r = rep.table[i];
        out += (i ? "," : "") + std::string("\n    {\"t\": ") + json_number(r.t) +
               ", \"weighted_norm\": " + json_number(r.weighted_norm) +
               ", \"critical_norm\": " + json_number(r.critical_norm) +
               ", \"div_residual\": " + json_number(r.div_residual) + "}";
    }
    out += rep.table.empty() ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

std::string suite_csv(const SuiteResult& res) {
    std::string out = "index,x,value\n";
    for (std::size_t i = 0; i < res.values.size(); ++i) {
        const double x = res.xs.size() == res.values.size() ? res.xs[i] : static_cast<double>(i);
        out += std::to_string(i) + "," + f17(x) + "," + f17(res.values[i]) + "\n";
    }
    return out;
}

std::string suite_json(const SuiteResult& res) {
    std::string out = "{\n";
    out += "  \"suite\": \"" + json_escape(res.suite) + "\",\n";
    out += "  \"trials\": " + std::to_string(res.trials) + ",\n";
    out += "  \"seed\": " + std::to_string(res.seed) + ",\n";
    out += "  \"pass\": " + json_bool(res.pass) + ",\n";
    out += "  \"empirical_max\": " + json_number(res.empirical_max) + ",\n";
    out += "  \"median\": " + json_number(res.median) + ",\n";
    out += "  \"fitted_exponent\": " + opt_num(res.fitted_exponent) + ",\n";
    out += "  \"target_exponent\": " + opt_num(res.target_exponent) + ",\n";
    out += "  \"tolerance\": " + opt_num(res.tolerance) + ",\n";
    out += "  \"detail\": \"" + json_escape(res.detail) + "\",\n";
    out += "  \"xs\": " + json_array(res.xs) + ",\n";
    out += "  \"values\": " + json_array(res.values) + "\n";
    out += "}\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw ConfigError("write failed for '" + path + "'");
}

namespace {
std::string ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec && !std::filesystem::is_directory(dir))
        throw ConfigError("cannot create output directory '" + dir + "': " + ec.message());
    return dir;
}
} // namespace

void emit_solve_report(const SolveReport& rep, const std::string& dir) {
    const std::string base = ensure_dir(dir);
    write_text_file(base + "/trajectory.csv", trajectory_csv(rep));
    write_text_file(base + "/report.json", solve_report_json(rep));
}

void emit_suite_report(const SuiteResult& res, const std::string& dir) {
    const std::string base = ensure_dir(dir);
    write_text_file(base + "/suite.csv", suite_csv(res));
    write_text_file(base + "/report.json", suite_json(res));
}

} // namespace flns
