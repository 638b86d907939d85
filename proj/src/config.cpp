#include "flns/config.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "flns/errors.hpp"

namespace flns {
namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& v, int line, const std::string& key) {
    try {
        std::size_t idx = 0;
        double x = std::stod(v, &idx);
        if (idx != v.size()) fail(line, "trailing junk in value for '" + key + "': '" + v + "'");
        return x;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "expected a number for '" + key + "'; got '" + v + "'");
    }
}

int parse_int(const std::string& v, int line, const std::string& key) {
    try {
        std::size_t idx = 0;
        long x = std::stol(v, &idx);
        if (idx != v.size()) fail(line, "trailing junk in value for '" + key + "': '" + v + "'");
        if (x < -2147483647L || x > 2147483647L) fail(line, "value out of range for '" + key + "'");
        return static_cast<int>(x);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "expected an integer for '" + key + "'; got '" + v + "'");
    }
}

std::uint64_t parse_u64(const std::string& v, int line, const std::string& key) {
    try {
        std::size_t idx = 0;
        unsigned long long x = std::stoull(v, &idx);
        if (idx != v.size()) fail(line, "trailing junk in value for '" + key + "': '" + v + "'");
        return static_cast<std::uint64_t>(x);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "expected a nonnegative integer for '" + key + "'; got '" + v + "'");
    }
}

} // namespace

ParsedConfig parse_config_text(const std::string& text) {
    ParsedConfig out;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;

    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        if (std::size_t pos = s.find('#'); pos != std::string::npos) s.erase(pos);
        s = trim(s);
        if (s.empty()) continue;

        if (s.front() == '[') {
            if (s.back() != ']') fail(line, "malformed section header '" + s + "'");
            section = trim(s.substr(1, s.size() - 2));
            if (section != "grid" && section != "norms" && section != "time" && section != "picard" &&
                section != "initial" && section != "suite")
                fail(line, "unknown section [" + section + "]");
            continue;
        }

        std::size_t eq = s.find('=');
        if (eq == std::string::npos) fail(line, "expected 'key = value'; got '" + s + "'");
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        if (key.empty()) fail(line, "empty key");
        if (val.empty()) fail(line, "empty value for '" + key + "'");
        if (section.empty()) fail(line, "key '" + key + "' appears before any [section]");

        if (section == "grid") {
            if (key == "d") {
                out.run.d = parse_int(val, line, key);
                out.suite.d = out.run.d;
            } else if (key == "n") {
                out.run.n = parse_int(val, line, key);
                out.suite.n = out.run.n;
            } else if (key == "L") {
                out.run.L = parse_double(val, line, key);
                out.suite.L = out.run.L;
            } else {
                fail(line, "unknown key '" + key + "' in section [grid]");
            }
        } else if (section == "norms") {
            if (key == "p") {
                out.run.p = parse_double(val, line, key);
                out.suite.p = out.run.p;
            } else if (key == "r") {
                out.run.r = parse_double(val, line, key);
                out.suite.r = out.run.r;
            } else if (key == "p_tilde") {
                out.run.p_tilde = parse_double(val, line, key);
                out.suite.p_tilde = out.run.p_tilde;
            } else if (key == "s_aux") {
                out.run.s_aux = parse_double(val, line, key);
                out.suite.s_aux = out.run.s_aux;
            } else if (key == "tol_exact") {
                out.run.tol_exact = parse_double(val, line, key);
            } else {
                fail(line, "unknown key '" + key + "' in section [norms]");
            }
        } else if (section == "time") {
            if (key == "T")
                out.run.T = parse_double(val, line, key);
            else if (key == "M")
                out.run.M = parse_int(val, line, key);
            else if (key == "gamma")
                out.run.gamma = parse_double(val, line, key);
            else
                fail(line, "unknown key '" + key + "' in section [time]");
        } else if (section == "picard") {
            if (key == "tol")
                out.run.tol = parse_double(val, line, key);
            else if (key == "max_iter")
                out.run.max_iter = parse_int(val, line, key);
            else if (key == "eta_trials")
                out.run.eta_trials = parse_int(val, line, key);
            else if (key == "limit_fraction")
                out.run.limit_fraction = parse_double(val, line, key);
            else
                fail(line, "unknown key '" + key + "' in section [picard]");
        } else if (section == "initial") {
            if (key == "kind")
                out.run.initial.kind = val;
            else if (key == "amp")
                out.run.initial.amp = parse_double(val, line, key);
            else if (key == "slope")
                out.run.initial.slope = parse_double(val, line, key);
            else if (key == "seed")
                out.run.initial.seed = parse_u64(val, line, key);
            else
                fail(line, "unknown key '" + key + "' in section [initial]");
        } else { // suite
            if (key == "name")
                out.suite_name = val;
            else if (key == "trials")
                out.suite.trials = parse_int(val, line, key);
            else if (key == "seed")
                out.suite.seed = parse_u64(val, line, key);
            else
                fail(line, "unknown key '" + key + "' in section [suite]");
        }
    }
    return out;
}

ParsedConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

} // namespace flns
