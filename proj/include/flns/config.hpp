#pragma once
#include <string>

#include "flns/solver.hpp"
#include "flns/verify.hpp"

namespace flns {

// Parsed `key = value` configuration with [section] headers.  Sections:
// [grid] d, n, L; [norms] p, r, p_tilde, s_aux, tol_exact; [time] T, M,
// gamma; [picard] tol, max_iter, eta_trials, limit_fraction; [initial] kind,
// amp, slope, seed; [suite] name, trials, seed.  `#` starts a comment.
// Unknown sections or keys are rejected with the offending line number.
struct ParsedConfig {
    RunConfig run;
    SuiteOptions suite;     // grid/norm knobs mirrored + [suite] trials/seed
    std::string suite_name; // empty when no [suite] name was given
};

ParsedConfig parse_config_text(const std::string& text);
ParsedConfig parse_config_file(const std::string& path);

} // namespace flns
