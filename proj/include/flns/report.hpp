#pragma once
#include <string>

#include "flns/solver.hpp"
#include "flns/verify.hpp"

namespace flns {

// Report emission: CSV for plotting, JSON for programmatic checks.  All
// floating-point values are written with 17 significant digits so parsing
// them back reproduces the exact doubles.

std::string trajectory_csv(const SolveReport& rep);
std::string solve_report_json(const SolveReport& rep);
std::string suite_csv(const SuiteResult& res);
std::string suite_json(const SuiteResult& res);

void write_text_file(const std::string& path, const std::string& content);

// Writes trajectory.csv + report.json (solve) or suite.csv + report.json
// (suite) into dir, creating it if needed.
void emit_solve_report(const SolveReport& rep, const std::string& dir);
void emit_suite_report(const SuiteResult& res, const std::string& dir);

} // namespace flns
