#pragma once

#include <string>
#include <vector>

#include "gravfock/config.h"
#include "gravfock/report.h"

namespace gravfock {

/// ccr, car, gauge, kinematics, fock, gravlimit, propagators, lsz, unitarity.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

/// Runs one suite, or every suite for "all". Cases are named "<suite>/<case>"
/// and sorted by name. Exact cases ignore cfg.tolerance; numeric cases use it.
/// Throws ConfigError for an unknown suite or an invalid cfg.
Report run_suite(const std::string& name, const RunConfig& cfg);

}  // namespace gravfock
