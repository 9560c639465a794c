#pragma once

#include <ostream>
#include <string>

#include "config.hpp"

namespace legspec::cli
{

/// Each returns the process exit code; errors propagate as exceptions.
int run_solve(const RunConfig& config, std::ostream& out);
int run_diagnose(const RunConfig& config, std::ostream& out);
/// table: "2", "4", "5", "toy" or "nmr".
int run_reproduce(const std::string& table, const RunConfig& config, std::ostream& out);

} // namespace legspec::cli
