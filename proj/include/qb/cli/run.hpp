#pragma once

#include <string>
#include <vector>

#include "qb/cli/config.hpp"
#include "qb/cli/report.hpp"

namespace qb::cli {

struct RunResult {
    int exit_code = 0;  // 0 ok, 1 a check failed, 2 bad input, 3 I/O
    std::vector<std::string> files;
    std::string message;
};

/// Executes the configured tasks and writes reports plus manifest.json under config.out.
RunResult run(const JobConfig& config);

/// The report of a run without touching the filesystem; the manifest is the last document.
Report build_report(const JobConfig& config, int& exit_code);

}  // namespace qb::cli
