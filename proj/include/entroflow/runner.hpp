#pragma once

#include <string>

#include "entroflow/config.hpp"
#include "entroflow/report.hpp"

namespace entroflow {

struct RunOptions {
  int threads = 0;           // 0 = hardware concurrency
  std::string out_dir;       // prefix for csv/summary paths when non-empty
  bool compute_dwn = true;   // dWN is the expensive column
};

/// Computes every (N, lambda) cell of the config, assembles rate fits and
/// verdicts, writes the CSV and summary files. The cell map is parallel yet
/// deterministic: each cell is sequential with fixed-order reductions and
/// rows are emitted in (N, lambda) order.
Report run_experiment(const ExperimentConfig& cfg, const RunOptions& opts);

/// run + file emission; returns the process exit code (0 ok, 2 config,
/// 3 numerical failure in any cell).
int run_command(const std::string& config_path, const RunOptions& opts);

/// Single-quantity sweep written as CSV (N, lambda, <quantity>).
int sweep_command(const std::string& config_path, const std::string& quantity,
                  const RunOptions& opts);

}  // namespace entroflow
