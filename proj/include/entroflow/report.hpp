#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entroflow/fitting.hpp"

namespace entroflow {

/// One (N, lambda) cell of a sweep. Cells that aborted carry the error
/// message and NaN data columns.
struct ReportRow {
  int N = 0;
  double lambda = 0.0;
  double A_N = 0.0;
  double rawA_N = 0.0;
  double V_N = 0.0;
  double W_N = 0.0;
  double W = 0.0;
  double dW = 0.0;
  double dWN = 0.0;
  double level_set_residual = 0.0;
  double potential_residual = 0.0;
  double tail_bound = 0.0;
  double max_abs_phi_minus_lambda = 0.0;
  std::string error;  // empty when the cell succeeded
};

struct FitVerdict {
  std::string name;
  double lambda = 0.0;
  double rate = 0.0;
  double limit = 0.0;
  double constant = 0.0;
  bool degenerate = false;  // ladder already converged; counts as pass
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<ReportRow> rows;
  std::vector<FitVerdict> fits;
  bool all_cells_ok = true;
  bool all_fits_pass = true;
};

/// Fixed column order:
/// N,lambda,A_N,rawA_N,V_N,W_N,W,dW,dWN,level_set_residual,
/// potential_residual,tail_bound
std::string report_csv(const Report& report);
std::string report_summary_json(const Report& report);

void write_file(const std::string& path, const std::string& contents);

}  // namespace entroflow
