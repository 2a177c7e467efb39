#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entroflow/geometry.hpp"
#include "entroflow/potential.hpp"

namespace entroflow {

struct FlowConfig {
  std::string kind = "flat_torus";  // or "round_sphere"
  int n = 1;
  double T = 2.0;
  double tau_min = 0.1;
  double sphere_a0 = 0.0;
  std::vector<double> periods;  // torus only
  int points_per_dim = 256;     // torus only
};

struct PotentialConfig {
  std::string kind = "constant_in_space";  // or "torus_spectral"
  double c = 0.0;                          // constant_in_space
  double base = 1.0;                       // torus_spectral offset A
  struct ModeConfig {
    double amplitude = 0.0;
    std::vector<int> wave;
  };
  std::vector<ModeConfig> modes;
  double decay_scale = 1.0;  // != 1 only as a deliberate negative control
};

/// Acceptance windows and caps; every threshold the verdicts use lives here,
/// not in code.
struct Tolerances {
  double rate_area_lo = 0.9, rate_area_hi = 1.1;
  double rate_volume_taylor_lo = 1.7, rate_volume_taylor_hi = 2.3;
  double rate_wn_lo = 0.8, rate_wn_hi = 1.2;
  double rate_level_set_lo = 0.9, rate_level_set_hi = 1.1;
  double rate_wn_soliton_min = 0.8;
  double rate_grad_b_leading_min = 0.9;
  double richardson_tol = 1e-6;
  double entropy_w_tol = 1e-10;
  double entropy_dw_tol = 1e-8;
  double entropy_fd_tol = 1e-6;
  double soliton_null_tol = 1e-10;
  double level_set_residual_cap = 1e-12;
  double potential_residual_cap = 1e-9;
  double tail_rel_cap = 1e-12;
  double derivative_match_floor = 1e-4;
  double hat_h_variation = 0.25;
  double b2_variation = 0.30;
  double negligible_floor = 1e-8;  // N*sup below this counts as identically 0
  double reduction_rel_tol = 1e-10;
};

struct ExperimentConfig {
  FlowConfig flow;
  PotentialConfig potential;
  std::vector<int> N_ladder;  // geometric, entries >= 8
  std::vector<double> lambda_grid;
  double lambda0_fraction = 0.5;
  Tolerances tolerances;
  std::string csv_path = "report.csv";
  std::string summary_path = "summary.json";
};

/// Parse + validate; ConfigError with a field-level message on any problem.
ExperimentConfig load_experiment_config(const std::string& path);
ExperimentConfig parse_experiment_config(const std::string& json_text);
void validate(const ExperimentConfig& cfg);

/// Instantiate the model objects described by a config.
Geometry make_geometry(const FlowConfig& cfg);
PotentialSolution make_potential(const PotentialConfig& cfg);

}  // namespace entroflow
