#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "entroflow/config.hpp"
#include "entroflow/nspace.hpp"

namespace entroflow {

/// The three canonical (flow, potential) pairs the verification suite runs:
/// flat torus with the constant-in-space potential, the expanding-soliton
/// round sphere with f == 1, and the single-mode spectral torus.
struct AcceptanceConfig {
  FlowConfig torus_flow;
  PotentialConfig torus_constant;
  FlowConfig sphere_flow;
  PotentialConfig sphere_soliton;
  FlowConfig spectral_flow;  // carries the grid used by the spectral pair
  PotentialConfig torus_spectral;
  std::vector<int> N_ladder;
  std::vector<double> lambda_grid;
  double lambda0_fraction = 0.5;
  Tolerances tolerances;
};

AcceptanceConfig default_acceptance_config();
AcceptanceConfig load_acceptance_config(const std::string& path);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the ten verification criteria, printing one PASS/FAIL line per
/// criterion to `out` as they complete. threads parallelizes the heavy
/// ladder sweeps without affecting any value.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg,
                                            std::ostream& out, int threads = 0);

bool all_pass(const std::vector<CriterionResult>& results);

/// verify subcommand: exit 0 iff every criterion passes, 1 otherwise
/// (2/3 for config/numerical errors, as with run).
int verify_command(const std::string& config_path, int threads);

/// Literal evaluation of the area functional straight from its definition:
/// explicit c_N with the Gamma-function sphere volume, explicit s^{m-1},
/// explicit pullback area element (2 N phi)^{N/2} * correction. Only
/// representable in doubles for N <= ~100; the log-domain production path
/// must agree with it to 1e-10 relative. Lives here, not in nspace, so the
/// production path cannot share its arithmetic.
double literal_area_n(const Geometry& geom, const PotentialEvaluator& f,
                      const nspace::NSpaceContext& ctx);

}  // namespace entroflow
