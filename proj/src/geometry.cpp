#include "entroflow/geometry.hpp"

#include <cmath>
#include <sstream>

namespace entroflow {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

// --- Grid --------------------------------------------------------------

Grid::Grid(int dim, int points_per_dim, std::vector<double> periods)
    : dim_(dim), points_(points_per_dim), periods_(std::move(periods)) {
  if (dim_ < 1 || dim_ > kMaxDim)
    throw ConfigError("grid dimension must be in [1, " + std::to_string(kMaxDim) + "]");
  if (points_ < 8 || points_ % 2 != 0)
    throw ConfigError("points_per_dim must be an even integer >= 8");
  if (static_cast<int>(periods_.size()) != dim_)
    throw ConfigError("periods must list one length per dimension");
  for (double L : periods_)
    if (!(L > 0.0)) throw ConfigError("grid periods must be positive");

  size_ = 1;
  for (int a = 0; a < dim_; ++a) {
    strides_[a] = size_;
    size_ *= static_cast<std::size_t>(points_);
    if (size_ > (std::size_t{1} << 22))
      throw ConfigError("grid too large: points_per_dim^dim exceeds 2^22");
  }
}

double Grid::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < dim_; ++a) v *= spacing(a);
  return v;
}

double Grid::total_volume() const {
  double v = 1.0;
  for (int a = 0; a < dim_; ++a) v *= periods_[a];
  return v;
}

void Grid::point(std::size_t flat, std::span<double> out) const {
  for (int a = 0; a < dim_; ++a) {
    const std::size_t idx = (flat / strides_[a]) % static_cast<std::size_t>(points_);
    out[a] = static_cast<double>(idx) * spacing(a);
  }
}

// --- FlowSolution --------------------------------------------------------

FlowSolution FlowSolution::flat_torus(int n, double T, double tau_min) {
  FlowSolution f;
  f.kind = Kind::flat_torus;
  f.n = n;
  f.T = T;
  f.tau_min = tau_min;
  if (n < 1 || n > kMaxDim) throw ConfigError("flow dimension out of range");
  if (!(T > 0.0)) throw ConfigError("flow horizon T must be positive");
  if (!(tau_min > 0.0 && tau_min < T))
    throw ConfigError("tau_min must lie in (0, T)");
  return f;
}

FlowSolution FlowSolution::round_sphere(int n, double T, double tau_min, double a0) {
  FlowSolution f = flat_torus(n, T, tau_min);
  f.kind = Kind::round_sphere;
  f.sphere_a0 = a0;
  if (a0 < 0.0) throw ConfigError("sphere_a0 must be nonnegative");
  if (n == 1 && !(a0 > 0.0))
    throw ConfigError("a circle flow (n = 1) needs sphere_a0 > 0");
  return f;
}

double FlowSolution::scalar_curvature_value(double tau) const {
  if (kind == Kind::flat_torus) return 0.0;
  return n * (n - 1) / sphere_scale(tau);
}

double FlowSolution::scalar_curvature_rate(double tau) const {
  if (kind == Kind::flat_torus) return 0.0;
  const double a = sphere_scale(tau);
  return -n * (n - 1) * sphere_scale_rate() / (a * a);
}

void FlowSolution::require_tau(double tau) const {
  if (!(tau >= tau_min && tau <= T))
    throw RangeError("tau = " + fmt(tau) + " outside [" + fmt(tau_min) + ", " + fmt(T) + "]");
}

void FlowSolution::require_positive(double tau) const {
  if (!(tau > 0.0 && std::isfinite(tau)))
    throw RangeError("tau = " + fmt(tau) + " must be positive");
}

// --- Geometry ------------------------------------------------------------

Geometry::Geometry(FlowSolution flow, Grid grid)
    : flow_(flow), grid_(std::move(grid)) {
  if (flow_.is_sphere())
    throw ConfigError("a grid belongs to the flat torus, not the sphere");
  if (grid_->dim() != flow_.n)
    throw ConfigError("grid dimension does not match the flow dimension");
}

Geometry::Geometry(FlowSolution flow) : flow_(flow) {
  if (!flow_.is_sphere())
    throw ConfigError("the flat torus requires a grid");
}

const Grid& Geometry::grid() const {
  if (!grid_) throw RepresentationError("homogeneous manifold has no grid");
  return *grid_;
}

std::size_t Geometry::num_points() const {
  return grid_ ? grid_->size() : std::size_t{1};
}

void Geometry::point(std::size_t flat, std::span<double> out) const {
  if (grid_) {
    grid_->point(flat, out);
  } else {
    for (int a = 0; a < flow_.n; ++a) out[a] = 0.0;
  }
}

namespace {

TensorField metric_tensor(const FlowSolution& flow, double tau) {
  const int n = flow.n;
  TensorField g;
  g.tau = tau;
  g.dim = n;
  g.values.assign(static_cast<std::size_t>(n) * n, 0.0);
  const double diag = flow.is_sphere() ? flow.sphere_scale(tau) : 1.0;
  for (int i = 0; i < n; ++i) g.values[static_cast<std::size_t>(i) * n + i] = diag;
  return g;
}

TensorField ricci_tensor(const FlowSolution& flow, double tau) {
  const int n = flow.n;
  TensorField r;
  r.tau = tau;
  r.dim = n;
  r.values.assign(static_cast<std::size_t>(n) * n, 0.0);
  if (flow.is_sphere()) {
    // Ric(a g_unit) = (n-1) g_unit: scale-invariant in the unit frame.
    for (int i = 0; i < n; ++i)
      r.values[static_cast<std::size_t>(i) * n + i] = n - 1.0;
  }
  return r;
}

}  // namespace

TensorField Geometry::metric_at(double tau) const {
  flow_.require_tau(tau);
  return metric_tensor(flow_, tau);
}

TensorField Geometry::ricci_at(double tau) const {
  flow_.require_tau(tau);
  return ricci_tensor(flow_, tau);
}

ScalarField Geometry::scalar_curvature(double tau) const {
  flow_.require_tau(tau);
  return constant_field(tau, flow_.scalar_curvature_value(tau));
}

double unit_sphere_volume(double n) {
  return 2.0 * std::pow(M_PI, (n + 1.0) / 2.0) / std::tgamma((n + 1.0) / 2.0);
}

double Geometry::total_volume(double tau) const {
  if (flow_.is_sphere())
    return unit_sphere_volume(flow_.n) * std::pow(flow_.sphere_scale(tau), flow_.n / 2.0);
  return grid_->total_volume();
}

double Geometry::integrate_values(std::span<const double> values,
                                  double measure_tau) const {
  if (flow_.is_sphere()) {
    if (values.size() != 1)
      throw RepresentationError("sphere fields must be spatially constant");
    return values[0] * total_volume(measure_tau);
  }
  if (values.size() == 1) return values[0] * grid_->total_volume();
  if (values.size() != grid_->size())
    throw RepresentationError("field size does not match the grid");
  // Periodic trapezoid rule: plain sum times cell volume, fixed order.
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum * grid_->cell_volume();
}

double Geometry::integrate(const ScalarField& f) const {
  return integrate_values(f.values, f.tau);
}

// --- backward-flow validation ---------------------------------------------

namespace {

// Frame-normalized sup norm of g^{-1} X for small matrices (n <= kMaxDim),
// by Gaussian elimination with partial pivoting.
double normalized_sup(const TensorField& g, std::vector<double> x, int n) {
  std::vector<double> a(g.values);
  // Solve A Y = X columnwise; overwrite x with Y.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a[r * n + col]) > std::fabs(a[piv * n + col])) piv = r;
    if (piv != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a[col * n + c], a[piv * n + c]);
        std::swap(x[col * n + c], x[piv * n + c]);
      }
    }
    const double d = a[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      const double factor = a[r * n + col] / d;
      for (int c = 0; c < n; ++c) {
        a[r * n + c] -= factor * a[col * n + c];
        x[r * n + c] -= factor * x[col * n + c];
      }
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    const double d = a[col * n + col];
    for (int c = 0; c < n; ++c) x[col * n + c] /= d;
    for (int r = 0; r < col; ++r) {
      const double factor = a[r * n + col];
      for (int c = 0; c < n; ++c) x[r * n + c] -= factor * x[col * n + c];
    }
    for (int c = 0; c < n; ++c) a[col * n + c] /= d;
  }
  double sup = 0.0;
  for (double v : x) sup = std::max(sup, std::fabs(v));
  return sup;
}

}  // namespace

double backward_flow_residual(const std::function<TensorField(double)>& metric,
                              const std::function<TensorField(double)>& ricci,
                              std::span<const double> tau_samples) {
  double worst = 0.0;
  for (double tau : tau_samples) {
    const double h = 1e-5 * tau;
    const TensorField gp = metric(tau + h);
    const TensorField gm = metric(tau - h);
    const TensorField g = metric(tau);
    const TensorField ric = ricci(tau);
    const int n = g.dim;
    std::vector<double> x(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const std::size_t k = static_cast<std::size_t>(i) * n + j;
        x[k] = (gp.values[k] - gm.values[k]) / (2.0 * h) - 2.0 * ric.values[k];
      }
    worst = std::max(worst, normalized_sup(g, std::move(x), n));
  }
  return worst;
}

double Geometry::validate_backward_flow(std::span<const double> tau_samples) const {
  for (double tau : tau_samples) flow_.require_tau(tau);
  // Unchecked accessors: the centered stencil steps 1e-5*tau past the ends.
  auto metric = [this](double tau) { return metric_tensor(flow_, tau); };
  auto ricci = [this](double tau) { return ricci_tensor(flow_, tau); };
  return backward_flow_residual(metric, ricci, tau_samples);
}

}  // namespace entroflow
