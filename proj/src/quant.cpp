#include "mirlat/quant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include <Eigen/SVD>

#include "mirlat/error.hpp"
#include "mirlat/quant_kernels.hpp"

namespace mirlat::quant {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_unit_interval(double t) {
  if (!(t >= 0.0 && t < 1.0))
    fail(ErrorKind::InvalidArgument, "fibre position t = " + std::to_string(t) +
                                         " outside [0,1)");
}

double holonomy_arg(const TorusModel& M, double t) {
  double out;
  kernels::holonomy_args_serial(M, std::span<const double>(&t, 1), std::span<double>(&out, 1));
  return out;
}

} // namespace

TorusModel make_torus(cplx tau, int level) {
  if (!(tau.imag() > 0.0))
    fail(ErrorKind::InvalidArgument, "torus modulus needs Im(tau) > 0");
  if (level < 1)
    fail(ErrorKind::InvalidArgument, "level must be >= 1, got " + std::to_string(level));
  return {tau, level};
}

double holonomy_discrepancy(const TorusModel& M, double t) {
  require_unit_interval(t);
  const cplx quad = std::polar(1.0, kTwoPi * kernels::disc_area(M, t));
  const cplx closed = std::polar(1.0, kTwoPi * M.level * t);
  return std::abs(quad - closed);
}

cplx holonomy_character(const TorusModel& M, double t) {
  require_unit_interval(t);
  const cplx quad = std::polar(1.0, kTwoPi * kernels::disc_area(M, t));
  const cplx closed = std::polar(1.0, kTwoPi * M.level * t);
  if (std::abs(quad - closed) > kHolonomyConsistencyTol)
    fail(ErrorKind::Consistency, "holonomy quadrature disagrees with exp(2 pi i k t) at t = " +
                                     std::to_string(t));
  return quad;
}

std::vector<double> find_bs_fibres(const TorusModel& M, double tol) {
  if (!(tol > 0.0 && tol <= 1e-6))
    fail(ErrorKind::InvalidArgument, "tolerance must lie in (0, 1e-6]");
  const int k = M.level;
  const std::size_t n = 16 * static_cast<std::size_t>(k);
  std::vector<double> grid(n + 1), args(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    grid[i] = static_cast<double>(i) / static_cast<double>(n);
  kernels::holonomy_args_parallel(M, grid, args);

  std::vector<double> roots;
  for (std::size_t i = 0; i < n; ++i) {
    if (args[i] == 0.0) {
      roots.push_back(grid[i]);
      continue;
    }
    // a zero of the argument, not the branch jump at ±π
    if (!(args[i] < 0.0 && args[i + 1] > 0.0 && args[i + 1] - args[i] < std::numbers::pi))
      continue;
    double a = grid[i], b = grid[i + 1];
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      const double f = holonomy_arg(M, mid);
      if (f == 0.0) {
        a = b = mid;
        break;
      }
      (f < 0.0 ? a : b) = mid;
    }
    roots.push_back(0.5 * (a + b));
  }
  // a root just below 1 is the root at 0
  for (auto& r : roots)
    if (r >= 1.0 - tol)
      r = 0.0;
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [&](double x, double y) { return std::abs(x - y) <= tol; }),
              roots.end());
  if (static_cast<int>(roots.size()) != k)
    fail(ErrorKind::Consistency, "found " + std::to_string(roots.size()) +
                                     " Bohr-Sommerfeld fibres at level " + std::to_string(k));
  return roots;
}

ParamCurve make_curve(std::vector<std::array<double, 2>> points, bool reversed) {
  if (points.size() < 16)
    fail(ErrorKind::InvalidArgument, "curve needs at least 16 samples, got " +
                                         std::to_string(points.size()));
  const auto& a = points.front();
  const auto& b = points.back();
  for (int i = 0; i < 2; ++i) {
    const double d = b[i] - a[i];
    if (std::abs(d - std::round(d)) > 1e-12)
      fail(ErrorKind::InvalidArgument, "curve is not closed (last sample differs from first)");
  }
  return {std::move(points), reversed};
}

ParamCurve line_curve(long r, long d, int samples) {
  std::vector<std::array<double, 2>> pts;
  pts.reserve(static_cast<std::size_t>(samples) + 1);
  for (int i = 0; i <= samples; ++i) {
    const double s = static_cast<double>(i) / samples;
    double x = r * s, y = d * s;
    pts.push_back({x - std::floor(x), y - std::floor(y)});
  }
  return make_curve(std::move(pts));
}

ParamCurve circle_curve(std::array<double, 2> center, double radius, int samples) {
  std::vector<std::array<double, 2>> pts;
  pts.reserve(static_cast<std::size_t>(samples) + 1);
  for (int i = 0; i < samples; ++i) {
    const double th = kTwoPi * i / samples;
    pts.push_back({center[0] + radius * std::cos(th), center[1] + radius * std::sin(th)});
  }
  pts.push_back(pts.front());
  return make_curve(std::move(pts));
}

std::vector<cplx> tangent_directions(const TorusModel& M, const ParamCurve& c) {
  return kernels::tangent_parallel(M, c.points, c.reversed);
}

std::vector<cplx> phase_map_curve(const TorusModel& M, const ParamCurve& c) {
  std::vector<cplx> v = tangent_directions(M, c);
  for (auto& z : v)
    z *= z;
  return v;
}

long winding_number(const std::vector<cplx>& loop) {
  if (loop.empty())
    return 0;
  double total = 0.0;
  for (std::size_t i = 0; i < loop.size(); ++i)
    total += std::arg(loop[(i + 1) % loop.size()] / loop[i]);
  return std::lround(total / kTwoPi);
}

double phase_deviation(const std::vector<cplx>& values) {
  if (values.empty())
    return 0.0;
  cplx mean = 0.0;
  for (const auto& z : values)
    mean += z;
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (const auto& z : values)
    var += std::norm(z - mean);
  return std::sqrt(var / static_cast<double>(values.size()));
}

std::vector<std::array<double, 2>> theta_sample_points(int samples) {
  // x on a midpoint grid, y on a golden-ratio sequence: distinct points spread
  // over the fundamental domain.
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  std::vector<std::array<double, 2>> pts(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const double y = (j + 0.5) * phi;
    pts[j] = {(j + 0.5) / samples, y - std::floor(y)};
  }
  return pts;
}

ThetaRank theta_basis_rank(const TorusModel& M, int samples) {
  const int k = M.level;
  if (samples < 4 * k)
    fail(ErrorKind::InvalidArgument, "theta rank needs at least 4k = " + std::to_string(4 * k) +
                                         " samples, got " + std::to_string(samples));
  const auto pts = theta_sample_points(samples);
  const std::vector<cplx> vals = kernels::theta_values_parallel(M, pts);
  Eigen::MatrixXcd A(k, samples);
  for (int c = 0; c < k; ++c)
    for (int j = 0; j < samples; ++j)
      A(c, j) = vals[static_cast<std::size_t>(c) * samples + j];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
  const Eigen::VectorXd& sv = svd.singularValues();
  ThetaRank r;
  r.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double top = sv.size() ? sv(0) : 0.0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > kRankThreshold * top)
      ++r.rank;
  if (r.rank < k) {
    std::ostringstream msg;
    msg << "theta value matrix has rank " << r.rank << " < " << k << "; singular values:";
    for (double s : r.singular_values)
      msg << ' ' << s;
    fail(ErrorKind::Consistency, msg.str());
  }
  return r;
}

double special_coordinates(const TorusModel& M, double t) {
  require_unit_interval(t);
  return std::exp(-kTwoPi * kernels::disc_area(M, t));
}

} // namespace mirlat::quant
