#include "mirlat/quant_kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "mirlat/error.hpp"
#include "mirlat/quant.hpp"

namespace mirlat::quant::kernels {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr unsigned kGaussPoints = 20;
using Gauss = boost::math::quadrature::gauss<double, kGaussPoints>;

double holonomy_arg(const TorusModel& M, double t) {
  return std::arg(std::polar(1.0, kTwoPi * disc_area(M, t)));
}

// θ_c(z)·exp(−πk Im τ y²) for z = x + yτ
cplx theta_value(const TorusModel& M, int c, double x, double y, int N) {
  const int k = M.level;
  const double im_tau = M.tau.imag();
  const double ky = k * y;
  // m ≡ c (mod k) with |m + ky| <= N
  const long lo = static_cast<long>(std::ceil(-ky - N));
  const long hi = static_cast<long>(std::floor(-ky + N));
  long first = lo + (((c - lo) % k) + k) % k;
  cplx sum = 0.0;
  for (long m = first; m <= hi; m += k) {
    const double md = static_cast<double>(m);
    const double shifted = md + ky;
    const double modulus = -std::numbers::pi * im_tau * shifted * shifted / k;
    const double phase = std::numbers::pi * M.tau.real() * md * md / k +
                         kTwoPi * md * (x + y * M.tau.real());
    sum += std::polar(std::exp(modulus), phase);
  }
  return sum;
}

double wrap_half(double d) { return d - std::round(d); }

cplx tangent_at(const TorusModel& M, std::span<const Point2> pts, std::size_t n, std::size_t i,
                bool reversed) {
  const Point2& prev = pts[(i + n - 1) % n];
  const Point2& next = pts[(i + 1) % n];
  const double dx = wrap_half(next[0] - prev[0]);
  const double dy = wrap_half(next[1] - prev[1]);
  const cplx dz = dx + dy * M.tau;
  const double len = std::abs(dz);
  if (!(len > 1e-14))
    fail(ErrorKind::InvalidArgument, "degenerate tangent at sample " + std::to_string(i));
  return reversed ? -dz / len : dz / len;
}

std::size_t distinct_samples(std::span<const Point2> pts) {
  // the closing point repeats the first one
  return pts.empty() ? 0 : pts.size() - 1;
}

} // namespace

double disc_area(const TorusModel& M, double t) {
  if (t == 0.0)
    return 0.0;
  // (x, y) -> x + yτ has Jacobian Im τ; the unit-area form has density 1/Im τ.
  const double jac = M.tau.imag();
  const double density = M.level / M.tau.imag();
  auto inner = [&](double) {
    return Gauss::integrate([&](double) { return density * jac; }, 0.0, 1.0);
  };
  return Gauss::integrate(inner, 0.0, t);
}

void holonomy_args_serial(const TorusModel& M, std::span<const double> ts, std::span<double> out) {
  for (std::size_t i = 0; i < ts.size(); ++i)
    out[i] = holonomy_arg(M, ts[i]);
}

void holonomy_args_parallel(const TorusModel& M, std::span<const double> ts,
                            std::span<double> out) {
  const long n = static_cast<long>(ts.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i)
    out[i] = holonomy_arg(M, ts[i]);
}

int theta_truncation(const TorusModel& M) {
  // exp(−π Im τ N²/k) < 1e−14  <=>  N > sqrt(14 ln 10 · k / (π Im τ))
  const double bound = std::sqrt(14.0 * std::log(10.0) * M.level /
                                 (std::numbers::pi * M.tau.imag()));
  return static_cast<int>(std::floor(bound)) + 1;
}

std::vector<cplx> theta_values_serial(const TorusModel& M, std::span<const Point2> pts) {
  const int k = M.level, N = theta_truncation(M);
  const std::size_t s = pts.size();
  std::vector<cplx> out(static_cast<std::size_t>(k) * s);
  for (int c = 0; c < k; ++c)
    for (std::size_t j = 0; j < s; ++j)
      out[c * s + j] = theta_value(M, c, pts[j][0], pts[j][1], N);
  return out;
}

std::vector<cplx> theta_values_parallel(const TorusModel& M, std::span<const Point2> pts) {
  const int k = M.level, N = theta_truncation(M);
  const long s = static_cast<long>(pts.size());
  std::vector<cplx> out(static_cast<std::size_t>(k) * s);
#pragma omp parallel for collapse(2) schedule(static)
  for (int c = 0; c < k; ++c)
    for (long j = 0; j < s; ++j)
      out[c * s + j] = theta_value(M, c, pts[j][0], pts[j][1], N);
  return out;
}

std::vector<cplx> tangent_serial(const TorusModel& M, std::span<const Point2> pts, bool reversed) {
  const std::size_t n = distinct_samples(pts);
  std::vector<cplx> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = tangent_at(M, pts, n, i, reversed);
  return out;
}

std::vector<cplx> tangent_parallel(const TorusModel& M, std::span<const Point2> pts,
                                   bool reversed) {
  const std::size_t n = distinct_samples(pts);
  std::vector<cplx> out(n);
  std::vector<char> bad(n, 0);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    try {
      out[i] = tangent_at(M, pts, n, static_cast<std::size_t>(i), reversed);
    } catch (const Error&) {
      bad[i] = 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bad[i])
      fail(ErrorKind::InvalidArgument, "degenerate tangent at sample " + std::to_string(i));
  return out;
}

} // namespace mirlat::quant::kernels
