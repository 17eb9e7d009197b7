#ifndef MIRLAT_QUANT_KERNELS_HPP_
#define MIRLAT_QUANT_KERNELS_HPP_

// Grid kernels behind the flat-torus verifier. Every kernel exists as a serial
// reference and an OpenMP version; both evaluate each output element with the
// same scalar routine, so their results are bitwise identical regardless of
// thread count or scheduling.

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace mirlat::quant {

struct TorusModel;

namespace kernels {

using cplx = std::complex<double>;
using Point2 = std::array<double, 2>;

// ∫_{D_t} k·ω over D_t = [0,t] × S¹ by 2D Gauss–Legendre quadrature of the
// level-k area form in Cartesian coordinates (normalized to total area 1).
double disc_area(const TorusModel& M, double t);

// Phase of the holonomy character, arg exp(2πi ∫_{D_t} kω) ∈ (−π, π].
void holonomy_args_serial(const TorusModel& M, std::span<const double> ts, std::span<double> out);
void holonomy_args_parallel(const TorusModel& M, std::span<const double> ts,
                            std::span<double> out);

// Truncation radius N for the level-k theta series: exp(−π·Im τ·N²/k) < 1e−14.
int theta_truncation(const TorusModel& M);

// Row-major k × points.size() matrix of the normalized level-k theta functions
// θ_c(z)·exp(−πk·Im τ·y²), z = x + yτ, characteristics c = 0..k−1.
std::vector<cplx> theta_values_serial(const TorusModel& M, std::span<const Point2> pts);
std::vector<cplx> theta_values_parallel(const TorusModel& M, std::span<const Point2> pts);

// Unit tangent direction at each distinct sample of a closed curve given in
// lattice coordinates, by periodic central differences; sign flipped when
// reversed. Throws InvalidArgument on a degenerate tangent.
std::vector<cplx> tangent_serial(const TorusModel& M, std::span<const Point2> pts, bool reversed);
std::vector<cplx> tangent_parallel(const TorusModel& M, std::span<const Point2> pts,
                                   bool reversed);

} // namespace kernels
} // namespace mirlat::quant

#endif
