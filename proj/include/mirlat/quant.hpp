#ifndef MIRLAT_QUANT_HPP_
#define MIRLAT_QUANT_HPP_

// Floating-point verification on flat-torus models C = ℂ/(ℤ ⊕ τℤ) with the
// area form normalized to total area 1 and a prequantum line bundle of level
// k. Points are written in lattice coordinates (x, y) ↦ x + yτ; the real
// polarization has fibres {x = t}.
//
// Tolerances: 1e−11 quadrature vs closed form, 1e−9 root finding, 1e−8 rank.

#include <array>
#include <complex>
#include <vector>

namespace mirlat::quant {

using cplx = std::complex<double>;

inline constexpr double kQuadratureTol = 1e-11;
inline constexpr double kHolonomyConsistencyTol = 1e-9;
inline constexpr double kRootTol = 1e-9;
inline constexpr double kRankThreshold = 1e-8;

struct TorusModel {
  cplx tau{0.0, 1.0};
  int level = 1;
};

// Throws InvalidArgument unless Im τ > 0 and level >= 1.
TorusModel make_torus(cplx tau, int level);

// exp(2πi ∫_{D_t} kω), evaluated by quadrature. Throws Consistency if the
// quadrature differs from exp(2πikt) by more than 1e−9.
cplx holonomy_character(const TorusModel& M, double t);
// |quadrature − closed form| at t.
double holonomy_discrepancy(const TorusModel& M, double t);

// Points t ∈ [0,1) where the holonomy character is 1, by a grid scan of its
// argument plus bisection to width tol ∈ (0, 1e−6]. Throws Consistency if the
// number found differs from the level.
std::vector<double> find_bs_fibres(const TorusModel& M, double tol);

struct ParamCurve {
  std::vector<std::array<double, 2>> points;   // closed: last ≡ first mod ℤ²
  bool reversed = false;
};
// Validates >= 16 samples and closure within 1e−12 (modulo the lattice).
ParamCurve make_curve(std::vector<std::array<double, 2>> points, bool reversed = false);
ParamCurve line_curve(long r, long d, int samples);
ParamCurve circle_curve(std::array<double, 2> center, double radius, int samples);

// Phase-map values: the squared unit tangent, one per distinct sample.
std::vector<cplx> phase_map_curve(const TorusModel& M, const ParamCurve& c);
std::vector<cplx> tangent_directions(const TorusModel& M, const ParamCurve& c);
// Net number of turns of a cyclic sequence of unit complex numbers.
long winding_number(const std::vector<cplx>& loop);
// sqrt(mean |z − mean z|²)
double phase_deviation(const std::vector<cplx>& values);

struct ThetaRank {
  int rank = 0;
  std::vector<double> singular_values;
};
// Numerical rank of the k × samples matrix of level-k theta functions with
// characteristics; samples >= 4k. Throws Consistency (with singular values in
// the message) when the rank falls below k.
ThetaRank theta_basis_rank(const TorusModel& M, int samples);
// Sample points used by theta_basis_rank.
std::vector<std::array<double, 2>> theta_sample_points(int samples);

// u(t) = exp(−2π ∫_{D_t} kω)
double special_coordinates(const TorusModel& M, double t);

} // namespace mirlat::quant

#endif
