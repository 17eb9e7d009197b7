#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mirlat/error.hpp"
#include "mirlat/quant.hpp"
#include "mirlat/quant_kernels.hpp"

using namespace mirlat;
using namespace mirlat::quant;

namespace {

constexpr double kPi = std::numbers::pi;

const cplx kTaus[] = {{0.0, 1.0}, {0.5, 1.0}, {0.0, 2.0}};

} // namespace

TEST_CASE("torus and curve validation") {
  CHECK_THROWS_AS(make_torus({0.0, 0.0}, 1), Error);
  CHECK_THROWS_AS(make_torus({0.0, -1.0}, 1), Error);
  CHECK_THROWS_AS(make_torus({0.0, 1.0}, 0), Error);
  std::vector<std::array<double, 2>> few(8, {0.0, 0.0});
  CHECK_THROWS_AS(make_curve(few), Error);
  std::vector<std::array<double, 2>> open;
  for (int i = 0; i <= 20; ++i)
    open.push_back({0.01 * i, 0.0});
  CHECK_THROWS_AS(make_curve(open), Error);
  // closure modulo the lattice is accepted
  std::vector<std::array<double, 2>> wrap;
  for (int i = 0; i <= 20; ++i)
    wrap.push_back({i / 20.0, 0.0});
  CHECK_NOTHROW(make_curve(wrap));
}

TEST_CASE("holonomy character") {
  const TorusModel M1 = make_torus({0.0, 1.0}, 1);
  CHECK(std::abs(holonomy_character(M1, 0.0) - cplx(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(holonomy_character(make_torus({0.0, 1.0}, 3), 1.0 / 3.0) - cplx(1.0, 0.0)) <
        1e-9);
  // exp(2πi·2·¼)
  CHECK(std::abs(holonomy_character(make_torus({0.0, 1.0}, 2), 0.25) - cplx(-1.0, 0.0)) < 1e-9);
  CHECK(std::abs(holonomy_character(make_torus({0.0, 1.0}, 1), 0.25) - cplx(0.0, 1.0)) < 1e-9);
  CHECK_THROWS_AS(holonomy_character(M1, 1.0), Error);
  CHECK_THROWS_AS(holonomy_character(M1, -0.1), Error);
  for (const cplx& tau : kTaus)
    for (int k = 1; k <= 50; k += 7)
      for (int i = 0; i < 20; ++i) {
        const double t = i / 20.0 + 0.013;
        CHECK(holonomy_discrepancy(make_torus(tau, k), t) < kQuadratureTol);
      }
}

TEST_CASE("Bohr-Sommerfeld fibres by root finding") {
  const TorusModel M1 = make_torus({0.0, 1.0}, 1);
  auto r = find_bs_fibres(M1, 1e-10);
  REQUIRE(r.size() == 1);
  CHECK(std::abs(r[0]) < 1e-9);
  r = find_bs_fibres(make_torus({0.0, 1.0}, 3), 1e-10);
  REQUIRE(r.size() == 3);
  for (int j = 0; j < 3; ++j)
    CHECK(std::abs(r[j] - j / 3.0) < 1e-9);
  for (const cplx& tau : kTaus) {
    r = find_bs_fibres(make_torus(tau, 12), 1e-10);
    REQUIRE(r.size() == 12);
    for (int j = 0; j < 12; ++j)
      CHECK(std::abs(r[j] - j / 12.0) < 1e-9);
  }
  CHECK_THROWS_AS(find_bs_fibres(M1, 1e-3), Error);
  CHECK_THROWS_AS(find_bs_fibres(M1, 0.0), Error);
}

TEST_CASE("phase map") {
  const TorusModel M = make_torus({0.0, 1.0}, 1);
  const auto diag = phase_map_curve(M, line_curve(1, 1, 200));
  CHECK(phase_deviation(diag) < 1e-12);

  // slope 2/3: every tangent is (3 + 2i)/|3 + 2i|, squared
  const auto sl = phase_map_curve(M, line_curve(3, 2, 300));
  CHECK(phase_deviation(sl) < 1e-12);
  const cplx want = std::polar(1.0, 2.0 * std::atan2(2.0, 3.0));
  for (const auto& z : sl)
    CHECK(std::abs(z - want) < 1e-12);

  const ParamCurve circle = circle_curve({0.5, 0.5}, 0.1, 256);
  const auto ph = phase_map_curve(M, circle);
  CHECK(phase_deviation(ph) > 0.5);
  CHECK(winding_number(tangent_directions(M, circle)) == 1);
  CHECK(winding_number(ph) == 2);
  ParamCurve back = circle;
  back.reversed = true;
  CHECK(winding_number(tangent_directions(M, back)) == 1);

  // a reversed line keeps its phase: the square kills the sign
  ParamCurve rl = line_curve(1, 2, 100);
  const auto fwd = phase_map_curve(M, rl);
  rl.reversed = true;
  const auto rev = phase_map_curve(M, rl);
  CHECK(std::abs(fwd[0] - rev[0]) < 1e-15);

  // sheared lattice: the tangent is dx + dy·τ
  const TorusModel S = make_torus({0.5, 1.0}, 1);
  const auto sh = phase_map_curve(S, line_curve(0, 1, 64));
  CHECK(std::abs(sh[0] - std::polar(1.0, 2.0 * std::arg(cplx(0.5, 1.0)))) < 1e-12);
}

TEST_CASE("theta functions: leading Fourier coefficients") {
  // At y = 0, θ_c(x) = Σ_{m ≡ c (k)} exp(πiτ m²/k) e^{2πimx}: the k × k block of
  // coefficients at frequencies 0..k−1 is diagonal with |a_c| = exp(−π Im τ c²/k).
  constexpr int J = 64;
  for (const cplx& tau : kTaus)
    for (int k = 1; k <= 8; ++k) {
      const TorusModel M = make_torus(tau, k);
      std::vector<kernels::Point2> pts;
      for (int j = 0; j < J; ++j)
        pts.push_back({static_cast<double>(j) / J, 0.0});
      const auto vals = kernels::theta_values_serial(M, pts);
      for (int c = 0; c < k; ++c)
        for (int f = 0; f < k; ++f) {
          cplx coef = 0.0;
          for (int j = 0; j < J; ++j)
            coef += vals[static_cast<std::size_t>(c) * J + j] * std::polar(1.0, -2.0 * kPi * f * j / J);
          coef /= static_cast<double>(J);
          if (f == c) {
            const cplx want = std::exp(cplx(0.0, kPi) * tau * static_cast<double>(c * c) / static_cast<double>(k));
            CAPTURE(k);
            CAPTURE(c);
            CHECK(std::abs(coef - want) < 1e-12);
          } else {
            CHECK(std::abs(coef) < 1e-12);
          }
        }
      CHECK(theta_basis_rank(M, 8 * k).rank == k);
    }
}

TEST_CASE("theta rank") {
  CHECK(theta_basis_rank(make_torus({0.0, 1.0}, 1), 4).rank == 1);
  CHECK(theta_basis_rank(make_torus({0.0, 1.0}, 4), 32).rank == 4);
  CHECK_THROWS_AS(theta_basis_rank(make_torus({0.0, 1.0}, 4), 15), Error);
  const auto r = theta_basis_rank(make_torus({0.5, 1.0}, 6), 48);
  REQUIRE(r.singular_values.size() == 6);
  CHECK(r.singular_values.back() > kRankThreshold * r.singular_values.front());
  // the truncation radius covers exp(−π Im τ N²/k) < 1e−14
  for (int k = 1; k <= 8; ++k) {
    const TorusModel M = make_torus({0.0, 1.0}, k);
    const int N = kernels::theta_truncation(M);
    CHECK(std::exp(-kPi * N * N / k) < 1e-14);
    CHECK(std::exp(-kPi * (N - 2) * (N - 2) / k) >= 1e-14);
  }
}

TEST_CASE("special coordinates") {
  const TorusModel M = make_torus({0.0, 1.0}, 1);
  CHECK(special_coordinates(M, 0.0) == 1.0);
  CHECK(std::abs(special_coordinates(M, 0.5) - std::exp(-kPi)) < 1e-12);
  CHECK(special_coordinates(M, 0.2) > special_coordinates(M, 0.7));
  double prev = 2.0;
  for (int i = 0; i < 100; ++i) {
    const double u = special_coordinates(M, i / 100.0);
    CHECK(u < prev);
    prev = u;
  }
}
