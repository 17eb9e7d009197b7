#include <doctest.h>

#include <algorithm>
#include <random>

#include "mirlat/error.hpp"
#include "mirlat/k3.hpp"

using namespace mirlat;
using namespace mirlat::k3;

namespace {

K3Descriptor quartic() { return make_descriptor("quartic", {{4}}); }
K3Descriptor degree2() { return make_descriptor("degree2", {{2}}); }
K3Descriptor elliptic() {
  return make_descriptor("elliptic", {{0, 1}, {1, -2}}, {{0, 1}}, Fibration{24});
}

} // namespace

TEST_CASE("descriptor invariants") {
  CHECK(euler_characteristic() == 24);
  CHECK_NOTHROW(elliptic());
  CHECK_THROWS_AS(make_descriptor("bad-root", {{4}}, {{1}}), Error);
  CHECK_THROWS_AS(make_descriptor("bad-fibration", {{0, 1}, {1, -2}}, {}, Fibration{12}), Error);
  CHECK_THROWS_AS(make_descriptor("odd", {{1}}), Error);
}

TEST_CASE("Mukai vectors on K3") {
  const K3Descriptor S = quartic();
  CHECK(mukai2(GradedVector::unit(S.ring), S).graded() == GradedVector::surface(1, {0}, 1));
  CHECK(mukai2(GradedVector::point(S.ring), S).graded() == GradedVector::point(S.ring));
  CHECK(mukai2(GradedVector::surface(2, {1}, -1), S).graded() == GradedVector::surface(2, {1}, 1));
}

TEST_CASE("Riemann-Roch pairing") {
  const K3Descriptor S = quartic();
  const GradedVector O = GradedVector::unit(S.ring);
  CHECK(euler_pairing2(O, O, S) == 2);
  const K3Descriptor D = degree2();
  // ch E = (1, H, 0), H² = 2: m = (1, H, 1), m* = (1, −H, 1), pairing 1 − 2 + 1
  const GradedVector E = GradedVector::surface(1, {1}, 0);
  CHECK(euler_pairing2(E, E, D) == 0);

  std::mt19937_64 g(29);
  std::uniform_int_distribution<int> small(-6, 6);
  const K3Descriptor X = elliptic();
  for (int i = 0; i < 1000; ++i) {
    const GradedVector a = GradedVector::surface(small(g), {small(g), small(g)}, small(g));
    const GradedVector b = GradedVector::surface(small(g), {small(g), small(g)}, small(g));
    CHECK(euler_pairing2(a, b, X) == euler_pairing2(b, a, X));
  }
}

TEST_CASE("moduli dimension") {
  const K3Descriptor S = quartic();
  CHECK(moduli_dim2(GradedVector::unit(S.ring), S) == 0);
  CHECK(moduli_dim2(GradedVector::surface(1, {1}, 0), degree2()) == 2);
  CHECK(moduli_dim2(GradedVector::surface(2, {0}, -2), S) == 2);
  CHECK_THROWS_AS(moduli_dim2(GradedVector::surface(1, {0}, frac(1, 2)), S), Error);
}

TEST_CASE("mirror of line bundles") {
  const K3Descriptor Q = quartic(), D = degree2();
  K3MirrorClass m = mirror_k3({0}, Q);
  CHECK(m.s == 1);
  CHECK(m.e == 0);
  m = mirror_k3({1}, Q);
  CHECK(m.pic == Divisor{1});
  CHECK(m.e == -2);
  m = mirror_k3({1}, D);
  CHECK(m.e == -1);
  CHECK(m.pic_imaginary);

  // (mir L1*, mir L2) = −χ(L1*⊗L2) = −((L2 − L1)²/2 + 2)
  const K3Descriptor X = elliptic();
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      for (int c = -4; c <= 4; ++c)
        for (int d = -4; d <= 4; ++d) {
          const Divisor L1{a, b}, L2{c, d}, diff{c - a, d - b};
          const auto lhs = mirror_pairing(mirror_k3({-a, -b}, X), mirror_k3(L2, X), X);
          CHECK(lhs == -(Rational(self_intersection(diff, X) / 2) + 2));
        }
}

TEST_CASE("lattice map to H + Pic is an isometry") {
  const K3Descriptor X = elliptic();
  std::mt19937_64 g(31);
  std::uniform_int_distribution<int> small(-9, 9);
  for (int i = 0; i < 1000; ++i) {
    const GradedVector u = GradedVector::surface(small(g), {small(g), small(g)}, small(g));
    const GradedVector v = GradedVector::surface(small(g), {small(g), small(g)}, small(g));
    CHECK(hpic_pairing(mirror_lattice_k3(u, X), mirror_lattice_k3(v, X), X) ==
          pair_sym(u, v, X.ring));
  }
  // [S] − [pt] ↦ [s] has square −2, [pt] ↦ [e] has square 0
  const auto s = mirror_lattice_k3(GradedVector::surface(1, {0, 0}, -1), X);
  CHECK(s.s == 1);
  CHECK(s.e == 0);
  CHECK(hpic_pairing(s, s, X) == -2);
}

TEST_CASE("GFT class of a polarization") {
  const K3Descriptor D = degree2(), Q = quartic();
  auto g = gft_class_k3({1}, D);
  CHECK(g.s0 == 1);
  CHECK(g.e == -1);
  CHECK(g.slope() == -1);
  g = gft_class_k3({1}, Q);
  CHECK(g.e == -2);
  CHECK(g.slope() == -2);
  CHECK_FALSE(g.transcendental_tag.empty());
  // the fibrewise square: 2L has (2L)² = 4L², so e = −2L²
  for (std::int64_t l2 = 2; l2 <= 20; l2 += 2) {
    const K3Descriptor S = make_descriptor("L", {{l2}});
    CHECK(gft_class_k3({2}, S).e == -2 * l2);
  }
  CHECK_THROWS_AS(gft_class_k3({0}, Q), Error);
}

TEST_CASE("h0 against N_L") {
  CHECK(h0_k3(2) == 3);
  CHECK(h0_k3(4) == 4);
  CHECK(h0_k3(0) == 2);
  CHECK(bs_count_k3(2) == 3);
  CHECK(bs_count_k3(4) == 4);
  CHECK(bs_count_k3(0) == 2);
  CHECK_THROWS_AS(h0_k3(3), Error);
  CHECK(h_pairing(1, 0, 1, 0) == -2);
  CHECK(h_pairing(0, 1, 0, 1) == 0);
  CHECK(h_pairing(1, 0, 0, 1) == 1);
  for (std::int64_t l2 = 0; l2 <= 40; l2 += 2) {
    const auto r = verify_quantization_k3(l2);
    CHECK(r.ok);
    CHECK(r.h0 == l2 / 2 + 2);
    CHECK(r.bs_count == l2 / 2 + 2);
  }
  CHECK(verify_quantization_k3(20).h0 == 12);
  const K3Descriptor X = elliptic();
  CHECK(verify_quantization_k3(Divisor{1, 1}, X).ok);   // (e + s)² = 0 + 2 − 2 = 0
  CHECK(verify_quantization_k3(Divisor{3, 1}, X).ok);   // 6 − 2 = 4
}

TEST_CASE("reflections in -2 roots") {
  const K3Descriptor X = elliptic();
  const Divisor delta{0, 1};
  CHECK(reflect_minus2(delta, delta, X) == Divisor{0, -1});
  // (1,2)·δ = 1 − 4 = −3, (2,1)·δ = 2 − 2 = 0
  CHECK(reflect_minus2({2, 1}, delta, X) == Divisor{2, 1});
  // x = (1,0): x·δ = 1, image x + δ with the same square
  const Divisor x{1, 0};
  const Divisor y = reflect_minus2(x, delta, X);
  CHECK(y == Divisor{1, 1});
  CHECK(self_intersection(y, X) == self_intersection(x, X));
  CHECK_THROWS_AS(reflect_minus2(x, {1, 0}, X), Error);

  const auto w = reflection_walk({1, 3}, X.roots, X);
  CHECK(w.reached);
  CHECK(divisor_pairing(w.result, delta, X) >= 0);
  CHECK(self_intersection(w.result, X) == self_intersection({1, 3}, X));
}

TEST_CASE("hyperbolic sublattice condition") {
  HyperbolicDecomposition H{{{0, 1}, {1, -2}}, {1, 0}, {0, 1}, {}};
  CHECK(check_main_condition(H).ok());

  HyperbolicDecomposition bad_e{{{2, 1}, {1, -2}}, {1, 0}, {0, 1}, {}};
  const auto r = check_main_condition(bad_e);
  CHECK_FALSE(r.ok());
  const auto first = std::find_if(r.checks.begin(), r.checks.end(),
                                  [](const CheckRecord& c) { return !c.ok; });
  REQUIRE(first != r.checks.end());
  CHECK(first->name.find("e^2") != std::string::npos);

  HyperbolicDecomposition bad_c{{{0, 1, 0}, {1, -2, 0}, {0, 0, -2}}, {1, 0, 0}, {0, 1, 0},
                                {{0, 1, 1}}};
  const auto rc = check_main_condition(bad_c);
  CHECK_FALSE(rc.ok());
  HyperbolicDecomposition good_c{{{0, 1, 0}, {1, -2, 0}, {0, 0, -2}}, {1, 0, 0}, {0, 1, 0},
                                 {{0, 0, 1}}};
  CHECK(check_main_condition(good_c).ok());
}
