#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "mirlat/cy1.hpp"
#include "mirlat/error.hpp"

using namespace mirlat;
using namespace mirlat::cy1;

namespace {

// Points where the closed geodesics s ↦ s·(r1,d1) and t ↦ t·(r2,d2) meet on
// R²/Z², collected as exact points of [0,1)² and deduplicated.
std::size_t torus_line_meets(std::int64_t r1, std::int64_t d1, std::int64_t r2, std::int64_t d2) {
  std::vector<std::pair<Rational, Rational>> pts;
  const Rational det = Rational(r2 * d1 - r1 * d2);
  if (det == 0)
    return 0;
  auto wrap = [](Rational x) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rational(x - f);
  };
  const std::int64_t bm = std::abs(r1) + std::abs(r2) + 1, bn = std::abs(d1) + std::abs(d2) + 1;
  for (std::int64_t m = -bm; m <= bm; ++m)
    for (std::int64_t n = -bn; n <= bn; ++n) {
      // Cramer on s·(r1,d1) − t·(r2,d2) = (m,n)
      const Rational s = Rational(-m * d2 + r2 * n) / det;
      const Rational t = Rational(r1 * n - d1 * m) / det;
      if (s < 0 || s >= 1 || t < 0 || t >= 1)
        continue;
      std::pair<Rational, Rational> p{wrap(s * r1), wrap(s * d1)};
      if (std::find(pts.begin(), pts.end(), p) == pts.end())
        pts.push_back(p);
    }
  return pts.size();
}

// sl2 characters: F_r ↦ q^{r−1} + q^{r−3} + ... + q^{1−r}
using Laurent = std::map<int, std::int64_t>;

Laurent character(int r) {
  Laurent p;
  for (int e = r - 1; e >= 1 - r; e -= 2)
    p[e] += 1;
  return p;
}

Laurent times(const Laurent& a, const Laurent& b) {
  Laurent c;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b)
      c[ea + eb] += ca * cb;
  return c;
}

// Peel off the character of the top weight until nothing is left.
AtiyahElement decompose(Laurent p) {
  AtiyahElement out;
  for (;;) {
    while (!p.empty() && p.rbegin()->second == 0)
      p.erase(std::prev(p.end()));
    if (p.empty())
      return out;
    const auto [top, mult] = *p.rbegin();
    out.multiplicity[top + 1] += mult;
    for (const auto& [e, c] : character(top + 1))
      p[e] -= c * mult;
  }
}

} // namespace

TEST_CASE("slopes") {
  CHECK(reduce_slope(2, 4) == Slope{1, 2});
  CHECK(reduce_slope(0, -3) == Slope{0, 1});
  CHECK(reduce_slope(-3, 6) == Slope{1, -2});
  CHECK(reduce_slope(5, 0) == Slope{1, 0});
  CHECK(reduce_slope(0, 7).is_infinite());
  CHECK_THROWS_AS(reduce_slope(0, 0), Error);
}

TEST_CASE("intersection numbers") {
  CHECK(intersection({1, 0}, {0, 1}) == 1);
  CHECK(intersection({0, 1}, {1, 0}) == -1);
  CHECK(intersection_count({1, 2}, {2, 1}) == 3);
  for (std::int64_t r = -3; r <= 3; ++r)
    for (std::int64_t d = -3; d <= 3; ++d)
      if (r || d)
        CHECK(intersection({r, d}, {r, d}) == 0);
  CHECK_THROWS_AS(intersection_count({0, 0}, {1, 1}), Error);
}

TEST_CASE("intersection count agrees with counting meeting points on the torus") {
  for (std::int64_t r1 = -4; r1 <= 4; ++r1)
    for (std::int64_t d1 = -4; d1 <= 4; ++d1)
      for (std::int64_t r2 = -4; r2 <= 4; ++r2)
        for (std::int64_t d2 = -4; d2 <= 4; ++d2) {
          if (std::gcd(r1, d1) != 1 || std::gcd(r2, d2) != 1)
            continue;
          if (r1 * d2 == r2 * d1)
            continue;
          CAPTURE(r1);
          CAPTURE(d1);
          CAPTURE(r2);
          CAPTURE(d2);
          CHECK(intersection_count({r1, d1}, {r2, d2}) ==
                static_cast<std::int64_t>(torus_line_meets(r1, d1, r2, d2)));
        }
}

TEST_CASE("tensor and Fourier transform of bundle classes") {
  CHECK(tensor({1, 1}, {1, 1}) == BundleClass{1, 2});
  CHECK(tensor({2, 1}, {3, 1}) == BundleClass{6, 5});
  CHECK(gft_class({1, 0}) == CycleClass{1, 0});
  for (int k = -5; k <= 5; ++k)
    CHECK(gft_class({1, k}) == CycleClass{1, k});
  CHECK(gft_class({2, 3}) == CycleClass{2, 3});
  CHECK(odot({1, 1}, {1, 1}) == CycleClass{1, 2});
  CHECK(odot({2, 1}, {3, 1}) == CycleClass{6, 5});
  CHECK_THROWS_AS(odot({0, 1}, {1, 0}), Error);

  std::mt19937_64 g(17);
  std::uniform_int_distribution<std::int64_t> rank(1, 40), deg(-40, 40);
  for (int i = 0; i < 1000; ++i) {
    const BundleClass a{rank(g), deg(g)}, b{rank(g), deg(g)};
    CHECK(odot({1, 0}, gft_class(a)) == gft_class(a));
    CHECK(gft_class(tensor(a, b)) == odot(gft_class(a), gft_class(b)));
  }
}

TEST_CASE("primitive decomposition") {
  auto p = decompose_primitive({2, 4});
  CHECK(p.slope == Slope{1, 2});
  CHECK(p.multiplicity == 2);
  CHECK(p.primitive == CycleClass{1, 2});
  CHECK(decompose_primitive({1, 7}).multiplicity == 1);
  p = decompose_primitive({6, 5});
  CHECK(p.slope == Slope{6, 5});
  CHECK(p.multiplicity == 1);
}

TEST_CASE("Atiyah ring") {
  for (int b = 1; b <= 8; ++b)
    CHECK(atiyah_tensor(1, b) == atiyah_basis(b));
  AtiyahElement f1f3;
  f1f3.multiplicity = {{1, 1}, {3, 1}};
  CHECK(atiyah_tensor(2, 2) == f1f3);
  AtiyahElement f2f4;
  f2f4.multiplicity = {{2, 1}, {4, 1}};
  CHECK(atiyah_tensor(2, 3) == f2f4);

  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(atiyah_tensor(a, b) == decompose(times(character(a), character(b))));
      CHECK(atiyah_gft_class(atiyah_tensor(a, b)) == CycleClass{a * b, 0});
    }
  CHECK_THROWS_AS(atiyah_tensor(0, 2), Error);
}

TEST_CASE("mirror map on the curve") {
  CHECK(mirror_cy1(GradedVector::curve(1, 0)) == CycleClass{1, 0});
  CHECK(mirror_cy1(GradedVector::curve(0, 1)) == CycleClass{0, 1});
  CHECK(mirror_cy1(GradedVector::curve(2, -1)) == CycleClass{2, -1});
  try {
    mirror_cy1(GradedVector::curve(frac(1, 2), 0));
    FAIL("non-integral class accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonIntegral);
  }
}

TEST_CASE("Bohr-Sommerfeld points") {
  CHECK(bs_points(1) == std::vector<Rational>{0});
  CHECK(bs_points(3) == std::vector<Rational>{0, frac(1, 3), frac(2, 3)});
  for (int k = 1; k <= 50; ++k)
    CHECK(bs_points(k).size() == static_cast<std::size_t>(k));
  CHECK_THROWS_AS(bs_points(0), Error);
}
