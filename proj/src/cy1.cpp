#include "mirlat/cy1.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mirlat/error.hpp"

namespace mirlat::cy1 {

namespace {

std::int64_t checked_abs(std::int64_t x) {
  if (x == INT64_MIN)
    fail(ErrorKind::Overflow, "cannot take |INT64_MIN|");
  return x < 0 ? -x : x;
}

std::string show(const CycleClass& c) {
  return "(" + std::to_string(c.s0) + "," + std::to_string(c.e) + ")";
}

} // namespace

std::int64_t AtiyahElement::total_rank() const {
  std::int64_t n = 0;
  for (auto [r, m] : multiplicity)
    n = checked_add(n, checked_mul(r, m));
  return n;
}

Slope reduce_slope(std::int64_t r, std::int64_t d) {
  if (r == 0 && d == 0)
    fail(ErrorKind::InvalidArgument, "slope of the zero class is undefined");
  if (r == 0)
    return {0, 1};
  std::int64_t g = std::gcd(checked_abs(r), checked_abs(d));
  r /= g;
  d /= g;
  if (r < 0) {
    r = -r;
    d = -d;
  }
  return {r, d};
}

Slope slope_of(const CycleClass& c) { return reduce_slope(c.s0, c.e); }

std::int64_t intersection(const CycleClass& a, const CycleClass& b) {
  return checked_add(checked_mul(a.s0, b.e), -checked_mul(a.e, b.s0));
}

std::int64_t intersection_count(const CycleClass& a, const CycleClass& b) {
  if ((a.s0 == 0 && a.e == 0) || (b.s0 == 0 && b.e == 0))
    fail(ErrorKind::InvalidArgument, "intersection_count needs nonzero classes");
  return checked_abs(intersection(a, b));
}

BundleClass tensor(const BundleClass& a, const BundleClass& b) {
  return {checked_mul(a.rank, b.rank),
          checked_add(checked_mul(a.rank, b.deg), checked_mul(b.rank, a.deg))};
}

CycleClass gft_class(const BundleClass& E) {
  if (E.rank < 0)
    fail(ErrorKind::InvalidArgument, "bundle rank must be nonnegative");
  if (E.rank == 0 && E.deg == 0)
    fail(ErrorKind::InvalidArgument, "GFT of the zero class is not a cycle");
  const RingDescriptor R = RingDescriptor::curve();
  const ToddData T = todd(R);
  return mirror_cy1(mukai_vector(GradedVector::curve(E.rank, E.deg), R, T));
}

CycleClass odot(const CycleClass& a, const CycleClass& b) {
  if (a.s0 < 1 || b.s0 < 1)
    fail(ErrorKind::InvalidArgument, "odot needs finite-slope multisections (s0 >= 1), got " +
                                         show(a) + " and " + show(b));
  return {checked_mul(a.s0, b.s0), checked_add(checked_mul(a.s0, b.e), checked_mul(b.s0, a.e))};
}

PrimitiveDecomposition decompose_primitive(const CycleClass& c) {
  if (c.s0 == 0 && c.e == 0)
    fail(ErrorKind::InvalidArgument, "zero class has no primitive decomposition");
  std::int64_t g = std::gcd(checked_abs(c.s0), checked_abs(c.e));
  CycleClass prim{c.s0 / g, c.e / g};
  return {slope_of(prim), g, prim};
}

AtiyahElement atiyah_basis(int r) {
  if (r < 1)
    fail(ErrorKind::InvalidArgument, "Atiyah index must be >= 1, got " + std::to_string(r));
  AtiyahElement x;
  x.multiplicity[r] = 1;
  return x;
}

AtiyahElement atiyah_tensor(int a, int b) {
  if (a < 1 || b < 1)
    fail(ErrorKind::InvalidArgument, "Atiyah indices must be >= 1, got " + std::to_string(a) +
                                         "," + std::to_string(b));
  AtiyahElement x;
  for (int j = 0; j < std::min(a, b); ++j)
    x.multiplicity[a + b - 1 - 2 * j] += 1;
  return x;
}

AtiyahElement atiyah_multiply(const AtiyahElement& x, const AtiyahElement& y) {
  AtiyahElement z;
  for (auto [a, ma] : x.multiplicity)
    for (auto [b, mb] : y.multiplicity) {
      if (ma == 0 || mb == 0)
        continue;
      std::int64_t m = checked_mul(ma, mb);
      for (auto [r, mr] : atiyah_tensor(a, b).multiplicity)
        z.multiplicity[r] = checked_add(z.multiplicity[r], checked_mul(m, mr));
    }
  std::erase_if(z.multiplicity, [](const auto& kv) { return kv.second == 0; });
  return z;
}

CycleClass atiyah_gft_class(const AtiyahElement& x) {
  return {x.total_rank(), 0};
}

CycleClass mirror_cy1(const GradedVector& u) {
  if (u.dim() != 1)
    fail(ErrorKind::DimensionMismatch, "mirror_cy1 needs a dim-1 vector");
  return {to_int64(u.rank(), "u0"), to_int64(u.top(), "u1")};
}

std::vector<Rational> bs_points(std::int64_t k) {
  if (k < 1)
    fail(ErrorKind::InvalidArgument, "level must be >= 1, got " + std::to_string(k));
  std::vector<Rational> pts;
  pts.reserve(static_cast<std::size_t>(k));
  for (std::int64_t j = 0; j < k; ++j)
    pts.push_back(frac(j, k));
  return pts;
}

} // namespace mirlat::cy1
