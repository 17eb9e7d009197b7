#include "mirlat/cy3.hpp"

#include "mirlat/error.hpp"

namespace mirlat::cy3 {

namespace {

GradedVector divisor_vector(const RationalVec& L, const CY3Descriptor& X) {
  GradedVector x = GradedVector::zero(X.ring);
  if (L.size() != x.block(1).size())
    fail(ErrorKind::ArityMismatch, "divisor has " + std::to_string(L.size()) +
                                       " coordinates, Picard rank is " +
                                       std::to_string(X.ring.picard_rank()));
  x.block(1) = L;
  return x;
}

GradedVector curve_vector(const RationalVec& c, const CY3Descriptor& X) {
  GradedVector x = GradedVector::zero(X.ring);
  if (c.size() != x.block(2).size())
    fail(ErrorKind::ArityMismatch, "curve class has wrong arity");
  x.block(2) = c;
  return x;
}

} // namespace

CY3Descriptor make_descriptor(std::string label, int picard_rank, std::vector<std::int64_t> cubic,
                              std::vector<std::int64_t> c2) {
  return {std::move(label), RingDescriptor::threefold(picard_rank, std::move(cubic), std::move(c2))};
}

GradedVector ch_from_chern(const ChernData& c, const CY3Descriptor& X) {
  const RingDescriptor& R = X.ring;
  GradedVector c1 = divisor_vector(c.c1, X);
  GradedVector c2 = curve_vector(c.c2, X);
  GradedVector c1sq = cup(c1, c1, R);
  GradedVector ch = GradedVector::zero(R);
  ch.block(0)[0] = c.rank;
  ch.block(1) = c.c1;
  for (std::size_t a = 0; a < ch.block(2).size(); ++a)
    ch.block(2)[a] = c1sq.block(2)[a] / 2 - c.c2[a];
  const Rational c1cube = cup(c1sq, c1, R).top();
  const Rational c1c2 = cup(c1, c2, R).top();
  ch.block(3)[0] = (c1cube - 3 * c1c2 + 3 * c.c3) / 6;
  return ch;
}

ChernData chern_from_ch(const GradedVector& ch, const CY3Descriptor& X) {
  ch.check(X.ring);
  const RingDescriptor& R = X.ring;
  ChernData c;
  c.rank = ch.rank();
  c.c1 = ch.block(1);
  GradedVector c1 = divisor_vector(c.c1, X);
  GradedVector c1sq = cup(c1, c1, R);
  c.c2.resize(c.c1.size());
  for (std::size_t a = 0; a < c.c2.size(); ++a)
    c.c2[a] = c1sq.block(2)[a] / 2 - ch.block(2)[a];
  const Rational c1cube = cup(c1sq, c1, R).top();
  const Rational c1c2 = cup(c1, curve_vector(c.c2, X), R).top();
  c.c3 = 2 * ch.top() - c1cube / 3 + c1c2;
  return c;
}

bool is_chern_integral(const GradedVector& ch, const CY3Descriptor& X) {
  const ChernData c = chern_from_ch(ch, X);
  if (!is_integer(c.rank) || !is_integer(c.c3))
    return false;
  for (const auto& q : c.c1)
    if (!is_integer(q))
      return false;
  for (const auto& q : c.c2)
    if (!is_integer(q))
      return false;
  return true;
}

Rational chi_bundle3(const GradedVector& chE, const CY3Descriptor& X) {
  return cup(chE, todd(X.ring).td, X.ring).top();
}

Rational euler_pairing3(const GradedVector& ch1, const GradedVector& ch2, const CY3Descriptor& X) {
  return pair_exotic(ch1, ch2, X.ring, todd(X.ring));
}

Rational vdim3(const GradedVector& chE, const CY3Descriptor& X) {
  Rational v = euler_pairing3(chE, chE, X);
  if (sgn(v) != 0)
    fail(ErrorKind::Consistency, "<ch E, ch E> = " + to_string(v) +
                                     " on a threefold; the exotic form is not skew");
  return v;
}

MirrorClass3 mirror_blocks3(const GradedVector& x, const CY3Descriptor& X) {
  const GradedVector u = mukai_vector(x, X.ring, todd(X.ring));
  return {u.rank(), u.top(), u.block(1), u.block(2)};
}

MirrorClass3 mirror_cy3(const GradedVector& x, const CY3Descriptor& X) {
  if (!is_chern_integral(x, X))
    fail(ErrorKind::NonIntegral, "mirror_cy3: argument is not the Chern character of an "
                                 "integral class");
  return mirror_blocks3(x, X);
}

Rational intersection3(const MirrorClass3& a, const MirrorClass3& b) {
  return a.s0 * b.e - dot(a.psi1, b.psi2) + dot(a.psi2, b.psi1) - a.e * b.s0;
}

IsometryReport mirror_isometry_check3(const GradedVector& u, const GradedVector& v,
                                      const CY3Descriptor& X) {
  IsometryReport r;
  r.mirror_side = intersection3(mirror_blocks3(u, X), mirror_blocks3(v, X));
  r.exotic_side = euler_pairing3(u, v, X);
  r.ok = r.mirror_side == r.exotic_side;
  return r;
}

Rational gft_s0_intersection3(const RationalVec& L, const CY3Descriptor& X) {
  const MirrorClass3 s0 = mirror_blocks3(GradedVector::unit(X.ring), X);
  const MirrorClass3 gft = mirror_blocks3(line_bundle_ch(L, X.ring), X);
  return intersection3(s0, gft);
}

Rational cube(const RationalVec& L, const CY3Descriptor& X) {
  GradedVector x = divisor_vector(L, X);
  return cup(cup(x, x, X.ring), x, X.ring).top();
}

CanonicalSublattice canonical_sublattice(const CY3Descriptor& X) {
  const RingDescriptor& R = X.ring;
  const ToddData T = todd(R);
  CanonicalSublattice L;
  GradedVector k = GradedVector::zero(R);
  for (int a = 0; a < R.picard_rank(); ++a)
    k.block(2)[a] = R.c2()[a];
  L.basis = {GradedVector::unit(R), k, GradedVector::point(R)};
  const std::size_t n = L.basis.size();
  auto fill = [&](auto&& form) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m[i][j] = form(L.basis[i], L.basis[j]);
    return m;
  };
  L.sym = fill([&](const auto& u, const auto& v) { return pair_sym(u, v, R); });
  L.skew = fill([&](const auto& u, const auto& v) { return pair_sym(star(u), v, R); });
  L.exotic = fill([&](const auto& u, const auto& v) { return pair_exotic(u, v, R, T); });

  int found = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool null = true;
    for (const auto* m : {&L.sym, &L.skew, &L.exotic})
      for (std::size_t j = 0; j < n; ++j)
        null = null && sgn((*m)[i][j]) == 0 && sgn((*m)[j][i]) == 0;
    if (null) {
      L.kernel_index = static_cast<int>(i);
      ++found;
    }
  }
  if (found != 1)
    L.kernel_index = -1;
  return L;
}

} // namespace mirlat::cy3
