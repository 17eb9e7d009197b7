#ifndef MIRLAT_CY3_HPP_
#define MIRLAT_CY3_HPP_

// Calabi–Yau threefolds: Riemann–Roch via the exotic skew form, virtual
// dimension, the topological mirror map A_X -> H^3(X', Q) and the GFT(L)·[s0]
// count.
//
// A mirror class is a0[s0] + ψ¹(a1) + ψ²(a2) + a3[e'], with intersection form
//   (a, b) = a0 b3 − a1·b2 + a2·b1 − a3 b0,
// so [s0]·[e'] = 1 and the ψ¹/ψ² blocks pair through the dual-basis identity.

#include <string>

#include "mirlat/lattice.hpp"

namespace mirlat::cy3 {

struct CY3Descriptor {
  std::string label;
  RingDescriptor ring;
};

CY3Descriptor make_descriptor(std::string label, int picard_rank, std::vector<std::int64_t> cubic,
                              std::vector<std::int64_t> c2);

// ch from integral Chern data by Newton's identities:
//   ch2 = c1²/2 − c2,  ch3 = (c1³ − 3 c1 c2 + 3 c3)/6.
struct ChernData {
  Rational rank;
  RationalVec c1;   // divisor coordinates
  RationalVec c2;   // curve coordinates
  Rational c3;
};
GradedVector ch_from_chern(const ChernData& c, const CY3Descriptor& X);
ChernData chern_from_ch(const GradedVector& ch, const CY3Descriptor& X);
// True iff every Chern class of ch is integral (ch of a virtual integral class).
bool is_chern_integral(const GradedVector& ch, const CY3Descriptor& X);

// χ(E) = [ch(E)·td_X]_6
Rational chi_bundle3(const GradedVector& chE, const CY3Descriptor& X);
// χ(E1*⊗E2) = <ch E1, ch E2>
Rational euler_pairing3(const GradedVector& ch1, const GradedVector& ch2, const CY3Descriptor& X);
// <ch E, ch E>; throws Consistency if nonzero.
Rational vdim3(const GradedVector& chE, const CY3Descriptor& X);

struct MirrorClass3 {
  Rational s0;
  Rational e;
  RationalVec psi1;
  RationalVec psi2;
  friend bool operator==(const MirrorClass3&, const MirrorClass3&) = default;
};

// mir(x) for x on the ch side: x·sqrt(td_X) = (u0,u1,u2,u3) and
// mir(x) = u0[s0] + u3[e'] + ψ¹(u1) + ψ²(u2). No integrality check.
MirrorClass3 mirror_blocks3(const GradedVector& x, const CY3Descriptor& X);
// As mirror_blocks3, but x must be Chern-integral (throws NonIntegral).
MirrorClass3 mirror_cy3(const GradedVector& x, const CY3Descriptor& X);

Rational intersection3(const MirrorClass3& a, const MirrorClass3& b);

struct IsometryReport {
  Rational mirror_side;    // (mir u, mir v)
  Rational exotic_side;    // <u, v>
  bool ok = false;
};
IsometryReport mirror_isometry_check3(const GradedVector& u, const GradedVector& v,
                                      const CY3Descriptor& X);

// [GFT(L)]·[s0], evaluated on the mirror side as (mir ch O_X, mir ch O(L)).
// This is the number of L-Bohr–Sommerfeld fibres and the slope of GFT(L).
Rational gft_s0_intersection3(const RationalVec& L, const CY3Descriptor& X);

// L³ = Σ D_abc L^a L^b L^c
Rational cube(const RationalVec& L, const CY3Descriptor& X);

// The rank-3 sublattice <[X], k_X, [pt]> with the Gram matrices of the
// symmetric form (u,v), the skew form (u*,v) and <u,v> restricted to it.
struct CanonicalSublattice {
  std::vector<GradedVector> basis;                 // [X], k_X, [pt]
  std::vector<std::vector<Rational>> sym, skew, exotic;
  // index of the basis vector spanning the common kernel, if exactly one does
  int kernel_index = -1;
};
CanonicalSublattice canonical_sublattice(const CY3Descriptor& X);

} // namespace mirlat::cy3

#endif
