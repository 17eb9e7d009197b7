#ifndef MIRLAT_CY1_HPP_
#define MIRLAT_CY1_HPP_

// Elliptic-curve calculus: slopes of special Lagrangian cycles on the mirror
// curve C', the geometric Fourier transform of bundle classes, the fibrewise
// ⊙-product, the Atiyah ring and the lattice mirror map A_C -> H^1(C', Z).
//
// Classes on C' are written a[s0] + b[e'] with [s0]·[e'] = +1.

#include <cstdint>
#include <map>
#include <vector>

#include "mirlat/lattice.hpp"
#include "mirlat/rational.hpp"

namespace mirlat::cy1 {

// Reduced point (r : d) of P^1(Q); r >= 0, and (0, 1) for slope infinity.
struct Slope {
  std::int64_t r = 1;
  std::int64_t d = 0;
  bool is_infinite() const { return r == 0; }
  friend bool operator==(const Slope&, const Slope&) = default;
};

struct BundleClass {
  std::int64_t rank = 0;
  std::int64_t deg = 0;
  friend bool operator==(const BundleClass&, const BundleClass&) = default;
};

struct CycleClass {
  std::int64_t s0 = 0;   // coefficient of [s0]
  std::int64_t e = 0;    // coefficient of [e']
  friend bool operator==(const CycleClass&, const CycleClass&) = default;
};

// Formal Z-combination of Atiyah bundles F_r (rank F_r = r, F_1 = O_C).
struct AtiyahElement {
  std::map<int, std::int64_t> multiplicity;
  std::int64_t total_rank() const;
  friend bool operator==(const AtiyahElement&, const AtiyahElement&) = default;
};

Slope reduce_slope(std::int64_t r, std::int64_t d);
Slope slope_of(const CycleClass& c);

// Skew intersection form on H^1(C', Z).
std::int64_t intersection(const CycleClass& a, const CycleClass& b);
// Number of transverse intersection points |d1 r2 - d2 r1|.
std::int64_t intersection_count(const CycleClass& a, const CycleClass& b);

// Topological type of E1 ⊗ E2.
BundleClass tensor(const BundleClass& a, const BundleClass& b);

// [GFT(E)] = mir(ch(E)·sqrt(td_C)) = rank·[s0] + deg·[e'].
CycleClass gft_class(const BundleClass& E);
// Class of the fibrewise product; rejects infinite-slope factors.
CycleClass odot(const CycleClass& a, const CycleClass& b);

struct PrimitiveDecomposition {
  Slope slope;
  std::int64_t multiplicity = 0;
  CycleClass primitive;        // c / multiplicity
};
PrimitiveDecomposition decompose_primitive(const CycleClass& c);

// F_a ⊗ F_b = ⊕_{j=0}^{min(a,b)-1} F_{a+b-1-2j}
AtiyahElement atiyah_tensor(int a, int b);
AtiyahElement atiyah_multiply(const AtiyahElement& x, const AtiyahElement& y);
AtiyahElement atiyah_basis(int r);
// GFT(F_r) = r·[s0] extended additively.
CycleClass atiyah_gft_class(const AtiyahElement& x);

// mir(u0[C] + u1[pt]) = u0[s0] + u1[e']; rejects non-integral input.
CycleClass mirror_cy1(const GradedVector& u);

// Bohr–Sommerfeld fibre positions s0 ∩ s_{L^k} = U(1)_k as j/k in [0,1).
std::vector<Rational> bs_points(std::int64_t k);

} // namespace mirlat::cy1

#endif
