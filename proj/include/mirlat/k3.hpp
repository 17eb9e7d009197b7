#ifndef MIRLAT_K3_HPP_
#define MIRLAT_K3_HPP_

// K3 lattice engine: Mukai vectors, Riemann–Roch, the mirror map onto
// H ⊕ Pic, the GFT(L) class on the mirror elliptic fibration, Bohr–Sommerfeld
// counting, −2-reflections and the hyperbolic-sublattice condition.
//
// On the mirror side H = span([s0],[e']) with [s0]^2 = −2, [e']^2 = 0,
// [s0]·[e'] = 1 (s0 is a rational −2-curve section, e' an elliptic fibre).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mirlat/lattice.hpp"

namespace mirlat::k3 {

using Divisor = std::vector<std::int64_t>;

struct Fibration {
  int singular_fibres = 0;
};

struct K3Descriptor {
  std::string label;
  RingDescriptor ring;
  std::vector<Divisor> roots;
  std::optional<Fibration> fibration;
};

// Validates root norms (−2) and the singular-fibre bookkeeping; throws
// InvalidDescriptor on violation.
K3Descriptor make_descriptor(std::string label, RingDescriptor::IntMatrix gram,
                             std::vector<Divisor> roots = {},
                             std::optional<Fibration> fibration = std::nullopt);

// c2(S) = 12·[td_S]_4 = 24; a generic elliptic fibration has exactly that many
// nodal fibres, each contributing 1 to the Euler characteristic.
int euler_characteristic();

std::int64_t divisor_pairing(const Divisor& x, const Divisor& y, const K3Descriptor& S);
std::int64_t self_intersection(const Divisor& x, const K3Descriptor& S);

struct MukaiVector2 {
  Rational v0;
  RationalVec v1;
  Rational v2;
  GradedVector graded() const { return GradedVector::surface(v0, v1, v2); }
  friend bool operator==(const MukaiVector2&, const MukaiVector2&) = default;
};

// ch(E)·(1,0,1) = (r, c1, ch2 + r)
MukaiVector2 mukai2(const GradedVector& chE, const K3Descriptor& S);
// χ(Hom(E1,E2)) = (m(E1*), m(E2))
Rational euler_pairing2(const GradedVector& ch1, const GradedVector& ch2, const K3Descriptor& S);
// dim M_E = 2 − (m(E), m(E*)); requires an integral Mukai vector.
std::int64_t moduli_dim2(const GradedVector& chE, const K3Descriptor& S);

// Image [s] + i·L − ½L²[e] of a divisor under ch ∘ mir ∘ [i]. The Pic block is
// imaginary; that is recorded by a flag and contributes with i² = −1 to the
// mirror pairing.
struct K3MirrorClass {
  std::int64_t s = 0;
  Divisor pic;
  Rational e;
  bool pic_imaginary = true;
};
K3MirrorClass mirror_k3(const Divisor& L, const K3Descriptor& S);
Rational mirror_pairing(const K3MirrorClass& a, const K3MirrorClass& b, const K3Descriptor& S);

// Lattice isometry A_S -> H ⊕ Pic S with [S]−[pt] ↦ [s], [pt] ↦ [e], L ↦ L.
struct HPicClass {
  Rational s;
  RationalVec pic;
  Rational e;
};
HPicClass mirror_lattice_k3(const GradedVector& u, const K3Descriptor& S);
Rational hpic_pairing(const HPicClass& a, const HPicClass& b, const K3Descriptor& S);

// Class of GFT(L): pr_H part s0·[s0] + e·[e'] plus the transcendental [ω_I']
// summand, carried only as a tag (it pairs to zero with [s0] and [e']).
struct GftClassK3 {
  std::int64_t s0 = 1;
  Rational e;
  std::string transcendental_tag = "omega_I'";
  Rational slope() const { return e / s0; }
};
GftClassK3 gft_class_k3(const Divisor& L, const K3Descriptor& S);

// Intersection form on H = span([s0],[e']).
Rational h_pairing(std::int64_t s_a, const Rational& e_a, std::int64_t s_b, const Rational& e_b);

// ½L² + 2 (Riemann–Roch plus vanishing of higher cohomology).
std::int64_t h0_k3(std::int64_t l_squared);
// (−[s0])·([s0] − ½L²[e']) evaluated with the H-block Gram matrix.
std::int64_t bs_count_k3(std::int64_t l_squared);

struct QuantizationReport {
  std::int64_t l_squared = 0;
  std::int64_t h0 = 0;
  std::int64_t bs_count = 0;
  bool ok = false;
};
QuantizationReport verify_quantization_k3(std::int64_t l_squared);
QuantizationReport verify_quantization_k3(const Divisor& L, const K3Descriptor& S);

// x + (x·δ)δ; requires δ² = −2.
Divisor reflect_minus2(const Divisor& x, const Divisor& delta, const K3Descriptor& S);

struct ReflectionWalk {
  Divisor result;
  std::vector<std::size_t> applied;   // indices into the supplied roots
  bool reached = false;               // result·δ >= 0 for every supplied root
};
// Repeatedly reflects in the first root pairing negatively with the current
// class, for at most max_steps steps.
ReflectionWalk reflection_walk(const Divisor& x, const std::vector<Divisor>& roots,
                               const K3Descriptor& S, int max_steps = 64);

struct HyperbolicDecomposition {
  RingDescriptor::IntMatrix gram;   // ambient lattice
  Divisor e;
  Divisor s;
  std::vector<Divisor> complement;
};

struct CheckRecord {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct MainConditionReport {
  std::vector<CheckRecord> checks;
  bool ok() const;
};
MainConditionReport check_main_condition(const HyperbolicDecomposition& H);

} // namespace mirlat::k3

#endif
