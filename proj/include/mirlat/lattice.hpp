#ifndef MIRLAT_LATTICE_HPP_
#define MIRLAT_LATTICE_HPP_

// Exact arithmetic in the even cohomology ring H^{2*}(X, Q) of a Calabi-Yau
// variety of complex dimension 1, 2 or 3, presented by a RingDescriptor:
//
//   n = 1 (curve):      blocks (u0, u1), both scalars, [C]·[pt] = 1.
//   n = 2 (K3 surface): blocks (u0, u1, u2); u1 in Pic coordinates with an even
//                       Gram matrix, u2 a multiple of [pt].
//   n = 3 (threefold):  blocks (u0, u1, u2, u3); u1 in divisor coordinates H_a,
//                       u2 in the abstract dual curve basis C^a (H_a·C^b = δ),
//                       H_a·H_b = Σ_c D_abc C^c.
//
// Everything here is exact; there are no tolerances.

#include <cstdint>
#include <vector>

#include "mirlat/rational.hpp"

namespace mirlat {

class RingDescriptor {
public:
  using IntMatrix = std::vector<std::vector<std::int64_t>>;

  static RingDescriptor curve();
  // Throws InvalidDescriptor for a non-square, asymmetric or odd-diagonal Gram.
  static RingDescriptor surface(IntMatrix gram);
  // cubic is D_abc flattened row-major (a*r*r + b*r + c); c2[a] = c2·H_a.
  static RingDescriptor threefold(int picard_rank, std::vector<std::int64_t> cubic,
                                  std::vector<std::int64_t> c2);

  int dim() const { return dim_; }
  int picard_rank() const { return rank_; }
  // Number of coordinates in block i (degree 2i).
  std::size_t arity(int block) const;

  std::int64_t gram(int i, int j) const { return gram_[i][j]; }
  std::int64_t cubic(int a, int b, int c) const {
    return cubic_[(static_cast<std::size_t>(a) * rank_ + b) * rank_ + c];
  }
  const IntMatrix& gram_matrix() const { return gram_; }
  const std::vector<std::int64_t>& cubic_tensor() const { return cubic_; }
  const std::vector<std::int64_t>& c2() const { return c2_; }

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

private:
  RingDescriptor() = default;
  int dim_ = 1;
  int rank_ = 1;
  IntMatrix gram_;
  std::vector<std::int64_t> cubic_;
  std::vector<std::int64_t> c2_;
};

class GradedVector {
public:
  GradedVector() = default;
  // blocks.size() = dim + 1; first and last blocks must be scalars.
  explicit GradedVector(std::vector<RationalVec> blocks);

  static GradedVector zero(const RingDescriptor& R);
  static GradedVector unit(const RingDescriptor& R);
  static GradedVector point(const RingDescriptor& R);   // [pt]
  static GradedVector curve(Rational u0, Rational u1);
  static GradedVector surface(Rational u0, RationalVec u1, Rational u2);
  static GradedVector threefold(Rational u0, RationalVec u1, RationalVec u2, Rational u3);

  int dim() const { return static_cast<int>(blocks_.size()) - 1; }
  const RationalVec& block(int i) const { return blocks_.at(i); }
  RationalVec& block(int i) { return blocks_.at(i); }
  const std::vector<RationalVec>& blocks() const { return blocks_; }
  // Scalar of block 0 / block n.
  const Rational& rank() const { return blocks_.front().front(); }
  const Rational& top() const { return blocks_.back().front(); }

  bool is_integral() const;
  // Throws DimensionMismatch / ArityMismatch unless this vector lives in R.
  void check(const RingDescriptor& R) const;

  GradedVector& operator+=(const GradedVector& o);
  GradedVector& operator-=(const GradedVector& o);
  GradedVector& operator*=(const Rational& s);
  friend GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
  friend GradedVector operator-(GradedVector a, const GradedVector& b) { return a -= b; }
  friend GradedVector operator*(const Rational& s, GradedVector a) { return a *= s; }
  friend GradedVector operator-(GradedVector a) { return a *= Rational(-1); }
  friend bool operator==(const GradedVector&, const GradedVector&) = default;

private:
  void require_same_shape(const GradedVector& o) const;
  std::vector<RationalVec> blocks_;
};

struct ToddData {
  GradedVector td;
  GradedVector sqrt_td;
};

// td is (1,0) for a curve, (1,0,2) for K3 and (1,0,c2/12,0) for a threefold;
// sqrt_td is its unipotent square root. cup(sqrt_td, sqrt_td) = td is verified.
ToddData todd(const RingDescriptor& R);

GradedVector cup(const GradedVector& u, const GradedVector& v, const RingDescriptor& R);
// (-1)^i on block i. Sends ch(E) to ch(E*).
GradedVector star(const GradedVector& u);
// [u·v]_{2n}
Rational pair_sym(const GradedVector& u, const GradedVector& v, const RingDescriptor& R);
// <u,v> = [u*·v·td]_{2n}: skew for n = 1, 3 and symmetric for n = 2.
Rational pair_exotic(const GradedVector& u, const GradedVector& v, const RingDescriptor& R,
                     const ToddData& T);
// m(E) = ch(E)·sqrt(td)
GradedVector mukai_vector(const GradedVector& chE, const RingDescriptor& R, const ToddData& T);

// Multiplicative inverse; requires an invertible degree-0 block.
GradedVector cup_inverse(const GradedVector& u, const RingDescriptor& R);
// exp(x) for x with vanishing degree-0 block; ch(O(L)) = exp(L).
GradedVector cup_exp(const GradedVector& x, const RingDescriptor& R);
// ch(O(L)) for a divisor L given in the degree-2 block coordinates.
GradedVector line_bundle_ch(const RationalVec& divisor, const RingDescriptor& R);

} // namespace mirlat

#endif
