#include "mirlat/lattice.hpp"

#include <string>

#include "mirlat/error.hpp"

namespace mirlat {

RingDescriptor RingDescriptor::curve() {
  RingDescriptor R;
  R.dim_ = 1;
  R.rank_ = 1;
  return R;
}

RingDescriptor RingDescriptor::surface(IntMatrix gram) {
  const std::size_t r = gram.size();
  if (r == 0)
    fail(ErrorKind::InvalidDescriptor, "K3 Gram matrix is empty");
  for (std::size_t i = 0; i < r; ++i) {
    if (gram[i].size() != r)
      fail(ErrorKind::InvalidDescriptor, "K3 Gram matrix is not square");
    if (gram[i][i] % 2 != 0)
      fail(ErrorKind::InvalidDescriptor, "K3 Gram matrix has odd diagonal entry " +
                                             std::to_string(gram[i][i]) + " at index " +
                                             std::to_string(i) + " (lattice must be even)");
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram[i][j] != gram[j][i])
        fail(ErrorKind::InvalidDescriptor, "K3 Gram matrix is not symmetric");
  RingDescriptor R;
  R.dim_ = 2;
  R.rank_ = static_cast<int>(r);
  R.gram_ = std::move(gram);
  return R;
}

RingDescriptor RingDescriptor::threefold(int picard_rank, std::vector<std::int64_t> cubic,
                                         std::vector<std::int64_t> c2) {
  if (picard_rank < 1)
    fail(ErrorKind::InvalidDescriptor, "picard_rank must be positive");
  const std::size_t r = static_cast<std::size_t>(picard_rank);
  if (cubic.size() != r * r * r)
    fail(ErrorKind::InvalidDescriptor, "cubic tensor must have picard_rank^3 = " +
                                           std::to_string(r * r * r) + " entries, got " +
                                           std::to_string(cubic.size()));
  if (c2.size() != r)
    fail(ErrorKind::InvalidDescriptor, "c2 pairing length " + std::to_string(c2.size()) +
                                           " != picard_rank " + std::to_string(r));
  auto at = [&](std::size_t a, std::size_t b, std::size_t c) { return cubic[(a * r + b) * r + c]; };
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c) {
        auto v = at(a, b, c);
        if (v != at(b, a, c) || v != at(a, c, b) || v != at(c, b, a))
          fail(ErrorKind::InvalidDescriptor, "cubic tensor is not totally symmetric");
      }
  RingDescriptor R;
  R.dim_ = 3;
  R.rank_ = picard_rank;
  R.cubic_ = std::move(cubic);
  R.c2_ = std::move(c2);
  return R;
}

std::size_t RingDescriptor::arity(int block) const {
  if (block < 0 || block > dim_)
    fail(ErrorKind::DimensionMismatch, "block index " + std::to_string(block) +
                                           " out of range for dim " + std::to_string(dim_));
  if (block == 0 || block == dim_)
    return 1;
  return static_cast<std::size_t>(rank_);
}

// -- GradedVector -------------------------------------------------------------

GradedVector::GradedVector(std::vector<RationalVec> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.size() < 2 || blocks_.size() > 4)
    fail(ErrorKind::DimensionMismatch, "graded vector needs 2..4 blocks, got " +
                                           std::to_string(blocks_.size()));
  if (blocks_.front().size() != 1 || blocks_.back().size() != 1)
    fail(ErrorKind::ArityMismatch, "degree-0 and top blocks must be scalars");
  if (blocks_.size() == 4 && blocks_[1].size() != blocks_[2].size())
    fail(ErrorKind::ArityMismatch, "divisor and curve blocks must have equal arity");
}

GradedVector GradedVector::zero(const RingDescriptor& R) {
  std::vector<RationalVec> b;
  for (int i = 0; i <= R.dim(); ++i)
    b.emplace_back(R.arity(i), Rational(0));
  return GradedVector(std::move(b));
}

GradedVector GradedVector::unit(const RingDescriptor& R) {
  GradedVector u = zero(R);
  u.blocks_.front().front() = 1;
  return u;
}

GradedVector GradedVector::point(const RingDescriptor& R) {
  GradedVector u = zero(R);
  u.blocks_.back().front() = 1;
  return u;
}

GradedVector GradedVector::curve(Rational u0, Rational u1) {
  return GradedVector({{std::move(u0)}, {std::move(u1)}});
}

GradedVector GradedVector::surface(Rational u0, RationalVec u1, Rational u2) {
  return GradedVector({{std::move(u0)}, std::move(u1), {std::move(u2)}});
}

GradedVector GradedVector::threefold(Rational u0, RationalVec u1, RationalVec u2, Rational u3) {
  return GradedVector({{std::move(u0)}, std::move(u1), std::move(u2), {std::move(u3)}});
}

bool GradedVector::is_integral() const {
  for (const auto& b : blocks_)
    for (const auto& q : b)
      if (!mirlat::is_integer(q))
        return false;
  return true;
}

void GradedVector::check(const RingDescriptor& R) const {
  if (dim() != R.dim())
    fail(ErrorKind::DimensionMismatch, "vector has dim " + std::to_string(dim()) +
                                           ", descriptor has dim " + std::to_string(R.dim()));
  for (int i = 0; i <= R.dim(); ++i)
    if (blocks_[i].size() != R.arity(i))
      fail(ErrorKind::ArityMismatch, "block " + std::to_string(i) + " has arity " +
                                         std::to_string(blocks_[i].size()) + ", expected " +
                                         std::to_string(R.arity(i)));
}

void GradedVector::require_same_shape(const GradedVector& o) const {
  if (blocks_.size() != o.blocks_.size())
    fail(ErrorKind::DimensionMismatch, "graded vectors of different dimension");
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].size() != o.blocks_[i].size())
      fail(ErrorKind::ArityMismatch, "graded vectors with different block arity");
}

GradedVector& GradedVector::operator+=(const GradedVector& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (std::size_t j = 0; j < blocks_[i].size(); ++j)
      blocks_[i][j] += o.blocks_[i][j];
  return *this;
}

GradedVector& GradedVector::operator-=(const GradedVector& o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (std::size_t j = 0; j < blocks_[i].size(); ++j)
      blocks_[i][j] -= o.blocks_[i][j];
  return *this;
}

GradedVector& GradedVector::operator*=(const Rational& s) {
  for (auto& b : blocks_)
    for (auto& q : b)
      q *= s;
  return *this;
}

// -- ring structure -------------------------------------------------------------

namespace {

// Product of a degree-2i block and a degree-2j block, both i, j >= 1 and i+j <= n.
void accumulate_block_product(int i, int j, const RationalVec& a, const RationalVec& b,
                              const RingDescriptor& R, RationalVec& out) {
  const int r = R.picard_rank();
  if (R.dim() == 2) {
    // Pic x Pic -> H^4 = Q[pt] via the Gram matrix.
    for (int p = 0; p < r; ++p) {
      if (sgn(a[p]) == 0)
        continue;
      for (int q = 0; q < r; ++q)
        if (R.gram(p, q) != 0)
          out[0] += a[p] * b[q] * R.gram(p, q);
    }
    return;
  }
  // n == 3
  if (i == 1 && j == 1) {
    for (int p = 0; p < r; ++p) {
      if (sgn(a[p]) == 0)
        continue;
      for (int q = 0; q < r; ++q) {
        if (sgn(b[q]) == 0)
          continue;
        Rational ab = a[p] * b[q];
        for (int c = 0; c < r; ++c)
          if (R.cubic(p, q, c) != 0)
            out[c] += ab * R.cubic(p, q, c);
      }
    }
  } else {
    // divisor x curve (either order) -> H^6 through the dual-basis pairing
    out[0] += dot(a, b);
  }
}

void check_pair(const GradedVector& u, const GradedVector& v, const RingDescriptor& R) {
  u.check(R);
  v.check(R);
}

} // namespace

GradedVector cup(const GradedVector& u, const GradedVector& v, const RingDescriptor& R) {
  check_pair(u, v, R);
  const int n = R.dim();
  GradedVector w = GradedVector::zero(R);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      const int k = i + j;
      auto& out = w.block(k);
      if (i == 0) {
        const Rational& s = u.block(0)[0];
        if (sgn(s) != 0)
          for (std::size_t c = 0; c < out.size(); ++c)
            out[c] += s * v.block(j)[c];
      } else if (j == 0) {
        const Rational& s = v.block(0)[0];
        if (sgn(s) != 0)
          for (std::size_t c = 0; c < out.size(); ++c)
            out[c] += u.block(i)[c] * s;
      } else {
        accumulate_block_product(i, j, u.block(i), v.block(j), R, out);
      }
    }
  }
  return w;
}

GradedVector star(const GradedVector& u) {
  GradedVector w = u;
  for (int i = 1; i <= w.dim(); i += 2)
    for (auto& q : w.block(i))
      q = -q;
  return w;
}

Rational pair_sym(const GradedVector& u, const GradedVector& v, const RingDescriptor& R) {
  return cup(u, v, R).top();
}

Rational pair_exotic(const GradedVector& u, const GradedVector& v, const RingDescriptor& R,
                     const ToddData& T) {
  return cup(cup(star(u), v, R), T.td, R).top();
}

GradedVector mukai_vector(const GradedVector& chE, const RingDescriptor& R, const ToddData& T) {
  return cup(chE, T.sqrt_td, R);
}

GradedVector cup_inverse(const GradedVector& u, const RingDescriptor& R) {
  u.check(R);
  const Rational u0 = u.rank();
  if (sgn(u0) == 0)
    fail(ErrorKind::InvalidArgument, "cup_inverse: degree-0 component is zero");
  // u = u0 (1 + x), x nilpotent of order <= n; (1+x)^{-1} = sum (-x)^k.
  GradedVector x = u;
  x *= Rational(1) / u0;
  x.block(0)[0] = 0;
  GradedVector minus_x = -x;
  GradedVector term = GradedVector::unit(R);
  GradedVector sum = term;
  for (int k = 1; k <= R.dim(); ++k) {
    term = cup(term, minus_x, R);
    sum += term;
  }
  sum *= Rational(1) / u0;
  return sum;
}

GradedVector cup_exp(const GradedVector& x, const RingDescriptor& R) {
  x.check(R);
  if (sgn(x.rank()) != 0)
    fail(ErrorKind::InvalidArgument, "cup_exp: argument must have zero degree-0 component");
  GradedVector term = GradedVector::unit(R);
  GradedVector sum = term;
  for (int k = 1; k <= R.dim(); ++k) {
    term = cup(term, x, R);
    term *= frac(1, k);
    sum += term;
  }
  return sum;
}

GradedVector line_bundle_ch(const RationalVec& divisor, const RingDescriptor& R) {
  GradedVector x = GradedVector::zero(R);
  if (divisor.size() != R.arity(1))
    fail(ErrorKind::ArityMismatch, "divisor has " + std::to_string(divisor.size()) +
                                       " coordinates, expected " + std::to_string(R.arity(1)));
  x.block(1) = divisor;
  return cup_exp(x, R);
}

ToddData todd(const RingDescriptor& R) {
  ToddData T{GradedVector::unit(R), GradedVector::unit(R)};
  switch (R.dim()) {
    case 1:
      break;
    case 2:
      T.td.block(2)[0] = 2;
      T.sqrt_td.block(2)[0] = 1;
      break;
    case 3:
      for (int a = 0; a < R.picard_rank(); ++a) {
        T.td.block(2)[a] = frac(R.c2()[a], 12);
        T.sqrt_td.block(2)[a] = frac(R.c2()[a], 24);
      }
      break;
    default:
      fail(ErrorKind::DimensionMismatch, "unsupported dimension");
  }
  if (!(cup(T.sqrt_td, T.sqrt_td, R) == T.td))
    fail(ErrorKind::Consistency, "sqrt_td squared does not reproduce td");
  return T;
}

} // namespace mirlat
