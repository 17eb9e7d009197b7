#include "mirlat/k3.hpp"

#include <string>

#include "mirlat/error.hpp"

namespace mirlat::k3 {

namespace {

void require_size(const Divisor& x, const K3Descriptor& S, const char* what) {
  if (x.size() != static_cast<std::size_t>(S.ring.picard_rank()))
    fail(ErrorKind::ArityMismatch, std::string(what) + " has " + std::to_string(x.size()) +
                                       " coordinates, Picard rank is " +
                                       std::to_string(S.ring.picard_rank()));
}

RationalVec to_rational(const Divisor& x) {
  RationalVec q;
  q.reserve(x.size());
  for (auto v : x)
    q.emplace_back(v);
  return q;
}

std::int64_t gram_pairing(const RingDescriptor::IntMatrix& G, const Divisor& x, const Divisor& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      s = checked_add(s, checked_mul(checked_mul(x[i], G[i][j]), y[j]));
  return s;
}

void require_even(std::int64_t l_squared) {
  if (l_squared % 2 != 0)
    fail(ErrorKind::InvalidArgument, "L^2 = " + std::to_string(l_squared) +
                                         " is odd; the K3 lattice is even");
}

} // namespace

int euler_characteristic() {
  const RingDescriptor R = RingDescriptor::surface({{0}});
  return static_cast<int>(to_int64(12 * todd(R).td.top(), "c2(S)"));
}

K3Descriptor make_descriptor(std::string label, RingDescriptor::IntMatrix gram,
                             std::vector<Divisor> roots, std::optional<Fibration> fibration) {
  K3Descriptor S{std::move(label), RingDescriptor::surface(std::move(gram)), std::move(roots),
                 fibration};
  for (std::size_t i = 0; i < S.roots.size(); ++i) {
    require_size(S.roots[i], S, "root");
    auto n = self_intersection(S.roots[i], S);
    if (n != -2)
      fail(ErrorKind::InvalidDescriptor, "root " + std::to_string(i) + " has square " +
                                             std::to_string(n) + ", expected -2");
  }
  if (S.fibration && S.fibration->singular_fibres != euler_characteristic())
    fail(ErrorKind::InvalidDescriptor,
         "elliptic fibration declares " + std::to_string(S.fibration->singular_fibres) +
             " nodal singular fibres but the Euler characteristic of a K3 is " +
             std::to_string(euler_characteristic()));
  return S;
}

std::int64_t divisor_pairing(const Divisor& x, const Divisor& y, const K3Descriptor& S) {
  require_size(x, S, "divisor");
  require_size(y, S, "divisor");
  return gram_pairing(S.ring.gram_matrix(), x, y);
}

std::int64_t self_intersection(const Divisor& x, const K3Descriptor& S) {
  return divisor_pairing(x, x, S);
}

MukaiVector2 mukai2(const GradedVector& chE, const K3Descriptor& S) {
  GradedVector m = mukai_vector(chE, S.ring, todd(S.ring));
  return {m.rank(), m.block(1), m.top()};
}

Rational euler_pairing2(const GradedVector& ch1, const GradedVector& ch2, const K3Descriptor& S) {
  const ToddData T = todd(S.ring);
  GradedVector m1_dual = mukai_vector(star(ch1), S.ring, T);
  GradedVector m2 = mukai_vector(ch2, S.ring, T);
  return pair_sym(m1_dual, m2, S.ring);
}

std::int64_t moduli_dim2(const GradedVector& chE, const K3Descriptor& S) {
  const ToddData T = todd(S.ring);
  GradedVector m = mukai_vector(chE, S.ring, T);
  if (!m.is_integral())
    fail(ErrorKind::NonIntegral, "Mukai vector is not integral");
  GradedVector m_dual = mukai_vector(star(chE), S.ring, T);
  return to_int64(Rational(2) - pair_sym(m, m_dual, S.ring), "moduli dimension");
}

K3MirrorClass mirror_k3(const Divisor& L, const K3Descriptor& S) {
  const std::int64_t l2 = self_intersection(L, S);
  require_even(l2);
  return {1, L, Rational(-l2 / 2), true};
}

Rational mirror_pairing(const K3MirrorClass& a, const K3MirrorClass& b, const K3Descriptor& S) {
  Rational h = h_pairing(a.s, a.e, b.s, b.e);
  Rational pic = divisor_pairing(a.pic, b.pic, S);
  if (a.pic_imaginary && b.pic_imaginary)
    pic = -pic;
  else if (a.pic_imaginary != b.pic_imaginary)
    fail(ErrorKind::InvalidArgument, "cannot pair a real with an imaginary Pic block");
  return h + pic;
}

HPicClass mirror_lattice_k3(const GradedVector& u, const K3Descriptor& S) {
  u.check(S.ring);
  // u = u0([S]−[pt]) + u1 + (u2 + u0)[pt]
  return {u.rank(), u.block(1), u.top() + u.rank()};
}

Rational hpic_pairing(const HPicClass& a, const HPicClass& b, const K3Descriptor& S) {
  Rational pic = 0;
  for (int i = 0; i < S.ring.picard_rank(); ++i)
    for (int j = 0; j < S.ring.picard_rank(); ++j)
      if (S.ring.gram(i, j) != 0)
        pic += a.pic[i] * b.pic[j] * S.ring.gram(i, j);
  return Rational(-2) * a.s * b.s + a.s * b.e + a.e * b.s + pic;
}

GftClassK3 gft_class_k3(const Divisor& L, const K3Descriptor& S) {
  const std::int64_t l2 = self_intersection(L, S);
  require_even(l2);
  if (l2 <= 0)
    fail(ErrorKind::InvalidArgument, "GFT class needs a polarization with L^2 > 0, got " +
                                         std::to_string(l2));
  // pr_H of ch∘mir∘[i](L) with [s] -> [s0], [e] -> [e']
  const K3MirrorClass m = mirror_k3(L, S);
  return {m.s, m.e, "omega_I'"};
}

Rational h_pairing(std::int64_t s_a, const Rational& e_a, std::int64_t s_b, const Rational& e_b) {
  // Gram on ([s0],[e']): [[-2, 1], [1, 0]]
  return Rational(-2 * s_a * s_b) + s_a * e_b + e_a * s_b;
}

std::int64_t h0_k3(std::int64_t l_squared) {
  require_even(l_squared);
  if (l_squared < -2)
    fail(ErrorKind::InvalidArgument, "h0 formula needs L^2 >= -2");
  return l_squared / 2 + 2;
}

std::int64_t bs_count_k3(std::int64_t l_squared) {
  require_even(l_squared);
  if (l_squared < -2)
    fail(ErrorKind::InvalidArgument, "BS count needs L^2 >= -2");
  const Rational gft_e = Rational(-l_squared) / 2;
  // the zero section of a fibration in groups carries the opposite orientation
  return to_int64(h_pairing(-1, 0, 1, gft_e), "BS count");
}

QuantizationReport verify_quantization_k3(std::int64_t l_squared) {
  QuantizationReport r;
  r.l_squared = l_squared;
  r.h0 = h0_k3(l_squared);
  r.bs_count = bs_count_k3(l_squared);
  r.ok = r.h0 == r.bs_count;
  return r;
}

QuantizationReport verify_quantization_k3(const Divisor& L, const K3Descriptor& S) {
  const std::int64_t l2 = self_intersection(L, S);
  QuantizationReport r = verify_quantization_k3(l2);
  if (l2 > 0) {
    const GftClassK3 g = gft_class_k3(L, S);
    const std::int64_t n = to_int64(h_pairing(-1, 0, g.s0, g.e), "BS count");
    r.ok = r.ok && n == r.bs_count;
  }
  return r;
}

Divisor reflect_minus2(const Divisor& x, const Divisor& delta, const K3Descriptor& S) {
  const std::int64_t d2 = self_intersection(delta, S);
  if (d2 != -2)
    fail(ErrorKind::InvalidArgument, "reflection root has square " + std::to_string(d2) +
                                         ", expected -2");
  const std::int64_t c = divisor_pairing(x, delta, S);
  Divisor y = x;
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i] = checked_add(y[i], checked_mul(c, delta[i]));
  return y;
}

ReflectionWalk reflection_walk(const Divisor& x, const std::vector<Divisor>& roots,
                               const K3Descriptor& S, int max_steps) {
  ReflectionWalk w{x, {}, false};
  for (int step = 0; step <= max_steps; ++step) {
    std::optional<std::size_t> bad;
    for (std::size_t i = 0; i < roots.size() && !bad; ++i)
      if (divisor_pairing(w.result, roots[i], S) < 0)
        bad = i;
    if (!bad) {
      w.reached = true;
      return w;
    }
    if (step == max_steps)
      break;
    w.result = reflect_minus2(w.result, roots[*bad], S);
    w.applied.push_back(*bad);
  }
  return w;
}

bool MainConditionReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok)
      return false;
  return !checks.empty();
}

MainConditionReport check_main_condition(const HyperbolicDecomposition& H) {
  MainConditionReport rep;
  const std::size_t n = H.gram.size();
  bool shape_ok = H.e.size() == n && H.s.size() == n;
  for (const auto& row : H.gram)
    shape_ok = shape_ok && row.size() == n;
  for (const auto& c : H.complement)
    shape_ok = shape_ok && c.size() == n;
  bool symmetric = shape_ok;
  for (std::size_t i = 0; symmetric && i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      symmetric = symmetric && H.gram[i][j] == H.gram[j][i];
  rep.checks.push_back({"ambient Gram well-formed", shape_ok && symmetric,
                        shape_ok ? (symmetric ? "" : "Gram not symmetric")
                                 : "vector length differs from ambient rank"});
  if (!rep.checks.back().ok)
    return rep;

  auto pair = [&](const Divisor& a, const Divisor& b) { return gram_pairing(H.gram, a, b); };
  const std::int64_t ee = pair(H.e, H.e), ss = pair(H.s, H.s), es = pair(H.e, H.s);
  rep.checks.push_back({"e^2 = 0", ee == 0, "e^2 = " + std::to_string(ee)});
  rep.checks.push_back({"s^2 = -2", ss == -2, "s^2 = " + std::to_string(ss)});
  rep.checks.push_back({"e.s = 1", es == 1, "e.s = " + std::to_string(es)});
  for (std::size_t i = 0; i < H.complement.size(); ++i) {
    const std::int64_t ce = pair(H.complement[i], H.e), cs = pair(H.complement[i], H.s);
    rep.checks.push_back({"complement[" + std::to_string(i) + "] orthogonal to span(e,s)",
                          ce == 0 && cs == 0,
                          "c.e = " + std::to_string(ce) + ", c.s = " + std::to_string(cs)});
  }
  return rep;
}

} // namespace mirlat::k3
