#include "mirlat/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>

#include "mirlat/cy1.hpp"
#include "mirlat/cy3.hpp"
#include "mirlat/error.hpp"
#include "mirlat/k3.hpp"
#include "mirlat/quant.hpp"

namespace mirlat::io {

namespace {

constexpr std::size_t kMaxDetails = 10;

using Rng = std::mt19937_64;
using Triple = std::tuple<std::string, std::string, std::string>;

std::int64_t uniform(Rng& g, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(g);
}

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string str(const Rational& q) { return mirlat::to_string(q); }
std::string str(std::int64_t x) { return std::to_string(x); }

template <class V>
std::string list_str(const V& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + str(v[i]);
  return s + "]";
}

std::string str(const GradedVector& u) {
  std::string s = "(";
  for (int i = 0; i <= u.dim(); ++i) {
    if (i)
      s += "; ";
    const auto& b = u.block(i);
    s += b.size() == 1 && (i == 0 || i == u.dim()) ? str(b[0]) : list_str(b);
  }
  return s + ")";
}

std::string str(const cy1::CycleClass& c) {
  return str(c.s0) + "[s0]+" + str(c.e) + "[e']";
}

std::string str(const cy1::AtiyahElement& x) {
  std::string s;
  for (const auto& [r, m] : x.multiplicity)
    s += (s.empty() ? "" : "+") + str(m) + "F" + str(static_cast<std::int64_t>(r));
  return s.empty() ? "0" : s;
}

std::string str(const cy3::MirrorClass3& m) {
  return "(" + str(m.s0) + "; " + list_str(m.psi1) + "; " + list_str(m.psi2) + "; " + str(m.e) +
         ")";
}

void single(Report& r, std::string label, std::string input, std::string expected,
            std::string got, bool ok, std::string tol = "exact") {
  ++r.checks;
  if (!ok)
    ++r.failures;
  r.records.push_back({std::move(label), std::move(input), std::move(expected), std::move(got),
                       std::move(tol), ok});
}

// Tallies a family of cases into one summary record; the first failures are
// kept in full.
class Sweep {
public:
  Sweep(Report& r, std::string label, std::string tol = "exact")
      : report_(r), label_(std::move(label)), tol_(std::move(tol)) {}
  Sweep(const Sweep&) = delete;
  ~Sweep() { flush(); }

  template <class F>
  void check(bool ok, F&& describe) {
    ++cases_;
    if (ok)
      return;
    ++fails_;
    if (details_.size() < kMaxDetails) {
      auto [in, exp, got] = describe();
      details_.push_back({label_, std::move(in), std::move(exp), std::move(got), tol_, false});
    }
  }

  void flush() {
    if (flushed_)
      return;
    flushed_ = true;
    report_.checks += cases_;
    report_.failures += fails_;
    report_.records.push_back({label_, std::to_string(cases_) + " cases",
                               std::to_string(cases_) + " pass",
                               std::to_string(cases_ - fails_) + " pass", tol_, fails_ == 0});
    for (auto& d : details_)
      report_.records.push_back(std::move(d));
  }

private:
  Report& report_;
  std::string label_, tol_;
  long cases_ = 0, fails_ = 0;
  std::vector<CheckRecord> details_;
  bool flushed_ = false;
};

long param(const PlannedSuite& s, const char* key) { return s.params.at(key).get<long>(); }
double param_d(const PlannedSuite& s, const char* key) { return s.params.at(key).get<double>(); }

// ---------------------------------------------------------------- cy1

void suite_cy1_quantization(const PlannedSuite& s, Report& r) {
  const RingDescriptor R = RingDescriptor::curve();
  const ToddData T = todd(R);
  Sweep sw(r, "chi(L^k) = #(s0 ∩ GFT(L^k)) = #U(1)_k = k");
  for (long k = 1; k <= param(s, "max_level"); ++k) {
    const GradedVector chL = GradedVector::curve(1, k);
    const Rational chi = pair_exotic(GradedVector::unit(R), chL, R, T);
    const std::int64_t n = cy1::intersection_count(cy1::gft_class({1, 0}), cy1::gft_class({1, k}));
    const auto pts = cy1::bs_points(k);
    bool distinct = !pts.empty() && pts.front() >= 0 && pts.back() < 1;
    for (std::size_t i = 1; i < pts.size(); ++i)
      distinct = distinct && pts[i - 1] < pts[i];
    const bool ok = chi == k && n == k && static_cast<long>(pts.size()) == k && distinct;
    sw.check(ok, [&] {
      return Triple{"k=" + std::to_string(k), std::to_string(k),
                    "chi=" + str(chi) + " count=" + str(n) + " points=" +
                        std::to_string(pts.size())};
    });
  }
}

// Transverse intersection points of the lines s·(r1,d1) and t·(r2,d2) on
// R²/Z², found by solving s·v1 − t·v2 = (m,n) for every lattice offset.
std::int64_t brute_force_intersections(std::int64_t r1, std::int64_t d1, std::int64_t r2,
                                       std::int64_t d2) {
  const std::int64_t D = r2 * d1 - r1 * d2;
  if (D == 0)
    return 0;
  auto in_unit = [D](std::int64_t num) {
    return D > 0 ? (num >= 0 && num < D) : (num <= 0 && num > D);
  };
  std::int64_t count = 0;
  const std::int64_t bm = std::abs(r1) + std::abs(r2), bn = std::abs(d1) + std::abs(d2);
  for (std::int64_t m = -bm; m <= bm; ++m)
    for (std::int64_t n = -bn; n <= bn; ++n) {
      // s r1 − t r2 = m, s d1 − t d2 = n
      const std::int64_t s_num = r2 * n - d2 * m;
      const std::int64_t t_num = r1 * n - d1 * m;
      if (in_unit(s_num) && in_unit(t_num))
        ++count;
    }
  return count;
}

void suite_cy1_intersection(const PlannedSuite& s, Report& r) {
  const std::int64_t B = param(s, "bound");
  std::vector<cy1::CycleClass> prims;
  for (std::int64_t a = -B; a <= B; ++a)
    for (std::int64_t b = -B; b <= B; ++b)
      if (std::gcd(a, b) == 1)
        prims.push_back({a, b});
  Sweep sw(r, "|a·b| equals brute-force torus line intersections");
  for (const auto& a : prims)
    for (const auto& b : prims) {
      const std::int64_t got = cy1::intersection_count(a, b);
      const std::int64_t want = brute_force_intersections(a.s0, a.e, b.s0, b.e);
      sw.check(got == want, [&] {
        return Triple{str(a) + " , " + str(b), str(want), str(got)};
      });
    }
}

void suite_cy1_isometry(const PlannedSuite& s, Report& r) {
  const RingDescriptor R = RingDescriptor::curve();
  const ToddData T = todd(R);
  Rng g(static_cast<std::uint64_t>(param(s, "seed")));
  const std::int64_t B = param(s, "bound");
  Sweep sw(r, "(mir u, mir v) = <u, v>");
  Sweep gft(r, "GFT(E) = mir(ch(E) sqrt td)");
  for (long i = 0; i < param(s, "samples"); ++i) {
    const GradedVector u = GradedVector::curve(uniform(g, -B, B), uniform(g, -B, B));
    const GradedVector v = GradedVector::curve(uniform(g, -B, B), uniform(g, -B, B));
    const auto mu = cy1::mirror_cy1(mukai_vector(u, R, T));
    const auto mv = cy1::mirror_cy1(mukai_vector(v, R, T));
    const Rational lhs = cy1::intersection(mu, mv);
    const Rational rhs = pair_exotic(u, v, R, T);
    sw.check(lhs == rhs, [&] { return Triple{str(u) + " , " + str(v), str(rhs), str(lhs)}; });
    if (u.rank() < 0)
      continue;
    const cy1::BundleClass E{to_int64(u.rank()), to_int64(u.top())};
    gft.check(cy1::gft_class(E) == mu, [&] {
      return Triple{str(u), str(mu), str(cy1::gft_class(E))};
    });
  }
}

void suite_cy1_homomorphism(const PlannedSuite& s, Report& r) {
  const RingDescriptor R = RingDescriptor::curve();
  Rng g(static_cast<std::uint64_t>(param(s, "seed")));
  const std::int64_t B = param(s, "bound");
  Sweep sw(r, "GFT(E1 ⊗ E2) = GFT(E1) ⊙ GFT(E2)");
  Sweep ch(r, "ch(E1 ⊗ E2) = ch(E1)·ch(E2)");
  Sweep sl(r, "slope(E1 ⊗ E2) = slope(E1) + slope(E2)");
  for (long i = 0; i < param(s, "samples"); ++i) {
    const cy1::BundleClass a{uniform(g, 1, B), uniform(g, -B, B)};
    const cy1::BundleClass b{uniform(g, 1, B), uniform(g, -B, B)};
    const cy1::BundleClass t = cy1::tensor(a, b);
    const auto lhs = cy1::gft_class(t);
    const auto rhs = cy1::odot(cy1::gft_class(a), cy1::gft_class(b));
    const std::string in = "(" + str(a.rank) + "," + str(a.deg) + ") ⊗ (" + str(b.rank) + "," +
                           str(b.deg) + ")";
    sw.check(lhs == rhs, [&] { return Triple{in, str(rhs), str(lhs)}; });
    const GradedVector cup_ab =
        cup(GradedVector::curve(a.rank, a.deg), GradedVector::curve(b.rank, b.deg), R);
    const GradedVector ch_t = GradedVector::curve(t.rank, t.deg);
    ch.check(cup_ab == ch_t, [&] { return Triple{in, str(ch_t), str(cup_ab)}; });
    const Rational mu_t = frac(t.deg, t.rank);
    const Rational mu_sum = frac(a.deg, a.rank) + frac(b.deg, b.rank);
    sl.check(mu_t == mu_sum, [&] { return Triple{in, str(mu_sum), str(mu_t)}; });
  }
}

void suite_cy1_atiyah(const PlannedSuite& s, Report& r) {
  const int M = static_cast<int>(param(s, "max_index"));
  Sweep rank(r, "rank(F_a ⊗ F_b) = ab");
  Sweep comm(r, "F_a ⊗ F_b = F_b ⊗ F_a");
  Sweep hom(r, "GFT(F_a ⊗ F_b) = GFT(F_a) ⊙ GFT(F_b)");
  Sweep assoc(r, "(F_a F_b) F_c = F_a (F_b F_c)");
  for (int a = 1; a <= M; ++a)
    for (int b = 1; b <= M; ++b) {
      const auto ab = cy1::atiyah_tensor(a, b);
      const std::string in = "F" + std::to_string(a) + " ⊗ F" + std::to_string(b);
      rank.check(ab.total_rank() == a * b, [&] {
        return Triple{in, std::to_string(a * b), str(ab.total_rank())};
      });
      const auto ba = cy1::atiyah_tensor(b, a);
      comm.check(ab == ba, [&] { return Triple{in, str(ba), str(ab)}; });
      const auto lhs = cy1::atiyah_gft_class(ab);
      const auto rhs = cy1::odot(cy1::atiyah_gft_class(cy1::atiyah_basis(a)),
                                 cy1::atiyah_gft_class(cy1::atiyah_basis(b)));
      hom.check(lhs == rhs, [&] { return Triple{in, str(rhs), str(lhs)}; });
      for (int c = 1; c <= M; ++c) {
        const auto left = cy1::atiyah_multiply(ab, cy1::atiyah_basis(c));
        const auto right = cy1::atiyah_multiply(cy1::atiyah_basis(a), cy1::atiyah_tensor(b, c));
        assoc.check(left == right, [&] {
          return Triple{in + " ⊗ F" + std::to_string(c), str(right), str(left)};
        });
      }
    }
}

// ---------------------------------------------------------------- k3

void suite_k3_theorem(const PlannedSuite& s, Report& r) {
  Sweep sw(r, "h0(L) = N_L for even L²");
  for (std::int64_t l2 = 0; l2 <= param(s, "l2_max"); l2 += 2) {
    const auto q = k3::verify_quantization_k3(l2);
    sw.check(q.ok && q.h0 == l2 / 2 + 2, [&] {
      return Triple{"L²=" + str(l2), "h0=" + str(l2 / 2 + 2) + " N=" + str(l2 / 2 + 2),
                    "h0=" + str(q.h0) + " N=" + str(q.bs_count)};
    });
  }
}

k3::Divisor random_divisor(Rng& g, int rank, std::int64_t B) {
  k3::Divisor d(static_cast<std::size_t>(rank));
  for (auto& x : d)
    x = uniform(g, -B, B);
  return d;
}

RationalVec to_rational(const k3::Divisor& d) { return RationalVec(d.begin(), d.end()); }

void suite_k3_lattice(const Manifest& m, const PlannedSuite& s, Report& r) {
  const k3::K3Descriptor S = k3_from_json(m.fixtures[s.fixture].document);
  const RingDescriptor& R = S.ring;
  const ToddData T = todd(R);
  const int rho = R.picard_rank();
  Rng g(static_cast<std::uint64_t>(param(s, "seed")));
  const std::int64_t B = param(s, "bound");

  auto random_ch = [&] {
    const k3::Divisor c1 = random_divisor(g, rho, B);
    const std::int64_t rank = uniform(g, 0, 5), c2 = uniform(g, -B, B);
    return GradedVector::surface(rank, to_rational(c1),
                                 Rational(k3::self_intersection(c1, S) / 2 - c2));
  };

  {
    Sweep iso(r, "A_S -> H ⊕ Pic preserves the pairing");
    Sweep sym(r, "χ(E1,E2) = χ(E2,E1) = <ch E1, ch E2>");
    Sweep dim(r, "dim M_E = v² + 2 is even");
    for (long i = 0; i < param(s, "samples"); ++i) {
      const GradedVector u = random_ch(), v = random_ch();
      const Rational lhs = k3::hpic_pairing(k3::mirror_lattice_k3(u, S),
                                            k3::mirror_lattice_k3(v, S), S);
      const Rational rhs = pair_sym(u, v, R);
      iso.check(lhs == rhs, [&] { return Triple{str(u) + " , " + str(v), str(rhs), str(lhs)}; });
      const Rational e12 = k3::euler_pairing2(u, v, S), e21 = k3::euler_pairing2(v, u, S);
      const Rational ex = pair_exotic(u, v, R, T);
      sym.check(e12 == e21 && e12 == ex, [&] {
        return Triple{str(u) + " , " + str(v), str(ex), str(e12) + " / " + str(e21)};
      });
      const std::int64_t d = k3::moduli_dim2(u, S);
      const auto mv = mukai_vector(u, R, T);
      const Rational v2 = -pair_sym(mv, star(mv), R);
      dim.check(d % 2 == 0 && Rational(d) == v2 + 2, [&] {
        return Triple{str(u), str(v2 + 2), str(d)};
      });
    }
  }
  {
    Sweep tr(r, "(mir L1*, mir L2) = −<ch L1, ch L2>");
    Sweep q(r, "h0(L) = N_L for L² > 0");
    for (long i = 0; i < param(s, "samples"); ++i) {
      const k3::Divisor L1 = random_divisor(g, rho, B), L2 = random_divisor(g, rho, B);
      k3::Divisor neg = L1;
      for (auto& x : neg)
        x = -x;
      const Rational lhs = k3::mirror_pairing(k3::mirror_k3(neg, S), k3::mirror_k3(L2, S), S);
      const Rational rhs = -pair_exotic(line_bundle_ch(to_rational(L1), R),
                                        line_bundle_ch(to_rational(L2), R), R, T);
      tr.check(lhs == rhs, [&] {
        return Triple{list_str(L1) + " , " + list_str(L2), str(rhs), str(lhs)};
      });
      if (k3::self_intersection(L2, S) > 0) {
        const auto rep = k3::verify_quantization_k3(L2, S);
        q.check(rep.ok, [&] {
          return Triple{list_str(L2), "h0=" + str(rep.h0), "N=" + str(rep.bs_count)};
        });
      }
    }
  }
  if (S.fibration)
    single(r, "singular fibres = c2(S)", S.label, str(k3::euler_characteristic()),
           std::to_string(S.fibration->singular_fibres),
           S.fibration->singular_fibres == k3::euler_characteristic());
  if (rho == 2) {
    // look for a hyperbolic pair e² = 0, s² = −2, e·s = 1 among small classes
    std::optional<k3::HyperbolicDecomposition> H;
    for (int a = -3; a <= 3 && !H; ++a)
      for (int b = -3; b <= 3 && !H; ++b) {
        const k3::Divisor e{a, b};
        if ((a == 0 && b == 0) || k3::self_intersection(e, S) != 0)
          continue;
        for (int c = -3; c <= 3 && !H; ++c)
          for (int d = -3; d <= 3 && !H; ++d) {
            const k3::Divisor sv{c, d};
            if (k3::self_intersection(sv, S) == -2 && k3::divisor_pairing(e, sv, S) == 1)
              H = k3::HyperbolicDecomposition{R.gram_matrix(), e, sv, {}};
          }
      }
    if (H) {
      const auto rep = k3::check_main_condition(*H);
      for (const auto& c : rep.checks)
        single(r, "hyperbolic sublattice: " + c.name, list_str(H->e) + " , " + list_str(H->s),
               "holds", c.ok ? "holds" : c.detail, c.ok);
    }
  }
}

void suite_k3_reflections(const Manifest& m, const PlannedSuite& s, Report& r) {
  const k3::K3Descriptor S = k3_from_json(m.fixtures[s.fixture].document);
  const int rho = S.ring.picard_rank();
  Rng g(static_cast<std::uint64_t>(param(s, "seed")));
  const std::int64_t B = param(s, "bound");
  if (S.roots.empty()) {
    single(r, "no −2 roots listed", S.label, "nothing to check", "nothing to check", true);
    return;
  }
  for (const auto& delta : S.roots) {
    k3::Divisor minus = delta;
    for (auto& x : minus)
      x = -x;
    const k3::Divisor rd = k3::reflect_minus2(delta, delta, S);
    single(r, "s_δ(δ) = −δ", list_str(delta), list_str(minus), list_str(rd), rd == minus);
    Sweep inv(r, "s_δ is an involution, δ = " + list_str(delta));
    Sweep iso(r, "s_δ is an isometry, δ = " + list_str(delta));
    for (long i = 0; i < param(s, "samples"); ++i) {
      const k3::Divisor x = random_divisor(g, rho, B), y = random_divisor(g, rho, B);
      const k3::Divisor rx = k3::reflect_minus2(x, delta, S);
      const k3::Divisor rrx = k3::reflect_minus2(rx, delta, S);
      inv.check(rrx == x, [&] { return Triple{list_str(x), list_str(x), list_str(rrx)}; });
      const auto before = k3::divisor_pairing(x, y, S);
      const auto after = k3::divisor_pairing(rx, k3::reflect_minus2(y, delta, S), S);
      iso.check(before == after, [&] {
        return Triple{list_str(x) + " , " + list_str(y), str(before), str(after)};
      });
    }
  }
  Sweep walk(r, "reflection walk ends on the non-negative side, preserving x²");
  for (long i = 0; i < param(s, "samples"); ++i) {
    const k3::Divisor x = random_divisor(g, rho, B);
    const auto w = k3::reflection_walk(x, S.roots, S);
    bool ok = k3::self_intersection(w.result, S) == k3::self_intersection(x, S);
    if (w.reached)
      for (const auto& d : S.roots)
        ok = ok && k3::divisor_pairing(w.result, d, S) >= 0;
    else
      ok = ok && S.roots.size() > 1;   // a single root always terminates in one step
    walk.check(ok, [&] {
      return Triple{list_str(x), "x·δ >= 0 for all roots", list_str(w.result)};
    });
  }
}

// ---------------------------------------------------------------- cy3

cy3::ChernData random_chern(Rng& g, int rho, std::int64_t B) {
  cy3::ChernData c;
  c.rank = uniform(g, -3, 3);
  c.c1.resize(static_cast<std::size_t>(rho));
  c.c2.resize(static_cast<std::size_t>(rho));
  for (auto& x : c.c1)
    x = uniform(g, -B, B);
  for (auto& x : c.c2)
    x = uniform(g, -B, B);
  c.c3 = uniform(g, -B, B);
  return c;
}

GradedVector random_rational3(Rng& g, int rho, std::int64_t B) {
  auto q = [&] { return frac(uniform(g, -B, B), uniform(g, 1, 6)); };
  RationalVec u1(static_cast<std::size_t>(rho)), u2(static_cast<std::size_t>(rho));
  for (auto& x : u1)
    x = q();
  for (auto& x : u2)
    x = q();
  return GradedVector::threefold(q(), u1, u2, q());
}

void suite_cy3_isometry(const Manifest& m, const PlannedSuite& s, Report& r) {
  const cy3::CY3Descriptor X = cy3_from_json(m.fixtures[s.fixture].document);
  const RingDescriptor& R = X.ring;
  const int rho = R.picard_rank();
  Rng g(static_cast<std::uint64_t>(param(s, "seed")));
  const std::int64_t B = param(s, "bound");
  {
    Sweep iso(r, "(mir u, mir v) = <u, v>");
    Sweep integral(r, "ch of integral Chern data is accepted by mir");
    for (long i = 0; i < param(s, "samples"); ++i) {
      const GradedVector u = cy3::ch_from_chern(random_chern(g, rho, B), X);
      const GradedVector v = cy3::ch_from_chern(random_chern(g, rho, B), X);
      const auto rep = cy3::mirror_isometry_check3(u, v, X);
      iso.check(rep.ok, [&] {
        return Triple{str(u) + " , " + str(v), str(rep.exotic_side), str(rep.mirror_side)};
      });
      bool accepted = cy3::is_chern_integral(u, X);
      if (accepted) {
        try {
          (void)cy3::mirror_cy3(u, X);
        } catch (const Error&) {
          accepted = false;
        }
      }
      integral.check(accepted, [&] { return Triple{str(u), "accepted", "rejected"}; });
    }
  }
  {
    const ToddData T = todd(R);
    const GradedVector inv = cup_inverse(T.sqrt_td, R);
    Sweep closure(r, "mir(sqrt(td)^-1 (a[X] + b[pt])) = a[s0] + b[e']");
    for (long i = 0; i < param(s, "samples"); ++i) {
      const std::int64_t a = uniform(g, -B, B), b = uniform(g, -B, B);
      GradedVector x = GradedVector::zero(R);
      x.block(0)[0] = a;
      x.block(3)[0] = b;
      const auto got = cy3::mirror_blocks3(cup(inv, x, R), X);
      cy3::MirrorClass3 want{a, b, RationalVec(rho), RationalVec(rho)};
      closure.check(got == want, [&] {
        return Triple{"a=" + str(a) + " b=" + str(b), str(want), str(got)};
      });
    }
  }
  GradedVector half = GradedVector::zero(R);
  half.block(2)[0] = frac(1, 2);
  bool rejected = false;
  try {
    (void)cy3::mirror_cy3(half, X);
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::NonIntegral;
  }
  single(r, "non-integral class rejected by mir", str(half), "NonIntegral",
         rejected ? "NonIntegral" : "accepted", rejected);
}

void suite_cy3_skew(const Manifest& m, const PlannedSuite& s, Report& r) {
  const cy3::CY3Descriptor X = cy3_from_json(m.fixtures[s.fixture].document);
  const RingDescriptor& R = X.ring;
  const ToddData T = todd(R);
  const int rho = R.picard_rank();
  Rng g(static_cast<std::uint64_t>(param(s, "seed")));
  const std::int64_t B = param(s, "bound");
  Sweep alt(r, "<u, u> = 0");
  Sweep anti(r, "<u, v> = −<v, u>");
  Sweep vdim(r, "vdim = 0 for integral classes");
  for (long i = 0; i < param(s, "samples"); ++i) {
    const GradedVector u = random_rational3(g, rho, B), v = random_rational3(g, rho, B);
    const Rational uu = pair_exotic(u, u, R, T);
    alt.check(uu == 0, [&] { return Triple{str(u), "0", str(uu)}; });
    const Rational uv = pair_exotic(u, v, R, T), vu = pair_exotic(v, u, R, T);
    anti.check(uv == -vu, [&] {
      return Triple{str(u) + " , " + str(v), str(Rational(-vu)), str(uv)};
    });
    const GradedVector w = cy3::ch_from_chern(random_chern(g, rho, B), X);
    bool ok = true;
    std::string got = "0";
    try {
      ok = cy3::vdim3(w, X) == 0;
    } catch (const Error& e) {
      ok = false;
      got = e.what();
    }
    vdim.check(ok, [&] { return Triple{str(w), "0", got}; });
  }
}

void suite_cy3_chi(const Manifest& m, const PlannedSuite& s, Report& r) {
  const cy3::CY3Descriptor X = cy3_from_json(m.fixtures[s.fixture].document);
  const RingDescriptor& R = X.ring;
  const int rho = R.picard_rank();
  const Rational chi_o = cy3::chi_bundle3(GradedVector::unit(R), X);
  single(r, "χ(O_X) = 0", X.label, "0", str(chi_o), chi_o == 0);
  const auto lat = cy3::canonical_sublattice(X);
  single(r, "k_X spans the common kernel on <[X], k_X, [pt]>", X.label, "1",
         std::to_string(lat.kernel_index), lat.kernel_index == 1);

  const long M = param(s, "max_multiple");
  Sweep rr(r, "χ(L) = L³/6 + c2·L/12");
  Sweep gft(r, "[GFT(L)]·[s0] = χ(L)");
  Sweep serre(r, "χ(−L) = −χ(L)");
  Sweep integral(r, "χ(L) ∈ Z");
  std::vector<std::int64_t> L(static_cast<std::size_t>(rho), -M);
  for (;;) {
    RationalVec Lq(L.begin(), L.end());
    Rational l3 = 0, c2l = 0;
    for (int a = 0; a < rho; ++a) {
      c2l += Rational(R.c2()[a]) * Lq[a];
      for (int b = 0; b < rho; ++b)
        for (int c = 0; c < rho; ++c)
          l3 += Rational(R.cubic(a, b, c)) * Lq[a] * Lq[b] * Lq[c];
    }
    const Rational want = l3 / 6 + c2l / 12;
    const Rational chi = cy3::chi_bundle3(line_bundle_ch(Lq, R), X);
    rr.check(chi == want, [&] { return Triple{list_str(L), str(want), str(chi)}; });
    const Rational n = cy3::gft_s0_intersection3(Lq, X);
    gft.check(n == chi, [&] { return Triple{list_str(L), str(chi), str(n)}; });
    RationalVec neg = Lq;
    for (auto& x : neg)
      x = -x;
    const Rational chi_neg = cy3::chi_bundle3(line_bundle_ch(neg, R), X);
    serre.check(chi_neg == -chi, [&] {
      return Triple{list_str(L), str(Rational(-chi)), str(chi_neg)};
    });
    integral.check(is_integer(chi), [&] { return Triple{list_str(L), "integer", str(chi)}; });

    std::size_t i = 0;
    while (i < L.size() && L[i] == M)
      L[i++] = -M;
    if (i == L.size())
      break;
    ++L[i];
  }
}

// ---------------------------------------------------------------- quant

const std::vector<std::pair<std::string, quant::cplx>>& standard_taus() {
  static const std::vector<std::pair<std::string, quant::cplx>> taus = {
      {"i", {0.0, 1.0}}, {"1/2+i", {0.5, 1.0}}, {"2i", {0.0, 2.0}}};
  return taus;
}

void suite_quant_bs(const PlannedSuite& s, Report& r) {
  const double tol = param_d(s, "tol");
  for (const auto& [name, tau] : standard_taus()) {
    Sweep pos(r, "BS fibres at j/k, tau = " + name, fmt_double(quant::kRootTol));
    Sweep hol(r, "holonomy closed form at BS fibres, tau = " + name,
              fmt_double(quant::kQuadratureTol));
    for (int k = 1; k <= param(s, "max_level"); ++k) {
      const auto M = quant::make_torus(tau, k);
      std::vector<double> roots;
      std::string err;
      try {
        roots = quant::find_bs_fibres(M, tol);
      } catch (const Error& e) {
        err = e.what();
      }
      const auto exact = cy1::bs_points(k);
      double worst = roots.size() == exact.size() ? 0.0 : INFINITY;
      double worst_hol = 0.0;
      for (std::size_t j = 0; j < roots.size() && j < exact.size(); ++j) {
        worst = std::max(worst, std::abs(roots[j] - exact[j].get_d()));
        worst_hol = std::max(worst_hol, quant::holonomy_discrepancy(M, roots[j]));
      }
      pos.check(worst <= quant::kRootTol, [&] {
        return Triple{"k=" + std::to_string(k), std::to_string(k) + " roots at j/k",
                      err.empty() ? "max error " + fmt_double(worst) : err};
      });
      hol.check(worst_hol < quant::kQuadratureTol, [&] {
        return Triple{"k=" + std::to_string(k), "< " + fmt_double(quant::kQuadratureTol),
                      fmt_double(worst_hol)};
      });
    }
  }
}

void suite_quant_holonomy(const PlannedSuite& s, Report& r) {
  Rng g(static_cast<std::uint64_t>(param(s, "seed")));
  Sweep sw(r, "|quadrature − exp(2πikt)|", fmt_double(quant::kQuadratureTol));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (long i = 0; i < param(s, "samples"); ++i) {
    const int k = static_cast<int>(uniform(g, 1, param(s, "max_level")));
    const double t = unit(g);
    const auto& tau = standard_taus()[static_cast<std::size_t>(i) % standard_taus().size()];
    const double d = quant::holonomy_discrepancy(quant::make_torus(tau.second, k), t);
    sw.check(d < quant::kQuadratureTol, [&] {
      return Triple{"k=" + std::to_string(k) + " t=" + fmt_double(t) + " tau=" + tau.first,
                    "< " + fmt_double(quant::kQuadratureTol), fmt_double(d)};
    });
  }
}

void suite_quant_theta(const PlannedSuite& s, Report& r) {
  for (const auto& [name, tau] : standard_taus()) {
    Sweep sw(r, "rank of level-k theta values = k, tau = " + name,
             fmt_double(quant::kRankThreshold));
    for (int k = 1; k <= param(s, "max_level"); ++k) {
      int rank = -1;
      std::string err;
      try {
        rank = quant::theta_basis_rank(quant::make_torus(tau, k), 8 * k).rank;
      } catch (const Error& e) {
        err = e.what();
      }
      sw.check(rank == k, [&] {
        return Triple{"k=" + std::to_string(k), std::to_string(k),
                      err.empty() ? std::to_string(rank) : err};
      });
    }
  }
}

void suite_quant_phase(const PlannedSuite& s, Report& r) {
  const int samples = static_cast<int>(param(s, "samples"));
  const long B = param(s, "bound");
  for (const auto& [name, tau] : standard_taus()) {
    const auto M = quant::make_torus(tau, 1);
    Sweep line(r, "phase constant along rational lines, tau = " + name, "1.000e-12");
    for (long a = -B; a <= B; ++a)
      for (long b = -B; b <= B; ++b) {
        if (std::gcd(a, b) != 1)
          continue;
        const double dev = quant::phase_deviation(
            quant::phase_map_curve(M, quant::line_curve(a, b, samples)));
        line.check(dev < 1e-12, [&] {
          return Triple{"(" + std::to_string(a) + "," + std::to_string(b) + ")", "< 1.000e-12",
                        fmt_double(dev)};
        });
      }
    const auto circle = quant::circle_curve({0.5, 0.5}, 0.25, samples);
    const long turn = quant::winding_number(quant::tangent_directions(M, circle));
    const long maslov = quant::winding_number(quant::phase_map_curve(M, circle));
    single(r, "circle tangent turning number, tau = " + name, "radius 1/4", "1",
           std::to_string(turn), turn == 1);
    single(r, "circle phase-map winding (Maslov index), tau = " + name, "radius 1/4", "2",
           std::to_string(maslov), maslov == 2);
    Sweep mono(r, "special coordinate u(t) strictly decreasing, tau = " + name);
    double prev = quant::special_coordinates(M, 0.0);
    for (int i = 1; i < samples; ++i) {
      const double t = static_cast<double>(i) / samples;
      const double u = quant::special_coordinates(M, t);
      mono.check(u < prev, [&] {
        return Triple{"t=" + fmt_double(t), "< " + fmt_double(prev), fmt_double(u)};
      });
      prev = u;
    }
  }
}

// ---------------------------------------------------------------- fixtures

void suite_fixtures(const Manifest& m, const PlannedSuite& s, Report& r) {
  const FixtureEntry& f = m.fixtures[s.fixture];
  std::optional<Fixture> fx;
  try {
    fx.emplace(fixture_from_json(f.document));
  } catch (const Error& e) {
    single(r, "descriptor loads", f.path.string(), "valid descriptor",
           std::string(mirlat::to_string(e.kind())) + ": " + e.what(), false);
    return;
  }
  single(r, "descriptor loads", f.path.string(), "valid descriptor", "valid descriptor", true);
  bool same = false;
  if (const auto* k = std::get_if<k3::K3Descriptor>(&*fx)) {
    const auto back = k3_from_json(json::parse(k3_to_json(*k).dump()));
    same = back.label == k->label && back.ring == k->ring && back.roots == k->roots;
  } else {
    const auto& c = std::get<cy3::CY3Descriptor>(*fx);
    const auto back = cy3_from_json(json::parse(cy3_to_json(c).dump()));
    same = back.label == c.label && back.ring == c.ring;
  }
  single(r, "JSON round trip", f.path.string(), "identical descriptor",
         same ? "identical descriptor" : "differs", same);
}

void dispatch(const Manifest& m, const PlannedSuite& s, Report& r) {
  static const std::map<std::string, std::function<void(const Manifest&, const PlannedSuite&,
                                                        Report&)>>
      table = {
          {"fixtures", suite_fixtures},
          {"cy1.quantization", [](auto&, auto& s, auto& r) { suite_cy1_quantization(s, r); }},
          {"cy1.intersection", [](auto&, auto& s, auto& r) { suite_cy1_intersection(s, r); }},
          {"cy1.isometry", [](auto&, auto& s, auto& r) { suite_cy1_isometry(s, r); }},
          {"cy1.homomorphism", [](auto&, auto& s, auto& r) { suite_cy1_homomorphism(s, r); }},
          {"cy1.atiyah", [](auto&, auto& s, auto& r) { suite_cy1_atiyah(s, r); }},
          {"k3.theorem", [](auto&, auto& s, auto& r) { suite_k3_theorem(s, r); }},
          {"k3.lattice", suite_k3_lattice},
          {"k3.reflections", suite_k3_reflections},
          {"cy3.isometry", suite_cy3_isometry},
          {"cy3.skew", suite_cy3_skew},
          {"cy3.chi", suite_cy3_chi},
          {"quant.bs", [](auto&, auto& s, auto& r) { suite_quant_bs(s, r); }},
          {"quant.holonomy", [](auto&, auto& s, auto& r) { suite_quant_holonomy(s, r); }},
          {"quant.theta", [](auto&, auto& s, auto& r) { suite_quant_theta(s, r); }},
          {"quant.phase", [](auto&, auto& s, auto& r) { suite_quant_phase(s, r); }},
      };
  auto it = table.find(s.name);
  if (it == table.end())
    fail(ErrorKind::InvalidArgument, "no runner for suite " + s.name);
  it->second(m, s, r);
}

} // namespace

Report run_suite(const Manifest& m, const PlannedSuite& s) {
  Report r;
  r.suite = s.id;
  const auto start = std::chrono::steady_clock::now();
  try {
    dispatch(m, s, r);
  } catch (const std::exception& e) {
    single(r, "suite completed", s.id, "no exception", std::string("exception: ") + e.what(),
           false);
  }
  r.duration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.passed = true;
  for (const auto& rec : r.records)
    r.passed = r.passed && rec.ok;
  return r;
}

VerifyOutcome run_verify(const Manifest& m) {
  const auto plan = run_plan(m);
  VerifyOutcome o;
  o.reports.resize(plan.size());
  const long n = static_cast<long>(plan.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i)
    o.reports[i] = run_suite(m, plan[i]);
  o.exit_code = o.failed_suites() == 0 ? 0 : 1;
  return o;
}

long VerifyOutcome::passed_suites() const {
  return std::count_if(reports.begin(), reports.end(), [](const Report& r) { return r.passed; });
}
long VerifyOutcome::failed_suites() const {
  return static_cast<long>(reports.size()) - passed_suites();
}
long VerifyOutcome::total_checks() const {
  long n = 0;
  for (const auto& r : reports)
    n += r.checks;
  return n;
}
long VerifyOutcome::failed_checks() const {
  long n = 0;
  for (const auto& r : reports)
    n += r.failures;
  return n;
}

json report_to_json(const Report& r, bool with_duration) {
  json recs = json::array();
  for (const auto& c : r.records)
    recs.push_back({{"label", c.label},
                    {"input", c.input},
                    {"expected", c.expected},
                    {"got", c.got},
                    {"tolerance", c.tolerance},
                    {"ok", c.ok}});
  json j{{"suite", r.suite},
         {"status", r.passed ? "pass" : "fail"},
         {"checks", r.checks},
         {"failures", r.failures},
         {"records", recs}};
  if (with_duration)
    j["duration_ms"] = r.duration_ms;
  return j;
}

json outcome_to_json(const VerifyOutcome& o, bool with_duration) {
  json reps = json::array();
  for (const auto& r : o.reports)
    reps.push_back(report_to_json(r, with_duration));
  return {{"reports", reps},
          {"summary",
           {{"suites", o.reports.size()},
            {"passed", o.passed_suites()},
            {"failed", o.failed_suites()},
            {"checks", o.total_checks()},
            {"failed_checks", o.failed_checks()}}},
          {"exit_code", o.exit_code}};
}

std::string outcome_to_text(const VerifyOutcome& o) {
  std::ostringstream out;
  for (const auto& r : o.reports) {
    char line[256];
    std::snprintf(line, sizeof line, "%-5s %-36s %7ld/%-7ld checks  %9.1f ms\n",
                  r.passed ? "PASS" : "FAIL", r.suite.c_str(), r.checks - r.failures, r.checks,
                  r.duration_ms);
    out << line;
    for (const auto& c : r.records)
      if (!c.ok)
        out << "      x " << c.label << "\n        input:    " << c.input
            << "\n        expected: " << c.expected << "\n        got:      " << c.got
            << "\n        tolerance: " << c.tolerance << '\n';
  }
  out << "summary: " << o.passed_suites() << " passed, " << o.failed_suites() << " failed, "
      << o.total_checks() - o.failed_checks() << "/" << o.total_checks() << " checks\n";
  return out.str();
}

} // namespace mirlat::io
