// Acceptance run: one PASS/FAIL line per criterion, each checked against a
// test-side oracle and a wall-clock budget. Exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "mirlat/cy1.hpp"
#include "mirlat/cy3.hpp"
#include "mirlat/error.hpp"
#include "mirlat/fixtures.hpp"
#include "mirlat/k3.hpp"
#include "mirlat/quant.hpp"

using namespace mirlat;
using quant::cplx;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kTaus[] = {{0.0, 1.0}, {0.5, 1.0}, {0.0, 2.0}};

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int g_failed = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && s >= budget_s) {
    o.ok = false;
    o.note = "over the " + std::to_string(budget_s) + " s budget";
  }
  std::printf("%s  [%d] %-64s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", id, title, s,
              o.note.empty() ? "" : "  ", o.note.c_str());
  if (!o.ok)
    ++g_failed;
}

// ---- curve oracles

// Meeting points of two closed geodesics on R²/Z², found exactly.
std::size_t torus_line_meets(std::int64_t r1, std::int64_t d1, std::int64_t r2, std::int64_t d2) {
  const Rational det = Rational(r2 * d1 - r1 * d2);
  std::vector<std::pair<Rational, Rational>> pts;
  auto wrap = [](Rational x) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rational(x - f);
  };
  const std::int64_t bm = std::abs(r1) + std::abs(r2) + 1, bn = std::abs(d1) + std::abs(d2) + 1;
  for (std::int64_t m = -bm; m <= bm; ++m)
    for (std::int64_t n = -bn; n <= bn; ++n) {
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

using Laurent = std::map<int, std::int64_t>;

Laurent character(int r) {
  Laurent p;
  for (int e = r - 1; e >= 1 - r; e -= 2)
    p[e] += 1;
  return p;
}

Laurent character(const cy1::AtiyahElement& x) {
  Laurent p;
  for (const auto& [r, m] : x.multiplicity)
    for (const auto& [e, c] : character(r))
      p[e] += c * m;
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
  return p;
}

Laurent times(const Laurent& a, const Laurent& b) {
  Laurent c;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b)
      c[ea + eb] += ca * cb;
  std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
  return c;
}

// ---- threefold oracles, written out in coordinates: block 2 is dual to the
// divisor basis, so D·C = Σ D_a C_a and (D·D')_c = Σ d_abc D_a D'_b.

struct Ch3 {
  Rational r, c3;
  RationalVec c1, c2;   // divisor part, curve part
};

RationalVec dd(const RationalVec& a, const RationalVec& b, const cy3::CY3Descriptor& X) {
  const int n = X.ring.picard_rank();
  RationalVec out(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < n; ++c)
        out[c] += a[i] * b[j] * Rational(X.ring.cubic(i, j, c));
  return out;
}

Rational dot(const RationalVec& a, const RationalVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

// ch from integral Chern data (r, c1, c2, c3)
Ch3 ch_hand(std::int64_t r, const RationalVec& c1, const RationalVec& c2, std::int64_t c3,
            const cy3::CY3Descriptor& X) {
  const RationalVec c1c1 = dd(c1, c1, X);
  Ch3 u{Rational(r), 0, c1, RationalVec(c1.size())};
  for (std::size_t a = 0; a < c1.size(); ++a)
    u.c2[a] = c1c1[a] / 2 - c2[a];
  u.c3 = (dot(c1, c1c1) - 3 * dot(c1, c2) + 3 * Rational(c3)) / 6;
  return u;
}

// χ(E, F) = [ch(E)* ch(F) (1 + c2/12)]_6
Rational exotic_hand(const Ch3& u, const Ch3& v, const cy3::CY3Descriptor& X) {
  RationalVec c2X(u.c1.size());
  for (std::size_t a = 0; a < c2X.size(); ++a)
    c2X[a] = Rational(X.ring.c2()[a]);
  RationalVec w1(u.c1.size());
  for (std::size_t a = 0; a < w1.size(); ++a)
    w1[a] = u.r * v.c1[a] - v.r * u.c1[a];
  return u.r * v.c3 - v.r * u.c3 - dot(u.c1, v.c2) + dot(u.c2, v.c1) + dot(w1, c2X) / 12;
}

GradedVector graded(const Ch3& u) { return GradedVector::threefold(u.r, u.c1, u.c2, u.c3); }

std::vector<Ch3> random_classes(std::mt19937_64& g, const cy3::CY3Descriptor& X, int n) {
  std::uniform_int_distribution<int> d(-6, 6);
  const int rho = X.ring.picard_rank();
  std::vector<Ch3> out;
  for (int i = 0; i < n; ++i) {
    RationalVec c1(rho), c2(rho);
    for (auto& x : c1)
      x = d(g);
    for (auto& x : c2)
      x = d(g);
    out.push_back(ch_hand(d(g), c1, c2, d(g), X));
  }
  return out;
}

cy3::CY3Descriptor load_cy3(const char* file) {
  return io::cy3_from_json(io::load_json_file(io::fixture_dir() / file));
}
cy3::CY3Descriptor quintic() { return load_cy3("quintic.json"); }
cy3::CY3Descriptor bidegree24() { return load_cy3("bidegree24.json"); }

// ---- numerical oracles

// direct level-k theta with characteristic c at z = x + yτ, normalized
cplx theta_hand(const cplx& tau, int k, int c, double x, double y) {
  const cplx z(x + y * tau.real(), y * tau.imag());
  const cplx I(0.0, 1.0);
  cplx s = 0.0;
  for (int n = -40; n <= 40; ++n) {
    const double m = n + static_cast<double>(c) / k;
    s += std::exp(I * kPi * static_cast<double>(k) * tau * m * m + 2.0 * kPi * I * static_cast<double>(k) * m * z);
  }
  return s * std::exp(-kPi * k * tau.imag() * y * y);
}

// rank by modified Gram–Schmidt on the rows, relative threshold
int row_rank(std::vector<std::vector<cplx>> rows, double rel) {
  double scale = 0.0;
  for (const auto& r : rows) {
    double n = 0.0;
    for (const auto& z : r)
      n += std::norm(z);
    scale = std::max(scale, std::sqrt(n));
  }
  int rank = 0;
  std::vector<std::vector<cplx>> basis;
  for (auto& r : rows) {
    for (const auto& b : basis) {
      cplx p = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i)
        p += std::conj(b[i]) * r[i];
      for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= p * b[i];
    }
    double n = 0.0;
    for (const auto& z : r)
      n += std::norm(z);
    n = std::sqrt(n);
    if (n > rel * scale) {
      for (auto& z : r)
        z /= n;
      basis.push_back(r);
      ++rank;
    }
  }
  return rank;
}

} // namespace

int main() {
  criterion(1, "CY1 quantization: #BS points = h0(L^k), k = 1..50", 1.0, [](Outcome& o) {
    for (int k = 1; k <= 50; ++k) {
      const auto pts = cy1::bs_points(k);
      // h0 = χ = deg for k > 0 on an elliptic curve (td = 1)
      o.require(static_cast<int>(pts.size()) == k, "count at k=" + std::to_string(k));
      for (int j = 0; j < static_cast<int>(pts.size()) && j < k; ++j)
        o.require(pts[j] == frac(j, k), "point j/k at k=" + std::to_string(k));
      const auto M = quant::make_torus({0.0, 1.0}, k);
      for (const Rational& t : pts)
        o.require(std::abs(quant::holonomy_character(M, t.get_d()) - 1.0) < 1e-9,
                  "holonomy at a BS point");
    }
  });

  criterion(2, "intersection numbers match brute force, |r|,|d| <= 5", 5.0, [](Outcome& o) {
    long cases = 0;
    for (std::int64_t r1 = -5; r1 <= 5; ++r1)
      for (std::int64_t d1 = -5; d1 <= 5; ++d1)
        for (std::int64_t r2 = -5; r2 <= 5; ++r2)
          for (std::int64_t d2 = -5; d2 <= 5; ++d2) {
            if (std::gcd(r1, d1) != 1 || std::gcd(r2, d2) != 1)
              continue;
            const std::int64_t got = cy1::intersection_count({r1, d1}, {r2, d2});
            const std::int64_t want =
                r1 * d2 == r2 * d1 ? 0 : static_cast<std::int64_t>(torus_line_meets(r1, d1, r2, d2));
            o.require(got == want, "(" + std::to_string(r1) + "," + std::to_string(d1) + ")·(" +
                                       std::to_string(r2) + "," + std::to_string(d2) + ")");
            o.require(cy1::intersection({r1, d1}, {r2, d2}) == r1 * d2 - r2 * d1, "signed form");
            ++cases;
          }
    o.require(cases > 0, "no cases");
  });

  criterion(3, "K3: h0(L) = N_L for even L^2 = 0..40", 1.0, [](Outcome& o) {
    for (std::int64_t l2 = 0; l2 <= 40; l2 += 2) {
      // Riemann–Roch on K3: χ(L) = L²/2 + 2, and h0 = χ for nef L
      const std::int64_t want = l2 / 2 + 2;
      o.require(k3::h0_k3(l2) == want, "h0 at L^2=" + std::to_string(l2));
      o.require(k3::bs_count_k3(l2) == want, "N_L at L^2=" + std::to_string(l2));
      o.require(k3::verify_quantization_k3(l2).ok, "verifier at L^2=" + std::to_string(l2));
      if (l2 > 0) {
        const auto S = k3::make_descriptor("L", {{l2}});
        const auto chi = k3::euler_pairing2(GradedVector::unit(S.ring),
                                            line_bundle_ch({1}, S.ring), S);
        o.require(chi == want, "χ(L) by the Mukai pairing");
      }
    }
  });

  criterion(4, "mirror maps are isometries (CY1, quintic, bidegree (2,4))", 5.0, [](Outcome& o) {
    std::mt19937_64 g(2024);
    std::uniform_int_distribution<std::int64_t> d(-50, 50);
    for (int i = 0; i < 1000; ++i) {
      const std::int64_t r1 = d(g), d1 = d(g), r2 = d(g), d2 = d(g);
      const auto a = cy1::mirror_cy1(GradedVector::curve(r1, d1));
      const auto b = cy1::mirror_cy1(GradedVector::curve(r2, d2));
      // χ(E, F) = r_E d_F − r_F d_E on an elliptic curve
      o.require(cy1::intersection(a, b) == r1 * d2 - r2 * d1, "CY1 pair");
    }
    for (const auto& X : {quintic(), bidegree24()}) {
      const auto us = random_classes(g, X, 1000), vs = random_classes(g, X, 1000);
      for (int i = 0; i < 1000; ++i) {
        const auto a = cy3::mirror_cy3(graded(us[i]), X), b = cy3::mirror_cy3(graded(vs[i]), X);
        o.require(cy3::intersection3(a, b) == exotic_hand(us[i], vs[i], X), X.label + " pair");
      }
    }
  });

  criterion(5, "CY3 exotic pairing is skew; chi(O_X) = 0; quintic 5, 15, 35", 1.0, [](Outcome& o) {
    std::mt19937_64 g(77);
    for (const auto& X : {quintic(), bidegree24()}) {
      o.require(cy3::chi_bundle3(GradedVector::unit(X.ring), X) == 0, "χ(O_X)");
      const auto us = random_classes(g, X, 1000);
      for (std::size_t i = 0; i < us.size(); ++i) {
        const auto& u = us[i];
        const auto& v = us[(i + 1) % us.size()];
        o.require(exotic_hand(u, u, X) == 0, "oracle skew");
        const Rational uv = cy3::euler_pairing3(graded(u), graded(v), X);
        o.require(uv == exotic_hand(u, v, X), "pairing value");
        o.require(uv == -cy3::euler_pairing3(graded(v), graded(u), X), "skew");
        o.require(cy3::euler_pairing3(graded(u), graded(u), X) == 0, "isotropic");
      }
    }
    const auto Q = quintic();
    const std::int64_t want[] = {5, 15, 35};
    for (int k = 1; k <= 3; ++k) {
      // 5k³/6 + 50k/12
      o.require(frac(5 * k * k * k, 6) + frac(50 * k, 12) == want[k - 1], "closed form");
      o.require(cy3::chi_bundle3(line_bundle_ch({k}, Q.ring), Q) == want[k - 1],
                "χ(O(" + std::to_string(k) + "))");
    }
  });

  criterion(6, "BS fibres within 1e-9 for k <= 32; holonomy quadrature within 1e-11", 10.0,
            [](Outcome& o) {
              for (const cplx& tau : kTaus)
                for (int k = 1; k <= 32; ++k) {
                  const auto M = quant::make_torus(tau, k);
                  const auto roots = quant::find_bs_fibres(M, 1e-10);
                  o.require(static_cast<int>(roots.size()) == k, "root count");
                  for (std::size_t j = 0; j < roots.size(); ++j)
                    o.require(std::abs(roots[j] - static_cast<double>(j) / k) < 1e-9, "root value");
                  for (int i = 0; i < 16; ++i) {
                    const double t = (i + 0.37) / 16.0;
                    const cplx want = std::polar(1.0, 2.0 * kPi * std::fmod(k * t, 1.0));
                    o.require(std::abs(quant::holonomy_character(M, t) - want) < 1e-11,
                              "holonomy k=" + std::to_string(k));
                  }
                }
            });

  criterion(7, "theta functions span a k-dimensional space, k <= 8, three moduli", 10.0,
            [](Outcome& o) {
              for (const cplx& tau : kTaus)
                for (int k = 1; k <= 8; ++k) {
                  const auto M = quant::make_torus(tau, k);
                  const auto lib = quant::theta_basis_rank(M, 8 * k);
                  o.require(lib.rank == k, "library rank at k=" + std::to_string(k));
                  std::vector<std::vector<cplx>> rows(k);
                  for (const auto& p : quant::theta_sample_points(8 * k))
                    for (int c = 0; c < k; ++c)
                      rows[c].push_back(theta_hand(tau, k, c, p[0], p[1]));
                  o.require(row_rank(rows, 1e-8) == k, "oracle rank at k=" + std::to_string(k));
                }
            });

  criterion(8, "Atiyah ring: Clebsch-Gordan and associativity, indices <= 8", 1.0, [](Outcome& o) {
    for (int a = 1; a <= 8; ++a)
      for (int b = 1; b <= 8; ++b) {
        const auto ab = cy1::atiyah_tensor(a, b);
        o.require(character(ab) == times(character(a), character(b)), "CG rule");
        for (int c = 1; c <= 8; ++c) {
          const auto lhs = cy1::atiyah_multiply(ab, cy1::atiyah_basis(c));
          const auto rhs = cy1::atiyah_multiply(cy1::atiyah_basis(a), cy1::atiyah_tensor(b, c));
          o.require(lhs == rhs, "associativity");
          o.require(character(lhs) == times(times(character(a), character(b)), character(c)),
                    "triple characters");
        }
      }
  });

  criterion(9, "phase map: constant on rational lines, circle turning number 1", 1.0,
            [](Outcome& o) {
              for (const cplx& tau : kTaus) {
                const auto M = quant::make_torus(tau, 1);
                for (long r = -5; r <= 5; ++r)
                  for (long d = -5; d <= 5; ++d) {
                    if (std::gcd(r, d) != 1)
                      continue;
                    const auto ph = quant::phase_map_curve(M, quant::line_curve(r, d, 128));
                    o.require(quant::phase_deviation(ph) < 1e-12, "line deviation");
                    const cplx want = std::polar(1.0, 2.0 * std::arg(cplx(r, 0.0) + static_cast<double>(d) * tau));
                    o.require(std::abs(ph.front() - want) < 1e-12, "line phase value");
                  }
                const auto circle = quant::circle_curve({0.5, 0.5}, 0.1, 256);
                o.require(quant::winding_number(quant::tangent_directions(M, circle)) == 1,
                          "turning number");
              }
            });

  return g_failed == 0 ? 0 : 1;
}
