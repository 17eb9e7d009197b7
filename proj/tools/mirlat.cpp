// mirlat: command-line front end.
//
//   mirlat <cy1|cy2|cy3|quant|verify> <verb> [flags] [--json]
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "mirlat/cy1.hpp"
#include "mirlat/cy3.hpp"
#include "mirlat/error.hpp"
#include "mirlat/fixtures.hpp"
#include "mirlat/k3.hpp"
#include "mirlat/manifest.hpp"
#include "mirlat/quant.hpp"
#include "mirlat/verify.hpp"

using namespace mirlat;
using io::json;

namespace {

bool g_json = false;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    out.push_back(cur);
  if (!s.empty() && s.back() == sep)
    out.emplace_back();
  return out;
}

RationalVec parse_list(const std::string& s) {
  RationalVec v;
  if (s.empty())
    return v;
  for (const auto& part : split(s, ','))
    v.push_back(parse_rational(part));
  return v;
}

std::vector<std::int64_t> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<std::int64_t> v;
  for (const auto& q : parse_list(s))
    v.push_back(to_int64(q, what));
  return v;
}

// "r;c1,...;ch2" style: blocks separated by ';', entries by ','.
GradedVector parse_blocks(const std::string& s) {
  std::vector<RationalVec> blocks;
  for (const auto& b : split(s, ';'))
    blocks.push_back(parse_list(b));
  return GradedVector(std::move(blocks));
}

quant::cplx parse_tau(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2)
    fail(ErrorKind::Parse, "tau must be given as a,b for a + b i");
  try {
    return {std::stod(parts[0]), std::stod(parts[1])};
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "cannot parse tau \"" + s + "\"");
  }
}

RingDescriptor::IntMatrix parse_matrix(const std::string& s) {
  RingDescriptor::IntMatrix m;
  for (const auto& row : split(s, ';'))
    m.push_back(parse_int_list(row, "matrix entry"));
  return m;
}

std::string blocks_text(const GradedVector& u) {
  std::string s;
  for (int i = 0; i <= u.dim(); ++i) {
    if (i)
      s += ";";
    for (std::size_t j = 0; j < u.block(i).size(); ++j)
      s += (j ? "," : "") + to_string(u.block(i)[j]);
  }
  return s;
}

std::string list_text(const RationalVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + to_string(v[i]);
  return s;
}

std::string list_text(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

json rationals_json(const RationalVec& v) {
  json a = json::array();
  for (const auto& q : v)
    a.push_back(io::rational_to_json(q));
  return a;
}

// Prints the text form, or the JSON form under --json.
void emit(const std::string& text, const json& j) {
  if (g_json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text << '\n';
}

std::filesystem::path fixture_path(const std::string& name) {
  return io::resolve_fixture(name, std::filesystem::current_path());
}

k3::K3Descriptor load_k3(const std::string& name) {
  return io::k3_from_json(io::load_json_file(fixture_path(name)));
}

cy3::CY3Descriptor load_cy3(const std::string& name) {
  return io::cy3_from_json(io::load_json_file(fixture_path(name)));
}

// a[s0] + b[e'] with the sign of b folded in
std::string two_term(const std::string& a, const Rational& b) {
  return a + "[s0] " + (b < 0 ? "- " + to_string(Rational(-b)) : "+ " + to_string(b)) + "[e']";
}

std::string cycle_text(const cy1::CycleClass& c) {
  return two_term(std::to_string(c.s0), Rational(c.e));
}

// ---------------------------------------------------------------- cy1

int cy1_intersect(const std::string& a, const std::string& b) {
  const auto va = parse_int_list(a, "class a"), vb = parse_int_list(b, "class b");
  if (va.size() != 2 || vb.size() != 2)
    fail(ErrorKind::Parse, "classes are given as r,d");
  const cy1::CycleClass x{va[0], va[1]}, y{vb[0], vb[1]};
  const std::int64_t i = cy1::intersection(x, y);
  emit(cycle_text(x) + " . " + cycle_text(y) + " = " + std::to_string(i) + " (" +
           std::to_string(std::abs(i)) + " transverse points)",
       {{"a", va}, {"b", vb}, {"intersection", i}, {"count", std::abs(i)}});
  return 0;
}

int cy1_gft(std::int64_t rank, std::int64_t deg) {
  const auto c = cy1::gft_class({rank, deg});
  const auto sl = cy1::slope_of(c);
  const std::string slope = sl.is_infinite() ? "inf" : to_string(frac(sl.d, sl.r));
  emit("[GFT(E)] = " + cycle_text(c) + ", slope " + slope,
       {{"rank", rank}, {"deg", deg}, {"s0", c.s0}, {"e", c.e}, {"slope", slope}});
  return 0;
}

std::string atiyah_text(const cy1::AtiyahElement& x) {
  std::string s;
  for (const auto& [r, m] : x.multiplicity)
    s += (s.empty() ? "" : " + ") + (m == 1 ? std::string() : std::to_string(m) + " ") + "F_" +
         std::to_string(r);
  return s.empty() ? "0" : s;
}

int cy1_atiyah(int a, int b) {
  const auto t = cy1::atiyah_tensor(a, b);
  json terms = json::object();
  for (const auto& [r, m] : t.multiplicity)
    terms[std::to_string(r)] = m;
  const auto g = cy1::atiyah_gft_class(t);
  emit("F_" + std::to_string(a) + " (x) F_" + std::to_string(b) + " = " + atiyah_text(t) +
           "; GFT class " + cycle_text(g),
       {{"a", a}, {"b", b}, {"terms", terms}, {"rank", t.total_rank()}, {"gft", {g.s0, g.e}}});
  return 0;
}

int cy1_bs(std::int64_t k) {
  const auto pts = cy1::bs_points(k);
  emit(std::to_string(pts.size()) + " Bohr-Sommerfeld fibres: " + list_text(pts),
       {{"level", k}, {"count", pts.size()}, {"points", rationals_json(pts)}});
  return 0;
}

// ---------------------------------------------------------------- cy2

int cy2_rr(const std::string& fixture, const std::string& e1, const std::string& e2) {
  const auto S = load_k3(fixture);
  const GradedVector ch1 = parse_blocks(e1);
  const GradedVector ch2 = e2.empty() ? GradedVector::unit(S.ring) : parse_blocks(e2);
  ch1.check(S.ring);
  ch2.check(S.ring);
  const Rational chi = k3::euler_pairing2(ch1, ch2, S);
  const auto m1 = k3::mukai2(ch1, S), m2 = k3::mukai2(ch2, S);
  json j{{"fixture", S.label},
         {"chi", io::rational_to_json(chi)},
         {"mukai1", io::graded_to_json(m1.graded())},
         {"mukai2", io::graded_to_json(m2.graded())}};
  std::string text = "chi(E1, E2) = " + to_string(chi) + "; m(E1) = " + blocks_text(m1.graded()) +
                     ", m(E2) = " + blocks_text(m2.graded());
  if (m1.graded().is_integral()) {
    const auto d = k3::moduli_dim2(ch1, S);
    j["moduli_dim"] = d;
    text += "; dim M_E1 = " + std::to_string(d);
  }
  emit(text, j);
  return 0;
}

int cy2_gft(std::int64_t l2) {
  const auto S = k3::make_descriptor("L2=" + std::to_string(l2), {{l2}});
  const auto g = k3::gft_class_k3({1}, S);
  const auto n = k3::bs_count_k3(l2);
  emit("[GFT(L)] = " + two_term(std::to_string(g.s0), g.e) + " + [" +
           g.transcendental_tag + "], slope " + to_string(g.slope()) + ", N_L = " +
           std::to_string(n),
       {{"l2", l2},
        {"s0", g.s0},
        {"e", io::rational_to_json(g.e)},
        {"transcendental", g.transcendental_tag},
        {"slope", io::rational_to_json(g.slope())},
        {"bs_count", n}});
  return 0;
}

int cy2_verify(const std::string& range) {
  const auto dots = range.find("..");
  if (dots == std::string::npos)
    fail(ErrorKind::Parse, "range must look like 2..40");
  const auto lo = to_int64(parse_rational(range.substr(0, dots)), "range start");
  const auto hi = to_int64(parse_rational(range.substr(dots + 2)), "range end");
  json rows = json::array();
  std::ostringstream text;
  bool all = true;
  for (std::int64_t l2 = lo; l2 <= hi; ++l2) {
    if (l2 % 2 != 0)
      continue;
    const auto r = k3::verify_quantization_k3(l2);
    all = all && r.ok;
    rows.push_back({{"l2", l2}, {"h0", r.h0}, {"bs_count", r.bs_count}, {"ok", r.ok}});
    text << (r.ok ? "ok  " : "FAIL") << "  L^2 = " << l2 << "  h0 = " << r.h0
         << "  N_L = " << r.bs_count << '\n';
  }
  text << (all ? "all equal" : "mismatch found");
  emit(text.str(), {{"rows", rows}, {"ok", all}});
  return all ? 0 : 1;
}

int cy2_reflect(const std::string& fixture, const std::string& root, const std::string& cls) {
  const auto S = load_k3(fixture);
  const auto d = parse_int_list(root, "root"), x = parse_int_list(cls, "class");
  const auto y = k3::reflect_minus2(x, d, S);
  emit("s_delta(" + list_text(x) + ") = " + list_text(y),
       {{"root", d}, {"class", x}, {"image", y}});
  return 0;
}

int cy2_check_h(const std::string& gram, const std::string& e, const std::string& s,
                const std::vector<std::string>& complement) {
  k3::HyperbolicDecomposition H{parse_matrix(gram), parse_int_list(e, "e"),
                                parse_int_list(s, "s"), {}};
  for (const auto& c : complement)
    H.complement.push_back(parse_int_list(c, "complement vector"));
  const auto rep = k3::check_main_condition(H);
  json checks = json::array();
  std::ostringstream text;
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    text << (c.ok ? "ok    " : "FAIL  ") << c.name << (c.ok || c.detail.empty() ? "" : ": " + c.detail)
         << '\n';
  }
  text << (rep.ok() ? "condition holds" : "condition fails");
  emit(text.str(), {{"checks", checks}, {"ok", rep.ok()}});
  return rep.ok() ? 0 : 1;
}

// ---------------------------------------------------------------- cy3

GradedVector cy3_class(const cy3::CY3Descriptor& X, const std::string& bundle,
                       const std::string& ch) {
  if (!ch.empty() && !bundle.empty())
    fail(ErrorKind::Parse, "give either --bundle or --ch, not both");
  if (!ch.empty()) {
    GradedVector u = parse_blocks(ch);
    u.check(X.ring);
    return u;
  }
  RationalVec L = parse_list(bundle);
  if (L.empty())
    L.assign(static_cast<std::size_t>(X.ring.picard_rank()), Rational(0));
  if (L.size() != static_cast<std::size_t>(X.ring.picard_rank()))
    fail(ErrorKind::ArityMismatch, "divisor has " + std::to_string(L.size()) +
                                       " coordinates, Picard rank is " +
                                       std::to_string(X.ring.picard_rank()));
  return line_bundle_ch(L, X.ring);
}

int cy3_chi(const std::string& fixture, const std::string& bundle, const std::string& ch) {
  const auto X = load_cy3(fixture);
  const GradedVector u = cy3_class(X, bundle, ch);
  const Rational chi = cy3::chi_bundle3(u, X);
  emit("chi = " + to_string(chi) + "  (ch = " + blocks_text(u) + ")",
       {{"fixture", X.label}, {"ch", io::graded_to_json(u)}, {"chi", io::rational_to_json(chi)}});
  return 0;
}

int cy3_mirror(const std::string& fixture, const std::string& bundle, const std::string& ch) {
  const auto X = load_cy3(fixture);
  const GradedVector u = cy3_class(X, bundle, ch);
  const auto m = cy3::mirror_cy3(u, X);
  emit("mir = " + to_string(m.s0) + "[s0] + psi1(" + list_text(m.psi1) + ") + psi2(" +
           list_text(m.psi2) + ") + " + to_string(m.e) + "[e']",
       {{"fixture", X.label},
        {"s0", io::rational_to_json(m.s0)},
        {"psi1", rationals_json(m.psi1)},
        {"psi2", rationals_json(m.psi2)},
        {"e", io::rational_to_json(m.e)}});
  return 0;
}

int cy3_verify_isometry(const std::string& fixture, long samples, std::uint64_t seed) {
  const auto X = load_cy3(fixture);
  std::mt19937_64 g(seed);
  std::uniform_int_distribution<std::int64_t> dist(-6, 6);
  const auto rho = static_cast<std::size_t>(X.ring.picard_rank());
  auto random_ch = [&] {
    cy3::ChernData c{dist(g), RationalVec(rho), RationalVec(rho), 0};
    for (auto& x : c.c1)
      x = dist(g);
    for (auto& x : c.c2)
      x = dist(g);
    c.c3 = dist(g);
    return cy3::ch_from_chern(c, X);
  };
  long failures = 0;
  json bad = json::array();
  for (long i = 0; i < samples; ++i) {
    const auto u = random_ch(), v = random_ch();
    const auto r = cy3::mirror_isometry_check3(u, v, X);
    if (!r.ok) {
      ++failures;
      if (bad.size() < 10)
        bad.push_back({{"u", io::graded_to_json(u)},
                       {"v", io::graded_to_json(v)},
                       {"mirror", io::rational_to_json(r.mirror_side)},
                       {"exotic", io::rational_to_json(r.exotic_side)}});
    }
  }
  emit(std::to_string(samples - failures) + "/" + std::to_string(samples) +
           " pairs satisfy (mir u, mir v) = <u, v> on " + X.label,
       {{"fixture", X.label}, {"samples", samples}, {"failures", failures}, {"failing", bad}});
  return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------- quant

int quant_bs(int level, const std::string& tau, double tol) {
  const auto M = quant::make_torus(parse_tau(tau), level);
  const auto roots = quant::find_bs_fibres(M, tol);
  json j = json::array();
  std::ostringstream text;
  text << roots.size() << " Bohr-Sommerfeld fibres:";
  for (double t : roots) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " %.12f", t);
    text << buf;
    j.push_back(t);
  }
  emit(text.str(), {{"level", level}, {"roots", j}});
  return 0;
}

int quant_theta_rank(int level, const std::string& tau, int samples) {
  const auto M = quant::make_torus(parse_tau(tau), level);
  const auto r = quant::theta_basis_rank(M, samples > 0 ? samples : 8 * level);
  std::ostringstream text;
  text << "rank " << r.rank << " (level " << level << "); singular values:";
  for (double s : r.singular_values)
    text << ' ' << s;
  emit(text.str(), {{"level", level}, {"rank", r.rank}, {"singular_values", r.singular_values}});
  return 0;
}

int quant_phase(const std::string& file, const std::string& tau, bool reversed) {
  const json j = io::load_json_file(file);
  if (!j.is_array())
    fail(ErrorKind::Parse, "curve file must be a JSON list of [x, y] pairs");
  std::vector<std::array<double, 2>> pts;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      fail(ErrorKind::Parse, "curve file must be a JSON list of [x, y] pairs");
    pts.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  const auto M = quant::make_torus(parse_tau(tau), 1);
  const auto c = quant::make_curve(std::move(pts), reversed);
  const auto phases = quant::phase_map_curve(M, c);
  const double dev = quant::phase_deviation(phases);
  const long turn = quant::winding_number(quant::tangent_directions(M, c));
  const long maslov = quant::winding_number(phases);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "phase deviation %.3e; tangent turning number %ld; phase winding %ld", dev, turn,
                maslov);
  emit(buf, {{"deviation", dev}, {"turning_number", turn}, {"phase_winding", maslov},
             {"samples", phases.size()}});
  return 0;
}

// ---------------------------------------------------------------- verify

int verify(const std::string& manifest, const std::string& out) {
  const auto path = manifest.empty() ? io::default_manifest_path() : std::filesystem::path(manifest);
  const auto m = io::parse_manifest(path);
  const auto outcome = io::run_verify(m);
  const json j = io::outcome_to_json(outcome);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f)
      fail(ErrorKind::InvalidArgument, "cannot write " + out);
    f << j.dump(2) << '\n';
  }
  if (g_json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << io::outcome_to_text(outcome);
  return outcome.exit_code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice and numerical checks for mirror symmetry of Calabi-Yau varieties"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto leaf = [&](CLI::App* parent, const char* name, const char* desc) {
    CLI::App* c = parent->add_subcommand(name, desc);
    c->add_flag("--json", g_json, "Machine-readable JSON output");
    return c;
  };

  // cy1
  auto* cy1 = app.add_subcommand("cy1", "Elliptic curves");
  cy1->require_subcommand(1);
  static std::string a, b, fixture, bundle, ch, ch2, tau = "0,1", file, manifest, out, range,
                                                                root, cls, gram, e_vec, s_vec;
  static std::vector<std::string> complement;
  static std::int64_t rank = 1, deg = 0, level = 1, l2 = 2;
  static int ia = 1, ib = 1, samples = 0;
  static long nsamples = 1000;
  static std::uint64_t seed = 1;
  static double tol = 1e-10;
  static bool reversed = false;
  {
    auto* c = leaf(cy1, "intersect", "Intersection number of r1[s0]+d1[e'] and r2[s0]+d2[e']");
    c->add_option("--a", a, "r1,d1")->required();
    c->add_option("--b", b, "r2,d2")->required();
    c->callback([&] { action = [] { return cy1_intersect(a, b); }; });
  }
  {
    auto* c = leaf(cy1, "gft", "Class of the geometric Fourier transform of a bundle");
    c->add_option("--rank", rank)->required();
    c->add_option("--deg", deg)->required();
    c->callback([&] { action = [] { return cy1_gft(rank, deg); }; });
  }
  {
    auto* c = leaf(cy1, "atiyah", "Decompose F_a (x) F_b");
    c->add_option("--a", ia)->required()->check(CLI::PositiveNumber);
    c->add_option("--b", ib)->required()->check(CLI::PositiveNumber);
    c->callback([&] { action = [] { return cy1_atiyah(ia, ib); }; });
  }
  {
    auto* c = leaf(cy1, "bs", "Bohr-Sommerfeld fibres of L^k");
    c->add_option("--level", level)->required()->check(CLI::PositiveNumber);
    c->callback([&] { action = [] { return cy1_bs(level); }; });
  }

  // cy2
  auto* cy2 = app.add_subcommand("cy2", "K3 surfaces");
  cy2->require_subcommand(1);
  {
    auto* c = leaf(cy2, "rr", "Riemann-Roch chi(E1, E2) from Chern characters r;c1;ch2");
    c->add_option("--fixture", fixture)->required();
    c->add_option("--ch", ch, "ch(E1) as r;c1,..;ch2 with p/q entries")->required();
    c->add_option("--ch2", ch2, "ch(E2), default O_S");
    c->callback([&] { action = [] { return cy2_rr(fixture, ch, ch2); }; });
  }
  {
    auto* c = leaf(cy2, "gft", "GFT(L) class and Bohr-Sommerfeld count for L^2 = N");
    c->add_option("--l2", l2)->required();
    c->callback([&] { action = [] { return cy2_gft(l2); }; });
  }
  {
    auto* c = leaf(cy2, "verify", "h0(L) = N_L over a range of even L^2");
    c->add_option("--l2-range", range)->required();
    c->callback([&] { action = [] { return cy2_verify(range); }; });
  }
  {
    auto* c = leaf(cy2, "reflect", "Reflect a divisor class in a -2 root");
    c->add_option("--fixture", fixture)->required();
    c->add_option("--root", root)->required();
    c->add_option("--class", cls)->required();
    c->callback([&] { action = [] { return cy2_reflect(fixture, root, cls); }; });
  }
  {
    auto* c = leaf(cy2, "check-H", "Check a hyperbolic sublattice decomposition");
    c->add_option("--gram", gram, "rows separated by ';'")->required();
    c->add_option("--e", e_vec)->required();
    c->add_option("--s", s_vec)->required();
    c->add_option("--complement", complement, "basis vectors of the complement");
    c->callback([&] { action = [] { return cy2_check_h(gram, e_vec, s_vec, complement); }; });
  }

  // cy3
  auto* cy3 = app.add_subcommand("cy3", "Calabi-Yau threefolds");
  cy3->require_subcommand(1);
  {
    auto* c = leaf(cy3, "chi", "Holomorphic Euler characteristic");
    c->add_option("--fixture", fixture)->required();
    c->add_option("--bundle", bundle, "divisor L of O(L), comma separated");
    c->add_option("--ch", ch, "Chern character r;c1;ch2;ch3");
    c->callback([&] { action = [] { return cy3_chi(fixture, bundle, ch); }; });
  }
  {
    auto* c = leaf(cy3, "mirror", "Mirror class in H^3 of the mirror");
    c->add_option("--fixture", fixture)->required();
    c->add_option("--bundle", bundle, "divisor L of O(L), comma separated");
    c->add_option("--ch", ch, "Chern character r;c1;ch2;ch3");
    c->callback([&] { action = [] { return cy3_mirror(fixture, bundle, ch); }; });
  }
  {
    auto* c = leaf(cy3, "verify-isometry", "Random check of the mirror isometry");
    c->add_option("--fixture", fixture)->required();
    c->add_option("--samples", nsamples)->check(CLI::PositiveNumber);
    c->add_option("--seed", seed);
    c->callback([&] { action = [] { return cy3_verify_isometry(fixture, nsamples, seed); }; });
  }

  // quant
  auto* qu = app.add_subcommand("quant", "Flat-torus numerics");
  qu->require_subcommand(1);
  {
    auto* c = leaf(qu, "bs", "Bohr-Sommerfeld fibres by root finding");
    c->add_option("--level", level)->required()->check(CLI::PositiveNumber);
    c->add_option("--tau", tau, "a,b for tau = a + b i");
    c->add_option("--tol", tol);
    c->callback([&] { action = [] { return quant_bs(static_cast<int>(level), tau, tol); }; });
  }
  {
    auto* c = leaf(qu, "theta-rank", "Numerical rank of the level-k theta functions");
    c->add_option("--level", level)->required()->check(CLI::PositiveNumber);
    c->add_option("--tau", tau, "a,b for tau = a + b i");
    c->add_option("--samples", samples, "sample points (default 8k)");
    c->callback(
        [&] { action = [] { return quant_theta_rank(static_cast<int>(level), tau, samples); }; });
  }
  {
    auto* c = leaf(qu, "phase", "Phase map along a closed curve");
    c->add_option("--curve", file, "JSON list of [x, y] pairs")->required();
    c->add_option("--tau", tau, "a,b for tau = a + b i");
    c->add_flag("--reversed", reversed);
    c->callback([&] { action = [] { return quant_phase(file, tau, reversed); }; });
  }

  // verify
  {
    auto* c = leaf(&app, "verify", "Run the property suites of a manifest");
    c->add_option("--manifest", manifest, "manifest file (default: fixtures/manifest.json)");
    c->add_option("--out", out, "also write the JSON report here");
    c->callback([&] { action = [] { return verify(manifest, out); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == ErrorKind::Consistency ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
