#include <doctest.h>

#include <cstring>
#include <random>

#include <omp.h>

#include "mirlat/error.hpp"
#include "mirlat/quant.hpp"
#include "mirlat/quant_kernels.hpp"

using namespace mirlat;
using namespace mirlat::quant;

namespace {

template <class T>
bool bitwise_equal(const std::vector<T>& a, const std::vector<T>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(T)) == 0;
}

struct Threads {
  explicit Threads(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
  int saved;
};

} // namespace

TEST_CASE("parallel kernels reproduce the serial reference bit for bit") {
  std::mt19937_64 g(101);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int threads : {1, 2, 4, 7}) {
    Threads guard(threads);
    CAPTURE(threads);
    for (int trial = 0; trial < 5; ++trial) {
      const TorusModel M = make_torus({unit(g) - 0.5, 0.5 + 2.0 * unit(g)}, 1 + trial * 3);

      std::vector<double> ts(997);
      for (auto& t : ts)
        t = unit(g);
      std::vector<double> a(ts.size()), b(ts.size());
      kernels::holonomy_args_serial(M, ts, a);
      kernels::holonomy_args_parallel(M, ts, b);
      CHECK(bitwise_equal(a, b));

      std::vector<kernels::Point2> pts(211);
      for (auto& p : pts)
        p = {unit(g), unit(g)};
      CHECK(bitwise_equal(kernels::theta_values_serial(M, pts),
                          kernels::theta_values_parallel(M, pts)));

      const ParamCurve c = circle_curve({unit(g), unit(g)}, 0.05 + 0.3 * unit(g), 333);
      for (bool rev : {false, true})
        CHECK(bitwise_equal(kernels::tangent_serial(M, c.points, rev),
                            kernels::tangent_parallel(M, c.points, rev)));
    }
  }
}

TEST_CASE("parallel tangent kernel reports degenerate samples like the serial one") {
  Threads guard(3);
  const TorusModel M = make_torus({0.0, 1.0}, 1);
  std::vector<kernels::Point2> pts(40, {0.25, 0.25});
  CHECK_THROWS_AS(kernels::tangent_serial(M, pts, false), Error);
  CHECK_THROWS_AS(kernels::tangent_parallel(M, pts, false), Error);
}

TEST_CASE("results do not depend on the thread count") {
  std::vector<double> roots1, roots4;
  {
    Threads guard(1);
    roots1 = find_bs_fibres(make_torus({0.5, 1.0}, 17), 1e-10);
  }
  {
    Threads guard(4);
    roots4 = find_bs_fibres(make_torus({0.5, 1.0}, 17), 1e-10);
  }
  CHECK(bitwise_equal(roots1, roots4));
}
