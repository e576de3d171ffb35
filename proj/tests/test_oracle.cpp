#include <doctest.h>

#include <cmath>

#include "hpga/oracle.hpp"
#include "support.hpp"

using namespace hpga;
using testsup::Rng;

namespace {

double max_dev(const Multivector& a, const Multivector& b) {
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("matrix representation is an exact algebra homomorphism") {
  for (Space s : {Space::H1, Space::H2, Space::H3}) {
    const Algebra& alg = algebra(s);
    const oracle::MatrixRep& r = oracle::rep(alg);
    const int n = r.n;
    for (unsigned a = 0; a < static_cast<unsigned>(n); ++a)
      for (unsigned b = 0; b < static_cast<unsigned>(n); ++b) {
        auto [mask, sign] = oracle::blade_mul(a, b);
        // M(e_a) M(e_b) == sign * M(e_mask), exactly (integer matrices)
        for (int u = 0; u < n; ++u)
          for (int t = 0; t < n; ++t) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k)
              acc += r.left_mul[a][u * n + k] * r.left_mul[b][k * n + t];
            CHECK(acc == sign * r.left_mul[mask][u * n + t]);
          }
      }
  }
}

TEST_CASE("blade products match the kernel tables exhaustively") {
  for (Space s : {Space::H1, Space::H2, Space::H3}) {
    const Algebra& alg = algebra(s);
    for (unsigned a = 0; a < static_cast<unsigned>(alg.size); ++a)
      for (unsigned b = 0; b < static_cast<unsigned>(alg.size); ++b) {
        auto [mask, sign] = oracle::blade_mul(a, b);
        CHECK(mask == (a ^ b));
        CHECK(sign == alg.gp_sign(a, b));
      }
  }
}

TEST_CASE("rep_product basics") {
  const Algebra& h1 = algebra(Space::H1);
  auto e0 = Multivector::blade(h1, 0b01);
  CHECK(oracle::rep_product(e0, e0)[0] == -1.0);

  // Fig. 2(a) wedge through the matrix representation
  const Algebra& h2 = algebra(Space::H2);
  Multivector a(h2), b(h2);
  a[1] = -1.5; a[2] = 3.0; a[4] = 0.5;
  b[1] = 0.5;  b[2] = 1.0; b[4] = 0.5;
  auto w = oracle::rep_product(a, b).grade(2);
  CHECK(w[0b011] == doctest::Approx(-3.0).epsilon(1e-15));
  CHECK(w[0b101] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(w[0b110] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("rep_product agrees with the kernels on random multivectors") {
  Rng rng(101);
  for (Space s : {Space::H1, Space::H2, Space::H3}) {
    const Algebra& alg = algebra(s);
    for (int iter = 0; iter < 2000; ++iter) {
      auto A = testsup::random_mv(rng, alg);
      auto B = testsup::random_mv(rng, alg);
      CHECK(max_dev(A.gp(B), oracle::rep_product(A, B)) < 1e-12);
    }
  }
}

TEST_CASE("rep_exp basics and agreement with the closed form") {
  const Algebra& h1 = algebra(Space::H1);
  CHECK(max_dev(oracle::rep_exp(Multivector(h1)), Multivector::scalar(h1, 1.0)) == 0.0);

  auto g = Multivector::blade(h1, 0b11, 1.0);
  auto s = oracle::rep_exp(g);
  CHECK(s[0] == doctest::Approx(std::cosh(1.0)).epsilon(1e-12));
  CHECK(s[0b11] == doctest::Approx(std::sinh(1.0)).epsilon(1e-12));

  Rng rng(103);
  for (int iter = 0; iter < 100; ++iter) {
    auto B = testsup::random_nonsimple_bivector_h3(rng);
    if (B.norm() > 5.0) B = B * (4.0 / B.norm());
    CHECK(max_dev(exp_bivector(B), oracle::rep_exp(B)) < 1e-10);
  }
}

TEST_SUITE_END();
