#include <doctest.h>

#include <cstring>
#include <random>

#include "hpga/kernels.hpp"
#include "hpga/multivector.hpp"
#include "support.hpp"

using namespace hpga;
using testsup::Rng;

TEST_SUITE_BEGIN("kernels");

TEST_CASE("scalar and AVX2 variants are bit-identical") {
  if (!kernels::avx2_available()) {
    MESSAGE("AVX2 not available on this host; scalar-only");
    return;
  }
#if defined(__x86_64__) || defined(_M_X64)
  Rng rng(211);
  for (Space s : {Space::H1, Space::H2, Space::H3}) {
    const Algebra& alg = algebra(s);
    const double* tables[3] = {alg.gp_x.data(), alg.wedge_x.data(), alg.inner_x.data()};
    for (int iter = 0; iter < 2000; ++iter) {
      auto A = testsup::random_mv(rng, alg, -10.0, 10.0);
      auto B = testsup::random_mv(rng, alg, -10.0, 10.0);
      for (const double* table : tables) {
        alignas(32) double c_ref[kMaxBlades], c_simd[kMaxBlades];
        kernels::product_scalar(table, alg.size, A.data(), B.data(), c_ref);
        kernels::product_avx2(table, alg.size, A.data(), B.data(), c_simd);
        CHECK(std::memcmp(c_ref, c_simd, sizeof(double) * alg.size) == 0);
      }
    }
  }
#endif
}

TEST_CASE("runtime dispatch selects a working kernel and can be forced") {
  const char* initial = kernels::active_name();
  CHECK((std::strcmp(initial, "avx2") == 0 || std::strcmp(initial, "scalar") == 0));

  const Algebra& alg = algebra(Space::H2);
  auto a = Multivector::blade(alg, 0b001);
  kernels::force("scalar");
  CHECK(std::strcmp(kernels::active_name(), "scalar") == 0);
  CHECK(a.gp(a)[0] == -1.0);

  kernels::force("auto");
  if (kernels::avx2_available())
    CHECK(std::strcmp(kernels::active_name(), "avx2") == 0);
  CHECK(a.gp(a)[0] == -1.0);
}

TEST_CASE("whole-operation results do not depend on the kernel variant") {
  if (!kernels::avx2_available()) return;
  Rng rng(223);
  const Algebra& alg = algebra(Space::H3);
  for (int iter = 0; iter < 200; ++iter) {
    auto A = testsup::random_mv(rng, alg);
    auto B = testsup::random_mv(rng, alg);
    kernels::force("scalar");
    auto p1 = A.gp(B), w1 = A.wedge(B), j1 = A.join(B);
    kernels::force("avx2");
    auto p2 = A.gp(B), w2 = A.wedge(B), j2 = A.join(B);
    kernels::force("auto");
    CHECK(std::memcmp(p1.data(), p2.data(), sizeof(double) * alg.size) == 0);
    CHECK(std::memcmp(w1.data(), w2.data(), sizeof(double) * alg.size) == 0);
    CHECK(std::memcmp(j1.data(), j2.data(), sizeof(double) * alg.size) == 0);
  }
}

TEST_SUITE_END();
