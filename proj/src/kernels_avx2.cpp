// AVX2 variant of the blade product kernel. Compiled with -mavx2 and
// -ffp-contract=off on x86-64 only; callers must gate on avx2_available().
//
// Lane layout: coefficients are processed in blocks of 4 (one __m256d per
// block). For fixed row i the gather B[i^k] factors as a block swap
// (q -> q ^ (i>>2)) followed by an in-register xor permutation by the low
// two bits of i. Accumulation order over i and the ((W*a)*b) grouping match
// product_scalar exactly, so results are bit-identical.

#include "hpga/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace hpga::kernels {
namespace {

inline __m256d xor_permute(__m256d v, unsigned low2) {
  switch (low2) {
    case 1: return _mm256_permute_pd(v, 0b0101);                        // [1,0,3,2]
    case 2: return _mm256_permute4x64_pd(v, _MM_SHUFFLE(1, 0, 3, 2));   // [2,3,0,1]
    case 3: return _mm256_permute4x64_pd(v, _MM_SHUFFLE(0, 1, 2, 3));   // [3,2,1,0]
    default: return v;
  }
}

}  // namespace

void product_avx2(const double* W, int n, const double* A, const double* B, double* C) {
  const int nb = n >> 2;
  __m256d acc[4];
  for (int q = 0; q < nb; ++q) acc[q] = _mm256_setzero_pd();
  for (int i = 0; i < n; ++i) {
    const __m256d ai = _mm256_set1_pd(A[i]);
    const int ib = i >> 2;
    const unsigned il = static_cast<unsigned>(i) & 3u;
    const double* w = W + i * n;
    for (int q = 0; q < nb; ++q) {
      __m256d bq = _mm256_loadu_pd(B + 4 * (q ^ ib));
      bq = xor_permute(bq, il);
      const __m256d wa = _mm256_mul_pd(_mm256_loadu_pd(w + 4 * q), ai);
      acc[q] = _mm256_add_pd(acc[q], _mm256_mul_pd(wa, bq));
    }
  }
  for (int q = 0; q < nb; ++q) _mm256_storeu_pd(C + 4 * q, acc[q]);
}

}  // namespace hpga::kernels

#endif  // x86-64
