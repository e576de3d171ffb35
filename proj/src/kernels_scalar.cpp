// Reference kernel. Compiled with -ffp-contract=off so the term
// (W[i*n+k] * A[i]) * B[i^k] rounds exactly like the SIMD variants.

#include "hpga/kernels.hpp"

namespace hpga::kernels {

void product_scalar(const double* W, int n, const double* A, const double* B, double* C) {
  for (int k = 0; k < n; ++k) C[k] = 0.0;
  for (int i = 0; i < n; ++i) {
    const double ai = A[i];
    const double* w = W + i * n;
    for (int k = 0; k < n; ++k) C[k] += w[k] * ai * B[i ^ k];
  }
}

}  // namespace hpga::kernels
