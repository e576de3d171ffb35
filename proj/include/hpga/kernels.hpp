#pragma once

namespace hpga::kernels {

// Dense bilinear blade product over one of the Algebra sign tables:
//
//   C[k] = sum_i W[i*n + k] * A[i] * B[i^k],  n in {4, 8, 16}.
//
// C must not alias A or B. All variants accumulate per output lane in the
// same i order with the same ((W*a)*b) grouping and no FMA contraction, so
// their results are bit-identical; the equivalence tests assert that.
using product_fn = void (*)(const double* W, int n, const double* A, const double* B,
                            double* C);

void product_scalar(const double* W, int n, const double* A, const double* B, double* C);

#if defined(__x86_64__) || defined(_M_X64)
void product_avx2(const double* W, int n, const double* A, const double* B, double* C);
#endif

bool avx2_available() noexcept;

// Runtime-selected kernel. Honors a one-time HPGA_KERNEL=scalar|avx2
// environment override; force() re-selects explicitly (tests).
product_fn active() noexcept;
const char* active_name() noexcept;
void force(const char* name);  // "scalar", "avx2", or "auto"

}  // namespace hpga::kernels
