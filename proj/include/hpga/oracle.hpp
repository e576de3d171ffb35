#pragma once
#include <utility>
#include <vector>

#include "hpga/multivector.hpp"

namespace hpga::oracle {

// Brute-force validation backend: represents left multiplication by each
// basis blade as a dense matrix on the coefficient vector. Construction
// shares no code with the kernel tables — blade products are derived by an
// explicit generator-list bubble sort plus metric contraction.
struct MatrixRep {
  const Algebra* alg;
  int n;
  // left_mul[s] is row-major n*n: (M_s b)[u] = sum_t M_s[u*n+t] b[t].
  std::vector<std::vector<double>> left_mul;
};

const MatrixRep& rep(const Algebra&);

// Independent product of basis blades: returns (result mask, sign).
std::pair<unsigned, double> blade_mul(unsigned s, unsigned t);

Multivector rep_product(const Multivector& A, const Multivector& B);
Multivector rep_exp(const Multivector& B, int terms = 40);

// Grade-filtered helpers used to derive expected values in tests.
Multivector rep_wedge(const Multivector& A, const Multivector& B);
Multivector rep_inner(const Multivector& A, const Multivector& B);

}  // namespace hpga::oracle
