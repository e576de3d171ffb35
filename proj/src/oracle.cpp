#include "hpga/oracle.hpp"

#include <cmath>
#include <cstdlib>

namespace hpga::oracle {
namespace {

void check_same_algebra(const Multivector& a, const Multivector& b) {
  if (!a.same_algebra(b))
    fail(errc::algebra_mismatch, "operands belong to different algebras");
}

MatrixRep build(const Algebra& a) {
  MatrixRep r;
  r.alg = &a;
  r.n = a.size;
  r.left_mul.assign(a.size, std::vector<double>(a.size * a.size, 0.0));
  for (unsigned s = 0; s < static_cast<unsigned>(a.size); ++s)
    for (unsigned t = 0; t < static_cast<unsigned>(a.size); ++t) {
      auto [u, sign] = blade_mul(s, t);
      r.left_mul[s][u * a.size + t] = sign;
    }
  return r;
}

void matvec(const std::vector<double>& m, int n, const double* x, double* y) {
  for (int u = 0; u < n; ++u) {
    double acc = 0.0;
    const double* row = m.data() + u * n;
    for (int t = 0; t < n; ++t) acc += row[t] * x[t];
    y[u] = acc;
  }
}

}  // namespace

std::pair<unsigned, double> blade_mul(unsigned s, unsigned t) {
  // Concatenate the generator lists and bubble-sort, counting swaps; equal
  // neighbours contract with the metric (e0^2 = -1, otherwise +1).
  int gens[8];
  int len = 0;
  for (int g = 0; g < 4; ++g)
    if (s & (1u << g)) gens[len++] = g;
  for (int g = 0; g < 4; ++g)
    if (t & (1u << g)) gens[len++] = g;

  double sign = 1.0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < len; ++i) {
      if (gens[i] > gens[i + 1]) {
        std::swap(gens[i], gens[i + 1]);
        sign = -sign;
        changed = true;
      } else if (gens[i] == gens[i + 1]) {
        if (gens[i] == 0) sign = -sign;
        for (int j = i; j + 2 < len; ++j) gens[j] = gens[j + 2];
        len -= 2;
        changed = true;
        break;
      }
    }
  }
  unsigned mask = 0;
  for (int i = 0; i < len; ++i) mask |= 1u << gens[i];
  return {mask, sign};
}

const MatrixRep& rep(const Algebra& a) {
  static const MatrixRep h1 = build(algebra(Space::H1));
  static const MatrixRep h2 = build(algebra(Space::H2));
  static const MatrixRep h3 = build(algebra(Space::H3));
  switch (a.space) {
    case Space::H1: return h1;
    case Space::H2: return h2;
    default: return h3;
  }
}

Multivector rep_product(const Multivector& A, const Multivector& B) {
  check_same_algebra(A, B);
  const MatrixRep& r = rep(A.alg());
  Multivector out(A.alg());
  double tmp[kMaxBlades];
  for (int s = 0; s < r.n; ++s) {
    if (A[s] == 0.0) continue;
    matvec(r.left_mul[s], r.n, B.data(), tmp);
    for (int u = 0; u < r.n; ++u) out[u] += A[s] * tmp[u];
  }
  return out;
}

Multivector rep_exp(const Multivector& B, int terms) {
  const MatrixRep& r = rep(B.alg());
  const int n = r.n;
  // Left multiplication by B as a single matrix, then the plain series on
  // the coefficient vector of 1.
  std::vector<double> mb(n * n, 0.0);
  for (int s = 0; s < n; ++s)
    if (B[s] != 0.0)
      for (int i = 0; i < n * n; ++i) mb[i] += B[s] * r.left_mul[s][i];

  Multivector acc = Multivector::scalar(B.alg(), 1.0);
  double term[kMaxBlades] = {0.0};
  term[0] = 1.0;
  double next[kMaxBlades];
  for (int k = 1; k <= terms; ++k) {
    matvec(mb, n, term, next);
    for (int i = 0; i < n; ++i) {
      term[i] = next[i] / k;
      acc[i] += term[i];
    }
  }
  return acc;
}

Multivector rep_wedge(const Multivector& A, const Multivector& B) {
  check_same_algebra(A, B);
  Multivector out(A.alg());
  const Algebra& alg = A.alg();
  for (int r = 0; r <= alg.gens; ++r)
    for (int s = 0; s <= alg.gens; ++s) {
      if (r + s > alg.gens) continue;
      Multivector part = rep_product(A.grade(r), B.grade(s)).grade(r + s);
      out += part;
    }
  return out;
}

Multivector rep_inner(const Multivector& A, const Multivector& B) {
  check_same_algebra(A, B);
  Multivector out(A.alg());
  const Algebra& alg = A.alg();
  for (int r = 0; r <= alg.gens; ++r)
    for (int s = 0; s <= alg.gens; ++s)
      out += rep_product(A.grade(r), B.grade(s)).grade(std::abs(r - s));
  return out;
}

}  // namespace hpga::oracle
