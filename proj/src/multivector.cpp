#include "hpga/multivector.hpp"

#include <algorithm>
#include <cmath>

#include "hpga/kernels.hpp"

namespace hpga {
namespace {

ProductAudit g_audit = nullptr;

void check_same_algebra(const Multivector& a, const Multivector& b) {
  if (!a.same_algebra(b))
    fail(errc::algebra_mismatch, "operands belong to different algebras");
}

Multivector table_product(const Multivector& a, const Multivector& b, const double* table,
                          const char* op) {
  check_same_algebra(a, b);
  Multivector c(a.alg());
  kernels::active()(table, a.size(), a.data(), b.data(), c.data());
  if (g_audit) g_audit(a.alg(), op, a.data(), b.data(), c.data());
  return c;
}

}  // namespace

void set_product_audit(ProductAudit fn) { g_audit = fn; }

Multivector Multivector::operator-() const {
  Multivector r(*alg_);
  for (int i = 0; i < size(); ++i) r.c_[i] = -c_[i];
  return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  check_same_algebra(*this, o);
  for (int i = 0; i < size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  check_same_algebra(*this, o);
  for (int i = 0; i < size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (int i = 0; i < size(); ++i) c_[i] *= s;
  return *this;
}

Multivector Multivector::gp(const Multivector& o) const {
  return table_product(*this, o, alg_->gp_x.data(), "gp");
}

Multivector Multivector::wedge(const Multivector& o) const {
  return table_product(*this, o, alg_->wedge_x.data(), "wedge");
}

Multivector Multivector::inner(const Multivector& o) const {
  return table_product(*this, o, alg_->inner_x.data(), "inner");
}

Multivector Multivector::join(const Multivector& o) const {
  check_same_algebra(*this, o);
  const Algebra& a = *alg_;
  Multivector ja(a), jb(a);
  for (int m = 0; m < a.size; ++m) {
    ja[a.comp(m)] = a.j_sign[m] * c_[m];
    jb[a.comp(m)] = a.j_sign[m] * o.c_[m];
  }
  Multivector w = ja.wedge(jb);
  Multivector r(a);
  for (int m = 0; m < a.size; ++m) r[a.comp(m)] = a.jinv_sign[m] * w[m];
  return r;
}

Multivector Multivector::commutator(const Multivector& o) const {
  Multivector r = gp(o);
  r -= o.gp(*this);
  return r *= 0.5;
}

Multivector Multivector::reverse() const {
  Multivector r(*alg_);
  for (int m = 0; m < size(); ++m) r.c_[m] = alg_->rev_sign[m] * c_[m];
  return r;
}

Multivector Multivector::grade(int k) const {
  Multivector r(*alg_);
  for (int m = 0; m < size(); ++m)
    if (alg_->grade_of[m] == k) r.c_[m] = c_[m];
  return r;
}

Multivector Multivector::dual() const {
  Multivector r(*alg_);
  for (int m = 0; m < size(); ++m) r.c_[alg_->comp(m)] = alg_->dual_sign[m] * c_[m];
  return r;
}

Multivector Multivector::undual() const {
  Multivector r(*alg_);
  for (int m = 0; m < size(); ++m) r.c_[alg_->comp(m)] = alg_->undual_sign[m] * c_[m];
  return r;
}

double Multivector::norm_sq_signed() const noexcept {
  double s = 0.0;
  for (int m = 0; m < size(); ++m) s += alg_->metric_sq[m] * c_[m] * c_[m];
  return s;
}

double Multivector::norm() const noexcept { return std::sqrt(std::fabs(norm_sq_signed())); }

Multivector Multivector::normalized() const {
  double n = norm();
  double scale = max_abs();
  if (n <= 1e-9 * scale || n == 0.0)
    fail(errc::null_object, "cannot normalize a (near-)null object");
  return *this / n;
}

double Multivector::max_abs() const noexcept {
  double m = 0.0;
  for (int i = 0; i < size(); ++i) m = std::max(m, std::fabs(c_[i]));
  return m;
}

double Multivector::as_scalar(double rel_tol) const {
  double scale = std::max(1.0, max_abs());
  for (int m = 1; m < size(); ++m)
    if (std::fabs(c_[m]) > rel_tol * scale)
      fail(errc::internal_inconsistency,
           "expected a scalar result but blade " + alg_->blade_name(m) + " is nonzero");
  return c_[0];
}

bool Multivector::is_homogeneous(int k, double rel_tol) const noexcept {
  double scale = std::max(1.0, max_abs());
  for (int m = 0; m < size(); ++m)
    if (alg_->grade_of[m] != k && std::fabs(c_[m]) > rel_tol * scale) return false;
  return true;
}

bool Multivector::is_zero(double rel_tol) const noexcept {
  return max_abs() <= rel_tol;
}

Multivector Multivector::inverse() const {
  const Algebra& a = *alg_;
  Multivector g = gp(reverse());
  double scale = std::max(1.0, g.max_abs());
  double u = g[0];
  double v = g[a.full];
  for (int m = 1; m < a.size; ++m)
    if (m != static_cast<int>(a.full) && std::fabs(g[m]) > 1e-12 * scale)
      fail(errc::non_invertible, "A reverse(A) is not of the form u + v*I");
  if (std::fabs(v) <= 1e-12 * scale) {
    if (std::fabs(u) <= 1e-12 * scale)
      fail(errc::non_invertible, "null object has no inverse");
    return reverse() / u;
  }
  // (u + vI)^-1 = (u - vI) / (u^2 - I^2 v^2), with I central on the
  // elements for which A reverse(A) takes this form.
  double denom = u * u - a.I_sq * v * v;
  if (std::fabs(denom) <= 1e-12 * scale * scale)
    fail(errc::non_invertible, "u + v*I is not invertible");
  Multivector conj = Multivector::scalar(a, u) - Multivector::pseudoscalar(a, v);
  return reverse().gp(conj) / denom;
}

Multivector exp_bivector(const Multivector& B) {
  const Algebra& a = B.alg();
  if (!B.is_homogeneous(2, 1e-12))
    fail(errc::non_bivector, "exp generator must be a bivector");
  Multivector sq = B.gp(B);
  double scale = std::max(1.0, sq.max_abs());
  double u = sq[0];
  double w = (a.dim == 3) ? sq[a.full] : 0.0;
  if (std::fabs(w) <= 1e-12 * scale) {
    Multivector one = Multivector::scalar(a, 1.0);
    if (u < -1e-12 * scale) {
      double beta = std::sqrt(-u);
      return one * std::cos(beta) + B * (std::sin(beta) / beta);
    }
    if (u > 1e-12 * scale) {
      double beta = std::sqrt(u);
      return one * std::cosh(beta) + B * (std::sinh(beta) / beta);
    }
    return one + B;  // nilpotent: the series terminates
  }
  auto [b1, b2] = bivector_axes(B);
  return exp_bivector(b1).gp(exp_bivector(b2));
}

std::pair<Multivector, Multivector> bivector_axes(const Multivector& B) {
  const Algebra& a = B.alg();
  if (!B.is_homogeneous(2, 1e-12))
    fail(errc::non_bivector, "axis decomposition needs a bivector");
  Multivector zero(a);
  if (a.dim != 3) return {B, zero};
  Multivector ww = B.wedge(B);
  double scale = std::max(1.0, B.max_abs() * B.max_abs());
  if (std::fabs(ww[a.full]) <= 1e-12 * scale) return {B, zero};  // simple line

  double u = B.inner(B).as_scalar();
  double v = B.join(B).as_scalar();
  double s = std::sqrt(u * u + v * v);
  double sq1 = 0.5 * (u - s);  // proper part squares negative
  double sq2 = 0.5 * (u + s);
  auto split = [&](double part_sq) {
    Multivector d = Multivector::scalar(a, 1.0) + ww * (0.5 / part_sq);
    return B.gp(d.inverse());
  };
  return {split(sq1), split(sq2)};
}

}  // namespace hpga
