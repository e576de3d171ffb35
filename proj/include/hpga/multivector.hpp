#pragma once
#include <array>
#include <utility>

#include "hpga/algebra.hpp"
#include "hpga/errors.hpp"

namespace hpga {

// Dense multivector over Cl(d,1). Immutable value semantics: every
// operation returns a fresh value and never mutates its inputs.
class Multivector {
public:
  explicit Multivector(const Algebra& a) : alg_(&a) {}

  static Multivector scalar(const Algebra& a, double s) {
    Multivector m(a);
    m.c_[0] = s;
    return m;
  }
  static Multivector blade(const Algebra& a, unsigned mask, double c = 1.0) {
    Multivector m(a);
    m.c_[mask] = c;
    return m;
  }
  static Multivector pseudoscalar(const Algebra& a, double c = 1.0) {
    return blade(a, a.full, c);
  }

  const Algebra& alg() const noexcept { return *alg_; }
  int size() const noexcept { return alg_->size; }
  double operator[](unsigned mask) const { return c_[mask]; }
  double& operator[](unsigned mask) { return c_[mask]; }
  const double* data() const noexcept { return c_.data(); }
  double* data() noexcept { return c_.data(); }
  bool same_algebra(const Multivector& o) const noexcept { return alg_ == o.alg_; }

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, double s) { return a *= 1.0 / s; }

  Multivector gp(const Multivector& o) const;  // geometric product
  Multivector operator*(const Multivector& o) const { return gp(o); }
  Multivector wedge(const Multivector& o) const;
  Multivector inner(const Multivector& o) const;
  Multivector join(const Multivector& o) const;        // regressive product
  Multivector commutator(const Multivector& o) const;  // (AB - BA)/2

  Multivector reverse() const;
  Multivector grade(int k) const;
  Multivector dual() const;    // A I
  Multivector undual() const;  // A I^-1
  Multivector inverse() const; // throws non_invertible

  double norm_sq_signed() const noexcept;  // <A reverse(A)>_0
  double norm() const noexcept;            // pseudo-norm
  Multivector normalized() const;          // throws null_object

  double scalar_part() const noexcept { return c_[0]; }
  // Extracts <A>_0, requiring every other coefficient below rel_tol*scale.
  double as_scalar(double rel_tol = 1e-12) const;
  double max_abs() const noexcept;
  bool is_homogeneous(int k, double rel_tol = 1e-12) const noexcept;
  bool is_zero(double rel_tol = 1e-12) const noexcept;

private:
  const Algebra* alg_;
  alignas(32) std::array<double, kMaxBlades> c_{};
};

// Closed-form exponential of a bivector: trig/hyperbolic/nilpotent for a
// simple generator, product of commuting simple exponentials (via
// bivector_axes) for a non-simple one in Cl(3,1).
Multivector exp_bivector(const Multivector& B);

// Split of a Cl(3,1) bivector into commuting simple parts (first proper,
// second improper). Simple input returns (B, 0).
std::pair<Multivector, Multivector> bivector_axes(const Multivector& B);

// Optional hook observing every kernel product (the CLI --oracle flag wires
// the matrix oracle here). op is "gp", "wedge" or "inner".
using ProductAudit = void (*)(const Algebra&, const char* op, const double* a,
                              const double* b, const double* c);
void set_product_audit(ProductAudit);

}  // namespace hpga
