#pragma once
#include <cmath>
#include <random>

#include "hpga/geometry.hpp"
#include "hpga/motions.hpp"

// Shared deterministic generators for the property suites.
namespace testsup {

using hpga::Algebra;
using hpga::Multivector;
using hpga::Space;

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Multivector random_mv(Rng& rng, const Algebra& a, double lo = -1.0, double hi = 1.0) {
  Multivector m(a);
  for (int i = 0; i < a.size; ++i) m[i] = uniform(rng, lo, hi);
  return m;
}

inline Multivector random_blade_grade(Rng& rng, const Algebra& a, int k) {
  Multivector m(a);
  for (int i = 0; i < a.size; ++i)
    if (a.grade(i) == k) m[i] = uniform(rng, -1.0, 1.0);
  return m;
}

// Proper point with chart radius <= rmax (normalized).
inline Multivector random_proper_point(Rng& rng, Space s, double rmax = 0.9) {
  int d = static_cast<int>(s);
  std::vector<double> x(d);
  double r2;
  do {
    r2 = 0.0;
    for (int i = 0; i < d; ++i) {
      x[i] = uniform(rng, -rmax, rmax);
      r2 += x[i] * x[i];
    }
  } while (r2 > rmax * rmax);
  return hpga::point(s, x).normalized();
}

inline Multivector random_improper_point_h2(Rng& rng) {
  double r = uniform(rng, 1.2, 3.0);
  double phi = uniform(rng, 0.0, 6.283185307179586);
  return hpga::point(Space::H2, {r * std::cos(phi), r * std::sin(phi)}).normalized();
}

// Proper line through two random proper points (normalized).
inline Multivector random_proper_line_h2(Rng& rng) {
  for (;;) {
    Multivector p = random_proper_point(rng, Space::H2);
    Multivector q = random_proper_point(rng, Space::H2);
    Multivector l = p.join(q);
    if (l.norm() > 1e-3) return l.normalized();
  }
}

inline Multivector random_proper_line_h3(Rng& rng) {
  for (;;) {
    Multivector p = random_proper_point(rng, Space::H3);
    Multivector q = random_proper_point(rng, Space::H3);
    Multivector l = p.join(q);
    if (l.norm() > 1e-3) return l.normalized();
  }
}

inline std::pair<Multivector, Multivector> random_hyperparallel_pair_h2(Rng& rng) {
  for (;;) {
    Multivector a = random_proper_line_h2(rng);
    Multivector b = random_proper_line_h2(rng);
    Multivector meet = a.wedge(b);
    if (meet.norm() < 1e-2) continue;
    if (hpga::classify(meet).kind == hpga::Kind::Improper) return {a, b};
  }
}

// Skew proper pair, rejecting near-intersecting configurations.
inline std::pair<Multivector, Multivector> random_skew_pair_h3(Rng& rng) {
  for (;;) {
    Multivector a = random_proper_line_h3(rng);
    Multivector b = random_proper_line_h3(rng);
    double v = std::fabs(a.join(b).scalar_part());
    if (v < 0.05) continue;
    return {a, b};
  }
}

inline Multivector random_nonsimple_bivector_h3(Rng& rng) {
  const Algebra& alg = hpga::algebra(Space::H3);
  for (;;) {
    Multivector b = random_blade_grade(rng, alg, 2);
    double scale = b.max_abs() * b.max_abs();
    if (std::fabs(b.wedge(b)[alg.full]) > 0.05 * scale) return b;
  }
}

// Anchored H2 null point e12 + e0^a for a random unit line through the origin.
inline Multivector random_anchored_null_h2(Rng& rng) {
  double phi = uniform(rng, 0.0, 6.283185307179586);
  const Algebra& alg = hpga::algebra(Space::H2);
  Multivector a(alg);
  a[0b010] = std::cos(phi);
  a[0b100] = std::sin(phi);
  Multivector e0 = Multivector::blade(alg, 0b001);
  return Multivector::blade(alg, 0b110) + e0.wedge(a);
}

inline hpga::Spinor random_spinor(Rng& rng, Space s) {
  switch (s) {
    case Space::H1:
      return hpga::translation_h1(uniform(rng, -2.0, 2.0));
    case Space::H2: {
      int k = static_cast<int>(uniform(rng, 0.0, 3.0));
      if (k == 0)
        return hpga::rotation_h2(random_proper_point(rng, Space::H2),
                                 uniform(rng, -3.0, 3.0));
      if (k == 1)
        return hpga::translation_h2(random_improper_point_h2(rng), uniform(rng, -2.0, 2.0));
      return hpga::null_translation_h2(random_anchored_null_h2(rng), uniform(rng, -2.0, 2.0));
    }
    default: {
      Multivector l = random_proper_line_h3(rng);
      return hpga::screw_h3(l, uniform(rng, -3.0, 3.0), uniform(rng, -2.0, 2.0));
    }
  }
}

}  // namespace testsup
