#pragma once
#include <vector>

#include "hpga/geometry.hpp"

namespace hpga {

enum class MotionKind { rotation, translation, null_translation, screw };
const char* motion_kind_name(MotionKind) noexcept;

// Even-grade element of unit pseudo-norm acting by S A S^-1. S and -S act
// identically; we keep the exp(B) representative.
struct Spinor {
  Multivector value;
  Multivector generator;
  MotionKind kind;
  double alpha = 0.0;
  double lambda = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

Spinor translation_h1(double lambda);
Spinor translation_h2(const Multivector& T, double lambda);  // T improper, normalized
Spinor rotation_h2(const Multivector& R, double alpha);      // R proper, normalized
Spinor null_translation_h2(const Multivector& N, double theta);  // N anchored null
Spinor screw_h3(const Multivector& line, double alpha, double lambda);
Spinor null_translation_h3(const Multivector& line, double theta);

// Spinor from a raw bivector generator (kind inferred); used by orbit
// sampling and the CLI.
Spinor spinor_from_generator(const Multivector& B);

Multivector apply(const Spinor& S, const Multivector& A);
Multivector sandwich(const Multivector& S, const Multivector& A);  // S A S~

struct TrajectorySample {
  double t;
  Multivector object;
  bool has_chart;
  ChartPoint chart;
};

struct Trajectory {
  Multivector generator;
  Multivector object;
  std::vector<TrajectorySample> samples;
  std::size_t dropped = 0;  // weight-vanished samples (only if drop_infinite)
};

// Samples exp(-t B / 2) object exp(t B / 2) at n uniform parameters;
// every sample is evaluated from t = 0, never accumulated. A weight that
// vanishes throws weight_vanishes unless drop_infinite marks and skips it.
Trajectory sample_trajectory(const Multivector& generator, const Multivector& object,
                             double t_min, double t_max, int n,
                             bool drop_infinite = false);

}  // namespace hpga
