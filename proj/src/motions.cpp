#include "hpga/motions.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hpga {
namespace {

constexpr double kTwoTurns = 4.0 * std::numbers::pi;  // spinor double cover

Multivector checked_exp(const Multivector& gen) {
  Multivector v = exp_bivector(gen);
  Multivector unit = v.gp(v.reverse());
  if (std::fabs(unit.scalar_part() - 1.0) > 1e-10 * std::max(1.0, unit.max_abs()))
    fail(errc::internal_inconsistency, "spinor is not of unit pseudo-norm");
  return v;
}

Multivector require_kind(const Multivector& G, Kind want, const char* what) {
  GeomClass c = classify(G);
  if (c.kind != want)
    fail(errc::wrong_generator_class,
         std::string(what) + " (got " + kind_name(c.kind) + ")");
  return want == Kind::Null ? G : G.normalized();
}

}  // namespace

const char* motion_kind_name(MotionKind k) noexcept {
  switch (k) {
    case MotionKind::rotation: return "rotation";
    case MotionKind::translation: return "translation";
    case MotionKind::null_translation: return "null_translation";
    case MotionKind::screw: return "screw";
  }
  return "?";
}

Spinor translation_h1(double lambda) {
  const Algebra& a = algebra(Space::H1);
  Multivector gen = Multivector::blade(a, 0b11, -0.5 * lambda);
  return {checked_exp(gen), gen, MotionKind::translation, 0.0, lambda, 0.0, 0.0};
}

Spinor translation_h2(const Multivector& T, double lambda) {
  if (T.alg().space != Space::H2 || !T.is_homogeneous(2, 1e-9))
    fail(errc::wrong_generator_class, "H2 translation generator must be a point");
  Multivector t = require_kind(T, Kind::Improper,
                               "translation generator must be an improper point");
  Multivector gen = t * (-0.5 * lambda);
  return {checked_exp(gen), gen, MotionKind::translation, 0.0, lambda, 0.0, 0.0};
}

Spinor rotation_h2(const Multivector& R, double alpha) {
  if (R.alg().space != Space::H2 || !R.is_homogeneous(2, 1e-9))
    fail(errc::wrong_generator_class, "H2 rotation generator must be a point");
  Multivector r = require_kind(R, Kind::Proper,
                               "rotation centre must be a proper point");
  double a_eff = std::fmod(alpha, kTwoTurns);
  Multivector gen = r * (-0.5 * a_eff);
  return {checked_exp(gen), gen, MotionKind::rotation, alpha, 0.0, 0.0, 0.0};
}

Spinor null_translation_h2(const Multivector& N, double theta) {
  if (N.alg().space != Space::H2 || !N.is_homogeneous(2, 1e-9))
    fail(errc::wrong_generator_class, "H2 null translation generator must be a point");
  if (classify(N).kind != Kind::Null)
    fail(errc::wrong_generator_class, "null translation anchor must be a null point");
  if (std::fabs(N[0b110] - 1.0) > 1e-9)
    fail(errc::wrong_generator_class,
         "anchored null point must have unit e12 coefficient");
  Multivector gen = N * (-0.5 * theta);
  return {checked_exp(gen), gen, MotionKind::null_translation, 0.0, 0.0, theta, 0.0};
}

Spinor screw_h3(const Multivector& line, double alpha, double lambda) {
  const Algebra& a = line.alg();
  if (a.space != Space::H3 || !line.is_homogeneous(2, 1e-9))
    fail(errc::wrong_generator_class, "screw axis must be an H3 line");
  if (!line.wedge(line).is_zero(1e-9 * std::max(1.0, line.max_abs() * line.max_abs())))
    fail(errc::wrong_generator_class, "screw axis must be a simple bivector (a line)");
  Multivector l = require_kind(line, Kind::Proper, "screw axis must be a proper line");
  double a_eff = std::fmod(alpha, kTwoTurns);
  Multivector I = Multivector::pseudoscalar(a);
  Multivector gen = l * (-0.5 * a_eff) + I.gp(l) * (-0.5 * lambda);
  return {checked_exp(gen), gen, MotionKind::screw, alpha, lambda, 0.0, 0.0};
}

Spinor null_translation_h3(const Multivector& line, double theta) {
  const Algebra& a = line.alg();
  if (a.space != Space::H3 || !line.is_homogeneous(2, 1e-9))
    fail(errc::wrong_generator_class, "null translation generator must be an H3 line");
  double scale = std::max(1.0, line.max_abs() * line.max_abs());
  if (!line.wedge(line).is_zero(1e-9 * scale))
    fail(errc::wrong_generator_class, "generator must be a line (simple bivector)");
  if (classify(line).kind != Kind::Null)
    fail(errc::wrong_generator_class, "generator must be a null line");
  // The weight of the line scales theta; kept raw by design.
  Multivector gen = line * (-0.5 * theta);
  return {checked_exp(gen), gen, MotionKind::null_translation, 0.0, 0.0, theta, 0.0};
}

Spinor spinor_from_generator(const Multivector& B) {
  if (!B.is_homogeneous(2, 1e-9))
    fail(errc::wrong_generator_class, "orbit generator must be a bivector");
  Multivector value = checked_exp(B);
  MotionKind kind = MotionKind::screw;
  double sq = B.inner(B).as_scalar(1e-9);
  double scale = std::max(1.0, B.max_abs() * B.max_abs());
  if (B.alg().space != Space::H3 || B.wedge(B).is_zero(1e-9 * scale)) {
    kind = (sq < -1e-9 * scale)  ? MotionKind::rotation
           : (sq > 1e-9 * scale) ? MotionKind::translation
                                 : MotionKind::null_translation;
  }
  return {value, B, kind, 0.0, 0.0, 0.0, 0.0};
}

Multivector sandwich(const Multivector& S, const Multivector& A) {
  return S.gp(A).gp(S.reverse());
}

Multivector apply(const Spinor& S, const Multivector& A) {
  if (!S.value.same_algebra(A))
    fail(errc::algebra_mismatch, "spinor and operand belong to different algebras");
  // exp(B) reverse(exp(B)) = 1 for a bivector B, so the reverse is the inverse.
  return sandwich(S.value, A);
}

Trajectory sample_trajectory(const Multivector& generator, const Multivector& object,
                             double t_min, double t_max, int n, bool drop_infinite) {
  if (n < 2) fail(errc::usage, "trajectory needs at least two samples");
  if (classify(object).kind != Kind::Proper)
    fail(errc::null_or_improper_input, "trajectory object must be proper");
  if (!generator.is_homogeneous(2, 1e-9))
    fail(errc::wrong_generator_class, "trajectory generator must be a bivector");

  Trajectory tr{generator, object, {}, 0};
  tr.samples.reserve(n);
  for (int i = 0; i < n; ++i) {
    double t = t_min + (t_max - t_min) * (n == 1 ? 0.0 : static_cast<double>(i) / (n - 1));
    Multivector s = exp_bivector(generator * (-0.5 * t));
    TrajectorySample smp{t, sandwich(s, object), false, {}};
    try {
      smp.chart = chart_point(smp.object);
      smp.has_chart = true;
    } catch (const error& e) {
      if (e.code() != errc::weight_vanishes || !drop_infinite) throw;
      ++tr.dropped;
    }
    tr.samples.push_back(std::move(smp));
  }
  return tr;
}

}  // namespace hpga
