#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hpga/motions.hpp"
#include "support.hpp"

using namespace hpga;
using testsup::Rng;
using std::numbers::pi;

namespace {

double max_dev(const Multivector& a, const Multivector& b) {
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

double misalignment(const Multivector& a, const Multivector& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  return 1.0 - std::fabs(dot) / std::sqrt(na * nb);
}

Multivector mv(const Algebra& a, std::initializer_list<std::pair<unsigned, double>> cs) {
  Multivector m(a);
  for (auto [mask, c] : cs) m[mask] = c;
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("motions");

TEST_CASE("H1 translation shifts the parameter") {
  for (double phi : {0.0, 0.7, -1.2}) {
    for (double lam : {0.5, -2.0}) {
      auto moved = apply(translation_h1(lam), point_h1(phi));
      CHECK(max_dev(moved, point_h1(phi + lam)) < 1e-14);
    }
  }
}

TEST_CASE("spinors have unit pseudo-norm and -S acts like S") {
  Rng rng(79);
  for (Space s : {Space::H1, Space::H2, Space::H3}) {
    for (int i = 0; i < 50; ++i) {
      Spinor S = testsup::random_spinor(rng, s);
      auto unit = S.value.gp(S.value.reverse());
      CHECK(unit[0] == doctest::Approx(1.0).epsilon(1e-10));
      CHECK((unit - Multivector::scalar(algebra(s), unit[0])).max_abs() < 1e-10);

      auto P = testsup::random_proper_point(rng, s);
      auto a = sandwich(S.value, P);
      auto b = sandwich(-S.value, P);
      CHECK(max_dev(a, b) < 1e-12);
      // pseudo-norm and grade preserved
      CHECK(a.norm() == doctest::Approx(P.norm()).epsilon(1e-10));
      CHECK(a.is_homogeneous(static_cast<int>(s), 1e-9));
    }
  }
}

TEST_CASE("generator class is validated") {
  auto proper = point(Space::H2, {0.2, 0.1});
  auto improper = point(Space::H2, {2.0, 0.0});
  CHECK_THROWS_AS(rotation_h2(improper, 1.0), error);
  CHECK_THROWS_AS(translation_h2(proper, 1.0), error);
  CHECK_THROWS_AS(null_translation_h2(proper, 1.0), error);
  try {
    rotation_h2(improper, 1.0);
  } catch (const error& e) {
    CHECK(e.code() == errc::wrong_generator_class);
  }

  Rng rng(83);
  auto line = testsup::random_proper_line_h3(rng);
  CHECK_THROWS_AS(null_translation_h3(line, 1.0), error);
}

TEST_CASE("rotation fixes its centre and has period 2*pi on objects") {
  auto R = (1.0 / std::sqrt(11.0)) *
           mv(algebra(Space::H2), {{0b110, 4.0}, {0b101, 2.0}, {0b011, -1.0}});
  auto P = mv(algebra(Space::H2), {{0b110, 1.0}, {0b101, -1.0 / 3.0}, {0b011, -0.5}});
  Spinor rot = rotation_h2(R, pi / 2);
  CHECK(misalignment(apply(rot, R), R) < 1e-12);
  CHECK(distance(P, R) == doctest::Approx(distance(apply(rot, P), R)).epsilon(1e-10));

  Spinor full = rotation_h2(R, 2 * pi);
  CHECK(max_dev(apply(full, P), P) < 1e-10);

  // the action at alpha and alpha + 2 pi is the same (spinor double cover)
  double alpha = 0.77;
  CHECK(max_dev(apply(rotation_h2(R, alpha), P),
                apply(rotation_h2(R, alpha + 2 * pi), P)) < 1e-10);
}

TEST_CASE("H2 translation keeps its axis and its null points") {
  auto T = mv(algebra(Space::H2), {{0b110, 0.5}, {0b101, 1.0}, {0b011, -0.5}});
  Spinor tr = translation_h2(T, 1.0);
  auto axis = T.undual();
  CHECK(misalignment(apply(tr, axis), axis) < 1e-12);

  auto e12 = origin(Space::H2);
  auto Np = (T + Multivector::scalar(algebra(Space::H2), 1.0)).gp(T.commutator(e12));
  auto Nm = (T - Multivector::scalar(algebra(Space::H2), 1.0)).gp(T.commutator(e12));
  CHECK(classify(Np).kind == Kind::Null);
  CHECK(classify(Nm).kind == Kind::Null);
  CHECK(misalignment(apply(tr, Np), Np) < 1e-12);
  CHECK(misalignment(apply(tr, Nm), Nm) < 1e-12);

  // points keep their distance to the axis line
  Rng rng(89);
  for (int i = 0; i < 30; ++i) {
    auto P = testsup::random_proper_point(rng, Space::H2);
    CHECK(distance_point_line_h2(axis, P) ==
          doctest::Approx(distance_point_line_h2(axis, apply(tr, P))).epsilon(1e-9));
  }
}

TEST_CASE("H2 null translation: exact quadratic action, fixed anchor only") {
  const Algebra& h2 = algebra(Space::H2);
  auto a = mv(h2, {{0b010, -1.0 / std::sqrt(5.0)}, {0b100, 2.0 / std::sqrt(5.0)}});
  auto N = Multivector::blade(h2, 0b110) + Multivector::blade(h2, 0b001).wedge(a);
  double theta = 1.0;
  Spinor S = null_translation_h2(N, theta);

  auto P = mv(h2, {{0b110, 1.0}, {0b101, -1.0 / 3.0}, {0b011, -0.5}});
  auto lhs = apply(S, P);
  auto rhs = P + theta * P.commutator(N) - 0.25 * theta * theta * N.gp(P).gp(N);
  CHECK(max_dev(lhs, rhs) < 1e-14);

  CHECK(max_dev(apply(S, N), N) < 1e-14);

  Rng rng(97);
  for (int i = 0; i < 100; ++i) {
    auto Q = testsup::random_proper_point(rng, Space::H2);
    auto moved = apply(S, Q);
    CHECK(misalignment(moved, Q) > 1e-9);  // no proper fixed point
  }
}

TEST_CASE("composition of reflections in H1 is a translation") {
  double theta1 = 0.3, theta2 = 1.1, phi = -0.4;
  auto b = point_h1(theta1), c = point_h1(theta2), a = point_h1(phi);
  auto twice = reflect(reflect(a, b), c);
  // parameters compose as 2 theta2 - (2 theta1 - phi)
  auto direct = apply(translation_h1(2 * (theta2 - theta1)), a);
  CHECK(max_dev(twice, direct) < 1e-13);
}

TEST_CASE("screws decompose into commuting rotation and translation") {
  Rng rng(101);
  for (int i = 0; i < 30; ++i) {
    auto L = testsup::random_proper_line_h3(rng);
    double alpha = testsup::uniform(rng, -2.0, 2.0);
    double lambda = testsup::uniform(rng, -1.5, 1.5);
    Spinor S = screw_h3(L, alpha, lambda);
    Spinor rot = screw_h3(L, alpha, 0.0);
    Spinor tra = screw_h3(L, 0.0, lambda);
    CHECK(max_dev(S.value, rot.value.gp(tra.value)) < 1e-10);
    CHECK(max_dev(rot.value.gp(tra.value), tra.value.gp(rot.value)) < 1e-12);
    // the axis is invariant
    CHECK(misalignment(apply(S, L), L) < 1e-10);
    // translation along L equals the motion generated by the polar line
    Spinor tra_polar = spinor_from_generator(polar(L.normalized()) * (-0.5 * lambda));
    CHECK(max_dev(tra.value, tra_polar.value) < 1e-12);
  }
}

TEST_CASE("H3 null translation terminates and fixes its touch point") {
  // Tangent line: chord through a sphere point and an exterior point of its
  // tangent plane x = 1.
  auto touch = point(Space::H3, {1.0, 0.0, 0.0});
  auto other = point(Space::H3, {1.0, 0.8, -0.3});
  auto tangent = touch.join(other);
  CHECK(classify(tangent).kind == Kind::Null);

  Spinor S = null_translation_h3(tangent, 0.7);
  auto expect = Multivector::scalar(algebra(Space::H3), 1.0) + tangent * (-0.35);
  CHECK(max_dev(S.value, expect) == 0.0);

  // the touch point extracted by L (L . e123) is the anchor and stays fixed
  auto anchor = tangent.gp(tangent.inner(origin(Space::H3)));
  CHECK(classify(anchor).kind == Kind::Null);
  CHECK(misalignment(anchor, touch) < 1e-12);
  CHECK(misalignment(apply(S, anchor), anchor) < 1e-12);

  Rng rng(103);
  for (int i = 0; i < 50; ++i) {
    auto Q = testsup::random_proper_point(rng, Space::H3);
    CHECK(misalignment(apply(S, Q), Q) > 1e-10);
  }
}

TEST_CASE("spinor composition matches composed action") {
  Rng rng(107);
  for (Space s : {Space::H1, Space::H2, Space::H3}) {
    for (int i = 0; i < 40; ++i) {
      Spinor S1 = testsup::random_spinor(rng, s);
      Spinor S2 = testsup::random_spinor(rng, s);
      auto P = testsup::random_proper_point(rng, s);
      auto chained = apply(S2, apply(S1, P));
      auto composed = sandwich(S2.value.gp(S1.value), P);
      CHECK(max_dev(chained, composed) < 1e-10);
    }
  }
}

TEST_CASE("trajectory sampling") {
  auto T = mv(algebra(Space::H2), {{0b110, 0.5}, {0b101, 1.0}, {0b011, -0.5}});
  auto P = mv(algebra(Space::H2), {{0b110, 1.0}, {0b101, -1.0 / 3.0}, {0b011, -0.5}});

  // zero range: both samples equal the object
  Trajectory still = sample_trajectory(T, P, 0.0, 0.0, 2);
  CHECK(still.samples.size() == 2);
  CHECK(max_dev(still.samples[0].object, P) == 0.0);
  CHECK(max_dev(still.samples[1].object, P) == 0.0);

  // rotation: all samples equidistant from the centre
  auto R = (1.0 / std::sqrt(11.0)) *
           mv(algebra(Space::H2), {{0b110, 4.0}, {0b101, 2.0}, {0b011, -1.0}});
  Trajectory circle = sample_trajectory(R, P, 0.0, 2 * pi * 7 / 8, 8);
  double r0 = distance(P, R);
  for (const auto& s : circle.samples)
    CHECK(distance(s.object, R) == doctest::Approx(r0).epsilon(1e-9));

  // translation endpoints approach the axis null points in the chart
  Spinor tr = translation_h2(T, 1.0);
  (void)tr;
  auto e12 = origin(Space::H2);
  auto Np = (T + Multivector::scalar(algebra(Space::H2), 1.0)).gp(T.commutator(e12));
  auto Nm = (T - Multivector::scalar(algebra(Space::H2), 1.0)).gp(T.commutator(e12));
  Trajectory line = sample_trajectory(T, P, -20.0, 20.0, 5);
  auto cp_start = line.samples.front().chart;
  auto cp_end = line.samples.back().chart;
  auto cNp = chart_point(Np), cNm = chart_point(Nm);
  auto dist2 = [](const ChartPoint& a, const ChartPoint& b) {
    return std::hypot(a.x[0] - b.x[0], a.x[1] - b.x[1]);
  };
  double start_to_np = std::min(dist2(cp_start, cNp), dist2(cp_start, cNm));
  double end_to_nm = std::min(dist2(cp_end, cNp), dist2(cp_end, cNm));
  CHECK(start_to_np < 1e-3);
  CHECK(end_to_nm < 1e-3);

  // preconditions
  CHECK_THROWS_AS(sample_trajectory(T, P, 0.0, 1.0, 1), error);
  CHECK_THROWS_AS(sample_trajectory(T, point(Space::H2, {2.0, 0.0}), 0.0, 1.0, 4), error);
}

TEST_SUITE_END();
