#include "repro_cases.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "hpga/motions.hpp"
#include "hpga/parse.hpp"

namespace hpga::repro {
namespace {

using std::numbers::pi;

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

Multivector mv(Space s, const char* text) { return parse_mv(text, algebra(s)); }

Case case_h1_distance() {
  Case c{"h1-distance", "H1 distance between phi = 1 and theta = -1/2", {}};
  auto a = point_h1(1.0);
  auto b = point_h1(-0.5);
  c.rows.push_back({"r(a,b)", distance(a, b), 1.5, 1e-12, "figure"});
  c.rows.push_back({"a.b", a.inner(b).as_scalar(), std::cosh(1.5), 1e-12, "figure"});
  c.rows.push_back(
      {"|a v b|", std::fabs(a.join(b).as_scalar()), std::sinh(1.5), 1e-12, "derived"});
  return c;
}

Case case_h2_fig2a() {
  Case c{"h2-fig2a-gap", "hyperparallel lines and their common perpendicular", {}};
  auto a = mv(Space::H2, "-3/2 e0 + 3 e1 + 1/2 e2");
  auto b = mv(Space::H2, "1/2 e0 + e1 + 1/2 e2");
  auto w = a.wedge(b);
  c.rows.push_back({"max|a^b - (e12 + e20 - 3e01)|",
                    max_dev(w, mv(Space::H2, "e12 + e20 - 3e01")), 0.0, 1e-12, "figure"});
  c.rows.push_back({"a^b is improper",
                    classify(w).kind == Kind::Improper ? 1.0 : 0.0, 1.0, 0.0, "exact"});
  LineGap g = line_line_gap_h2(a, b);
  c.rows.push_back({"max|c - (-1/3 e0 + 1/3 e1 - e2)|",
                    max_dev(g.c, mv(Space::H2, "-1/3 e0 + 1/3 e1 - e2")), 0.0, 1e-12,
                    "figure"});
  double coshr = std::fabs(a.inner(b).as_scalar()) / (a.norm() * b.norm());
  c.rows.push_back({"|d(P,Q) - acosh(|a.b|/(|a||b|))|",
                    std::fabs(distance(g.P, g.Q) - std::acosh(coshr)), 0.0, 1e-9,
                    "derived"});
  return c;
}

Case case_h2_fig3a() {
  Case c{"h2-fig3a-pointline", "point-line distance and the polar point", {}};
  auto a = mv(Space::H2, "-1/2 e0 + e1 + 1/2 e2");
  auto P = mv(Space::H2, "e12 - 1/2 e20 + 1/3 e01");
  c.rows.push_back({"sinh d(a,P)", std::sinh(distance_point_line_h2(a, P)),
                    (5.0 / 6.0) / (std::sqrt(23.0) / 6.0), 1e-12, "figure"});
  c.rows.push_back({"max|aI - (1/2 e12 + e20 + 1/2 e01)|",
                    max_dev(polar(a), mv(Space::H2, "1/2 e12 + e20 + 1/2 e01")), 0.0,
                    1e-12, "figure"});
  c.rows.push_back({"|P|", P.norm(), std::sqrt(23.0) / 6.0, 1e-12, "figure"});
  c.rows.push_back({"d(origin,P)", distance(origin(Space::H2), P),
                    std::acosh(6.0 / std::sqrt(23.0)), 1e-12, "derived"});
  return c;
}

Case case_h2_fig4b() {
  Case c{"h2-fig4b-translation", "translation along T I^-1", {}};
  auto T = mv(Space::H2, "1/2 e12 - e20 - 1/2 e01");
  auto P = mv(Space::H2, "e12 + 1/3 e20 - 1/2 e01");
  c.rows.push_back({"<T rev(T)>", T.norm_sq_signed(), -1.0, 1e-12, "figure"});
  Spinor tr = translation_h2(T, 1.0);
  auto axis = T.undual();
  c.rows.push_back(
      {"axis invariance", misalignment(apply(tr, axis), axis), 0.0, 1e-9, "figure"});
  auto e12 = origin(Space::H2);
  auto Np = (T + Multivector::scalar(T.alg(), 1.0)).gp(T.commutator(e12));
  auto Nm = (T - Multivector::scalar(T.alg(), 1.0)).gp(T.commutator(e12));
  c.rows.push_back({"N+ fixed", misalignment(apply(tr, Np), Np), 0.0, 1e-9, "figure"});
  c.rows.push_back({"N- fixed", misalignment(apply(tr, Nm), Nm), 0.0, 1e-9, "figure"});
  c.rows.push_back({"|d(P,axis) - d(TPT^-1,axis)|",
                    std::fabs(distance_point_line_h2(axis, P) -
                              distance_point_line_h2(axis, apply(tr, P))),
                    0.0, 1e-9, "figure"});
  Trajectory orbit = sample_trajectory(T, P, -20.0, 20.0, 5);
  auto cNp = chart_point(Np), cNm = chart_point(Nm);
  auto chart_gap = [&](const ChartPoint& s) {
    return std::min(std::hypot(s.x[0] - cNp.x[0], s.x[1] - cNp.x[1]),
                    std::hypot(s.x[0] - cNm.x[0], s.x[1] - cNm.x[1]));
  };
  c.rows.push_back({"orbit start approaches a null point",
                    chart_gap(orbit.samples.front().chart), 0.0, 1e-3, "derived"});
  c.rows.push_back({"orbit end approaches a null point",
                    chart_gap(orbit.samples.back().chart), 0.0, 1e-3, "derived"});
  return c;
}

Case case_h2_fig5a() {
  Case c{"h2-fig5a-rotation", "rotation around a proper point", {}};
  auto R = mv(Space::H2, "4e12 - 2e20 - 1e01") / std::sqrt(11.0);
  auto P = mv(Space::H2, "e12 + 1/3 e20 - 1/2 e01");
  c.rows.push_back({"<R rev(R)>", R.norm_sq_signed(), 1.0, 1e-12, "figure"});
  Spinor rot = rotation_h2(R, pi / 2);
  c.rows.push_back(
      {"centre invariance", misalignment(apply(rot, R), R), 0.0, 1e-9, "figure"});
  c.rows.push_back({"|d(P,R) - d(RPR^-1,R)|",
                    std::fabs(distance(P, R) - distance(apply(rot, P), R)), 0.0, 1e-9,
                    "figure"});
  c.rows.push_back({"max|rot(2pi) P - P|", max_dev(apply(rotation_h2(R, 2 * pi), P), P),
                    0.0, 1e-10, "figure"});
  Trajectory circle = sample_trajectory(R, P, 0.0, 2 * pi * 7 / 8, 8);
  double r0 = distance(P, R), spread = 0.0;
  for (const auto& s : circle.samples)
    spread = std::max(spread, std::fabs(distance(s.object, R) - r0));
  c.rows.push_back({"circle radius spread over 8 samples", spread, 0.0, 1e-9, "derived"});
  return c;
}

Case case_h2_fig5b() {
  Case c{"h2-fig5b-nulltrans", "null translation anchored at N", {}};
  const Algebra& h2 = algebra(Space::H2);
  auto a = mv(Space::H2, "-1e1 + 2e2") / std::sqrt(5.0);
  auto N = Multivector::blade(h2, 0b110) + Multivector::blade(h2, 0b001).wedge(a);
  double theta = 1.0;
  Spinor S = null_translation_h2(N, theta);
  auto P = mv(Space::H2, "e12 + 1/3 e20 - 1/2 e01");
  auto quad = P + theta * P.commutator(N) - 0.25 * theta * theta * N.gp(P).gp(N);
  c.rows.push_back(
      {"max|S P S^-1 - (P + t PxN - t^2/4 NPN)|", max_dev(apply(S, P), quad), 0.0, 1e-14,
       "figure"});
  c.rows.push_back({"anchor fixed", max_dev(apply(S, N), N), 0.0, 1e-12, "figure"});
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(-0.95, 0.95);
  double min_disp = 1e9;
  int count = 0;
  while (count < 100) {
    double x = u(rng), y = u(rng);
    if (x * x + y * y > 0.9) continue;
    ++count;
    auto Q = point(Space::H2, {x, y});
    min_disp = std::min(min_disp, misalignment(apply(S, Q), Q));
  }
  c.rows.push_back({"no proper fixed point (min displacement > 1e-6)",
                    min_disp > 1e-6 ? 1.0 : 0.0, 1.0, 0.0, "derived"});
  return c;
}

Case case_h3_fig6() {
  Case c{"h3-fig6-skew", "skew lines, their commutator axes, and the gap", {}};
  double Lp[6] = {-1.5, 1.0, -0.5, -1.0, -2.5, -2.0};
  double Kp[6] = {1.0, 5.0 / 3.0, -2.0, -1.0, 3.0, 2.0};
  c.rows.push_back({"Plucker(L)", Lp[0] * Lp[3] + Lp[1] * Lp[4] + Lp[2] * Lp[5], 0.0,
                    1e-12, "figure"});
  c.rows.push_back({"Plucker(K)", Kp[0] * Kp[3] + Kp[1] * Kp[4] + Kp[2] * Kp[5], 0.0,
                    1e-12, "figure"});
  auto L = line_h3(Lp[0], Lp[1], Lp[2], Lp[3], Lp[4], Lp[5]).normalized();
  auto K = line_h3(Kp[0], Kp[1], Kp[2], Kp[3], Kp[4], Kp[5]).normalized();
  c.rows.push_back({"L proper", classify(L).kind == Kind::Proper ? 1.0 : 0.0, 1.0, 0.0,
                    "exact"});
  c.rows.push_back({"K proper", classify(K).kind == Kind::Proper ? 1.0 : 0.0, 1.0, 0.0,
                    "exact"});
  double u = L.inner(K).as_scalar();
  double v = L.join(K).as_scalar();
  c.rows.push_back({"u = L.K", u, 35.0 / std::sqrt(434.0), 1e-12, "derived"});
  c.rows.push_back({"|v| = |L v K|", std::fabs(v), 7.0 / std::sqrt(434.0), 1e-12,
                    "derived"});
  SkewGap g = skew_lines_gap(L, K);
  c.rows.push_back({"cos(alpha) + u/cosh(r)",
                    std::cos(g.alpha) + u / std::cosh(g.r), 0.0, 1e-9, "derived"});
  double inc = 0.0;
  for (const Multivector* ax : {&g.axis_proper, &g.axis_improper}) {
    auto axn = *ax / ax->max_abs();
    inc = std::max(inc, std::fabs(axn.join(L).as_scalar(1e-7)));
    inc = std::max(inc, std::fabs(axn.join(K).as_scalar(1e-7)));
  }
  c.rows.push_back({"axes pass through both lines", inc, 0.0, 1e-9, "figure"});
  auto foot_l = g.axis_proper.wedge(L.join(origin(Space::H3)));
  auto foot_k = g.axis_proper.wedge(K.join(origin(Space::H3)));
  c.rows.push_back({"|r - d(feet on proper axis)|",
                    std::fabs(g.r - distance(foot_l, foot_k)), 0.0, 1e-8, "derived"});
  return c;
}

Case case_h3_fig7() {
  Case c{"h3-fig7-screw", "rotation and translation along a line", {}};
  auto Pa = point(Space::H3, {1.0, 0.0, 0.0});
  auto Qa = point(Space::H3, {0.0, 1.0, 1.0 / 3.0});
  auto L = Pa.join(Qa).normalized();
  c.rows.push_back({"<L rev(L)> after normalization", L.norm_sq_signed(), 1.0, 1e-12,
                    "exact"});
  auto A = point(Space::H3, {0.2, -0.1, 0.3});
  c.rows.push_back({"max|rot(2pi) A - A|",
                    max_dev(apply(screw_h3(L, 2 * pi, 0.0), A), A), 0.0, 1e-10, "figure"});
  double alpha = 1.1, lambda = 0.6;
  Spinor S = screw_h3(L, alpha, lambda);
  Spinor rot = screw_h3(L, alpha, 0.0);
  Spinor tra = screw_h3(L, 0.0, lambda);
  c.rows.push_back({"max|screw - rot*tra|", max_dev(S.value, rot.value.gp(tra.value)),
                    0.0, 1e-10, "figure"});
  c.rows.push_back({"max|rot*tra - tra*rot|",
                    max_dev(rot.value.gp(tra.value), tra.value.gp(rot.value)), 0.0, 1e-12,
                    "figure"});
  double spread_rot = 0.0, spread_tra = 0.0;
  double d0 = distance_point_line_h3(L, A);
  Trajectory trot = sample_trajectory(L * 1.0, A, -pi, pi, 9);
  for (const auto& s : trot.samples)
    spread_rot = std::max(spread_rot, std::fabs(distance_point_line_h3(L, s.object) - d0));
  auto gen_tra = polar(L);
  Trajectory ttra = sample_trajectory(gen_tra, A, -1.5, 1.5, 9);
  for (const auto& s : ttra.samples)
    spread_tra = std::max(spread_tra, std::fabs(distance_point_line_h3(L, s.object) - d0));
  c.rows.push_back({"rotation orbit: distance-to-axis spread", spread_rot, 0.0, 1e-9,
                    "figure"});
  c.rows.push_back({"translation orbit: distance-to-axis spread", spread_tra, 0.0, 1e-9,
                    "figure"});
  return c;
}

}  // namespace

bool Row::pass() const { return std::fabs(computed - expected) <= tol; }

bool Case::pass() const {
  for (const Row& r : rows)
    if (!r.pass()) return false;
  return true;
}

const std::vector<std::string>& case_ids() {
  static const std::vector<std::string> ids = {
      "h1-distance",       "h2-fig2a-gap",   "h2-fig3a-pointline",
      "h2-fig4b-translation", "h2-fig5a-rotation", "h2-fig5b-nulltrans",
      "h3-fig6-skew",      "h3-fig7-screw"};
  return ids;
}

Case run_case(const std::string& id) {
  if (id == "h1-distance") return case_h1_distance();
  if (id == "h2-fig2a-gap") return case_h2_fig2a();
  if (id == "h2-fig3a-pointline") return case_h2_fig3a();
  if (id == "h2-fig4b-translation") return case_h2_fig4b();
  if (id == "h2-fig5a-rotation") return case_h2_fig5a();
  if (id == "h2-fig5b-nulltrans") return case_h2_fig5b();
  if (id == "h3-fig6-skew") return case_h3_fig6();
  if (id == "h3-fig7-screw") return case_h3_fig7();
  fail(errc::unknown_case, "unknown repro case '" + id + "'");
}

}  // namespace hpga::repro
