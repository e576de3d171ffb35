#include "hpga/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hpga {
namespace {

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

double acosh_safe(double x) { return std::acosh(std::max(1.0, x)); }

bool geometric_grade(const Algebra& a, const Multivector& A, int& grade_out) {
  for (int k = 1; k <= a.dim; ++k)
    if (A.is_homogeneous(k, 1e-9) && !A.grade(k).is_zero(0.0)) {
      grade_out = k;
      return true;
    }
  return false;
}

Multivector require_proper_normalized(const Multivector& A, errc code, const char* what) {
  GeomClass c = classify(A);
  if (c.kind != Kind::Proper)
    fail(code, std::string(what) + " must be proper (got " + kind_name(c.kind) + ")");
  return A.normalized();
}

// Compares a sinh-route distance r against a cosh-route value c = cosh(r').
// The comparison runs in the cosh domain, which stays well-conditioned at
// r = 0 where acosh would lose half the digits.
void cross_check_cosh(double r, double c, const char* what) {
  double tol = tolerances().cross_check;
  if (std::fabs(std::cosh(r) - c) > tol * std::max(1.0, std::fabs(c)))
    fail(errc::internal_inconsistency,
         std::string(what) + " cross-check failed: cosh " + std::to_string(std::cosh(r)) +
             " vs " + std::to_string(c));
}

void cross_check(double r1, double r2, const char* what) {
  double tol = tolerances().cross_check;
  if (std::fabs(r1 - r2) > tol * std::max(1.0, std::fabs(r1)))
    fail(errc::internal_inconsistency,
         std::string(what) + " cross-check failed: " + std::to_string(r1) + " vs " +
             std::to_string(r2));
}

}  // namespace

const char* kind_name(Kind k) noexcept {
  switch (k) {
    case Kind::Proper: return "Proper";
    case Kind::Null: return "Null";
    case Kind::Improper: return "Improper";
  }
  return "?";
}

Tolerances& tolerances() noexcept {
  static Tolerances t;
  return t;
}

Multivector point_h1(double phi) {
  const Algebra& a = algebra(Space::H1);
  Multivector p(a);
  p[1] = -std::sinh(phi);
  p[2] = std::cosh(phi);
  return p;
}

Multivector origin(Space s) {
  const Algebra& a = algebra(s);
  switch (s) {
    case Space::H1: return Multivector::blade(a, 0b10);
    case Space::H2: return Multivector::blade(a, 0b110);
    default: return Multivector::blade(a, 0b1110);
  }
}

Multivector point(Space s, const std::vector<double>& chart, double weight) {
  const Algebra& a = algebra(s);
  if (static_cast<int>(chart.size()) != a.dim)
    fail(errc::usage, "chart coordinate count does not match the space dimension");
  Multivector p(a);
  switch (s) {
    case Space::H1:
      p[1] = -weight * chart[0];
      p[2] = weight;
      break;
    case Space::H2:
      p[0b110] = weight;             // e12
      p[0b101] = -weight * chart[0]; // x e20
      p[0b011] = weight * chart[1];  // y e01
      break;
    case Space::H3:
      p[0b1110] = weight;             // e123
      p[0b1101] = -weight * chart[0]; // x e320
      p[0b1011] = weight * chart[1];  // y e130
      p[0b0111] = -weight * chart[2]; // z e210
      break;
  }
  return p;
}

Multivector line_h2(double d, double a, double b) {
  const Algebra& alg = algebra(Space::H2);
  Multivector l(alg);
  l[1] = d;
  l[2] = a;
  l[4] = b;
  return l;
}

Multivector plane_h3(double d, double a, double b, double c) {
  const Algebra& alg = algebra(Space::H3);
  Multivector p(alg);
  p[1] = d;
  p[2] = a;
  p[4] = b;
  p[8] = c;
  return p;
}

Multivector line_h3(double p10, double p20, double p30, double p23, double p31,
                    double p12) {
  double plucker = p10 * p23 + p20 * p31 + p30 * p12;
  double scale = 0.0;
  for (double v : {p10, p20, p30, p23, p31, p12}) scale = std::max(scale, std::fabs(v));
  if (std::fabs(plucker) > 1e-9 * std::max(1e-300, scale * scale))
    fail(errc::plucker_violation,
         "line coefficients violate p10*p23 + p20*p31 + p30*p12 = 0");
  const Algebra& alg = algebra(Space::H3);
  Multivector l(alg);
  l[0b0011] = -p10;  // e10 = -e01
  l[0b0101] = -p20;
  l[0b1001] = -p30;
  l[0b1100] = p23;
  l[0b1010] = -p31;  // e31 = -e13
  l[0b0110] = p12;
  return l;
}

Multivector line_join(const Multivector& P, const Multivector& Q) { return P.join(Q); }

ChartPoint chart_point(const Multivector& P) {
  const Algebra& a = P.alg();
  ChartPoint cp;
  cp.dims = a.dim;
  double w, x = 0.0, y = 0.0, z = 0.0;
  switch (a.space) {
    case Space::H1:
      w = P[2];
      x = -P[1];
      break;
    case Space::H2:
      w = P[0b110];
      x = -P[0b101];
      y = P[0b011];
      break;
    default:
      w = P[0b1110];
      x = -P[0b1101];
      y = P[0b1011];
      z = -P[0b0111];
      break;
  }
  if (std::fabs(w) < 1e-12 * std::max(1.0, P.max_abs()))
    fail(errc::weight_vanishes, "point weight vanishes (chart point at infinity)");
  cp.weight = w;
  cp.x = {x / w + 0.0, y / w + 0.0, z / w + 0.0};  // clears negative zeros
  return cp;
}

GeomClass classify(const Multivector& A) {
  const Algebra& a = A.alg();
  int g;
  if (!geometric_grade(a, A, g))
    fail(errc::usage, "classification needs a homogeneous object of geometric grade");
  double disc = A.norm_sq_signed();
  double scale = A.max_abs();
  double tol = tolerances().classify * scale * scale;
  GeomClass c;
  c.discriminant = disc;
  c.tolerance_used = tol;
  c.kind = (disc > tol) ? Kind::Proper : (disc < -tol) ? Kind::Improper : Kind::Null;
  return c;
}

bool is_proper(const Multivector& A) { return classify(A).kind == Kind::Proper; }

double distance(const Multivector& P, const Multivector& Q) {
  Multivector p = require_proper_normalized(P, errc::null_or_improper_input, "point");
  Multivector q = require_proper_normalized(Q, errc::null_or_improper_input, "point");
  double s = p.join(q).norm();
  double r = std::asinh(s);
  double c = std::fabs(p.inner(q).as_scalar(1e-9));
  cross_check_cosh(r, c, "distance");
  return r;
}

double distance_point_line_h2(const Multivector& a, const Multivector& P) {
  Multivector an = require_proper_normalized(a, errc::null_or_improper_input, "line");
  Multivector pn = require_proper_normalized(P, errc::null_or_improper_input, "point");
  double r = std::asinh(std::fabs(an.join(pn).as_scalar(1e-9)));
  cross_check_cosh(r, an.inner(pn).norm(), "point-line distance");
  return r;
}

double distance_point_plane_h3(const Multivector& a, const Multivector& P) {
  Multivector an = require_proper_normalized(a, errc::null_or_improper_input, "plane");
  Multivector pn = require_proper_normalized(P, errc::null_or_improper_input, "point");
  double r = std::asinh(std::fabs(an.join(pn).as_scalar(1e-9)));
  cross_check_cosh(r, an.inner(pn).norm(), "point-plane distance");
  return r;
}

double distance_point_line_h3(const Multivector& line, const Multivector& P) {
  Multivector ln = require_proper_normalized(line, errc::null_or_improper_input, "line");
  Multivector pn = require_proper_normalized(P, errc::null_or_improper_input, "point");
  double r = std::asinh(ln.join(pn).norm());
  cross_check_cosh(r, ln.inner(pn).norm(), "point-line distance");
  return r;
}

double angle(const Multivector& a, const Multivector& b) {
  const Algebra& alg = a.alg();
  Multivector an = require_proper_normalized(a, errc::null_or_improper_input, "input");
  Multivector bn = require_proper_normalized(b, errc::null_or_improper_input, "input");
  int ga = 0, gb = 0;
  geometric_grade(alg, an, ga);
  geometric_grade(alg, bn, gb);

  if (alg.space == Space::H3 && ga == 2 && gb == 2) {
    // Lines must intersect at a proper point; the commutator classifies the
    // intersection point.
    double v = an.join(bn).as_scalar(1e-9);
    if (std::fabs(v) > tolerances().incidence)
      fail(errc::meet_not_proper, "lines do not intersect (skew configuration)");
    Multivector comm = an.commutator(bn);
    if (classify(comm).kind != Kind::Proper)
      fail(errc::meet_not_proper, "lines meet at a non-proper point");
    return std::acos(clamp_unit(-an.inner(bn).as_scalar(1e-9)));
  }

  Multivector meet = an.wedge(bn);
  if (meet.is_zero(1e-12)) {
    // coincident inputs: the inner product is +-1
    return std::acos(clamp_unit(an.inner(bn).as_scalar(1e-9)));
  }
  if (classify(meet).kind != Kind::Proper)
    fail(errc::meet_not_proper,
         "angle undefined: the meet is not proper (parallel or hyperparallel inputs)");
  return std::acos(clamp_unit(an.inner(bn).as_scalar(1e-9)));
}

LineGap line_line_gap_h2(const Multivector& a, const Multivector& b) {
  Multivector an = require_proper_normalized(a, errc::null_or_improper_input, "line");
  Multivector bn = require_proper_normalized(b, errc::null_or_improper_input, "line");
  Multivector meet = an.wedge(bn);
  if (meet.is_zero(1e-12) || classify(meet).kind != Kind::Improper)
    fail(errc::not_hyperparallel, "lines are not hyperparallel");
  LineGap g{0.0, Multivector(a.alg()), Multivector(a.alg()), Multivector(a.alg())};
  g.r = acosh_safe(std::fabs(an.inner(bn).as_scalar(1e-9)));
  cross_check(g.r, std::asinh(meet.norm()), "closest approach");
  g.c = meet.undual().normalized();
  g.P = an.wedge(g.c).normalized();
  g.Q = bn.wedge(g.c).normalized();
  cross_check(std::fabs(g.P.inner(g.Q).as_scalar(1e-9)), std::cosh(g.r), "feet");
  return g;
}

std::pair<Multivector, Multivector> null_points(const Multivector& A) {
  const Algebra& alg = A.alg();
  GeomClass c = classify(A);
  if (c.kind == Kind::Improper)
    fail(errc::improper_input, "null points exist for proper or null objects only");
  Multivector I = Multivector::pseudoscalar(alg);
  if (c.kind == Kind::Null) {
    // Touch point on the absolute quadric.
    if (alg.space == Space::H3) return {A.gp(A.inner(origin(Space::H3))),
                                        A.gp(A.inner(origin(Space::H3)))};
    if (alg.space == Space::H2) return {A.dual(), A.dual()};
    return {A, A};
  }
  Multivector an = A.normalized();
  if (alg.space == Space::H1) {
    return {an + an.gp(I), an - an.gp(I)};
  }
  Multivector mid = an.inner(origin(alg.space));
  return {(an + I).gp(mid), (an - I).gp(mid)};
}

Multivector polar(const Multivector& A) { return A.dual(); }

bool is_perpendicular(const Multivector& x, const Multivector& y) {
  Multivector xn = require_proper_normalized(x, errc::null_or_improper_input, "input");
  Multivector yn = require_proper_normalized(y, errc::null_or_improper_input, "input");
  return xn.inner(yn).norm() <= tolerances().incidence;
}

namespace {

Multivector mirror_inverse(const Multivector& B) {
  try {
    return B.inverse();
  } catch (const error&) {
    fail(errc::null_mirror, "cannot project on, reject by, or reflect in a null object");
  }
}

}  // namespace

Multivector project(const Multivector& A, const Multivector& B) {
  return A.inner(B).gp(mirror_inverse(B));
}

Multivector reject(const Multivector& A, const Multivector& B) {
  return A.wedge(B).gp(mirror_inverse(B));
}

Multivector reflect(const Multivector& A, const Multivector& B) {
  // Top-down sign (-1)^{grade(A) grade(B)}, applied per grade part of A.
  Multivector binv = mirror_inverse(B);
  int gb = -1;
  if (!geometric_grade(B.alg(), B, gb))
    fail(errc::usage, "mirror must be homogeneous of a geometric grade");
  Multivector sandwiched = B.gp(A).gp(binv);
  Multivector out(A.alg());
  for (int k = 0; k <= B.alg().gens; ++k) {
    double sign = ((k * gb) & 1) ? -1.0 : 1.0;
    out += sandwiched.grade(k) * sign;
  }
  return out;
}

double right_triangle_area(const Multivector& P, const Multivector& Q,
                           const Multivector& R) {
  if (classify(P).kind != Kind::Proper)
    fail(errc::null_vertex_at_p, "the right-angle vertex must be proper");
  Multivector pn = P.normalized();
  GeomClass cq = classify(Q), cr = classify(R);
  if (cq.kind == Kind::Improper || cr.kind == Kind::Improper)
    fail(errc::null_or_improper_input, "triangle vertices must be proper or null");

  // Coincident legs span no area.
  double qr_cos = 0.0, qn = 0.0, rn = 0.0;
  for (int i = 0; i < Q.size(); ++i) {
    qr_cos += Q[i] * R[i];
    qn += Q[i] * Q[i];
    rn += R[i] * R[i];
  }
  if (1.0 - std::fabs(qr_cos) / std::sqrt(qn * rn) < 1e-14) return 0.0;

  Multivector eq = pn.join(Q);
  Multivector er = pn.join(R);
  if (eq.is_zero(1e-12) || er.is_zero(1e-12))
    fail(errc::degenerate_triangle, "triangle is degenerate");
  double perp = eq.normalized().inner(er.normalized()).as_scalar(1e-9);
  if (std::fabs(perp) > tolerances().cross_check)
    fail(errc::not_right_angled, "the angle at P is not pi/2");

  // |P v Q v R| / (|Q||R| + |Q.R|): valid for unnormalized Q, R, including
  // null vertices.
  double triple = std::fabs(pn.join(Q).join(R).as_scalar(1e-9));
  double denom = Q.norm() * R.norm() + std::fabs(Q.inner(R).as_scalar(1e-9));
  if (denom == 0.0) fail(errc::degenerate_triangle, "triangle is degenerate");
  return std::asin(clamp_unit(triple / denom));
}

double general_triangle_area(const Multivector& P, const Multivector& Q,
                             const Multivector& R) {
  Multivector pn = require_proper_normalized(P, errc::null_or_improper_input, "vertex");
  Multivector qn = require_proper_normalized(Q, errc::null_or_improper_input, "vertex");
  Multivector rn = require_proper_normalized(R, errc::null_or_improper_input, "vertex");
  double triple = pn.join(qn).join(rn).as_scalar(1e-9);
  double scale = std::max({pn.max_abs(), qn.max_abs(), rn.max_abs()});
  if (std::fabs(triple) <= 1e-12 * scale)
    fail(errc::degenerate_triangle, "vertices are collinear");
  // Canonical orientation so the defect combination below is the area.
  if (triple < 0.0) std::swap(qn, rn);

  Multivector er = pn.join(qn);  // r = P v Q
  Multivector eq = pn.join(rn);  // q = P v R
  Multivector ep = rn.join(qn);  // p = R v Q
  for (const Multivector* e : {&er, &eq, &ep})
    if (classify(*e).kind != Kind::Proper)
      fail(errc::degenerate_triangle, "triangle edge is not a proper line");
  auto edge_angle = [](const Multivector& u, const Multivector& v) {
    return std::acos(clamp_unit(u.inner(v).as_scalar(1e-9) / (u.norm() * v.norm())));
  };
  double alpha = edge_angle(er, eq);
  double beta = edge_angle(er, ep);
  double gamma = edge_angle(eq, ep);
  return gamma - alpha - beta;
}

std::pair<Multivector, Multivector> axes(const Multivector& line) {
  if (line.alg().space != Space::H3)
    fail(errc::usage, "axis decomposition is defined in H3");
  return bivector_axes(line);
}

SkewGap skew_lines_gap(const Multivector& la, const Multivector& lb) {
  const Algebra& alg = la.alg();
  if (alg.space != Space::H3) fail(errc::usage, "skew lines live in H3");
  Multivector a = require_proper_normalized(la, errc::null_or_improper_input, "line");
  Multivector b = require_proper_normalized(lb, errc::null_or_improper_input, "line");
  double v = a.join(b).as_scalar(1e-9);
  if (std::fabs(v) <= tolerances().incidence)
    fail(errc::lines_intersect, "lines intersect; use angle or the hyperparallel gap");
  double u = a.inner(b).as_scalar(1e-9);

  double t = u * u + v * v - 1.0;
  double sinh2 = 0.5 * (t + std::sqrt(t * t + 4.0 * v * v));
  SkewGap g{0.0, 0.0, Multivector(alg), Multivector(alg)};
  g.r = std::asinh(std::sqrt(sinh2));
  g.alpha = std::acos(clamp_unit(-u / std::cosh(g.r)));

  auto [c1, c2] = bivector_axes(a.commutator(b));
  g.axis_proper = c1;
  g.axis_improper = c2;
  return g;
}

}  // namespace hpga
