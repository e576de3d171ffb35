#pragma once
#include <array>
#include <utility>
#include <vector>

#include "hpga/multivector.hpp"

namespace hpga {

enum class Kind { Proper, Null, Improper };
const char* kind_name(Kind) noexcept;

// Result of the proper/null/improper decision. discriminant is the signed
// squared pseudo-norm <A reverse(A)>_0, positive for proper objects in
// every dimension and grade.
struct GeomClass {
  Kind kind;
  double discriminant;
  double tolerance_used;
};

// Process-wide numeric policy. The classification tolerance is relative to
// the squared magnitude of the object, so the decision is scale-invariant.
struct Tolerances {
  double classify = 1e-9;
  double cross_check = 1e-9;
  double incidence = 1e-9;
};
Tolerances& tolerances() noexcept;

// ---- constructors in the paper's dual coordinates ----
Multivector point_h1(double phi);                 // -sinh(phi) e0 + cosh(phi) e1
Multivector point(Space s, const std::vector<double>& chart, double weight = 1.0);
Multivector origin(Space s);                      // e1 / e12 / e123
Multivector line_h2(double d, double a, double b);
Multivector plane_h3(double d, double a, double b, double c);
Multivector line_h3(double p10, double p20, double p30,
                    double p23, double p31, double p12);  // Plucker-checked
Multivector line_join(const Multivector& P, const Multivector& Q);

struct ChartPoint {
  std::array<double, 3> x{};
  int dims;
  double weight;
};
ChartPoint chart_point(const Multivector& P);  // throws weight_vanishes

GeomClass classify(const Multivector& A);
bool is_proper(const Multivector& A);

// ---- measurements (inputs auto-normalized; Proper required) ----
double distance(const Multivector& P, const Multivector& Q);
double distance_point_line_h2(const Multivector& a, const Multivector& P);
double distance_point_plane_h3(const Multivector& a, const Multivector& P);
double distance_point_line_h3(const Multivector& line, const Multivector& P);
// acos of the raw (signed) inner product, so anti-oriented inputs report
// pi - alpha; requires a proper meet.
double angle(const Multivector& a, const Multivector& b);

struct LineGap {
  double r;
  Multivector c;  // common perpendicular, normalized
  Multivector P;  // foot on a, normalized
  Multivector Q;  // foot on b, normalized
};
LineGap line_line_gap_h2(const Multivector& a, const Multivector& b);

// Where the object crosses (or, when null, touches) the absolute quadric.
std::pair<Multivector, Multivector> null_points(const Multivector& A);

Multivector polar(const Multivector& A);  // A I
bool is_perpendicular(const Multivector& x, const Multivector& y);

Multivector project(const Multivector& A, const Multivector& B);  // (A.B) B^-1
Multivector reject(const Multivector& A, const Multivector& B);   // (A^B) B^-1
Multivector reflect(const Multivector& A, const Multivector& B);  // top-down sandwich

double right_triangle_area(const Multivector& P, const Multivector& Q,
                           const Multivector& R);
double general_triangle_area(const Multivector& P, const Multivector& Q,
                             const Multivector& R);

// Proper/improper axis pair of an H3 bivector; (L, 0) when simple.
std::pair<Multivector, Multivector> axes(const Multivector& line);

struct SkewGap {
  double r;
  double alpha;
  Multivector axis_proper;    // commutator axis through both lines, proper
  Multivector axis_improper;  // its polar counterpart
};
SkewGap skew_lines_gap(const Multivector& la, const Multivector& lb);

}  // namespace hpga
