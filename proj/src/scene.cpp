#include "hpga/scene.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include "hpga/motions.hpp"
#include "hpga/oracle.hpp"

namespace hpga {
namespace {

std::string num_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct AuditState {
  double max_dev = 0.0;
  std::size_t products = 0;
};
AuditState g_audit_state;

void oracle_audit(const Algebra& alg, const char* op, const double* a, const double* b,
                  const double* c) {
  Multivector A(alg), B(alg);
  for (int i = 0; i < alg.size; ++i) {
    A[i] = a[i];
    B[i] = b[i];
  }
  Multivector ref =
      (op[0] == 'g')   ? oracle::rep_product(A, B)
      : (op[0] == 'w') ? oracle::rep_wedge(A, B)
                       : oracle::rep_inner(A, B);
  for (int i = 0; i < alg.size; ++i)
    g_audit_state.max_dev = std::max(g_audit_state.max_dev, std::fabs(ref[i] - c[i]));
  ++g_audit_state.products;
}

using Args = std::vector<Multivector>;
using Handler = std::function<void(const Args&, QueryResult&)>;

void put_scalar(QueryResult& r, const std::string& name, double v) {
  r.outputs.push_back({name, "scalar", num_text(v), v});
}

void put_bool(QueryResult& r, const std::string& name, bool v) {
  r.outputs.push_back({name, "bool", v ? "true" : "false", v ? 1.0 : 0.0});
}

void put_mv(QueryResult& r, const std::string& name, const Multivector& m) {
  r.outputs.push_back({name, "mv", serialize_mv(m), 0.0});
  if (r.classification.empty()) {
    int g = -1;
    for (int k = 1; k <= m.alg().dim; ++k)
      if (m.is_homogeneous(k, 1e-9) && !m.grade(k).is_zero(0.0)) g = k;
    if (g > 0) r.classification = kind_name(classify(m).kind);
  }
}

const std::map<std::string, std::pair<int, Handler>>& handlers() {
  static const std::map<std::string, std::pair<int, Handler>> h = {
      {"classify", {1, [](const Args& a, QueryResult& r) {
                      GeomClass c = classify(a[0]);
                      r.outputs.push_back({"kind", "text", kind_name(c.kind), 0.0});
                      put_scalar(r, "discriminant", c.discriminant);
                    }}},
      {"norm", {1, [](const Args& a, QueryResult& r) { put_scalar(r, "norm", a[0].norm()); }}},
      {"normalize", {1, [](const Args& a, QueryResult& r) { put_mv(r, "result", a[0].normalized()); }}},
      {"polar", {1, [](const Args& a, QueryResult& r) { put_mv(r, "result", polar(a[0])); }}},
      {"dual", {1, [](const Args& a, QueryResult& r) { put_mv(r, "result", a[0].dual()); }}},
      {"undual", {1, [](const Args& a, QueryResult& r) { put_mv(r, "result", a[0].undual()); }}},
      {"reverse", {1, [](const Args& a, QueryResult& r) { put_mv(r, "result", a[0].reverse()); }}},
      {"exp", {1, [](const Args& a, QueryResult& r) { put_mv(r, "result", exp_bivector(a[0])); }}},
      {"null_points", {1, [](const Args& a, QueryResult& r) {
                         auto [np, nm] = null_points(a[0]);
                         put_mv(r, "N+", np);
                         put_mv(r, "N-", nm);
                       }}},
      {"axes", {1, [](const Args& a, QueryResult& r) {
                  auto [l1, l2] = axes(a[0]);
                  put_mv(r, "L1", l1);
                  put_mv(r, "L2", l2);
                }}},
      {"product", {2, [](const Args& a, QueryResult& r) { put_mv(r, "result", a[0].gp(a[1])); }}},
      {"wedge", {2, [](const Args& a, QueryResult& r) { put_mv(r, "result", a[0].wedge(a[1])); }}},
      {"inner", {2, [](const Args& a, QueryResult& r) { put_mv(r, "result", a[0].inner(a[1])); }}},
      {"join", {2, [](const Args& a, QueryResult& r) { put_mv(r, "result", a[0].join(a[1])); }}},
      {"commutator", {2, [](const Args& a, QueryResult& r) { put_mv(r, "result", a[0].commutator(a[1])); }}},
      {"distance", {2, [](const Args& a, QueryResult& r) { put_scalar(r, "r", distance(a[0], a[1])); }}},
      {"distance_point_line", {2, [](const Args& a, QueryResult& r) {
                                 double d = a[0].alg().space == Space::H3
                                                ? distance_point_line_h3(a[0], a[1])
                                                : distance_point_line_h2(a[0], a[1]);
                                 put_scalar(r, "r", d);
                               }}},
      {"distance_point_plane", {2, [](const Args& a, QueryResult& r) {
                                  put_scalar(r, "r", distance_point_plane_h3(a[0], a[1]));
                                }}},
      {"angle", {2, [](const Args& a, QueryResult& r) { put_scalar(r, "alpha", angle(a[0], a[1])); }}},
      {"line_gap", {2, [](const Args& a, QueryResult& r) {
                      LineGap g = line_line_gap_h2(a[0], a[1]);
                      put_scalar(r, "r", g.r);
                      put_mv(r, "c", g.c);
                      put_mv(r, "P", g.P);
                      put_mv(r, "Q", g.Q);
                    }}},
      {"skew_gap", {2, [](const Args& a, QueryResult& r) {
                      SkewGap g = skew_lines_gap(a[0], a[1]);
                      put_scalar(r, "r", g.r);
                      put_scalar(r, "alpha", g.alpha);
                      put_mv(r, "axis_proper", g.axis_proper);
                      put_mv(r, "axis_improper", g.axis_improper);
                    }}},
      {"project", {2, [](const Args& a, QueryResult& r) { put_mv(r, "result", project(a[0], a[1])); }}},
      {"reject", {2, [](const Args& a, QueryResult& r) { put_mv(r, "result", reject(a[0], a[1])); }}},
      {"reflect", {2, [](const Args& a, QueryResult& r) { put_mv(r, "result", reflect(a[0], a[1])); }}},
      {"is_perpendicular", {2, [](const Args& a, QueryResult& r) {
                              put_bool(r, "result", is_perpendicular(a[0], a[1]));
                            }}},
      {"apply", {2, [](const Args& a, QueryResult& r) {
                   put_mv(r, "result", apply(spinor_from_generator(a[0]), a[1]));
                 }}},
      {"right_triangle_area", {3, [](const Args& a, QueryResult& r) {
                                 put_scalar(r, "S", right_triangle_area(a[0], a[1], a[2]));
                               }}},
      {"triangle_area", {3, [](const Args& a, QueryResult& r) {
                           put_scalar(r, "S", general_triangle_area(a[0], a[1], a[2]));
                         }}},
  };
  return h;
}

}  // namespace

const std::vector<std::string>& known_query_ops() {
  static const std::vector<std::string> ops = [] {
    std::vector<std::string> v;
    for (const auto& [name, _] : handlers()) v.push_back(name);
    return v;
  }();
  return ops;
}

std::vector<QueryResult> evaluate_scene(const SceneDocument& doc, const EvalOptions& opts) {
  std::vector<QueryResult> results;
  results.reserve(doc.queries.size());
  for (const SceneQuery& q : doc.queries) {
    QueryResult r;
    r.line = q.line;
    r.query = q.op;
    for (const std::string& a : q.args) r.query += " " + a;

    if (opts.oracle_audit) {
      g_audit_state = {};
      set_product_audit(&oracle_audit);
    }
    try {
      auto it = handlers().find(q.op);
      if (it == handlers().end())
        fail(errc::unknown_query_op, "unknown query op '" + q.op + "'");
      if (static_cast<int>(q.args.size()) != it->second.first)
        fail(errc::usage, "op '" + q.op + "' expects " +
                              std::to_string(it->second.first) + " arguments");
      Args args;
      for (const std::string& name : q.args) args.push_back(*doc.find(name));
      it->second.second(args, r);
    } catch (const error& e) {
      r.ok = false;
      r.error_code = errc_name(e.code());
      r.error_message = e.what();
    }
    if (opts.oracle_audit) {
      set_product_audit(nullptr);
      r.oracle_max_dev = g_audit_state.max_dev;
      r.oracle_products = g_audit_state.products;
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace hpga
