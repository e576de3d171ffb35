#include "hpga/plot.hpp"

#include <cstdio>

#include <json.hpp>

#include "hpga/parse.hpp"

namespace hpga {
namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string svg_coord(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

void write_trajectory_csv(const Trajectory& tr, std::ostream& os) {
  int dims = tr.object.alg().dim;
  os << "t,x";
  if (dims >= 2) os << ",y";
  if (dims >= 3) os << ",z";
  os << ",weight\n";
  for (const TrajectorySample& s : tr.samples) {
    if (!s.has_chart) continue;
    os << g17(s.t);
    for (int i = 0; i < dims; ++i) os << ',' << g17(s.chart.x[i]);
    os << ',' << g17(s.chart.weight) << '\n';
  }
}

void write_trajectory_json(const Trajectory& tr, std::ostream& os) {
  nlohmann::json j;
  j["space"] = space_name(tr.object.alg().space);
  j["generator"] = serialize_mv(tr.generator);
  j["object"] = serialize_mv(tr.object);
  j["dropped"] = tr.dropped;
  nlohmann::json samples = nlohmann::json::array();
  int dims = tr.object.alg().dim;
  for (const TrajectorySample& s : tr.samples) {
    if (!s.has_chart) continue;
    nlohmann::json e;
    e["t"] = s.t;
    e["x"] = s.chart.x[0];
    if (dims >= 2) e["y"] = s.chart.x[1];
    if (dims >= 3) e["z"] = s.chart.x[2];
    e["weight"] = s.chart.weight;
    samples.push_back(std::move(e));
  }
  j["samples"] = std::move(samples);
  os << j.dump(2) << '\n';
}

void write_trajectory_svg(const Trajectory& tr, std::ostream& os) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.2 -1.2 2.4 2.4\" "
        "width=\"480\" height=\"480\">\n";
  os << "  <rect x=\"-1.2\" y=\"-1.2\" width=\"2.4\" height=\"2.4\" fill=\"white\"/>\n";
  os << "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" "
        "stroke-width=\"0.008\" stroke-dasharray=\"0.05 0.03\"/>\n";
  // Consecutive runs of valid samples become polylines (SVG y points down).
  std::string points;
  auto flush = [&]() {
    if (!points.empty()) {
      os << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"0.012\" points=\""
         << points << "\"/>\n";
      points.clear();
    }
  };
  for (const TrajectorySample& s : tr.samples) {
    if (!s.has_chart) {
      flush();
      continue;
    }
    if (!points.empty()) points += ' ';
    points += svg_coord(s.chart.x[0]);
    points += ',';
    points += svg_coord(-s.chart.x[1]);
  }
  flush();
  for (const TrajectorySample& s : tr.samples) {
    if (!s.has_chart) continue;
    os << "  <circle cx=\"" << svg_coord(s.chart.x[0]) << "\" cy=\""
       << svg_coord(-s.chart.x[1]) << "\" r=\"0.015\" fill=\"#9c1f1f\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace hpga
