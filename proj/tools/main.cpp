// Command-line front end: scene evaluation, figure reproduction, and
// trajectory export. Exit codes: 0 ok, 1 parse error, 2 evaluation error,
// 64 usage.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hpga/motions.hpp"
#include "hpga/oracle.hpp"
#include "hpga/parse.hpp"
#include "hpga/plot.hpp"
#include "hpga/scene.hpp"
#include "repro_cases.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitEval = 2;
constexpr int kExitUsage = 64;

struct Config {
  std::string out_dir;
};

Config load_config(const std::string& path) {
  Config cfg;
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read config file '" << path << "'\n";
    std::exit(kExitUsage);
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "tolerance") {
      hpga::tolerances().classify = std::stod(value);
    } else if (key == "out_dir") {
      cfg.out_dir = value;
    } else {
      std::cerr << "warning: unknown config key '" << key << "'\n";
    }
  }
  return cfg;
}

std::string read_file(const std::string& path, int fail_code) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    std::exit(fail_code);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json record_to_json(const hpga::QueryResult& r) {
  json rec;
  rec["query"] = r.query;
  rec["line"] = r.line;
  if (!r.ok) {
    rec["error"] = r.error_code;
    rec["message"] = r.error_message;
    return rec;
  }
  if (r.outputs.size() == 1) {
    const auto& o = r.outputs.front();
    rec["result"] = (o.kind == "scalar") ? json(o.number)
                    : (o.kind == "bool") ? json(o.number != 0.0)
                                         : json(o.text);
  } else {
    json out = json::object();
    for (const auto& o : r.outputs)
      out[o.name] = (o.kind == "scalar") ? json(o.number)
                    : (o.kind == "bool") ? json(o.number != 0.0)
                                         : json(o.text);
    rec["result"] = std::move(out);
  }
  if (!r.classification.empty()) rec["classification"] = r.classification;
  json diag = json::object();
  if (r.oracle_max_dev) {
    diag["oracle_products"] = r.oracle_products;
    diag["oracle_max_deviation"] = *r.oracle_max_dev;
  }
  rec["diagnostics"] = std::move(diag);
  return rec;
}

int cmd_eval(const std::string& path, bool oracle, bool pretty_json) {
  std::string text = read_file(path, kExitParse);
  hpga::SceneDocument doc;
  try {
    doc = hpga::parse_scene(text);
  } catch (const hpga::parse_error& e) {
    std::cerr << "parse error [" << hpga::errc_name(e.code()) << "]: " << e.what() << "\n";
    return kExitParse;
  }
  hpga::EvalOptions opts;
  opts.oracle_audit = oracle;
  auto results = hpga::evaluate_scene(doc, opts);

  bool any_error = false;
  double oracle_dev = 0.0;
  std::size_t oracle_products = 0;
  if (pretty_json) {
    json all = json::array();
    for (const auto& r : results) all.push_back(record_to_json(r));
    std::cout << all.dump(2) << "\n";
  } else {
    for (const auto& r : results) std::cout << record_to_json(r).dump() << "\n";
  }
  for (const auto& r : results) {
    any_error = any_error || !r.ok;
    if (r.oracle_max_dev) {
      oracle_dev = std::max(oracle_dev, *r.oracle_max_dev);
      oracle_products += r.oracle_products;
    }
  }
  if (oracle)
    std::cerr << "oracle: " << oracle_products << " products re-checked, max deviation "
              << oracle_dev << "\n";
  return any_error ? kExitEval : kExitOk;
}

int cmd_repro(const std::string& id) {
  std::vector<std::string> ids;
  if (id == "all")
    ids = hpga::repro::case_ids();
  else
    ids.push_back(id);

  bool all_pass = true;
  std::printf("%-22s %-44s %22s %22s %9s %-8s %s\n", "case", "quantity", "computed",
              "expected", "tol", "source", "status");
  for (const std::string& cid : ids) {
    hpga::repro::Case c;
    try {
      c = hpga::repro::run_case(cid);
    } catch (const hpga::error& e) {
      std::cerr << "error [" << hpga::errc_name(e.code()) << "]: " << e.what() << "\n";
      return kExitUsage;
    }
    for (const auto& row : c.rows) {
      bool ok = row.pass();
      all_pass = all_pass && ok;
      std::printf("%-22s %-44s %22.15g %22.15g %9.1e %-8s %s\n", c.id.c_str(),
                  row.quantity.c_str(), row.computed, row.expected, row.tol,
                  row.provenance, ok ? "ok" : "FAIL");
    }
  }
  std::printf("repro: %s\n", all_pass ? "all cases within tolerance" : "FAILURES present");
  return all_pass ? kExitOk : kExitEval;
}

double g_orbit_audit_dev = 0.0;
std::size_t g_orbit_audit_products = 0;

void orbit_audit(const hpga::Algebra& alg, const char* op, const double* a,
                 const double* b, const double* c) {
  hpga::Multivector A(alg), B(alg);
  for (int i = 0; i < alg.size; ++i) {
    A[i] = a[i];
    B[i] = b[i];
  }
  hpga::Multivector ref = (op[0] == 'g')   ? hpga::oracle::rep_product(A, B)
                          : (op[0] == 'w') ? hpga::oracle::rep_wedge(A, B)
                                           : hpga::oracle::rep_inner(A, B);
  for (int i = 0; i < alg.size; ++i)
    g_orbit_audit_dev = std::max(g_orbit_audit_dev, std::fabs(ref[i] - c[i]));
  ++g_orbit_audit_products;
}

int cmd_orbit(const std::string& space_name_, const std::string& generator_text,
              const std::string& object_text, const std::string& range,
              long long n, const std::string& format, std::string out_path,
              bool oracle, const Config& cfg) {
  hpga::Space space;
  if (!hpga::space_from_name(space_name_, space)) {
    std::cerr << "error: unknown space '" << space_name_ << "'\n";
    return kExitUsage;
  }
  if (n < 2 || n > 1000000) {
    std::cerr << "error: --n must be between 2 and 1000000\n";
    return kExitUsage;
  }
  if (format == "svg" && space != hpga::Space::H2) {
    std::cerr << "error: SVG output draws the Klein disk and is available for H2 only\n";
    return kExitUsage;
  }
  double t0, t1;
  {
    auto colon = range.find(':');
    if (colon == std::string::npos) {
      std::cerr << "error: --range expects the form a:b\n";
      return kExitUsage;
    }
    try {
      t0 = std::stod(range.substr(0, colon));
      t1 = std::stod(range.substr(colon + 1));
    } catch (...) {
      std::cerr << "error: --range expects numbers a:b\n";
      return kExitUsage;
    }
  }

  const hpga::Algebra& alg = hpga::algebra(space);
  hpga::Multivector gen(alg), obj(alg);
  try {
    gen = hpga::parse_mv(generator_text, alg);
    obj = hpga::parse_mv(object_text, alg);
  } catch (const hpga::parse_error& e) {
    std::cerr << "parse error [" << hpga::errc_name(e.code()) << "]: " << e.what() << "\n";
    return kExitParse;
  }

  std::optional<hpga::Trajectory> tr;
  if (oracle) {
    g_orbit_audit_dev = 0.0;
    g_orbit_audit_products = 0;
    hpga::set_product_audit(&orbit_audit);
  }
  try {
    tr = hpga::sample_trajectory(gen, obj, t0, t1, static_cast<int>(n), true);
  } catch (const hpga::error& e) {
    hpga::set_product_audit(nullptr);
    std::cerr << "error [" << hpga::errc_name(e.code()) << "]: " << e.what() << "\n";
    return kExitEval;
  }
  if (oracle) {
    hpga::set_product_audit(nullptr);
    std::cerr << "oracle: " << g_orbit_audit_products
              << " products re-checked, max deviation " << g_orbit_audit_dev << "\n";
  }
  if (tr->dropped > 0)
    std::cerr << "warning: " << tr->dropped
              << " sample(s) dropped (WeightVanishes: chart point at infinity)\n";

  if (!cfg.out_dir.empty() && out_path != "-" && out_path.find('/') != 0)
    out_path = cfg.out_dir + "/" + out_path;

  std::ostringstream buf;
  if (format == "csv")
    hpga::write_trajectory_csv(*tr, buf);
  else if (format == "json")
    hpga::write_trajectory_json(*tr, buf);
  else
    hpga::write_trajectory_svg(*tr, buf);

  if (out_path == "-") {
    std::cout << buf.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
    out << buf.str();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolic Cayley-Klein geometry over Cl(d,1): scene evaluation, "
               "figure reproduction, and orbit export"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file (tolerance, out_dir)");

  auto* eval = app.add_subcommand("eval", "evaluate the queries of a scene file");
  std::string scene_path;
  bool use_oracle = false, pretty = false;
  eval->add_option("file", scene_path, "scene file")->required();
  eval->add_flag("--oracle", use_oracle,
                 "re-run every product through the matrix oracle and report deviations");
  eval->add_flag("--json", pretty, "emit one pretty-printed JSON array");

  auto* repro = app.add_subcommand("repro", "reproduce the worked examples");
  std::string case_id;
  repro->add_option("id", case_id, "case id or 'all'")->required();

  auto* orbit = app.add_subcommand("orbit", "sample a spinor orbit to csv/svg/json");
  std::string space = "H2", generator, object, range = "0:1", format = "csv",
              out_path = "-";
  long long n = 64;
  orbit->add_option("--space", space, "H1, H2 or H3")->required();
  orbit->add_option("--generator", generator, "bivector generator literal")->required();
  orbit->add_option("--object", object, "object literal (a proper point)")->required();
  orbit->add_option("--range", range, "parameter range a:b");
  orbit->add_option("--n", n, "sample count (2..1000000)");
  orbit->add_option("--format", format, "csv, svg or json")
      ->check(CLI::IsMember({"csv", "svg", "json"}));
  orbit->add_option("--out", out_path, "output path ('-' for stdout)");
  bool orbit_oracle = false;
  orbit->add_flag("--oracle", orbit_oracle,
                  "re-run every product through the matrix oracle and report deviations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  Config cfg = load_config(config_path);
  try {
    if (*eval) return cmd_eval(scene_path, use_oracle, pretty);
    if (*repro) return cmd_repro(case_id);
    if (*orbit)
      return cmd_orbit(space, generator, object, range, n, format, out_path,
                       orbit_oracle, cfg);
  } catch (const hpga::parse_error& e) {
    std::cerr << "parse error [" << hpga::errc_name(e.code()) << "]: " << e.what() << "\n";
    return kExitParse;
  } catch (const hpga::error& e) {
    std::cerr << "error [" << hpga::errc_name(e.code()) << "]: " << e.what() << "\n";
    return kExitEval;
  }
  return kExitUsage;
}
