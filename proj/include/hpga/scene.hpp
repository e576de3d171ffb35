#pragma once
#include <optional>
#include <string>
#include <vector>

#include "hpga/parse.hpp"

namespace hpga {

// One rendered output of a query ("r", "c", "N+", ...). Multivectors carry
// their canonical text; scalars carry both text and the raw number.
struct QueryOutput {
  std::string name;
  std::string kind;  // "scalar" | "mv" | "bool" | "text"
  std::string text;
  double number = 0.0;
};

struct QueryResult {
  std::string query;           // "distance a b"
  std::size_t line = 0;
  bool ok = true;
  std::string error_code;      // CamelCase errc name when !ok
  std::string error_message;
  std::string classification;  // of the primary multivector result, if any
  std::vector<QueryOutput> outputs;
  std::optional<double> oracle_max_dev;  // when product auditing is on
  std::size_t oracle_products = 0;
};

struct EvalOptions {
  bool oracle_audit = false;
};

std::vector<QueryResult> evaluate_scene(const SceneDocument& doc,
                                        const EvalOptions& opts = {});

const std::vector<std::string>& known_query_ops();

}  // namespace hpga
