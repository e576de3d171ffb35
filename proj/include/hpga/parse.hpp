#pragma once
#include <string>
#include <string_view>
#include <vector>

#include "hpga/multivector.hpp"

namespace hpga {

// Multivector literal grammar:
//   mv    := [sign] term (sign term)*
//   term  := coef ['*'] blade | coef | blade
//   blade := 'e' digit+          (generator indices in written order, sign folded)
//   coef  := decimal | int '/' int
// Exponent notation in a decimal requires an explicit sign ("1e-3"), so
// "3e01" always reads as 3 * e01.
Multivector parse_mv(std::string_view text, const Algebra& alg);

enum class SerializeStyle { canonical, json };

// canonical: paper-style blades in display order, exact round-trip through
// parse_mv. json: {"space":"H2","coeffs":[...]} with coefficients in
// canonical (grade, lexicographic) blade order, bit-exact round-trip.
std::string serialize_mv(const Multivector& A, SerializeStyle style = SerializeStyle::canonical);
Multivector parse_mv_json(std::string_view json_text);

struct SceneBinding {
  std::string name;
  Multivector value;
  std::size_t line;
};

struct SceneQuery {
  std::string op;
  std::vector<std::string> args;
  std::size_t line;
};

// Line-oriented scene file: a `space: H2` header, `name = <mv>` bindings,
// `? op name...` queries, `#` comments.
struct SceneDocument {
  Space space = Space::H2;
  std::vector<SceneBinding> bindings;
  std::vector<SceneQuery> queries;
  const Multivector* find(const std::string& name) const;
};

SceneDocument parse_scene(std::string_view text);

}  // namespace hpga
