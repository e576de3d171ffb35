#pragma once
#include <stdexcept>
#include <string>

namespace hpga {

// Error taxonomy shared by the library and the CLI. The CLI maps codes to
// exit status (parse errors -> 1, evaluation errors -> 2, usage -> 64).
enum class errc {
  algebra_mismatch,
  null_object,
  null_or_improper_input,
  improper_input,
  meet_not_proper,
  not_hyperparallel,
  lines_intersect,
  null_mirror,
  non_invertible,
  non_bivector,
  not_right_angled,
  null_vertex_at_p,
  degenerate_triangle,
  wrong_generator_class,
  weight_vanishes,
  plucker_violation,
  internal_inconsistency,
  syntax_error,
  unknown_generator,
  duplicate_generator_in_blade,
  unknown_query_op,
  unbound_name,
  duplicate_name,
  unknown_case,
  usage,
};

const char* errc_name(errc) noexcept;

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

// Text-level error with a source position (1-based line/column).
class parse_error : public error {
public:
  parse_error(errc code, const std::string& what, std::size_t line, std::size_t column)
      : error(code, what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_, column_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

}  // namespace hpga
