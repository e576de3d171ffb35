#include "hpga/errors.hpp"

namespace hpga {

const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::algebra_mismatch: return "AlgebraMismatch";
    case errc::null_object: return "NullObject";
    case errc::null_or_improper_input: return "NullOrImproperInput";
    case errc::improper_input: return "ImproperInput";
    case errc::meet_not_proper: return "MeetNotProper";
    case errc::not_hyperparallel: return "NotHyperparallel";
    case errc::lines_intersect: return "LinesIntersect";
    case errc::null_mirror: return "NullMirror";
    case errc::non_invertible: return "NonInvertible";
    case errc::non_bivector: return "NonBivector";
    case errc::not_right_angled: return "NotRightAngled";
    case errc::null_vertex_at_p: return "NullVertexAtP";
    case errc::degenerate_triangle: return "DegenerateTriangle";
    case errc::wrong_generator_class: return "WrongGeneratorClass";
    case errc::weight_vanishes: return "WeightVanishes";
    case errc::plucker_violation: return "PlueckerViolation";
    case errc::internal_inconsistency: return "InternalInconsistency";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_generator: return "UnknownGenerator";
    case errc::duplicate_generator_in_blade: return "DuplicateGeneratorInBlade";
    case errc::unknown_query_op: return "UnknownQueryOp";
    case errc::unbound_name: return "UnboundName";
    case errc::duplicate_name: return "DuplicateName";
    case errc::unknown_case: return "UnknownCase";
    case errc::usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace hpga
