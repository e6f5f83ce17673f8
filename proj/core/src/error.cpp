#include "counit/error.hpp"

namespace counit {

const char* errc_name(errc c) {
  switch (c) {
    case errc::zero_inverse: return "ZeroInverse";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::shape_error: return "ShapeError";
    case errc::degree_out_of_range: return "DegreeOutOfRange";
    case errc::size_too_small: return "SizeTooSmall";
    case errc::not_a_character: return "NotACharacter";
    case errc::not_colinear: return "NotColinear";
    case errc::mismatch_against_closed_form: return "MismatchAgainstClosedForm";
    case errc::trace_mismatch: return "TraceMismatch";
    case errc::resource_budget_exceeded: return "ResourceBudgetExceeded";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
    case errc::cache_version_mismatch: return "CacheVersionMismatch";
    case errc::corrupt_cache: return "CorruptCache";
    case errc::not_generic: return "NotGeneric";
  }
  return "UnknownError";
}

Error::Error(errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace counit
