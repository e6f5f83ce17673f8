#pragma once

#include <stdexcept>
#include <string>

namespace counit {

enum class errc {
  zero_inverse,
  field_mismatch,
  singular_matrix,
  shape_error,
  degree_out_of_range,
  size_too_small,
  not_a_character,
  not_colinear,
  mismatch_against_closed_form,
  trace_mismatch,
  resource_budget_exceeded,
  parse_error,
  validation_error,
  cache_version_mismatch,
  corrupt_cache,
  not_generic,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg);
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& msg);

}  // namespace counit
