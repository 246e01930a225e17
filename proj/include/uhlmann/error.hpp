#pragma once

#include <stdexcept>
#include <string>

namespace uhlmann {

// Library error conditions, mirrored one-to-one by the C API status codes.
enum class Errc {
  invalid_argument = 1,
  degenerate_pair,
  singular_state,
  step_count_too_low,
  incomplete_kraus,
  not_orthogonal,
  zero_visibility,
  normalization_failure,
  out_of_range,
  grid_too_coarse,
  tolerance_exceeded,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace uhlmann
