#pragma once

#include <stdexcept>
#include <string>

namespace absspec {

// Everything the library can reject is funneled through one exception type so
// callers (and the CLI) can branch on a stable code instead of parsing text.
enum class errc {
  out_of_range,
  self_loop,
  duplicate_edge,
  malformed_graph6,
  no_convergence,
  no_root_in_bracket,
  degree_mismatch,
  bad_order,
  bad_params,
  bad_vertex,
  not_cyclic,
  not_bicyclic,
  too_large,
  unknown_name,
  unknown_check,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace absspec
