#pragma once

#include <stdexcept>
#include <string>

namespace horo {

// Every failure the library can signal. Codes are stable: the CLI maps
// them to exit codes and machine-readable reports.
enum class errc {
  // geometry
  common_ray,
  same_center,
  degenerate_rays,
  degenerate_witness,
  not_pinched,
  numeric_blowup,
  // combinatorics
  not_unimodular,
  bad_normal_form,
  depth_limit,
  // surfaces
  not_closed,
  not_orientable,
  bad_euler,
  not_hyperbolic,
  open_path,
  self_folded,
  // solenoid levels
  level_too_large,
  orbit_conflict,
  // i/o
  parse_error,
  io_error,
};

const char* errc_name(errc c);

// True for failures of numeric evaluation rather than input validation.
bool errc_is_numeric(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace horo
