#include "horo/error.hpp"

namespace horo {

const char* errc_name(errc c) {
  switch (c) {
    case errc::common_ray: return "CommonRay";
    case errc::same_center: return "SameCenter";
    case errc::degenerate_rays: return "DegenerateRays";
    case errc::degenerate_witness: return "DegenerateWitness";
    case errc::not_pinched: return "NotPinched";
    case errc::numeric_blowup: return "NumericBlowup";
    case errc::not_unimodular: return "NotUnimodular";
    case errc::bad_normal_form: return "BadNormalForm";
    case errc::depth_limit: return "DepthLimit";
    case errc::not_closed: return "NotClosed";
    case errc::not_orientable: return "NotOrientable";
    case errc::bad_euler: return "BadEuler";
    case errc::not_hyperbolic: return "NotHyperbolic";
    case errc::open_path: return "OpenPath";
    case errc::self_folded: return "SelfFolded";
    case errc::level_too_large: return "LevelTooLarge";
    case errc::orbit_conflict: return "OrbitConflict";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
  }
  return "Unknown";
}

bool errc_is_numeric(errc c) { return c == errc::numeric_blowup; }

}  // namespace horo
