#include "lorsim/errors.hpp"

namespace lorsim {

const char* err_name(Err code) {
  switch (code) {
    case Err::GridTooCoarse: return "grid_too_coarse";
    case Err::LightlikeTangent: return "lightlike_tangent";
    case Err::LightlikeNormal: return "lightlike_normal";
    case Err::VanishingCurvature: return "vanishing_curvature";
    case Err::VanishingTorsion: return "vanishing_torsion";
    case Err::CharacterChange: return "character_change";
    case Err::DegenerateQuaternion: return "degenerate_quaternion";
    case Err::NotUnitTimelike: return "not_unit_timelike";
    case Err::UnknownExample: return "unknown_example";
    case Err::InvalidConstants: return "invalid_constants";
    case Err::DegenerateOsculating: return "degenerate_osculating";
    case Err::NoOverlap: return "no_overlap";
    case Err::PShapeMismatch: return "pshape_mismatch";
    case Err::CausalMismatch: return "causal_mismatch";
    case Err::QuaternionExtractionFailure: return "quaternion_extraction_failure";
    case Err::FrameDegenerate: return "frame_degenerate";
    case Err::CaseMismatch: return "case_mismatch";
    case Err::NotOnSphere: return "not_on_sphere";
    case Err::NotUnitSpeed: return "not_unit_speed";
    case Err::InvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

}  // namespace lorsim
