#pragma once

#include <stdexcept>
#include <string>

namespace lorsim {

// Geometric failure modes. Each code has a stable snake_case name used in
// machine-readable error output.
enum class Err {
  GridTooCoarse,
  LightlikeTangent,
  LightlikeNormal,
  VanishingCurvature,
  VanishingTorsion,
  CharacterChange,
  DegenerateQuaternion,
  NotUnitTimelike,
  UnknownExample,
  InvalidConstants,
  DegenerateOsculating,
  NoOverlap,
  PShapeMismatch,
  CausalMismatch,
  QuaternionExtractionFailure,
  FrameDegenerate,
  CaseMismatch,
  NotOnSphere,
  NotUnitSpeed,
  InvalidArgument,
};

const char* err_name(Err code);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(Err code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Err code() const { return code_; }
  const char* name() const { return err_name(code_); }

 private:
  Err code_;
};

// p-shape profiles too far apart to register; carries the measured distance.
class PShapeMismatchError : public GeometryError {
 public:
  PShapeMismatchError(double distance, const std::string& message)
      : GeometryError(Err::PShapeMismatch, message), distance_(distance) {}

  double distance() const { return distance_; }

 private:
  double distance_;
};

// File/schema problems (CLI exit 1, as opposed to geometric exit 2).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace lorsim
