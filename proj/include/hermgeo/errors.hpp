#pragma once

#include <stdexcept>
#include <string>

namespace hermgeo {

enum class ErrorKind {
  Input,               // malformed or mismatched arguments
  DegenerateFlag,      // Gram-Schmidt hit a degenerate leading span
  SingularPoint,       // isotropic point where a nonisotropic one is needed
  Coincident,          // proportional points or lines
  NoUniqueGeodesic,    // orthogonal points
  NotAGeodesic,        // null form on the real plane
  WrongClass,          // geodesic of the wrong class for the operation
  Regime,              // values outside the admissible geometric regime
  Membership,          // point does not lie on the geodesic
  IndefiniteDirection, // null or negative-square tangent vector
  NotApplicable,       // operation not defined for this field/configuration
  DegenerateTriangle,  // orthogonal pair of vertices
  Unsupported,         // degenerate spans in configuration matching
  Precondition,        // configurations not geometrically equal
  Pole,                // stereographic projection from the antipode
  EmptySet,            // subsphere with no points
  Domain,              // argument outside the map's domain
  RenderDomain,        // scene item cannot be drawn in the chart
};

const char* to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  bool is_input_error() const noexcept { return kind_ == ErrorKind::Input; }

 private:
  ErrorKind kind_;
};

class DegenerateFlagError : public GeometryError {
 public:
  DegenerateFlagError(std::size_t stage, const std::string& what)
      : GeometryError(ErrorKind::DegenerateFlag, what), stage_(stage) {}

  /// 1-based index k of the first leading span V_k that is degenerate.
  std::size_t stage() const noexcept { return stage_; }

 private:
  std::size_t stage_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw GeometryError(kind, what);
}

}  // namespace hermgeo
