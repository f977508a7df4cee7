#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "hermgeo/io/json_codec.hpp"

namespace hermgeo::io {

enum class Chart { Poincare, Klein, StereoSphere };

const char* to_string(Chart c);
Chart chart_from_string(const std::string& name);

struct RenderOptions {
  std::optional<Chart> chart;  // chosen from the space when absent
  int size = 512;
  int samples = 128;
  bool duals = false;
};

struct Triangle {
  std::array<std::string, 3> names;  // empty for inline vertices
  std::array<ProjectivePoint, 3> vertices;
};

/// A parsed scene. Every named item shares the scene's space.
struct Scene {
  SpacePtr space;
  std::string preset;  // empty when the space was given explicitly
  std::map<std::string, ProjectivePoint> points;
  std::map<std::string, TangentVector> tangents;
  std::map<std::string, Geodesic> geodesics;
  std::map<std::string, Triangle> triangles;
  std::map<std::string, Configuration> configurations;
  RenderOptions render;

  /// A point name of this scene, or an inline point / vector.
  ProjectivePoint resolve_point(const json& ref) const;
};

/// Space from {"space": {...}} or {"preset": name, "dim": n}.
SpacePtr space_from_scene(const json& j, std::optional<double> tolerance = std::nullopt);

/// Parses the whole scene. Names must be unique across all sections and
/// every reference must resolve.
Scene parse_scene(const json& j, std::optional<double> tolerance = std::nullopt);

/// Scene with only a space.
Scene empty_scene(SpacePtr space);

}  // namespace hermgeo::io
