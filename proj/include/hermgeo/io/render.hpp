#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermgeo/io/scene.hpp"

namespace hermgeo::io {

/// Scene items projected to the chart's disc coordinates (unit disc, y up).
struct RenderModel {
  struct Dot {
    std::string name;
    Eigen::Vector2d at;
    PointClass cls;
  };
  struct Polyline {
    std::string name;
    std::string kind;  // "geodesic", "dual-tangent"
    std::vector<Eigen::Vector2d> points;
  };

  Chart chart = Chart::Klein;
  int size = 512;
  std::vector<Polyline> lines;
  std::vector<Dot> dots;
};

/// Affine chart coordinates of a projective space that a disc chart can show.
class ChartMap {
 public:
  ChartMap(const HermitianSpace& space, Chart chart);

  Chart chart() const { return chart_; }
  /// Disc coordinates of a representative. Throws RenderDomain for points
  /// the chart cannot show.
  Eigen::Vector2d to_disc(const Vec& v) const;
  /// Affine coordinates x_i / x_0 in the chart's frame without any domain
  /// check or disc map; empty at infinity.
  std::optional<Eigen::Vector2d> affine(const Vec& v) const;

 private:
  std::vector<Scalar> coords(const Vec& v) const;

  Chart chart_;
  HermitianSpace space_;
  bool complex_line_;     // C with signature -+ (otherwise R with -++)
  std::vector<Vec> frame_;  // orthonormal, negative vectors first
};

/// The chart a scene is drawn in by default.
Chart default_chart(const HermitianSpace& space);

RenderModel build_render_model(const Scene& scene);
std::string to_svg(const RenderModel& model);

}  // namespace hermgeo::io
