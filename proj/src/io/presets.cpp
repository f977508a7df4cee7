#include "hermgeo/io/presets.hpp"

namespace hermgeo::io {

const std::vector<ModelPreset>& presets() {
  static const std::vector<ModelPreset> catalog{
      {"round-sphere", Field::Complex, {1, 1}, 1,
       "complex projective line with a definite form: the round sphere of radius 1/2"},
      {"riemann-poincare", Field::Complex, {-1, 1}, -1,
       "negative points of a complex line of signature -+: the Poincare disc"},
      {"beltrami-klein", Field::Real, {-1, 1, 1}, -1,
       "negative points of a real plane of signature -++: the Beltrami-Klein disc"},
      {"complex-hyperbolic", Field::Complex, {-1, 1, 1}, -1,
       "negative points of a complex plane of signature -++: the complex hyperbolic plane"},
      {"real-hyperbolic-3", Field::Real, {-1, 1, 1, 1}, -1,
       "negative points of a real space of signature -+++: hyperbolic 3-space"},
      {"de-sitter", Field::Real, {-1, 1, 1, 1}, -1,
       "positive points of a real space of signature -+++: de Sitter space"},
      {"fubini-study-n", Field::Complex, {1, 1, 1}, 1,
       "complex projective space with a definite form: the Fubini-Study metric"},
  };
  return catalog;
}

const ModelPreset& find_preset(const std::string& name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  fail(ErrorKind::Input, "unknown preset '" + name + "'");
}

HermitianSpace preset_space(const std::string& name, int dim, Tolerance tol) {
  const ModelPreset& p = find_preset(name);
  std::vector<double> diag = p.diagonal;
  if (dim != 0) {
    if (p.name != "fubini-study-n") fail(ErrorKind::Input, "only fubini-study-n takes a dimension");
    if (dim < 1) fail(ErrorKind::Input, "fubini-study-n dimension must be at least 1");
    diag.assign(static_cast<std::size_t>(dim), 1.0);
  }
  return HermitianSpace::diagonal(p.field, diag, p.metric_sign, tol);
}

}  // namespace hermgeo::io
