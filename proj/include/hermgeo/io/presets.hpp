#pragma once

#include <string>
#include <vector>

#include "hermgeo/hermitian.hpp"

namespace hermgeo::io {

struct ModelPreset {
  std::string name;
  Field field;
  std::vector<double> diagonal;  // Gram matrix diag(...)
  int metric_sign;
  std::string description;
};

/// The catalog of classical models. fubini-study-n is listed with n = 2.
const std::vector<ModelPreset>& presets();

/// Looks a preset up by name. `dim` overrides the dimension of
/// fubini-study-n (the only resizable preset); 0 keeps the default.
const ModelPreset& find_preset(const std::string& name);
HermitianSpace preset_space(const std::string& name, int dim = 0, Tolerance tol = {});

}  // namespace hermgeo::io
