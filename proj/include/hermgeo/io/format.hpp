#pragma once

#include <string>

#include "hermgeo/io/json_codec.hpp"

namespace hermgeo::io {

/// printf("%.12g"); non-finite values become "null".
std::string format_number(double x);

/// Compact JSON with every floating value written by format_number, so the
/// output is byte-stable across runs and platforms.
std::string dump(const json& j);

/// Flattens to "key,value" lines: nested keys joined with '.', array
/// positions as indices.
std::string to_csv(const json& j);

}  // namespace hermgeo::io
