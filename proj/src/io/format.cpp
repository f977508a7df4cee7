#include "hermgeo/io/format.hpp"

#include <cmath>
#include <cstdio>

namespace hermgeo::io {

std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

void write(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        write(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        write(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float:
      out += format_number(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void flatten(const json& j, const std::string& prefix, std::string& out) {
  auto child = [&](const std::string& key) { return prefix.empty() ? key : prefix + "." + key; };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), child(it.key()), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], child(std::to_string(i)), out);
  } else {
    std::string value;
    if (j.is_string()) {
      value = j.get<std::string>();
    } else {
      write(j, value);
    }
    out += csv_field(prefix.empty() ? "value" : prefix) + ',' + csv_field(value) + '\n';
  }
}

}  // namespace

std::string dump(const json& j) {
  std::string out;
  write(j, out);
  return out;
}

std::string to_csv(const json& j) {
  std::string out = "key,value\n";
  flatten(j, "", out);
  return out;
}

}  // namespace hermgeo::io
