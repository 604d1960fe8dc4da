// Copyright 2026 The eprsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eprsim/device_spec.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

namespace eprsim {
namespace {

using nlohmann::json;

// Paths are JSON pointers; the whole document is the empty pointer, which
// reads badly in a diagnostic.
std::string loc(const std::string& path) {
  return path.empty() ? "document root" : path;
}

DeviceType parse_type_tag(const std::string& tag, const std::string& path) {
  if (tag == "pbs") return DeviceType::kPbs;
  if (tag == "ideal_michalski") return DeviceType::kIdealMichalski;
  if (tag == "zeno_cascade") return DeviceType::kZenoCascade;
  if (tag == "simplified_analyzer") return DeviceType::kSimplifiedAnalyzer;
  if (tag == "coarse_grained") return DeviceType::kCoarseGrained;
  throw ParseError(path + "/type", "unknown device type '" + tag + "'");
}

DeviceSpecDocument parse_object(const json& node, const std::string& path,
                                int depth) {
  if (depth > 2) {
    throw ParseError(loc(path), "device nesting deeper than 2 is not allowed");
  }
  if (!node.is_object()) {
    throw ParseError(loc(path), "expected an object");
  }
  if (!node.contains("type")) {
    throw ParseError(loc(path), "missing required field 'type'");
  }
  if (!node["type"].is_string()) {
    throw ParseError(path + "/type", "expected a string");
  }

  DeviceSpecDocument doc;
  doc.type = parse_type_tag(node["type"].get<std::string>(), path);

  std::set<std::string> allowed = {"type"};
  const bool wants_omega = doc.type != DeviceType::kCoarseGrained;
  if (wants_omega) allowed.insert("omega_deg");
  if (doc.type == DeviceType::kZenoCascade) allowed.insert("n");
  if (doc.type == DeviceType::kCoarseGrained) allowed.insert("inner");

  for (const auto& [key, value] : node.items()) {
    if (allowed.count(key) == 0) {
      throw ParseError(path + "/" + key,
                       "field not allowed for device type '" +
                           device_type_name(doc.type) + "'");
    }
  }

  if (wants_omega) {
    if (!node.contains("omega_deg")) {
      throw ParseError(loc(path), "missing required field 'omega_deg'");
    }
    if (!node["omega_deg"].is_number()) {
      throw ParseError(path + "/omega_deg", "expected a finite number");
    }
    doc.omega_deg = node["omega_deg"].get<double>();
    if (!std::isfinite(doc.omega_deg)) {
      throw ParseError(path + "/omega_deg", "expected a finite number");
    }
  }

  if (doc.type == DeviceType::kZenoCascade) {
    if (!node.contains("n")) {
      throw ParseError(loc(path), "missing required field 'n'");
    }
    if (!node["n"].is_number_integer()) {
      throw ParseError(path + "/n", "expected an integer");
    }
    doc.n = node["n"].get<int>();
    if (doc.n < 2) {
      throw ParseError(path + "/n", "n must be >= 2");
    }
  }

  if (doc.type == DeviceType::kCoarseGrained) {
    if (!node.contains("inner")) {
      throw ParseError(loc(path), "missing required field 'inner'");
    }
    // Reject the double wrap before recursing so the diagnostic lands on
    // the offending device instead of on the depth cap below it.
    if (node["inner"].is_object() && node["inner"].contains("type") &&
        node["inner"]["type"] == "coarse_grained") {
      throw ParseError(path + "/inner",
                       "coarse_grained may not wrap another coarse_grained");
    }
    DeviceSpecDocument inner =
        parse_object(node["inner"], path + "/inner", depth + 1);
    doc.inner = std::make_shared<const DeviceSpecDocument>(std::move(inner));
  }
  return doc;
}

}  // namespace

std::string device_type_name(DeviceType type) {
  switch (type) {
    case DeviceType::kPbs:
      return "pbs";
    case DeviceType::kIdealMichalski:
      return "ideal_michalski";
    case DeviceType::kZenoCascade:
      return "zeno_cascade";
    case DeviceType::kSimplifiedAnalyzer:
      return "simplified_analyzer";
    case DeviceType::kCoarseGrained:
      return "coarse_grained";
  }
  return "unknown";
}

bool DeviceSpecDocument::operator==(const DeviceSpecDocument& other) const {
  if (type != other.type || omega_deg != other.omega_deg || n != other.n) {
    return false;
  }
  if ((inner == nullptr) != (other.inner == nullptr)) return false;
  return inner == nullptr || *inner == *other.inner;
}

DeviceSpecDocument parse_device_spec(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  return parse_object(root, "", 1);
}

namespace {

nlohmann::ordered_json spec_to_json(const DeviceSpecDocument& doc) {
  nlohmann::ordered_json node;
  node["type"] = device_type_name(doc.type);
  if (doc.type != DeviceType::kCoarseGrained) node["omega_deg"] = doc.omega_deg;
  if (doc.type == DeviceType::kZenoCascade) node["n"] = doc.n;
  if (doc.type == DeviceType::kCoarseGrained && doc.inner != nullptr) {
    node["inner"] = spec_to_json(*doc.inner);
  }
  return node;
}

}  // namespace

std::string serialize_device_spec(const DeviceSpecDocument& doc) {
  return spec_to_json(doc).dump();
}

QuantumInstrument build_device(const DeviceSpecDocument& doc) {
  const PolarizationAngle omega = PolarizationAngle::from_degrees(doc.omega_deg);
  switch (doc.type) {
    case DeviceType::kPbs:
      return pbs_instrument(omega);
    case DeviceType::kIdealMichalski:
      return ideal_michalski(omega);
    case DeviceType::kZenoCascade:
      return zeno_cascade(CascadeParams{doc.n, omega});
    case DeviceType::kSimplifiedAnalyzer:
      return simplified_analyzer(omega);
    case DeviceType::kCoarseGrained:
      if (doc.inner == nullptr) {
        throw ValidationError("build_device: coarse_grained without inner");
      }
      return coarse_grain(build_device(*doc.inner));
  }
  throw ValidationError("build_device: unknown device type");
}

}  // namespace eprsim
