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

#ifndef EPRSIM_DEVICE_SPEC_HPP_
#define EPRSIM_DEVICE_SPEC_HPP_

#include <memory>
#include <string>

#include "eprsim/instruments.hpp"

namespace eprsim {

enum class DeviceType {
  kPbs,
  kIdealMichalski,
  kZenoCascade,
  kSimplifiedAnalyzer,
  kCoarseGrained,
};

std::string device_type_name(DeviceType type);

// Parsed device description. The on-disk format is a JSON object:
//
//   {"type": "pbs" | "ideal_michalski" | "zeno_cascade" |
//            "simplified_analyzer" | "coarse_grained",
//    "omega_deg": <finite number>,      // all types except coarse_grained
//    "n": <integer >= 2>,               // zeno_cascade only
//    "inner": {...}}                    // coarse_grained only; the wrapped
//                                       // device may not itself be
//                                       // coarse_grained
//
// Unknown or missing fields are rejected with the JSON-pointer path of the
// offending value. Angles are degrees in the file, radians internally.
struct DeviceSpecDocument {
  DeviceType type = DeviceType::kPbs;
  double omega_deg = 0.0;
  int n = 0;
  std::shared_ptr<const DeviceSpecDocument> inner;

  bool operator==(const DeviceSpecDocument& other) const;
};

// Throws ParseError with a positional diagnostic (byte offset for syntax
// errors, JSON-pointer path for semantic ones).
DeviceSpecDocument parse_device_spec(const std::string& text);

// Canonical serialization; parse_device_spec(serialize_device_spec(d)) == d.
std::string serialize_device_spec(const DeviceSpecDocument& doc);

// Instantiates the described instrument.
QuantumInstrument build_device(const DeviceSpecDocument& doc);

}  // namespace eprsim

#endif  // EPRSIM_DEVICE_SPEC_HPP_
