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

#include <string>

#include <doctest.h>

#include "eprsim/device_spec.hpp"
#include "eprsim/instruments.hpp"
#include "eprsim/linalg.hpp"

namespace {

using eprsim::DeviceSpecDocument;
using eprsim::DeviceType;
using eprsim::ParseError;

std::string location_of(const std::string& text) {
  try {
    eprsim::parse_device_spec(text);
  } catch (const ParseError& e) {
    return e.location();
  }
  return "(no error)";
}

}  // namespace

TEST_CASE("valid device descriptions") {
  const DeviceSpecDocument ideal = eprsim::parse_device_spec(
      R"({"type":"ideal_michalski","omega_deg":45})");
  CHECK(ideal.type == DeviceType::kIdealMichalski);
  CHECK(ideal.omega_deg == 45.0);

  const DeviceSpecDocument cascade = eprsim::parse_device_spec(
      R"({"type":"zeno_cascade","omega_deg":45,"n":101})");
  CHECK(cascade.type == DeviceType::kZenoCascade);
  CHECK(cascade.n == 101);

  const DeviceSpecDocument wrapped = eprsim::parse_device_spec(
      R"({"type":"coarse_grained",
          "inner":{"type":"ideal_michalski","omega_deg":45}})");
  CHECK(wrapped.type == DeviceType::kCoarseGrained);
  REQUIRE(wrapped.inner != nullptr);
  CHECK(wrapped.inner->type == DeviceType::kIdealMichalski);
}

TEST_CASE("diagnostics carry the offending location") {
  // Parameter domain.
  CHECK(location_of(R"({"type":"zeno_cascade","omega_deg":45,"n":1})") ==
        "/n");
  // Unknown type tag.
  CHECK(location_of(R"({"type":"teleporter"})") == "/type");
  // Missing required fields.
  CHECK(location_of(R"({"omega_deg":45})") == "document root");
  CHECK(location_of(R"({"type":"pbs"})") == "document root");
  // Extra fields are rejected, not ignored.
  CHECK(location_of(R"({"type":"pbs","omega_deg":0,"n":3})") == "/n");
  // Only numbers are angles; only integers are stage counts.
  CHECK(location_of(R"({"type":"pbs","omega_deg":"45"})") == "/omega_deg");
  CHECK(location_of(R"({"type":"zeno_cascade","omega_deg":0,"n":2.5})") ==
        "/n");
  // Nested errors keep the full path.
  CHECK(location_of(
            R"({"type":"coarse_grained","inner":{"type":"teleporter"}})") ==
        "/inner/type");
  CHECK(location_of(R"({"type":"coarse_grained",
                        "inner":{"type":"coarse_grained",
                                 "inner":{"type":"pbs","omega_deg":0}}})") ==
        "/inner");
  // Syntax errors report a byte position.
  CHECK(location_of("{\"type\": ").rfind("byte ", 0) == 0);
  CHECK(location_of("").rfind("byte ", 0) == 0);

  CHECK_THROWS_AS(eprsim::parse_device_spec(R"(["pbs"])"), ParseError);
}

TEST_CASE("serialization round-trips") {
  const char* documents[] = {
      R"({"type":"pbs","omega_deg":22.5})",
      R"({"type":"ideal_michalski","omega_deg":45})",
      R"({"type":"zeno_cascade","omega_deg":45,"n":1001})",
      R"({"type":"simplified_analyzer","omega_deg":67.5})",
      R"({"type":"coarse_grained","inner":{"type":"zeno_cascade","omega_deg":45,"n":11}})",
  };
  for (const char* text : documents) {
    const DeviceSpecDocument doc = eprsim::parse_device_spec(text);
    const std::string serialized = eprsim::serialize_device_spec(doc);
    const DeviceSpecDocument reparsed = eprsim::parse_device_spec(serialized);
    CHECK(reparsed == doc);
    // Canonical form is stable under a second round trip.
    CHECK(eprsim::serialize_device_spec(reparsed) == serialized);
  }
}

TEST_CASE("described devices build into the matching instruments") {
  const eprsim::QuantumInstrument pbs = eprsim::build_device(
      eprsim::parse_device_spec(R"({"type":"pbs","omega_deg":0})"));
  CHECK(pbs.has_label("PBS_PLUS"));
  CHECK(pbs.has_label("PBS_MINUS"));

  const eprsim::QuantumInstrument cascade = eprsim::build_device(
      eprsim::parse_device_spec(
          R"({"type":"zeno_cascade","omega_deg":45,"n":4})"));
  CHECK(cascade.branches().size() == 5);  // FIRST, LEAK_1..3, LAST
  CHECK(cascade.completeness_defect() <= 1e-12);

  const eprsim::QuantumInstrument coarse = eprsim::build_device(
      eprsim::parse_device_spec(
          R"({"type":"coarse_grained",
              "inner":{"type":"ideal_michalski","omega_deg":45}})"));
  CHECK(coarse.branches().size() == 1);
  CHECK(coarse.branches()[0].label == "PRESENT");

  // The built instrument matches a directly constructed one.
  const eprsim::QuantumInstrument direct = eprsim::ideal_michalski(
      eprsim::PolarizationAngle::from_degrees(45.0));
  const eprsim::QuantumInstrument from_spec = eprsim::build_device(
      eprsim::parse_device_spec(
          R"({"type":"ideal_michalski","omega_deg":45})"));
  CHECK(eprsim::instrument_distance(
            direct, from_spec,
            {{"FIRST_PLUS", "FIRST_PLUS"}, {"LAST_PLUS", "LAST_PLUS"}}) <=
        1e-15);
}
