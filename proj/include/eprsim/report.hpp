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

#ifndef EPRSIM_REPORT_HPP_
#define EPRSIM_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace eprsim {

enum class ReportFormat { kStructured, kTabular };

ReportFormat parse_report_format(const std::string& name);

// Machine-readable run record: command name, echo of the effective inputs,
// result payload, tool version, and the seed when one was used. Re-running
// the echoed input reproduces the payload byte for byte.
struct ReportDocument {
  std::string command;
  nlohmann::ordered_json input;
  nlohmann::ordered_json result;
  std::string tool_version;
  std::optional<std::uint64_t> seed;
};

// Serializes the document. The structured format is JSON with a stable key
// order and every floating-point number printed at 15 significant digits,
// so reports from independent implementations diff cleanly. The tabular
// format is CSV: a result carrying {"columns": [...], "rows": [[...]]}
// becomes a plain table; any other result is flattened to key,value rows.
// Serialization is deterministic: equal documents yield identical bytes.
std::string emit_report(const ReportDocument& doc, ReportFormat format);

// 15-significant-digit rendering used for all numeric output.
std::string format_double(double value);

}  // namespace eprsim

#endif  // EPRSIM_REPORT_HPP_
