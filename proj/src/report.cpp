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

#include "eprsim/report.hpp"

#include <cstdio>

#include "eprsim/errors.hpp"

namespace eprsim {
namespace {

using nlohmann::ordered_json;

// JSON writer with %.15g doubles. nlohmann's own dump() prints shortest
// round-trip representations, which can run to 17 digits and differ between
// implementations; the report contract pins 15 significant digits.
void write_json(const ordered_json& node, std::string& out) {
  switch (node.type()) {
    case ordered_json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : node.items()) {
        if (!first) out += ',';
        first = false;
        out += ordered_json(key).dump();
        out += ':';
        write_json(value, out);
      }
      out += '}';
      break;
    }
    case ordered_json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < node.size(); ++i) {
        if (i > 0) out += ',';
        write_json(node[i], out);
      }
      out += ']';
      break;
    }
    case ordered_json::value_t::number_float:
      out += format_double(node.get<double>());
      break;
    default:
      out += node.dump();
      break;
  }
}

std::string scalar_to_csv(const ordered_json& node) {
  if (node.is_number_float()) return format_double(node.get<double>());
  if (node.is_string()) return node.get<std::string>();
  return node.dump();
}

std::string tabular(const ordered_json& result) {
  std::string out;
  if (result.is_object() && result.contains("columns") &&
      result.contains("rows")) {
    const ordered_json& columns = result["columns"];
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i > 0) out += ',';
      out += columns[i].get<std::string>();
    }
    out += '\n';
    for (const ordered_json& row : result["rows"]) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) out += ',';
        out += scalar_to_csv(row[i]);
      }
      out += '\n';
    }
    return out;
  }
  out = "key,value\n";
  for (const auto& [key, value] : result.items()) {
    if (value.is_object() || value.is_array()) continue;  // scalars only
    out += key;
    out += ',';
    out += scalar_to_csv(value);
    out += '\n';
  }
  return out;
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "structured") return ReportFormat::kStructured;
  if (name == "tabular") return ReportFormat::kTabular;
  throw ValidationError("unknown report format '" + name +
                        "' (expected 'structured' or 'tabular')");
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.15g", value);
  return buffer;
}

std::string emit_report(const ReportDocument& doc, ReportFormat format) {
  if (format == ReportFormat::kTabular) {
    return tabular(doc.result);
  }
  ordered_json root;
  root["command"] = doc.command;
  root["tool_version"] = doc.tool_version;
  if (doc.seed.has_value()) root["seed"] = *doc.seed;
  root["input"] = doc.input;
  root["result"] = doc.result;

  std::string out;
  write_json(root, out);
  out += '\n';
  return out;
}

}  // namespace eprsim
