// Copyright 2026 The mmx Authors
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

#include "mmx/cli/report.hpp"

#include <iomanip>
#include <sstream>

namespace mmx::cli {

Report::Report(std::string command) {
  fields_.emplace_back("schema", kReportSchema);
  fields_.emplace_back("command", std::move(command));
}

Report& Report::set(const std::string& key, std::string value) {
  for (auto& [k, v] : fields_) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  fields_.emplace_back(key, std::move(value));
  return *this;
}

Report& Report::block(const std::string& name, std::vector<std::string> lines) {
  blocks_.emplace_back(name, std::move(lines));
  return *this;
}

Report& Report::timing(double milliseconds) {
  elapsed_ms_ = milliseconds;
  return *this;
}

std::string Report::render(bool with_blocks) const {
  std::ostringstream out;
  for (const auto& [k, v] : fields_) out << k << " = " << v << '\n';
  if (with_blocks) {
    for (const auto& [name, lines] : blocks_) {
      out << "begin " << name << '\n';
      for (const auto& line : lines) out << line << '\n';
      out << "end " << name << '\n';
    }
  }
  out << kTimingKey << " = " << std::fixed << std::setprecision(3) << elapsed_ms_ << '\n';
  return out.str();
}

std::string strip_timing(const std::string& rendered) {
  std::istringstream in(rendered);
  std::string out;
  const std::string prefix = std::string(kTimingKey) + " = ";
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(prefix, 0) == 0) continue;
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace mmx::cli
