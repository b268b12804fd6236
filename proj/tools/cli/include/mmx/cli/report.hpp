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

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mmx::cli {

inline constexpr const char* kReportSchema = "mmx-report/1";
inline constexpr const char* kTimingKey = "elapsed_ms";

// Flat `key = value` report with optional certificate blocks:
//
//   schema = mmx-report/1
//   command = gap
//   ...
//   begin cover
//   <one certificate entry per line>
//   end cover
//   elapsed_ms = 0.412
//
// Everything except the final timing line is a pure function of the
// inputs, flags and seed.
class Report {
 public:
  explicit Report(std::string command);

  Report& set(const std::string& key, std::string value);
  Report& set(const std::string& key, long long value) { return set(key, std::to_string(value)); }
  Report& set(const std::string& key, unsigned long long value) {
    return set(key, std::to_string(value));
  }
  Report& set(const std::string& key, int value) { return set(key, std::to_string(value)); }
  Report& set(const std::string& key, bool value) { return set(key, std::string(value ? "true" : "false")); }
  Report& set(const std::string& key, const char* value) { return set(key, std::string(value)); }

  Report& block(const std::string& name, std::vector<std::string> lines);
  Report& timing(double milliseconds);

  std::string render(bool with_blocks = true) const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
  std::vector<std::pair<std::string, std::vector<std::string>>> blocks_;
  double elapsed_ms_ = 0.0;
};

// Drops the timing line, for comparing reports across runs.
std::string strip_timing(const std::string& rendered);

}  // namespace mmx::cli
