// Copyright 2026 The ToMAGA Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOMAGA_OUTPUT_H_
#define TOMAGA_OUTPUT_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace tomaga {

inline constexpr std::string_view kVersion = "0.1.0";

// Shortest decimal text that parses back to the same double.
std::string FormatDouble(double x);

// Writes comma-separated rows with a fixed header. Fields are not quoted,
// so callers pass plain tokens only. Incomplete rows never reach the file.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path,
            std::vector<std::string> header);

  CsvWriter& operator<<(std::string_view field);
  // Without this, string literals would bind to the bool overload.
  CsvWriter& operator<<(const char* field) {
    return *this << std::string_view(field);
  }
  CsvWriter& operator<<(double field);
  CsvWriter& operator<<(int field);
  CsvWriter& operator<<(std::int64_t field);
  CsvWriter& operator<<(std::uint64_t field);
  CsvWriter& operator<<(bool field);
  // Empty field for an absent value.
  CsvWriter& operator<<(std::optional<int> field);

  // Throws std::logic_error if the row has the wrong field count.
  void EndRow();

  const std::filesystem::path& path() const { return path_; }

 private:
  void Field(std::string_view text);

  std::filesystem::path path_;
  std::ofstream out_;
  std::size_t columns_;
  std::size_t in_row_ = 0;
  std::string row_;  // written out only by a complete EndRow
};

struct Manifest {
  std::string subcommand;
  nlohmann::json config;
  std::uint64_t base_seed = 0;
  std::vector<std::uint64_t> seeds;
  int jobs = 1;
  std::vector<std::string> outputs;
  nlohmann::json notes = nlohmann::json::object();
};

// Writes <out_dir>/manifest.json with the config hash, seeds and version.
void WriteManifest(const std::filesystem::path& out_dir,
                   const Manifest& manifest);

}  // namespace tomaga

#endif  // TOMAGA_OUTPUT_H_
