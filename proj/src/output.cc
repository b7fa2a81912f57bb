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

#include "tomaga/output.h"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "tomaga/config.h"

namespace tomaga {

std::string FormatDouble(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw std::runtime_error("cannot format double");
  return std::string(buf, end);
}

CsvWriter::CsvWriter(const std::filesystem::path& path,
                     std::vector<std::string> header)
    : path_(path), out_(path), columns_(header.size()) {
  if (!out_) throw std::runtime_error("cannot write " + path.string());
  for (const std::string& h : header) Field(h);
  EndRow();
}

void CsvWriter::Field(std::string_view text) {
  if (in_row_ > 0) row_ += ',';
  row_ += text;
  ++in_row_;
}

CsvWriter& CsvWriter::operator<<(std::string_view field) {
  Field(field);
  return *this;
}

CsvWriter& CsvWriter::operator<<(double field) {
  Field(FormatDouble(field));
  return *this;
}

CsvWriter& CsvWriter::operator<<(int field) {
  Field(std::to_string(field));
  return *this;
}

CsvWriter& CsvWriter::operator<<(std::int64_t field) {
  Field(std::to_string(field));
  return *this;
}

CsvWriter& CsvWriter::operator<<(std::uint64_t field) {
  Field(std::to_string(field));
  return *this;
}

CsvWriter& CsvWriter::operator<<(bool field) {
  Field(field ? "1" : "0");
  return *this;
}

CsvWriter& CsvWriter::operator<<(std::optional<int> field) {
  Field(field ? std::to_string(*field) : "");
  return *this;
}

void CsvWriter::EndRow() {
  if (in_row_ != columns_) {
    throw std::logic_error("csv row in " + path_.string() + " has " +
                           std::to_string(in_row_) + " fields, expected " +
                           std::to_string(columns_));
  }
  row_ += '\n';
  out_ << row_;
  row_.clear();
  in_row_ = 0;
}

void WriteManifest(const std::filesystem::path& out_dir,
                   const Manifest& manifest) {
  const std::string canonical = manifest.config.dump();
  nlohmann::json j = {
      {"tool", "tomaga"},
      {"version", kVersion},
      {"subcommand", manifest.subcommand},
      {"config_hash", "fnv1a64:" + Fnv1aHex(canonical)},
      {"config", manifest.config},
      {"base_seed", manifest.base_seed},
      {"seeds", manifest.seeds},
      {"jobs", manifest.jobs},
      {"outputs", manifest.outputs},
      {"notes", manifest.notes},
  };
  std::ofstream out(out_dir / "manifest.json");
  if (!out) throw std::runtime_error("cannot write manifest");
  out << j.dump(2) << '\n';
}

}  // namespace tomaga
