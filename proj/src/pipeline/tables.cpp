// Copyright 2026 The negaffect Authors.
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

#include <algorithm>
#include <ostream>

#include "negaffect/pipeline.hpp"

namespace negaffect::pipeline {
namespace {

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void CsvRow(const std::vector<std::string>& cells, std::ostream& out) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out << ',';
    out << CsvField(cells[i]);
  }
  out << '\n';
}

std::string MdCell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n' || c == '\r') out += ' ';
    else out += c;
  }
  return out;
}

// Display width in code points; good enough for alignment of ASCII tables
// with the odd emoji.
std::size_t Width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

}  // namespace

void WriteCsv(const Table& table, std::ostream& out) {
  for (const auto& c : table.comments) out << "# " << c << '\n';
  for (const auto& n : table.notes) out << "# note: " << n << '\n';
  CsvRow(table.header, out);
  for (const auto& row : table.rows) CsvRow(row, out);
}

void WriteMarkdown(const Table& table, std::ostream& out) {
  if (!table.title.empty()) out << "## " << table.title << "\n\n";
  for (const auto& c : table.comments) out << "- " << MdCell(c) << '\n';
  if (!table.comments.empty()) out << '\n';
  if (table.rows.empty()) {
    out << "_No rows._\n";
  } else {
    std::vector<std::size_t> widths(table.header.size(), 3);
    auto widen = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size() && i < widths.size(); ++i) {
        widths[i] = std::max(widths[i], Width(MdCell(cells[i])));
      }
    };
    widen(table.header);
    for (const auto& row : table.rows) widen(row);
    auto line = [&](const std::vector<std::string>& cells) {
      out << '|';
      for (std::size_t i = 0; i < widths.size(); ++i) {
        const std::string cell = i < cells.size() ? MdCell(cells[i]) : "";
        out << ' ' << cell << std::string(widths[i] - Width(cell), ' ')
            << " |";
      }
      out << '\n';
    };
    line(table.header);
    out << '|';
    for (auto w : widths) out << std::string(w + 2, '-') << '|';
    out << '\n';
    for (const auto& row : table.rows) line(row);
  }
  if (!table.notes.empty()) {
    out << '\n';
    for (const auto& n : table.notes) out << "> " << MdCell(n) << '\n';
  }
  out << '\n';
}

}  // namespace negaffect::pipeline
