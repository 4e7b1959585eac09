// emofeat/csv.hpp

// Copyright 2026  emofeat authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef EMOFEAT_CSV_HPP_
#define EMOFEAT_CSV_HPP_

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "emofeat/core.hpp"

namespace emofeat {

// Plain comma-separated UTF-8 text. None of the toolkit's column names or
// values contain commas, so no quoting layer is needed.

inline std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

inline std::string TrimWhitespace(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline double ParseDoubleStrict(const std::string& s, Errc code) {
  const std::string t = TrimWhitespace(s);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    Raise(code, "not a numeric value: '" + s + "'");
  }
  return value;
}

inline long ParseLongStrict(const std::string& s, Errc code) {
  const std::string t = TrimWhitespace(s);
  long value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    Raise(code, "not an integer value: '" + s + "'");
  }
  return value;
}

inline std::uint64_t ParseU64Strict(const std::string& s, Errc code) {
  const std::string t = TrimWhitespace(s);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    Raise(code, "not an unsigned integer value: '" + s + "'");
  }
  return value;
}

/// Shortest decimal form that round-trips the double exactly.
inline std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  // try shorter representations first
  for (int prec = 1; prec <= 16; ++prec) {
    char probe[32];
    std::snprintf(probe, sizeof(probe), "%.*g", prec, v);
    double back = 0.0;
    std::sscanf(probe, "%lf", &back);
    if (back == v) return probe;
  }
  return buf;
}

struct CsvFile {
  std::vector<std::string> comments;  // leading lines starting with '#'
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline CsvFile ReadCsvFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Raise(Errc::kMissingFile, "cannot open file: " + path);
  CsvFile file;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header_seen && !line.empty() && line[0] == '#') {
      file.comments.push_back(line);
      continue;
    }
    if (line.empty()) continue;
    if (!header_seen) {
      file.header = SplitCsvLine(line);
      header_seen = true;
      continue;
    }
    file.rows.push_back(SplitCsvLine(line));
  }
  if (!header_seen) Raise(Errc::kParseError, "no header row in " + path);
  return file;
}

}  // namespace emofeat

#endif  // EMOFEAT_CSV_HPP_
