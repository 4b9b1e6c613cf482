// Copyright 2026 The qclone authors
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

#ifndef QCLONE_EMIT_HPP
#define QCLONE_EMIT_HPP

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace qclone {

//=========================================================================
// Flat records emitted as CSV (header row, '.' decimal separator, 15
// significant digits) or as a JSON array with identical field names.
//=========================================================================

using FieldValue = std::variant<double, long long, std::string>;

struct Record {
  std::vector<std::pair<std::string, FieldValue>> fields;

  void add(const std::string &name, double v) { fields.emplace_back(name, v); }
  void add(const std::string &name, long long v) {
    fields.emplace_back(name, v);
  }
  void add(const std::string &name, int v) {
    fields.emplace_back(name, static_cast<long long>(v));
  }
  void add(const std::string &name, const std::string &v) {
    fields.emplace_back(name, v);
  }
};

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

inline std::string format_field(const FieldValue &v) {
  if (std::holds_alternative<double>(v))
    return format_double(std::get<double>(v));
  if (std::holds_alternative<long long>(v))
    return std::to_string(std::get<long long>(v));
  return std::get<std::string>(v);
}

//! Header is written even when there are no records.
inline void write_csv(std::ostream &os, const std::vector<std::string> &header,
                      const std::vector<Record> &records) {
  for (std::size_t i = 0; i < header.size(); ++i)
    os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto &rec : records) {
    if (rec.fields.size() != header.size())
      throw std::invalid_argument("record does not match the CSV header");
    for (std::size_t i = 0; i < rec.fields.size(); ++i) {
      if (rec.fields[i].first != header[i])
        throw std::invalid_argument("record field order does not match header");
      os << (i ? "," : "") << format_field(rec.fields[i].second);
    }
    os << "\n";
  }
}

inline std::vector<std::string> header_of(const std::vector<Record> &records) {
  std::vector<std::string> h;
  if (!records.empty())
    for (const auto &f : records.front().fields)
      h.push_back(f.first);
  return h;
}

inline void write_csv(std::ostream &os, const std::vector<Record> &records) {
  write_csv(os, header_of(records), records);
}

inline nlohmann::ordered_json to_json(const Record &rec) {
  nlohmann::ordered_json j;
  for (const auto &[name, value] : rec.fields) {
    if (std::holds_alternative<double>(value))
      j[name] = std::get<double>(value);
    else if (std::holds_alternative<long long>(value))
      j[name] = std::get<long long>(value);
    else
      j[name] = std::get<std::string>(value);
  }
  return j;
}

inline void write_json(std::ostream &os, const std::vector<Record> &records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto &rec : records)
    arr.push_back(to_json(rec));
  os << arr.dump(2) << "\n";
}

} // namespace qclone

#endif // QCLONE_EMIT_HPP
