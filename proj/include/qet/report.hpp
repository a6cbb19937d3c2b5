// Copyright 2026 The QET Authors
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

#pragma once

#include <optional>
#include <type_traits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qet/pauli.hpp"
#include "qet/stabilizer.hpp"
#include "qet/verify.hpp"

namespace qet {

/// Flat, ordered key/value report. Text form is one "key: value" per line;
/// JSON form is an object of strings. Both round-trip.
class Report {
 public:
  void set(const std::string& key, std::string value) {
    if (key.empty() || key.find(':') != std::string::npos || key.find('\n') != std::string::npos)
      throw std::invalid_argument("Report: bad key \"" + key + "\"");
    if (value.find('\n') != std::string::npos) throw std::invalid_argument("Report: value spans lines");
    for (auto& [k, v] : fields_)
      if (k == key) {
        v = std::move(value);
        return;
      }
    fields_.emplace_back(key, std::move(value));
  }
  void set(const std::string& key, const char* value) { set(key, std::string(value)); }
  template <class T>
    requires std::is_arithmetic_v<T>
  void set(const std::string& key, T value) {
    if constexpr (std::is_same_v<T, bool>)
      set(key, std::string(value ? "true" : "false"));
    else
      set(key, std::to_string(value));
  }

  std::optional<std::string> get(const std::string& key) const {
    for (const auto& [k, v] : fields_)
      if (k == key) return v;
    return std::nullopt;
  }
  const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }

  std::string to_text() const {
    std::string s;
    for (const auto& [k, v] : fields_) s += k + ": " + v + "\n";
    return s;
  }

  static Report parse_text(std::string_view text) {
    Report r;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (line.empty()) continue;
      auto colon = line.find(": ");
      if (colon == std::string::npos) {
        if (!line.empty() && line.back() == ':') {
          r.set(line.substr(0, line.size() - 1), "");
          continue;
        }
        throw ParseError("report line lacks \"key: value\"", no);
      }
      r.set(line.substr(0, colon), line.substr(colon + 2));
    }
    return r;
  }

  std::string to_json(int indent = 2) const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : fields_) j[k] = v;
    return j.dump(indent);
  }

  static Report parse_json(std::string_view text) {
    auto j = nlohmann::ordered_json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("report JSON must be an object");
    Report r;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!it.value().is_string()) throw std::invalid_argument("report JSON values must be strings");
      r.set(it.key(), it.value().get<std::string>());
    }
    return r;
  }

  friend bool operator==(const Report&, const Report&) = default;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

inline std::string kind_name(DistanceResult::Kind k) {
  switch (k) {
    case DistanceResult::Kind::kExact: return "exact";
    case DistanceResult::Kind::kLowerBound: return "lower_bound";
    case DistanceResult::Kind::kUnbounded: return "infinite";
  }
  return "?";
}

/// Adds `key`, `key_kind`, `cap` and, when present, `key_witness`.
inline void add_distance(Report& r, const std::string& key, const DistanceResult& d) {
  r.set(key, d.kind == DistanceResult::Kind::kUnbounded ? std::string("inf") : std::to_string(d.value));
  r.set(key + "_kind", kind_name(d.kind));
  r.set("cap", d.cap);
  if (d.witness) r.set(key + "_witness", render(*d.witness));
}

inline void add_verdict(Report& r, const Verdict& v) {
  r.set("verdict", v.pass ? "pass" : "fail");
  r.set("errors", v.num_errors);
  if (v.witness) {
    r.set("witness", render(v.witness->first) + "," + render(v.witness->second));
    r.set("witness_syndrome", v.witness->syndrome.to_string());
    r.set("witness_class", render(v.witness->product_class));
  } else {
    r.set("syndromes", v.maps.size());
  }
}

}  // namespace qet
