// Copyright 2026 The Authors.
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

#include "coxeter_ehrhart/cli/zonotope_file.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace coxeter_ehrhart::cli {

using nlohmann::json;

namespace {

std::string LineColumn(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Integer ReadInteger(const json& j, const std::string& field) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<unsigned long>())
                                  : Integer(j.get<long>());
  }
  if (j.is_string()) {
    try {
      const Rational q = ParseRational(j.get<std::string>());
      if (q.get_den() == 1) return q.get_num();
    } catch (const std::invalid_argument&) {
    }
  }
  throw ZonotopeFileError(field + ": expected an integer, got " + j.dump());
}

Rational ReadRational(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(ReadInteger(j, field));
  if (j.is_string()) {
    try {
      return ParseRational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ZonotopeFileError(field + ": " + e.what());
    }
  }
  throw ZonotopeFileError(field + ": expected a rational string \"p/q\", got " +
                          j.dump());
}

}  // namespace

ZonotopeSpec ParseZonotopeDocument(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ZonotopeFileError(LineColumn(text, e.byte) + ": " +
                            "malformed document");
  }
  if (!doc.is_object()) {
    throw ZonotopeFileError("top level: expected an object");
  }
  if (!doc.contains("generators") || !doc["generators"].is_array()) {
    throw ZonotopeFileError("generators: missing or not a list");
  }
  std::vector<IntVector> generators;
  std::optional<std::size_t> dim;
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_unsigned()) {
      throw ZonotopeFileError("dim: expected a nonnegative integer");
    }
    dim = doc["dim"].get<std::size_t>();
  }
  const json& gens = doc["generators"];
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string field = "generators[" + std::to_string(k) + "]";
    if (!gens[k].is_array()) {
      throw ZonotopeFileError(field + ": expected a list of integers");
    }
    std::vector<Integer> entries;
    for (std::size_t i = 0; i < gens[k].size(); ++i) {
      entries.push_back(
          ReadInteger(gens[k][i], field + "[" + std::to_string(i) + "]"));
    }
    if (dim && entries.size() != *dim) {
      throw ZonotopeFileError(field + ": has " +
                              std::to_string(entries.size()) +
                              " entries, expected " + std::to_string(*dim));
    }
    dim = entries.size();
    IntVector u(std::move(entries));
    if (u.IsZero()) throw ZonotopeFileError(field + ": zero generator");
    generators.push_back(std::move(u));
  }
  RatVector shift;
  if (doc.contains("shift")) {
    const json& sj = doc["shift"];
    if (!sj.is_array()) throw ZonotopeFileError("shift: expected a list");
    std::vector<Rational> entries;
    for (std::size_t i = 0; i < sj.size(); ++i) {
      entries.push_back(
          ReadRational(sj[i], "shift[" + std::to_string(i) + "]"));
    }
    if (dim && entries.size() != *dim) {
      throw ZonotopeFileError("shift: has " + std::to_string(entries.size()) +
                              " entries, expected " + std::to_string(*dim));
    }
    shift = RatVector(std::move(entries));
  } else if (dim) {
    shift = RatVector(*dim);
  } else {
    throw ZonotopeFileError("shift: missing, and no generators or dim given");
  }
  return ZonotopeSpec(std::move(generators), std::move(shift));
}

ZonotopeSpec LoadZonotopeFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ZonotopeFileError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseZonotopeDocument(buffer.str());
  } catch (const ZonotopeFileError& e) {
    throw ZonotopeFileError(path + ": " + e.what());
  }
}

std::string SerializeZonotope(const ZonotopeSpec& zonotope) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const IntVector& u : zonotope.generators) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const Integer& e : u.entries()) {
      if (e.fits_slong_p()) {
        row.push_back(e.get_si());
      } else {
        row.push_back(e.get_str());
      }
    }
    gens.push_back(row);
  }
  j["generators"] = gens;
  nlohmann::ordered_json shift = nlohmann::ordered_json::array();
  for (const Rational& q : zonotope.shift.entries()) {
    shift.push_back(RationalToString(q));
  }
  j["shift"] = shift;
  return j.dump(2) + "\n";
}

}  // namespace coxeter_ehrhart::cli
