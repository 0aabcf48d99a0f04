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

#ifndef COXETER_EHRHART_CLI_RESULT_DOCUMENT_HPP_
#define COXETER_EHRHART_CLI_RESULT_DOCUMENT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "coxeter_ehrhart/lattice.hpp"
#include "coxeter_ehrhart/quasi_polynomial.hpp"
#include "json.hpp"

namespace coxeter_ehrhart::cli {

enum class Format { kHuman, kJson, kCsv };

Format ParseFormat(const std::string& text);

struct Evaluation {
  Integer t;
  Integer value;
  std::optional<Integer> oracle;

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

// Everything a computation command reports. Rationals are carried exactly
// and serialized as "p/q" or integer strings.
struct ResultDocument {
  std::string command;
  std::string family;  // empty for generic zonotopes
  std::optional<std::size_t> n;
  std::string variant;
  std::string route;
  std::optional<QuasiPolynomial> quasi;
  bool interpolated = false;
  std::vector<Evaluation> evaluations;
  std::string provenance;

  // Any evaluation whose oracle count disagrees with the formula value.
  bool HasMismatch() const;

  friend bool operator==(const ResultDocument&,
                         const ResultDocument&) = default;
};

nlohmann::ordered_json ToJson(const ResultDocument& doc);
// Throws std::invalid_argument on malformed documents.
ResultDocument FromJson(const nlohmann::json& j);

std::string Render(const ResultDocument& doc, Format format);

// "family B, 2 coordinates (root system B_2, table row B_2)".
std::string DescribeFamily(const std::string& family, std::size_t n);

}  // namespace coxeter_ehrhart::cli

#endif  // COXETER_EHRHART_CLI_RESULT_DOCUMENT_HPP_
