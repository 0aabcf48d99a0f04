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

// Zonotope input documents:
//
//   {
//     "generators": [[1, 0], [1, 1]],
//     "shift": ["1/2", "0"]
//   }
//
// Generator entries are JSON integers or integer strings (for values beyond
// 64 bits). Shift entries are rational strings "p/q" or "p"; JSON integers
// are accepted too. Rationals are reduced on read. "shift" may be omitted
// when "dim" is given, meaning the zero shift.

#ifndef COXETER_EHRHART_CLI_ZONOTOPE_FILE_HPP_
#define COXETER_EHRHART_CLI_ZONOTOPE_FILE_HPP_

#include <stdexcept>
#include <string>

#include "coxeter_ehrhart/zonotope.hpp"

namespace coxeter_ehrhart::cli {

// Parse failure with a line/column or field path in the message.
class ZonotopeFileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ZonotopeSpec ParseZonotopeDocument(const std::string& text);
ZonotopeSpec LoadZonotopeFile(const std::string& path);

std::string SerializeZonotope(const ZonotopeSpec& zonotope);

}  // namespace coxeter_ehrhart::cli

#endif  // COXETER_EHRHART_CLI_ZONOTOPE_FILE_HPP_
