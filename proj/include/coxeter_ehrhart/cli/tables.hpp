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

// Reference tables of Ehrhart (quasi)polynomials of small Coxeter
// permutahedra, recomputed and compared row by row.
//
// Row labels follow the published convention: B_n, C_n, D_n are indexed by
// rank, type-A rows by the number of coordinates (row A_4 is the rank-3
// system A_3 acting on R^4).

#ifndef COXETER_EHRHART_CLI_TABLES_HPP_
#define COXETER_EHRHART_CLI_TABLES_HPP_

#include <string>
#include <vector>

#include "coxeter_ehrhart/cli/result_document.hpp"
#include "coxeter_ehrhart/quasi_polynomial.hpp"
#include "coxeter_ehrhart/roots.hpp"

namespace coxeter_ehrhart::cli {

enum class TableId { kIntegral, kStandard };

TableId ParseTableId(const std::string& text);  // "table1" / "table2"

struct TableRow {
  std::string label;
  RootFamily family;
  std::size_t n;  // coordinates
  QuasiPolynomial expected;
  QuasiPolynomial computed;

  bool matches() const { return expected == computed; }
};

struct TableReport {
  TableId id;
  std::string title;
  std::vector<TableRow> rows;

  bool AllMatch() const;
};

// Published rows, transcribed as coefficient lists.
struct ReferenceRow {
  std::string label;
  RootFamily family;
  std::size_t n;
  QuasiPolynomial expected;
};
std::vector<ReferenceRow> ReferenceRows(TableId id);

// Recomputes every row via the forest census.
TableReport ComputeTable(TableId id);

// Compact rendering used by the tables, e.g. "1+9t+39t²+87t³".
std::string TableCell(const Polynomial& p);

std::string Render(const TableReport& report, Format format);

}  // namespace coxeter_ehrhart::cli

#endif  // COXETER_EHRHART_CLI_TABLES_HPP_
