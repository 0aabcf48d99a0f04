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

#include "coxeter_ehrhart/cli/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "coxeter_ehrhart/zonotope.hpp"

namespace coxeter_ehrhart::cli {

TableId ParseTableId(const std::string& text) {
  if (text == "table1") return TableId::kIntegral;
  if (text == "table2") return TableId::kStandard;
  throw std::invalid_argument("unknown table \"" + text +
                              "\" (expected table1 or table2)");
}

bool TableReport::AllMatch() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const TableRow& r) { return r.matches(); });
}

namespace {

QuasiPolynomial Poly(std::initializer_list<long> c) {
  return QuasiPolynomial(MakePolynomial(c));
}

QuasiPolynomial EvenOdd(std::initializer_list<long> even,
                        std::initializer_list<long> odd) {
  return QuasiPolynomial(
      std::vector<Polynomial>{MakePolynomial(even), MakePolynomial(odd)});
}

}  // namespace

std::vector<ReferenceRow> ReferenceRows(TableId id) {
  using F = RootFamily;
  if (id == TableId::kIntegral) {
    return {
        {"A_1", F::kA, 1, Poly({1})},
        {"A_2", F::kA, 2, Poly({1, 1})},
        {"A_3", F::kA, 3, Poly({1, 3, 3})},
        {"A_4", F::kA, 4, Poly({1, 6, 15, 16})},
        {"B_1", F::kB, 1, Poly({1, 1})},
        {"B_2", F::kB, 2, Poly({1, 4, 7})},
        {"B_3", F::kB, 3, Poly({1, 9, 39, 87})},
        {"B_4", F::kB, 4, Poly({1, 16, 126, 608, 1553})},
        {"C_1", F::kC, 1, Poly({1, 2})},
        {"C_2", F::kC, 2, Poly({1, 6, 14})},
        {"C_3", F::kC, 3, Poly({1, 12, 66, 172})},
        {"C_4", F::kC, 4, Poly({1, 20, 192, 1080, 3036})},
        {"D_2", F::kD, 2, Poly({1, 2, 2})},
        {"D_3", F::kD, 3, Poly({1, 6, 18, 32})},
        {"D_4", F::kD, 4, Poly({1, 12, 72, 280, 636})},
    };
  }
  return {
      {"A_2", F::kA, 2, EvenOdd({1, 1}, {0, 1})},
      {"A_4", F::kA, 4, EvenOdd({1, 6, 15, 16}, {0, 0, 3, 16})},
      {"B_1", F::kB, 1, EvenOdd({1, 1}, {0, 1})},
      {"B_2", F::kB, 2, EvenOdd({1, 4, 7}, {0, 2, 7})},
      {"B_3", F::kB, 3, EvenOdd({1, 9, 39, 87}, {0, 0, 6, 87})},
      {"B_4", F::kB, 4,
       EvenOdd({1, 16, 126, 608, 1553}, {0, 0, 12, 212, 1553})},
  };
}

TableReport ComputeTable(TableId id) {
  TableReport report{id,
                     id == TableId::kIntegral
                         ? "Ehrhart polynomials of integral Coxeter "
                           "permutahedra"
                         : "Ehrhart quasipolynomials of the non-integral "
                           "standard Coxeter permutahedra",
                     {}};
  for (ReferenceRow& ref : ReferenceRows(id)) {
    const ForestCensus census = ComputeForestCensus(ref.family, ref.n);
    QuasiPolynomial computed =
        id == TableId::kIntegral
            ? EhrhartIntegralFromCensus(census)
            : EhrhartStandardFromCensus(census, IsIntegral(ref.family, ref.n));
    report.rows.push_back(TableRow{ref.label, ref.family, ref.n,
                                   std::move(ref.expected),
                                   std::move(computed)});
  }
  return report;
}

std::string TableCell(const Polynomial& p) {
  return FormatPolynomial(p, /*superscripts=*/true, /*spaced=*/false);
}

namespace {

std::string Footnote(const TableReport& report) {
  std::string out =
      "Row labels: A_n is the root system A_{n-1} on n coordinates; B_n, "
      "C_n, D_n act on n coordinates.\n";
  out += "  ";
  bool first = true;
  for (const TableRow& row : report.rows) {
    if (!first) out += ", ";
    first = false;
    out += row.label + " = (" + std::string(1, FamilyLetter(row.family)) +
           ", " + std::to_string(row.n) + ")";
  }
  return out + "\n";
}

std::vector<std::pair<std::string, const Polynomial*>> Cells(
    const QuasiPolynomial& q, TableId id) {
  if (id == TableId::kIntegral || q.period() == 1) {
    return {{"", &q.Constituent(0)}};
  }
  return {{"even", &q.Constituent(0)}, {"odd", &q.Constituent(1)}};
}

}  // namespace

std::string Render(const TableReport& report, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::kHuman: {
      out << report.title << "\n";
      for (const TableRow& row : report.rows) {
        const auto cells = Cells(row.computed, report.id);
        const auto expected = Cells(row.expected, report.id);
        for (std::size_t i = 0; i < cells.size(); ++i) {
          std::string label = row.label;
          if (!cells[i].first.empty()) label += " " + cells[i].first;
          const bool ok = i < expected.size() &&
                          *cells[i].second == *expected[i].second;
          out << "  " << label;
          out << std::string(label.size() < 10 ? 10 - label.size() : 1, ' ');
          const std::string cell = TableCell(*cells[i].second);
          out << cell;
          // Pad by code points so superscripts do not skew the column.
          std::size_t width = 0;
          for (unsigned char c : cell) width += (c & 0xC0) != 0x80;
          out << std::string(width < 36 ? 36 - width : 1, ' ');
          out << (ok ? "match" : "MISMATCH");
          if (!ok && i < expected.size()) {
            out << " (expected " << TableCell(*expected[i].second) << ")";
          }
          out << "\n";
        }
      }
      out << Footnote(report);
      out << (report.AllMatch() ? "all rows match\n" : "some rows differ\n");
      break;
    }
    case Format::kJson: {
      nlohmann::ordered_json j;
      j["table"] = report.id == TableId::kIntegral ? "table1" : "table2";
      j["title"] = report.title;
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const TableRow& row : report.rows) {
        nlohmann::ordered_json rj;
        rj["label"] = row.label;
        rj["family"] = std::string(1, FamilyLetter(row.family));
        rj["n"] = row.n;
        rj["rank_label"] = RankLabel(row.family, row.n);
        rj["period"] = row.computed.period();
        nlohmann::ordered_json cs = nlohmann::ordered_json::array();
        for (const Polynomial& p : row.computed.constituents()) {
          nlohmann::ordered_json cj = nlohmann::ordered_json::array();
          for (const Rational& c : p) cj.push_back(RationalToString(c));
          cs.push_back(cj);
        }
        rj["constituents"] = cs;
        rj["match"] = row.matches();
        rows.push_back(rj);
      }
      j["rows"] = rows;
      j["all_match"] = report.AllMatch();
      out << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv: {
      out << "label,family,n,constituent,polynomial,match\n";
      for (const TableRow& row : report.rows) {
        for (const auto& [name, poly] : Cells(row.computed, report.id)) {
          out << row.label << "," << FamilyLetter(row.family) << "," << row.n
              << "," << (name.empty() ? "all" : name) << ","
              << FormatPolynomial(*poly, false, false) << ","
              << (row.matches() ? "true" : "false") << "\n";
        }
      }
      break;
    }
  }
  return out.str();
}

}  // namespace coxeter_ehrhart::cli
