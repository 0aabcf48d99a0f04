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

#include "coxeter_ehrhart/cli/result_document.hpp"

#include <sstream>
#include <stdexcept>

#include "coxeter_ehrhart/roots.hpp"

namespace coxeter_ehrhart::cli {

using nlohmann::json;
using nlohmann::ordered_json;

Format ParseFormat(const std::string& text) {
  if (text == "human") return Format::kHuman;
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  throw std::invalid_argument("unknown format \"" + text + "\"");
}

bool ResultDocument::HasMismatch() const {
  for (const Evaluation& e : evaluations) {
    if (e.oracle && *e.oracle != e.value) return true;
  }
  return false;
}

std::string DescribeFamily(const std::string& family, std::size_t n) {
  const RootFamily f = ParseFamily(family);
  return "family " + family + ", " + std::to_string(n) + " coordinate" +
         (n == 1 ? "" : "s") + " (root system " + RankLabel(f, n) +
         ", table row " + CoordinateLabel(f, n) + ")";
}

ordered_json ToJson(const ResultDocument& doc) {
  ordered_json request;
  request["command"] = doc.command;
  if (!doc.family.empty()) request["family"] = doc.family;
  if (doc.n) request["n"] = *doc.n;
  if (!doc.variant.empty()) request["variant"] = doc.variant;
  request["route"] = doc.route;

  ordered_json j;
  j["request"] = request;
  if (doc.quasi) {
    j["period"] = doc.quasi->period();
    ordered_json constituents = ordered_json::array();
    for (const Polynomial& p : doc.quasi->constituents()) {
      ordered_json coeffs = ordered_json::array();
      for (const Rational& c : p) coeffs.push_back(RationalToString(c));
      constituents.push_back(coeffs);
    }
    j["constituents"] = constituents;
    j["interpolated"] = doc.interpolated;
  }
  ordered_json evals = ordered_json::array();
  for (const Evaluation& e : doc.evaluations) {
    ordered_json ej;
    ej["t"] = e.t.get_str();
    ej["value"] = e.value.get_str();
    if (e.oracle) ej["oracle"] = e.oracle->get_str();
    evals.push_back(ej);
  }
  j["evaluations"] = evals;
  j["provenance"] = doc.provenance;
  return j;
}

namespace {

Integer ParseInteger(const json& j, const std::string& field) {
  if (!j.is_string()) {
    throw std::invalid_argument(field + ": expected an integer string");
  }
  const Rational q = ParseRational(j.get<std::string>());
  if (q.get_den() != 1) {
    throw std::invalid_argument(field + ": expected an integer");
  }
  return q.get_num();
}

}  // namespace

ResultDocument FromJson(const json& j) {
  try {
    ResultDocument doc;
    const json& request = j.at("request");
    doc.command = request.at("command").get<std::string>();
    doc.family = request.value("family", "");
    if (request.contains("n")) doc.n = request.at("n").get<std::size_t>();
    doc.variant = request.value("variant", "");
    doc.route = request.at("route").get<std::string>();
    if (j.contains("constituents")) {
      std::vector<Polynomial> constituents;
      for (const json& cj : j.at("constituents")) {
        Polynomial p;
        for (const json& c : cj) p.push_back(ParseRational(c.get<std::string>()));
        constituents.push_back(std::move(p));
      }
      doc.quasi = QuasiPolynomial(std::move(constituents));
      if (doc.quasi->period() != j.at("period").get<std::size_t>()) {
        throw std::invalid_argument("period does not match constituents");
      }
      doc.interpolated = j.value("interpolated", false);
    }
    for (const json& e : j.at("evaluations")) {
      Evaluation ev{ParseInteger(e.at("t"), "t"),
                    ParseInteger(e.at("value"), "value"), std::nullopt};
      if (e.contains("oracle")) ev.oracle = ParseInteger(e.at("oracle"), "oracle");
      doc.evaluations.push_back(std::move(ev));
    }
    doc.provenance = j.value("provenance", "");
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed result document: ") +
                                e.what());
  }
}

namespace {

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string RenderHuman(const ResultDocument& doc) {
  std::ostringstream out;
  if (!doc.family.empty() && doc.n) {
    const std::string kind =
        doc.variant == "integral" ? "integral" : "standard";
    out << "Ehrhart " << (doc.quasi && doc.quasi->period() > 1
                              ? "quasipolynomial"
                              : "function")
        << " of the " << kind << " Coxeter permutahedron, "
        << DescribeFamily(doc.family, *doc.n) << "\n";
  } else {
    out << "Ehrhart " << (doc.quasi && doc.quasi->period() > 1
                              ? "quasipolynomial"
                              : "function")
        << " of the zonotope\n";
  }
  out << "route: " << doc.route << "\n";
  if (doc.quasi) {
    const QuasiPolynomial& q = *doc.quasi;
    const std::string tag = doc.interpolated ? " (interpolated)" : "";
    if (q.period() == 1) {
      out << "ehr(t) = " << FormatPolynomial(q.Constituent(0)) << tag << "\n";
    } else if (q.period() == 2) {
      out << "period: 2" << tag << "\n";
      out << "  t even: " << FormatPolynomial(q.Constituent(0)) << "\n";
      out << "  t odd:  " << FormatPolynomial(q.Constituent(1)) << "\n";
    } else {
      out << "period: " << q.period() << tag << "\n";
      for (std::size_t r = 0; r < q.period(); ++r) {
        out << "  t ≡ " << r << " (mod " << q.period()
            << "): " << FormatPolynomial(q.Constituent(r)) << "\n";
      }
    }
  }
  if (!doc.evaluations.empty()) {
    out << "evaluations:\n";
    for (const Evaluation& e : doc.evaluations) {
      out << "  ehr(" << e.t.get_str() << ") = " << e.value.get_str();
      if (e.oracle) {
        out << "  oracle " << e.oracle->get_str()
            << (*e.oracle == e.value ? "  agree" : "  MISMATCH");
      }
      out << "\n";
    }
  }
  if (!doc.provenance.empty()) out << "note: " << doc.provenance << "\n";
  return out.str();
}

std::string RenderCsv(const ResultDocument& doc) {
  std::ostringstream out;
  out << "record,key,power,value\n";
  out << "request,command,," << doc.command << "\n";
  if (!doc.family.empty()) out << "request,family,," << doc.family << "\n";
  if (doc.n) out << "request,n,," << *doc.n << "\n";
  if (!doc.variant.empty()) out << "request,variant,," << doc.variant << "\n";
  out << "request,route,," << doc.route << "\n";
  if (doc.quasi) {
    out << "period,,," << doc.quasi->period() << "\n";
    out << "interpolated,,," << (doc.interpolated ? "true" : "false") << "\n";
    for (std::size_t r = 0; r < doc.quasi->period(); ++r) {
      const Polynomial& p = doc.quasi->Constituent(r);
      for (std::size_t k = 0; k < p.size(); ++k) {
        out << "constituent," << r << "," << k << ","
            << RationalToString(p[k]) << "\n";
      }
    }
  }
  for (const Evaluation& e : doc.evaluations) {
    out << "evaluation," << e.t.get_str() << ",," << e.value.get_str() << "\n";
    if (e.oracle) {
      out << "oracle," << e.t.get_str() << ",," << e.oracle->get_str() << "\n";
    }
  }
  out << "provenance,,," << CsvField(doc.provenance) << "\n";
  return out.str();
}

}  // namespace

std::string Render(const ResultDocument& doc, Format format) {
  switch (format) {
    case Format::kHuman:
      return RenderHuman(doc);
    case Format::kJson:
      return ToJson(doc).dump(2) + "\n";
    case Format::kCsv:
      return RenderCsv(doc);
  }
  return "";
}

}  // namespace coxeter_ehrhart::cli
