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

#include "coxeter_ehrhart/cli/commands.hpp"

#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "coxeter_ehrhart/cli/tables.hpp"
#include "coxeter_ehrhart/cli/zonotope_file.hpp"
#include "coxeter_ehrhart/egf.hpp"
#include "coxeter_ehrhart/zonotope.hpp"

namespace coxeter_ehrhart::cli {

Variant ParseVariant(const std::string& text) {
  if (text == "standard") return Variant::kStandard;
  if (text == "integral") return Variant::kIntegral;
  throw UsageError("unknown variant \"" + text +
                   "\" (expected standard or integral)");
}

Route ParseRoute(const std::string& text) {
  if (text == "forest") return Route::kForest;
  if (text == "generic") return Route::kGeneric;
  if (text == "egf") return Route::kEgf;
  throw UsageError("unknown route \"" + text +
                   "\" (expected forest, generic or egf)");
}

std::string VariantName(Variant v) {
  return v == Variant::kStandard ? "standard" : "integral";
}

std::string RouteName(Route r) {
  switch (r) {
    case Route::kForest:
      return "forest";
    case Route::kGeneric:
      return "generic";
    case Route::kEgf:
      return "egf";
  }
  return "?";
}

namespace {

void RequirePositive(const std::vector<Integer>& ts) {
  for (const Integer& t : ts) {
    if (t <= 0) throw UsageError("dilation t must be positive, got " + t.get_str());
  }
}

Integer AsInteger(const Rational& q) {
  if (q.get_den() != 1) {
    throw std::logic_error("non-integral Ehrhart value " + RationalToString(q));
  }
  return q.get_num();
}

ZonotopeSpec PermutahedronFor(RootFamily family, std::size_t n,
                              Variant variant) {
  return variant == Variant::kIntegral ? IntegralPermutahedron(family, n)
                                       : StandardPermutahedron(family, n);
}

bool EffectivelyIntegral(RootFamily family, std::size_t n, Variant variant) {
  return variant == Variant::kIntegral || IsIntegral(family, n);
}

Integer EgfValueAt(RootFamily family, std::size_t n, Variant variant,
                   const Integer& t, std::size_t order) {
  if (EffectivelyIntegral(family, n, variant) || t % 2 == 0) {
    return EgfEhrhartValues(family, t, n, order).at(n);
  }
  return EgfEhrhartStandardOdd(family, t, n, order).at(n);
}

void AttachOracle(ResultDocument& doc, const ZonotopeSpec& zonotope,
                  const GlobalOptions& options) {
  for (Evaluation& e : doc.evaluations) {
    e.oracle = CountPoints(zonotope, e.t, options.max_box);
  }
}

// Interpolates each residue class mod `period` once it has enough distinct
// sample points for a polynomial of degree `degree`.
std::optional<QuasiPolynomial> InterpolateSamples(
    const std::vector<Evaluation>& samples, std::size_t period,
    std::size_t degree) {
  std::vector<std::map<Integer, Integer>> classes(period);
  for (const Evaluation& e : samples) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), e.t.get_mpz_t(), period);
    classes[r.get_ui()].emplace(e.t, e.value);
  }
  std::vector<Polynomial> constituents;
  for (const auto& points : classes) {
    if (points.size() < degree + 1) return std::nullopt;
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (const auto& [t, v] : points) {
      xs.emplace_back(t);
      ys.emplace_back(v);
    }
    constituents.push_back(Interpolate(xs, ys));
  }
  return QuasiPolynomial(std::move(constituents)).Minimized();
}

}  // namespace

ResultDocument ComputeEhrhart(const EhrhartRequest& request,
                              const GlobalOptions& options) {
  RequirePositive(request.ts);
  if (request.n == 0) throw UsageError("n must be at least 1");
  const RootFamily family = request.family;
  const std::size_t n = request.n;
  ResultDocument doc;
  doc.command = "ehrhart";
  doc.family = std::string(1, FamilyLetter(family));
  doc.n = n;
  doc.variant = VariantName(request.variant);
  doc.route = RouteName(request.route);

  const bool integral = EffectivelyIntegral(family, n, request.variant);
  switch (request.route) {
    case Route::kForest: {
      const ForestCensus census = ComputeForestCensus(family, n);
      doc.quasi = request.variant == Variant::kIntegral
                      ? EhrhartIntegralFromCensus(census)
                      : EhrhartStandardFromCensus(census, integral);
      doc.provenance =
          integral ? "sum over signed pseudoforests of 2^(pc+lc) t^(n-tc)"
                   : "sum over signed pseudoforests of 2^pc t^(n-tc); odd t "
                     "restricted to forests whose tree components are even";
      break;
    }
    case Route::kGeneric: {
      if (n > MaxEnumerationSize(family)) {
        throw SizeLimitError("generic route for family " + doc.family +
                             " is limited to n <= " +
                             std::to_string(MaxEnumerationSize(family)));
      }
      doc.quasi =
          EhrhartAlmostIntegral(PermutahedronFor(family, n, request.variant));
      doc.provenance =
          "sum over independent root subsets W of chi_W(t) vol(W) t^|W|";
      break;
    }
    case Route::kEgf: {
      if (request.ts.empty()) {
        throw UsageError("the egf route produces values per t; pass --t");
      }
      if (options.order != 0 && options.order < n) {
        throw UsageError("--order must be at least n");
      }
      const std::size_t order = options.order == 0 ? n : options.order;
      for (const Integer& t : request.ts) {
        doc.evaluations.push_back(
            {t, EgfValueAt(family, n, request.variant, t, order), std::nullopt});
      }
      doc.quasi = InterpolateSamples(doc.evaluations, integral ? 1 : 2,
                                     RootSystemRank(family, n));
      doc.interpolated = doc.quasi.has_value();
      doc.provenance =
          integral ? "coefficient extraction from the Lambert-series EGF"
                   : "coefficient extraction from the Lambert-series EGF "
                     "(even-tree EGF for odd t)";
      break;
    }
  }
  if (request.route != Route::kEgf) {
    for (const Integer& t : request.ts) {
      doc.evaluations.push_back({t, AsInteger(doc.quasi->Evaluate(t)),
                                 std::nullopt});
    }
  }
  if (options.verify) {
    if (doc.evaluations.empty()) {
      doc.evaluations.push_back(
          {1, AsInteger(doc.quasi->Evaluate(1)), std::nullopt});
    }
    AttachOracle(doc, PermutahedronFor(family, n, request.variant), options);
  }
  return doc;
}

ResultDocument ComputeZonotope(const ZonotopeSpec& zonotope,
                               const std::vector<Integer>& ts,
                               const GlobalOptions& options) {
  RequirePositive(ts);
  ResultDocument doc;
  doc.command = "zonotope";
  doc.route = "generic";
  doc.quasi = EhrhartAlmostIntegral(zonotope);
  for (const Integer& t : ts) {
    doc.evaluations.push_back({t, AsInteger(doc.quasi->Evaluate(t)),
                               std::nullopt});
  }
  if (options.verify) AttachOracle(doc, zonotope, options);
  doc.provenance =
      "sum over independent generator subsets W of chi_W(t) vol(W) t^|W|";
  return doc;
}

CommandOutput RunEhrhart(const EhrhartRequest& request,
                         const GlobalOptions& options) {
  const ResultDocument doc = ComputeEhrhart(request, options);
  return {doc.HasMismatch() ? kExitMismatch : kExitOk,
          Render(doc, options.format)};
}

CommandOutput RunTables(const std::string& which,
                        const GlobalOptions& options) {
  const TableReport report = ComputeTable(ParseTableId(which));
  return {report.AllMatch() ? kExitOk : kExitMismatch,
          Render(report, options.format)};
}

CommandOutput RunZonotope(const std::string& path,
                          const std::vector<Integer>& ts,
                          const GlobalOptions& options) {
  const ResultDocument doc =
      ComputeZonotope(LoadZonotopeFile(path), ts, options);
  return {doc.HasMismatch() ? kExitMismatch : kExitOk,
          Render(doc, options.format)};
}

namespace {

RatSeries SeriesFor(StructureKind kind, const ComponentEgfs& c) {
  switch (kind) {
    case StructureKind::kTree:
      return c.trees;
    case StructureKind::kPseudotree:
      return c.pseudotrees;
    case StructureKind::kSignedTree:
      return c.signed_trees;
    case StructureKind::kSignedHalfedgeTree:
    case StructureKind::kSignedLoopTree:
      return c.signed_halfedge_trees;
    case StructureKind::kSignedPseudotree:
      return c.signed_pseudotrees;
  }
  throw std::logic_error("unknown structure kind");
}

std::string JoinIntegers(const std::vector<Integer>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += values[i].get_str();
  }
  return out;
}

}  // namespace

CommandOutput RunSequences(StructureKind kind, std::size_t nmax,
                           const GlobalOptions& options) {
  if (nmax == 0) throw UsageError("nmax must be at least 1");
  if (options.order != 0 && options.order < nmax) {
    throw UsageError("--order must be at least nmax");
  }
  const ComponentEgfs c =
      ComputeComponentEgfs(options.order == 0 ? nmax : options.order);
  const RatSeries series = SeriesFor(kind, c);
  std::vector<Integer> egf;
  std::vector<Integer> brute;
  for (std::size_t n = 1; n <= nmax; ++n) {
    egf.push_back(AsInteger(series.EgfCoefficient(n)));
    if (n <= MaxStructureSize(kind)) {
      brute.push_back(BruteForceStructures(kind, n));
    }
  }
  bool agree = true;
  for (std::size_t i = 0; i < brute.size(); ++i) agree &= brute[i] == egf[i];

  const std::string name = StructureKindName(kind);
  std::ostringstream out;
  switch (options.format) {
    case Format::kHuman:
      out << name << " counts for n = 1.." << nmax << "\n";
      out << "egf:         " << JoinIntegers(egf) << "\n";
      out << "brute force: " << JoinIntegers(brute) << "  (n <= "
          << std::min(nmax, MaxStructureSize(kind)) << ")\n";
      out << (agree ? "agree\n" : "MISMATCH\n");
      break;
    case Format::kJson: {
      nlohmann::ordered_json j;
      j["kind"] = name;
      j["nmax"] = nmax;
      auto to_json = [](const std::vector<Integer>& v) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const Integer& x : v) a.push_back(x.get_str());
        return a;
      };
      j["egf"] = to_json(egf);
      j["brute_force"] = to_json(brute);
      j["agree"] = agree;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      out << "n,egf,brute_force\n";
      for (std::size_t i = 0; i < egf.size(); ++i) {
        out << i + 1 << "," << egf[i].get_str() << ","
            << (i < brute.size() ? brute[i].get_str() : "") << "\n";
      }
      break;
  }
  return {agree ? kExitOk : kExitMismatch, out.str()};
}

CommandOutput RunCount(RootFamily family, std::size_t n, Variant variant,
                       const Integer& t, bool oracle,
                       const GlobalOptions& options) {
  if (t <= 0) throw UsageError("dilation t must be positive");
  if (n == 0) throw UsageError("n must be at least 1");
  if (options.order != 0 && options.order < n) {
    throw UsageError("--order must be at least n");
  }
  ResultDocument doc;
  doc.command = "count";
  doc.family = std::string(1, FamilyLetter(family));
  doc.n = n;
  doc.variant = VariantName(variant);
  doc.route = "egf";
  doc.evaluations.push_back(
      {t, EgfValueAt(family, n, variant, t, options.order), std::nullopt});
  doc.provenance = "formula value from the Lambert-series EGF";
  if (oracle || options.verify) {
    AttachOracle(doc, PermutahedronFor(family, n, variant), options);
    doc.provenance += "; oracle from a bounding-box lattice-point scan";
  }
  return {doc.HasMismatch() ? kExitMismatch : kExitOk,
          Render(doc, options.format)};
}

CommandOutput RunRoots(RootFamily family, std::size_t n,
                       const GlobalOptions& options) {
  if (n == 0) throw UsageError("n must be at least 1");
  const PositiveRootSet set = PositiveRoots(family, n);
  const std::string letter(1, FamilyLetter(family));
  std::ostringstream out;
  switch (options.format) {
    case Format::kHuman:
      out << "positive roots, " << DescribeFamily(letter, n) << "\n";
      for (const IntVector& r : set.roots) {
        out << "  " << r.ToString() << "  " << EdgeFromRoot(r).ToString()
            << "\n";
      }
      out << set.roots.size() << " roots; standard shift "
          << set.shift.ToString() << (IsIntegral(family, n) ? " (integral)" : "")
          << "\n";
      break;
    case Format::kJson: {
      nlohmann::ordered_json j;
      j["family"] = letter;
      j["n"] = n;
      j["rank_label"] = RankLabel(family, n);
      j["table_label"] = CoordinateLabel(family, n);
      nlohmann::ordered_json roots = nlohmann::ordered_json::array();
      for (const IntVector& r : set.roots) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const Integer& e : r.entries()) row.push_back(e.get_si());
        roots.push_back(row);
      }
      j["roots"] = roots;
      nlohmann::ordered_json shift = nlohmann::ordered_json::array();
      for (const Rational& q : set.shift.entries()) {
        shift.push_back(RationalToString(q));
      }
      j["shift"] = shift;
      j["integral"] = IsIntegral(family, n);
      out << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      out << "index,root,edge\n";
      for (std::size_t k = 0; k < set.roots.size(); ++k) {
        out << k << ",\"" << set.roots[k].ToString() << "\","
            << EdgeFromRoot(set.roots[k]).ToString() << "\n";
      }
      break;
  }
  return {kExitOk, out.str()};
}

namespace {

std::vector<Integer> ParseTs(const std::vector<std::string>& raw) {
  std::vector<Integer> ts;
  for (const std::string& s : raw) {
    const Rational q = ParseRational(s);
    if (q.get_den() != 1) throw UsageError("--t expects integers, got " + s);
    ts.push_back(q.get_num());
  }
  return ts;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{
      "Ehrhart quasipolynomials of Coxeter permutahedra and almost-integral "
      "zonotopes",
      "coxeter-ehrhart"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "human";
  GlobalOptions options;
  app.add_option("--format", format, "Output format: human, json or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  app.add_flag("--verify", options.verify,
               "Check evaluations against a brute-force lattice-point count");
  app.add_option("--max-box", options.max_box,
                 "Ceiling on bounding-box points scanned by the oracle");
  app.add_option("--order", options.order,
                 "Power-series truncation order (default: the requested n)");

  std::string family_text;
  std::size_t n = 0;
  std::string variant_text = "standard";
  std::string route_text = "forest";
  std::vector<std::string> t_text;

  CLI::App* ehrhart = app.add_subcommand(
      "ehrhart", "Ehrhart (quasi)polynomial of a Coxeter permutahedron");
  ehrhart->add_option("family", family_text, "Root family A, B, C or D")
      ->required();
  ehrhart->add_option("n", n, "Number of coordinates")->required();
  ehrhart->add_option("--variant", variant_text, "standard or integral")
      ->check(CLI::IsMember({"standard", "integral"}));
  ehrhart->add_option("--route", route_text, "forest, generic or egf")
      ->check(CLI::IsMember({"forest", "generic", "egf"}));
  ehrhart->add_option("--t", t_text, "Dilation factors to evaluate")
      ->delimiter(',');

  std::string table_text;
  CLI::App* tables =
      app.add_subcommand("tables", "Recompute the reference tables");
  tables->add_option("which", table_text, "table1 or table2")
      ->required()
      ->check(CLI::IsMember({"table1", "table2"}));

  std::string zonotope_path;
  CLI::App* zonotope = app.add_subcommand(
      "zonotope", "Ehrhart quasipolynomial of a zonotope read from a file");
  zonotope->add_option("file", zonotope_path, "Zonotope JSON document")
      ->required();
  zonotope->add_option("--t", t_text, "Dilation factors to evaluate")
      ->delimiter(',');

  std::string kind_text;
  std::size_t nmax = 0;
  CLI::App* sequences = app.add_subcommand(
      "sequences", "Labeled structure counts: EGF against brute force");
  sequences
      ->add_option("kind", kind_text,
                   "tree, pseudotree, signed_tree, signed_halfedge_tree, "
                   "signed_loop_tree or signed_pseudotree")
      ->required();
  sequences->add_option("nmax", nmax, "Largest vertex count")->required();

  std::string count_t = "1";
  bool oracle = false;
  CLI::App* count = app.add_subcommand(
      "count", "Lattice points in a dilated Coxeter permutahedron");
  count->add_option("family", family_text, "Root family A, B, C or D")
      ->required();
  count->add_option("n", n, "Number of coordinates")->required();
  count->add_option("--t", count_t, "Dilation factor")->required();
  count->add_option("--variant", variant_text, "standard or integral")
      ->check(CLI::IsMember({"standard", "integral"}));
  count->add_flag("--oracle", oracle, "Also count by brute force");

  CLI::App* roots =
      app.add_subcommand("roots", "List the positive roots of a family");
  roots->add_option("family", family_text, "Root family A, B, C or D")
      ->required();
  roots->add_option("n", n, "Number of coordinates")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    options.format = ParseFormat(format);
    CommandOutput result;
    if (*ehrhart) {
      EhrhartRequest request{ParseFamily(family_text), n,
                             ParseVariant(variant_text),
                             ParseRoute(route_text), ParseTs(t_text)};
      result = RunEhrhart(request, options);
    } else if (*tables) {
      result = RunTables(table_text, options);
    } else if (*zonotope) {
      result = RunZonotope(zonotope_path, ParseTs(t_text), options);
    } else if (*sequences) {
      result = RunSequences(ParseStructureKind(kind_text), nmax, options);
    } else if (*count) {
      result = RunCount(ParseFamily(family_text), n,
                        ParseVariant(variant_text),
                        ParseTs({count_t}).front(), oracle, options);
    } else if (*roots) {
      result = RunRoots(ParseFamily(family_text), n, options);
    }
    out << result.text;
    return result.exit_code;
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
}

}  // namespace coxeter_ehrhart::cli
