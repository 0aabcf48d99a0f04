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

// Command implementations behind the coxeter-ehrhart executable.
//
// Exit codes: 0 success or match, 1 mismatch in a verification mode,
// 2 usage error, 3 size-guard abort.

#ifndef COXETER_EHRHART_CLI_COMMANDS_HPP_
#define COXETER_EHRHART_CLI_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "coxeter_ehrhart/cli/result_document.hpp"
#include "coxeter_ehrhart/oracle.hpp"
#include "coxeter_ehrhart/roots.hpp"

namespace coxeter_ehrhart::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSizeGuard = 3;

struct GlobalOptions {
  Format format = Format::kHuman;
  bool verify = false;
  std::uint64_t max_box = kDefaultMaxBox;
  std::size_t order = 0;  // 0: use the requested n
};

// Thrown for invalid option combinations; maps to kExitUsage.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommandOutput {
  int exit_code = kExitOk;
  std::string text;
};

enum class Variant { kStandard, kIntegral };
enum class Route { kForest, kGeneric, kEgf };

Variant ParseVariant(const std::string& text);
Route ParseRoute(const std::string& text);
std::string VariantName(Variant v);
std::string RouteName(Route r);

struct EhrhartRequest {
  RootFamily family;
  std::size_t n;
  Variant variant = Variant::kStandard;
  Route route = Route::kForest;
  std::vector<Integer> ts;
};

ResultDocument ComputeEhrhart(const EhrhartRequest& request,
                              const GlobalOptions& options);
ResultDocument ComputeZonotope(const ZonotopeSpec& zonotope,
                               const std::vector<Integer>& ts,
                               const GlobalOptions& options);

CommandOutput RunEhrhart(const EhrhartRequest& request,
                         const GlobalOptions& options);
CommandOutput RunTables(const std::string& which, const GlobalOptions& options);
CommandOutput RunZonotope(const std::string& path,
                          const std::vector<Integer>& ts,
                          const GlobalOptions& options);
CommandOutput RunSequences(StructureKind kind, std::size_t nmax,
                           const GlobalOptions& options);
CommandOutput RunCount(RootFamily family, std::size_t n, Variant variant,
                       const Integer& t, bool oracle,
                       const GlobalOptions& options);
CommandOutput RunRoots(RootFamily family, std::size_t n,
                       const GlobalOptions& options);

// Parses argv, dispatches, writes to out/err and returns the exit code.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace coxeter_ehrhart::cli

#endif  // COXETER_EHRHART_CLI_COMMANDS_HPP_
