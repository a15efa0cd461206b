// Copyright 2026 The hypsurf Authors
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

#ifndef HYPSURF_CLI_H
#define HYPSURF_CLI_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hypsurf/csscode.h"
#include "hypsurf/tiling.h"

namespace hypsurf {

inline constexpr const char *kToolVersion = "0.1.0";

/// A code named on the command line: a catalog id ("54-60"), "toric-<L>", or
/// a code JSON file.
struct ResolvedCode {
    std::string name;
    int r = 0;
    int s = 0;
    CssCode code;
    std::optional<Tiling> tiling;
    /// Published k, when the catalog has one.
    std::optional<size_t> catalog_k;
};

ResolvedCode resolve_code(const std::string &id);

/// Minimum weight over both species: Bravyi's method when every qubit sits in
/// exactly two checks of each kind, exhaustive search otherwise.
size_t resolved_distance(const ResolvedCode &rc);

/// Runs the command line. Exit status: 0 success, 1 domain error (error name on
/// `err`), 2 usage error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace hypsurf

#endif
