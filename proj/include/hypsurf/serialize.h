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

#ifndef HYPSURF_SERIALIZE_H
#define HYPSURF_SERIALIZE_H

#include <map>
#include <string>

#include "hypsurf/csscode.h"
#include "hypsurf/tiling.h"

namespace hypsurf {

// JSON documents; see docs/schemas.md. Output is deterministic (sorted keys,
// two-space indent) so parse followed by serialize reproduces the input
// byte for byte. Parsers throw Error(kParse).

/// A tiling is stored as the permutations R and S of the group elements.
std::string tiling_to_json(const Tiling &tiling);
Tiling tiling_from_json(const std::string &text);

/// Code with optional tiling type (r = s = 0 when unknown) and a name.
struct CodeDocument {
    std::string name;
    int r = 0;
    int s = 0;
    CssCode code;
};

std::string code_to_json(const CodeDocument &doc);
CodeDocument code_from_json(const std::string &text);

struct RunManifest {
    std::string subcommand;
    std::map<std::string, std::string> arguments;
    std::string version;
    std::string rng;
    unsigned long long seed = 0;
    std::string started;
    std::string finished;
};

std::string manifest_to_json(const RunManifest &m);
RunManifest manifest_from_json(const std::string &text);

/// UTC time as ISO 8601 with seconds.
std::string utc_timestamp();

}  // namespace hypsurf

#endif
