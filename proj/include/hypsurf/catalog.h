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

#ifndef HYPSURF_CATALOG_H
#define HYPSURF_CATALOG_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypsurf/fpgroup.h"

namespace hypsurf {

/// A published compactification: the translation words that close up the
/// {r,s} tiling together with the code parameters reported for it.
struct CatalogEntry {
    std::string id;  // "<r><s>-<n>"
    int r = 0;
    int s = 0;
    std::vector<std::string> words;
    int n = 0;
    int k = 0;
    int d = 0;
    int csys = 0;
    int csys_dual = 0;

    Presentation presentation() const;
};

/// The {5,4} and {8,3} compactifications (ten rows), reported values kept
/// exactly as published, including k values that disagree with the homology.
const std::vector<CatalogEntry> &catalog();

/// Small closed codes whose minimum logical weights are tabulated but whose
/// translation words are not published. The words here were found with
/// tools/search_words; csys/csys_dual are the values this library computes.
const std::vector<CatalogEntry> &small_codes();

/// Looks up `id` in catalog() and small_codes().
std::optional<CatalogEntry> find_entry(std::string_view id);

}  // namespace hypsurf

#endif
