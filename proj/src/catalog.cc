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

#include "hypsurf/catalog.h"

namespace hypsurf {

Presentation CatalogEntry::presentation() const {
    std::vector<Word> extra;
    for (const auto &w : words) {
        extra.push_back(Word::parse(w));
    }
    return Presentation(r, s, std::move(extra));
}

const std::vector<CatalogEntry> &catalog() {
    // R = rho, S = sigma, lower case = inverse.
    static const std::vector<CatalogEntry> kCatalog = {
        {"54-60", 5, 4, {"((S r)^2 r)^2"}, 60, 8, 4, 6, 4},
        {"54-160", 5, 4, {"S R^2 (S r)^2 r S^-2 R^-2 S r"}, 160, 18, 6, 8, 6},
        {"54-360", 5, 4, {"(S R^2 S)^2 (r S^-2 r)^2"}, 360, 38, 8, 8, 8},
        {"54-1800", 5, 4, {"(S r)^10", "S R^2 S^2 r S (R^2 s)^2 (R s)^2 s R^-2 S r"}, 1800, 182, 10, 10, 10},
        {"54-1920", 5, 4, {"S R^2 S^2 R (R s)^4 r (r S)^3 r"}, 1920, 194, 10, 12, 10},
        {"83-48", 8, 3, {"(R^2 s)^3"}, 48, 4, 3, 6, 3},
        {"83-168", 8, 3, {"(S R^-2)^4"}, 168, 14, 4, 8, 4},
        {"83-384", 8, 3, {"(S R^-3)^4"}, 384, 32, 4, 12, 4},
        {"83-648", 8, 3, {"S R^4 S r S R^2 s R^3 s R^-3 S r"}, 648, 54, 6, 14, 6},
        {"83-768", 8, 3, {"S R^2 (R^2 s)^3 R^3 s R^-3 S R^-2"}, 768, 64, 6, 16, 6},
    };
    return kCatalog;
}

const std::vector<CatalogEntry> &small_codes() {
    // n, k and d as tabulated; csys and csys_dual as computed.
    static const std::vector<CatalogEntry> kSmall = {
        {"55-30", 5, 5, {"(S r)^3"}, 30, 8, 3, 3, 3},
        {"55-40", 5, 5, {"S R^2 S^2 R^2 S"}, 40, 10, 4, 4, 4},
        {"64-36", 6, 4, {"S R^2 S^2 R^2 S"}, 36, 8, 4, 4, 4},
        {"65-60", 6, 5, {"S R^2 S^2 R^2 S"}, 60, 18, 3, 4, 3},
        {"66-54", 6, 6, {"S R^2 s R S r S"}, 54, 20, 4, 4, 4},
        {"66-60", 6, 6, {"S R^3 S^2 R s R S"}, 60, 22, 4, 4, 4},
    };
    return kSmall;
}

std::optional<CatalogEntry> find_entry(std::string_view id) {
    for (const auto *list : {&catalog(), &small_codes()}) {
        for (const auto &e : *list) {
            if (e.id == id) {
                return e;
            }
        }
    }
    return std::nullopt;
}

}  // namespace hypsurf
