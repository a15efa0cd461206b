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

// Searches short words w such that <R, S | R^r, S^s, (RS)^2, w> is the
// rotation group of a closed {r,s} surface with n edges, and prints the code
// parameters and logical weight spectra of each distinct hit.

#include <cctype>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypsurf/csscode.h"
#include "hypsurf/distance.h"
#include "hypsurf/error.h"
#include "hypsurf/fpgroup.h"
#include "hypsurf/tiling.h"

using namespace hypsurf;

namespace {

std::string spectrum_str(const std::map<size_t, size_t> &m) {
    std::ostringstream out;
    bool first = true;
    for (auto [w, c] : m) {
        out << (first ? "" : ",") << w << ":" << c;
        first = false;
    }
    return out.str();
}

// Powers above r/2 are spelled with the inverse letter instead.
bool canonical_runs(const std::string &w, int r, int s) {
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) {
            ++j;
        }
        int len = static_cast<int>(j - i);
        int order = (w[i] == 'R' || w[i] == 'r') ? r : s;
        bool upper = w[i] == 'R' || w[i] == 'S';
        if (2 * len > order || (2 * len == order && !upper)) {
            return false;
        }
        i = j;
    }
    return true;
}

bool cancels(char a, char b) {
    return a != b && std::tolower(a) == std::tolower(b);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Search translation words for small closed hyperbolic codes"};
    int r = 5;
    int s = 5;
    size_t n = 30;
    size_t max_len = 10;
    size_t max_hits = 20;
    std::string want_z;
    std::string want_x;
    app.add_option("--r", r)->required();
    app.add_option("--s", s)->required();
    app.add_option("--n", n, "number of edges")->required();
    app.add_option("--max-len", max_len);
    app.add_option("--max-hits", max_hits, "distinct spectra to report");
    app.add_option("--z", want_z, "stop at this Z spectrum, e.g. 3:6,4:2");
    app.add_option("--x", want_x, "and this X spectrum");
    CLI11_PARSE(app, argc, argv);

    const size_t order = 2 * n;
    std::set<std::string> seen;
    std::vector<std::string> frontier{"S"};
    size_t tried = 0;
    for (size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<std::string> next;
        for (const std::string &w : frontier) {
            if (canonical_runs(w, r, s) && !cancels(w.front(), w.back()) && w.find_first_of("Rr") != std::string::npos) {
                ++tried;
                try {
                    auto table = enumerate_quotient(Presentation(r, s, {Word::parse(w)}), 4 * order);
                    if (table.order() == order) {
                        auto code = from_tiling(build_tiling(table, r, s));
                        auto spec = logical_weight_spectrum(code);
                        std::string key = spectrum_str(spec.z) + " | " + spectrum_str(spec.x);
                        if (seen.insert(key).second) {
                            std::cout << w << "  [[" << code.n << "," << code.k << "," << code_distance(code)
                                      << "]]  Z " << spectrum_str(spec.z) << "  X " << spectrum_str(spec.x)
                                      << std::endl;
                            if (spectrum_str(spec.z) == want_z && spectrum_str(spec.x) == want_x) {
                                std::cout << "match after " << tried << " words" << std::endl;
                                return 0;
                            }
                            if (seen.size() >= max_hits) {
                                return 0;
                            }
                        }
                    }
                } catch (const Error &) {
                }
            }
            if (len == max_len) {
                continue;
            }
            for (char c : std::string("RSrs")) {
                if (!cancels(w.back(), c)) {
                    next.push_back(w + c);
                }
            }
        }
        frontier = std::move(next);
    }
    std::cout << "tried " << tried << " words" << std::endl;
    return want_z.empty() ? 0 : 1;
}
