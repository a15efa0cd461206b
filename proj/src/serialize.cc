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

#include "hypsurf/serialize.h"

#include <chrono>
#include <ctime>

#include "hypsurf/error.h"
#include "json.hpp"

namespace hypsurf {

using nlohmann::json;

namespace {

constexpr const char *kTilingFormat = "hypsurf-tiling";
constexpr const char *kCodeFormat = "hypsurf-code";
constexpr const char *kManifestFormat = "hypsurf-manifest";
constexpr int kVersion = 1;

std::string dump(const json &j) {
    return j.dump(2) + "\n";
}

json parse(const std::string &text, const char *format) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw Error(ErrorCode::kParse, e.what());
    }
    if (!j.is_object() || j.value("format", "") != format) {
        throw Error(ErrorCode::kParse, std::string("expected a ") + format + " document");
    }
    if (j.value("version", 0) != kVersion) {
        throw Error(ErrorCode::kParse, "unsupported document version");
    }
    return j;
}

// Field access with nlohmann's type errors reported as parse errors.
template <typename T>
T field(const json &j, const char *key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        throw Error(ErrorCode::kParse, std::string(key) + ": " + e.what());
    }
}

json rows_json(const BitMatrix &m) {
    return m.row_supports();
}

BitMatrix rows_from(const json &j, const char *key, size_t cols) {
    auto rows = field<std::vector<std::vector<uint32_t>>>(j, key);
    for (const auto &row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (row[i] >= cols || (i > 0 && row[i] <= row[i - 1])) {
                throw Error(ErrorCode::kParse, std::string(key) + ": supports must be increasing and below n");
            }
        }
    }
    return BitMatrix::from_rows(cols, rows);
}

}  // namespace

std::string tiling_to_json(const Tiling &t) {
    const size_t order = t.num_elements();
    std::vector<uint32_t> rho(order);
    std::vector<uint32_t> sigma(order);
    // Cells list their elements in rotation order.
    for (const auto &f : t.faces) {
        for (size_t i = 0; i < f.size(); ++i) {
            rho[f[i]] = f[(i + 1) % f.size()];
        }
    }
    for (const auto &v : t.vertices) {
        for (size_t i = 0; i < v.size(); ++i) {
            sigma[v[i]] = v[(i + 1) % v.size()];
        }
    }
    json j;
    j["format"] = kTilingFormat;
    j["version"] = kVersion;
    j["r"] = t.r;
    j["s"] = t.s;
    j["R"] = rho;
    j["S"] = sigma;
    j["faces"] = t.num_faces();
    j["edges"] = t.num_edges();
    j["vertices"] = t.num_vertices();
    return dump(j);
}

Tiling tiling_from_json(const std::string &text) {
    json j = parse(text, kTilingFormat);
    int r = field<int>(j, "r");
    int s = field<int>(j, "s");
    auto rho = field<std::vector<uint32_t>>(j, "R");
    auto sigma = field<std::vector<uint32_t>>(j, "S");
    if (rho.size() != sigma.size() || rho.empty()) {
        throw Error(ErrorCode::kParse, "R and S must be permutations of the same non-empty set");
    }
    const size_t order = rho.size();
    std::vector<std::array<uint32_t, kNumGenSymbols>> act(order);
    std::vector<bool> hit_r(order, false);
    std::vector<bool> hit_s(order, false);
    for (uint32_t g = 0; g < order; ++g) {
        if (rho[g] >= order || sigma[g] >= order || hit_r[rho[g]] || hit_s[sigma[g]]) {
            throw Error(ErrorCode::kParse, "R and S must be permutations");
        }
        hit_r[rho[g]] = hit_s[sigma[g]] = true;
        act[g][index_of(GenSymbol::kRho)] = rho[g];
        act[g][index_of(GenSymbol::kSigma)] = sigma[g];
        act[rho[g]][index_of(GenSymbol::kRhoInv)] = g;
        act[sigma[g]][index_of(GenSymbol::kSigmaInv)] = g;
    }
    CosetTable table(std::move(act));
    if (!table.is_valid_action()) {
        throw Error(ErrorCode::kParse, "R and S do not act transitively");
    }
    try {
        return build_tiling(table, r, s);
    } catch (const Error &e) {
        throw Error(ErrorCode::kParse, e.what());
    }
}

std::string code_to_json(const CodeDocument &doc) {
    const CssCode &c = doc.code;
    json j;
    j["format"] = kCodeFormat;
    j["version"] = kVersion;
    j["name"] = doc.name;
    j["r"] = doc.r;
    j["s"] = doc.s;
    j["n"] = c.n;
    j["k"] = c.k;
    j["h_x"] = rows_json(c.h_x);
    j["h_z"] = rows_json(c.h_z);
    json lx = json::array();
    json lz = json::array();
    for (const auto &v : c.logical_x) {
        lx.push_back(v.support());
    }
    for (const auto &v : c.logical_z) {
        lz.push_back(v.support());
    }
    j["logical_x"] = lx;
    j["logical_z"] = lz;
    return dump(j);
}

CodeDocument code_from_json(const std::string &text) {
    json j = parse(text, kCodeFormat);
    CodeDocument doc;
    doc.name = field<std::string>(j, "name");
    doc.r = field<int>(j, "r");
    doc.s = field<int>(j, "s");
    const auto n = field<size_t>(j, "n");
    try {
        doc.code = CssCode::from_checks(rows_from(j, "h_x", n), rows_from(j, "h_z", n));
    } catch (const Error &e) {
        throw Error(ErrorCode::kParse, e.what());
    }
    if (field<size_t>(j, "k") != doc.code.k) {
        throw Error(ErrorCode::kParse, "k does not match the checks");
    }
    // Stored logicals replace the recomputed ones if they are a valid paired
    // basis.
    BitMatrix lx = rows_from(j, "logical_x", n);
    BitMatrix lz = rows_from(j, "logical_z", n);
    if (lx.rows() != doc.code.k || lz.rows() != doc.code.k) {
        throw Error(ErrorCode::kParse, "need k logical operators of each type");
    }
    for (size_t i = 0; i < doc.code.k; ++i) {
        if (doc.code.h_z.multiply(lx.row(i)).any() || doc.code.h_x.multiply(lz.row(i)).any()) {
            throw Error(ErrorCode::kParse, "logical operator violates a check");
        }
        for (size_t m = 0; m < doc.code.k; ++m) {
            if (lx.row(i).dot(lz.row(m)) != (i == m)) {
                throw Error(ErrorCode::kParse, "logical operators are not paired");
            }
        }
    }
    doc.code.logical_x.clear();
    doc.code.logical_z.clear();
    for (size_t i = 0; i < doc.code.k; ++i) {
        doc.code.logical_x.push_back(lx.row(i));
        doc.code.logical_z.push_back(lz.row(i));
    }
    return doc;
}

std::string manifest_to_json(const RunManifest &m) {
    json j;
    j["format"] = kManifestFormat;
    j["version"] = kVersion;
    j["subcommand"] = m.subcommand;
    j["arguments"] = m.arguments;
    j["tool_version"] = m.version;
    j["rng"] = m.rng;
    j["seed"] = m.seed;
    j["started"] = m.started;
    j["finished"] = m.finished;
    return dump(j);
}

RunManifest manifest_from_json(const std::string &text) {
    json j = parse(text, kManifestFormat);
    RunManifest m;
    m.subcommand = field<std::string>(j, "subcommand");
    m.arguments = field<std::map<std::string, std::string>>(j, "arguments");
    m.version = field<std::string>(j, "tool_version");
    m.rng = field<std::string>(j, "rng");
    m.seed = field<unsigned long long>(j, "seed");
    m.started = field<std::string>(j, "started");
    m.finished = field<std::string>(j, "finished");
    return m;
}

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace hypsurf
