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

#include "hypsurf/tiling.h"

#include <limits>
#include <string>
#include <utility>

#include "hypsurf/error.h"

namespace hypsurf {

namespace {

constexpr uint32_t kNone = std::numeric_limits<uint32_t>::max();

// Orbits of the cyclic group generated by `step`, each listed from its least
// element, numbered in order of that least element.
void orbits(size_t n, auto step, std::vector<std::vector<uint32_t>> &cells, std::vector<uint32_t> &cell_of) {
    cell_of.assign(n, kNone);
    for (uint32_t g = 0; g < n; ++g) {
        if (cell_of[g] != kNone) {
            continue;
        }
        auto id = static_cast<uint32_t>(cells.size());
        std::vector<uint32_t> orbit;
        uint32_t cur = g;
        do {
            cell_of[cur] = id;
            orbit.push_back(cur);
            cur = step(cur);
        } while (cur != g);
        cells.push_back(std::move(orbit));
    }
}

[[noreturn]] void degenerate(const std::string &msg) {
    throw Error(ErrorCode::kDegenerateQuotient, msg);
}

}  // namespace

Tiling build_tiling(const CosetTable &table, int r, int s) {
    if (r < 2 || s < 2) {
        throw Error(ErrorCode::kInvalidArgument, "r and s must be at least 2");
    }
    const size_t n = table.order();
    Tiling t;
    t.r = r;
    t.s = s;
    orbits(n, [&](uint32_t g) { return table.act(g, GenSymbol::kRho); }, t.faces, t.face_of);
    orbits(n, [&](uint32_t g) { return table.act(g, GenSymbol::kSigma); }, t.vertices, t.vertex_of);
    orbits(
        n, [&](uint32_t g) { return table.act(table.act(g, GenSymbol::kRho), GenSymbol::kSigma); }, t.edges,
        t.edge_of);

    for (const auto &f : t.faces) {
        if (f.size() != static_cast<size_t>(r)) {
            degenerate("face orbit of size " + std::to_string(f.size()) + " instead of " + std::to_string(r));
        }
    }
    for (const auto &v : t.vertices) {
        if (v.size() != static_cast<size_t>(s)) {
            degenerate("vertex orbit of size " + std::to_string(v.size()) + " instead of " + std::to_string(s));
        }
    }
    for (size_t e = 0; e < t.edges.size(); ++e) {
        const auto &elems = t.edges[e];
        if (elems.size() != 2) {
            degenerate("edge orbit of size " + std::to_string(elems.size()) + " instead of 2");
        }
        std::array<uint32_t, 2> faces = {t.face_of[elems[0]], t.face_of[elems[1]]};
        std::array<uint32_t, 2> verts = {t.vertex_of[elems[0]], t.vertex_of[elems[1]]};
        if (faces[0] == faces[1]) {
            degenerate("edge " + std::to_string(e) + " borders face " + std::to_string(faces[0]) + " twice");
        }
        if (verts[0] == verts[1]) {
            degenerate("edge " + std::to_string(e) + " is a loop at vertex " + std::to_string(verts[0]));
        }
        t.edge_faces.push_back(faces);
        t.edge_vertices.push_back(verts);
    }
    for (const auto &f : t.faces) {
        std::vector<uint32_t> es;
        for (uint32_t g : f) {
            es.push_back(t.edge_of[g]);
        }
        t.face_edges.push_back(std::move(es));
    }
    for (const auto &v : t.vertices) {
        std::vector<uint32_t> es;
        for (uint32_t g : v) {
            es.push_back(t.edge_of[g]);
        }
        t.vertex_edges.push_back(std::move(es));
    }
    return t;
}

Tiling dual(const Tiling &tiling) {
    Tiling d = tiling;
    std::swap(d.r, d.s);
    std::swap(d.faces, d.vertices);
    std::swap(d.face_of, d.vertex_of);
    std::swap(d.edge_faces, d.edge_vertices);
    std::swap(d.face_edges, d.vertex_edges);
    return d;
}

CosetTable toric_table(int L) {
    if (L < 2) {
        throw Error(ErrorCode::kInvalidArgument, "toric lattice size must be at least 2");
    }
    // Dart (x, y, c): square with lower-left corner (x, y), corner c counted
    // counter-clockwise from the lower-left. The dart's edge runs from corner c
    // to corner c+1.
    static constexpr std::array<std::array<int, 2>, 4> kCorner = {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
    // Neighbouring square across the edge leaving corner c.
    static constexpr std::array<std::array<int, 2>, 4> kAcross = {{{0, -1}, {1, 0}, {0, 1}, {-1, 0}}};
    const auto wrap = [L](int v) { return ((v % L) + L) % L; };
    const auto id = [L](int x, int y, int c) { return static_cast<uint32_t>((y * L + x) * 4 + c); };

    const size_t n = 4 * static_cast<size_t>(L) * static_cast<size_t>(L);
    std::vector<std::array<uint32_t, kNumGenSymbols>> act(n);
    for (int y = 0; y < L; ++y) {
        for (int x = 0; x < L; ++x) {
            for (int c = 0; c < 4; ++c) {
                uint32_t g = id(x, y, c);
                act[g][index_of(GenSymbol::kRho)] = id(x, y, (c + 1) % 4);
                // Rotate about corner c: move into the square across the edge
                // that arrives at corner c and keep pointing at the same corner.
                int across = (c + 3) % 4;
                int dx = kAcross[across][0];
                int dy = kAcross[across][1];
                int cx = kCorner[c][0] - dx;
                int cy = kCorner[c][1] - dy;
                int c2 = 0;
                while (kCorner[c2][0] != cx || kCorner[c2][1] != cy) {
                    ++c2;
                }
                act[g][index_of(GenSymbol::kSigma)] = id(wrap(x + dx), wrap(y + dy), c2);
            }
        }
    }
    for (uint32_t g = 0; g < n; ++g) {
        act[act[g][index_of(GenSymbol::kRho)]][index_of(GenSymbol::kRhoInv)] = g;
        act[act[g][index_of(GenSymbol::kSigma)]][index_of(GenSymbol::kSigmaInv)] = g;
    }
    return CosetTable(std::move(act)).canonical();
}

Tiling build_toric(int L) {
    return build_tiling(toric_table(L), 4, 4);
}

}  // namespace hypsurf
