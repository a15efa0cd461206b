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

#include "hypsurf/planar.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hypsurf/error.h"

namespace hypsurf {

namespace {

constexpr int32_t kNone = -1;

// Rotation system. Every vertex has s spoke positions and s face slots, slot j
// lying between spokes j and j+1 (counterclockwise). Walking a face with the
// face on the left, the corner (x, j) is left through spoke j+1, and the face
// sits in slot c at the far end where c is the spoke the edge arrives on.
class PatchBuilder {
   public:
    PatchBuilder(int r, int s) : r_(r), s_(s) {
    }

    struct Corner {
        uint32_t vertex;
        int slot;
    };

    int s() const {
        return s_;
    }

    int mod(int j) const {
        return ((j % s_) + s_) % s_;
    }

    uint32_t new_vertex() {
        spokes_.emplace_back(static_cast<size_t>(s_), kNone);
        slots_.emplace_back(static_cast<size_t>(s_), kNone);
        return static_cast<uint32_t>(spokes_.size() - 1);
    }

    void new_edge(uint32_t x, int a, uint32_t y, int b) {
        auto e = static_cast<int32_t>(ends_.size());
        ends_.push_back({Corner{x, a}, Corner{y, b}});
        spokes_[x][static_cast<size_t>(a)] = e;
        spokes_[y][static_cast<size_t>(b)] = e;
    }

    // Far end of the edge on spoke a at x.
    Corner across(uint32_t x, int a) const {
        const auto &e = ends_[static_cast<size_t>(spokes_[x][static_cast<size_t>(a)])];
        return e[0].vertex == x && e[0].slot == a ? e[1] : e[0];
    }

    bool has_spoke(uint32_t x, int a) const {
        return spokes_[x][static_cast<size_t>(mod(a))] != kNone;
    }

    int32_t slot_face(uint32_t x, int j) const {
        return slots_[x][static_cast<size_t>(mod(j))];
    }

    // Adds the face occupying the empty slot j at x; returns its id.
    uint32_t add_face(uint32_t x, int j, int level) {
        j = mod(j);
        if (slot_face(x, j) != kNone) {
            throw std::logic_error("face slot already occupied");
        }
        std::vector<Corner> forward{{x, j}};
        bool closed = false;
        while (true) {
            Corner c = forward.back();
            if (!has_spoke(c.vertex, c.slot + 1)) {
                break;
            }
            Corner next = across(c.vertex, mod(c.slot + 1));
            if (next.vertex == x && next.slot == j) {
                closed = true;
                break;
            }
            forward.push_back(next);
            if (forward.size() > static_cast<size_t>(r_)) {
                throw std::logic_error("face boundary longer than r");
            }
        }
        std::vector<Corner> backward;
        if (!closed) {
            Corner c{x, j};
            while (has_spoke(c.vertex, c.slot)) {
                Corner prev = across(c.vertex, c.slot);
                c = {prev.vertex, mod(prev.slot - 1)};
                backward.push_back(c);
                if (forward.size() + backward.size() > static_cast<size_t>(r_)) {
                    throw std::logic_error("face boundary longer than r");
                }
            }
        }
        std::vector<Corner> corners(backward.rbegin(), backward.rend());
        corners.insert(corners.end(), forward.begin(), forward.end());
        if (closed && corners.size() != static_cast<size_t>(r_)) {
            throw std::logic_error("closed face of wrong size");
        }
        if (!closed) {
            // Bridge the gap with fresh vertices, each using spokes 0 and 1.
            size_t fresh = static_cast<size_t>(r_) - corners.size();
            Corner last = corners.back();
            Corner first = corners.front();
            if (fresh == 0 && last.vertex == first.vertex) {
                throw std::logic_error("face would need a loop edge");
            }
            uint32_t prev = last.vertex;
            int prev_spoke = mod(last.slot + 1);
            for (size_t i = 0; i < fresh; ++i) {
                uint32_t v = new_vertex();
                new_edge(prev, prev_spoke, v, 0);
                corners.push_back({v, 0});
                prev = v;
                prev_spoke = 1;
            }
            new_edge(prev, prev_spoke, first.vertex, first.slot);
        }
        auto f = static_cast<uint32_t>(face_corners_.size());
        for (const auto &c : corners) {
            if (slots_[c.vertex][static_cast<size_t>(c.slot)] != kNone) {
                throw std::logic_error("corner slot already occupied");
            }
            slots_[c.vertex][static_cast<size_t>(c.slot)] = static_cast<int32_t>(f);
        }
        face_corners_.push_back(std::move(corners));
        levels_.push_back(level);
        return f;
    }

    uint32_t edge_of(const Corner &c) const {
        return static_cast<uint32_t>(spokes_[c.vertex][static_cast<size_t>(mod(c.slot + 1))]);
    }

    size_t faces_on(uint32_t e) const {
        const Corner &c = ends_[e][0];
        return (slot_face(c.vertex, c.slot) != kNone ? 1 : 0) + (slot_face(c.vertex, c.slot - 1) != kNone ? 1 : 0);
    }

    // Empty slot on one side of a boundary edge, as a corner of the missing face.
    Corner open_side(uint32_t e) const {
        const Corner &c = ends_[e][0];
        if (slot_face(c.vertex, c.slot) == kNone) {
            return {c.vertex, c.slot};
        }
        const Corner &d = ends_[e][1];
        return {d.vertex, d.slot};
    }

    // Walks the outer face; returns boundary edges and the vertex before each.
    std::pair<std::vector<uint32_t>, std::vector<uint32_t>> boundary_walk() const {
        std::vector<uint32_t> edges;
        std::vector<uint32_t> verts;
        size_t total = 0;
        int32_t start_edge = kNone;
        for (uint32_t e = 0; e < ends_.size(); ++e) {
            if (faces_on(e) == 1) {
                ++total;
                if (start_edge == kNone) {
                    start_edge = static_cast<int32_t>(e);
                }
            }
        }
        if (start_edge == kNone) {
            return {};
        }
        // State (x, j): slot j at x is outside; leave through the next spoke.
        // Start so that the first move crosses start_edge.
        const auto &se = ends_[static_cast<size_t>(start_edge)];
        Corner start = slot_face(se[0].vertex, se[0].slot - 1) == kNone
                           ? Corner{se[0].vertex, mod(se[0].slot - 1)}
                           : Corner{se[1].vertex, mod(se[1].slot - 1)};
        Corner state = start;
        while (true) {
            int t = state.slot + 1;
            while (!has_spoke(state.vertex, t)) {
                ++t;
            }
            t = mod(t);
            auto e = static_cast<uint32_t>(spokes_[state.vertex][static_cast<size_t>(t)]);
            if (!edges.empty() && e == edges.front() && state.vertex == verts.front()) {
                break;
            }
            verts.push_back(state.vertex);
            edges.push_back(e);
            state = across(state.vertex, t);
            if (edges.size() > ends_.size()) {
                throw std::logic_error("outer face walk does not close");
            }
        }
        if (edges.size() != total) {
            throw std::logic_error("patch boundary is not a single cycle");
        }
        return {edges, verts};
    }

    PlanarPatch finish() const {
        PlanarPatch p;
        p.r = r_;
        p.s = s_;
        p.num_vertices = spokes_.size();
        for (const auto &e : ends_) {
            p.edge_ends.push_back({e[0].vertex, e[1].vertex});
        }
        for (const auto &corners : face_corners_) {
            std::vector<uint32_t> vs;
            std::vector<uint32_t> es;
            for (const auto &c : corners) {
                vs.push_back(c.vertex);
                es.push_back(edge_of(c));
            }
            p.face_vertices.push_back(std::move(vs));
            p.face_edges.push_back(std::move(es));
        }
        p.face_level = levels_;
        auto [edges, verts] = boundary_walk();
        p.boundary = std::move(edges);
        p.boundary_vertices = std::move(verts);
        return p;
    }

    uint32_t num_faces() const {
        return static_cast<uint32_t>(face_corners_.size());
    }

    const std::vector<Corner> &corners(uint32_t f) const {
        return face_corners_[f];
    }

   private:
    int r_;
    int s_;
    std::vector<std::vector<int32_t>> spokes_;
    std::vector<std::vector<int32_t>> slots_;
    std::vector<std::array<Corner, 2>> ends_;
    std::vector<std::vector<Corner>> face_corners_;
    std::vector<int> levels_;
};

}  // namespace

std::vector<uint32_t> PlanarPatch::vertex_degrees() const {
    std::vector<uint32_t> deg(num_vertices, 0);
    for (const auto &e : edge_ends) {
        ++deg[e[0]];
        ++deg[e[1]];
    }
    return deg;
}

CssCode PlanarPatch::code() const {
    std::vector<std::vector<uint32_t>> stars(num_vertices);
    for (uint32_t e = 0; e < edge_ends.size(); ++e) {
        stars[edge_ends[e][0]].push_back(e);
        stars[edge_ends[e][1]].push_back(e);
    }
    std::vector<std::vector<uint32_t>> plaquettes;
    for (auto es : face_edges) {
        std::sort(es.begin(), es.end());
        plaquettes.push_back(std::move(es));
    }
    return CssCode::from_checks(BitMatrix::from_rows(num_edges(), stars),
                                BitMatrix::from_rows(num_edges(), plaquettes));
}

namespace {

void check_tiling(int r, int s, int levels) {
    if (r < 3 || s < 3 || (r - 2) * (s - 2) < 4) {
        throw Error(ErrorCode::kInvalidArgument, "{r,s} must be Euclidean or hyperbolic");
    }
    if (levels < 1) {
        throw Error(ErrorCode::kInvalidArgument, "need at least one level");
    }
}

void grow_levels(PatchBuilder &b, int levels, Growth growth) {
    for (int level = 2; level <= levels; ++level) {
        auto [edges, verts] = b.boundary_walk();
        if (growth == Growth::kRotate) {
            // Complete the ring of faces around every boundary vertex, sweeping
            // counterclockwise from an occupied slot so each new face shares a
            // spoke with the previous one.
            for (uint32_t v : verts) {
                const int s = b.s();
                int filled = 0;
                while (filled < s && b.slot_face(v, filled) == -1) {
                    ++filled;
                }
                for (int j = filled + 1; j < filled + s; ++j) {
                    if (b.slot_face(v, j) == -1) {
                        b.add_face(v, j, level);
                    }
                }
            }
            continue;
        }
        for (uint32_t e : edges) {
            if (b.faces_on(e) != 1) {
                continue;
            }
            auto side = b.open_side(e);
            b.add_face(side.vertex, side.slot, level);
        }
    }
}

}  // namespace

PlanarPatch grow_patch(int r, int s, const std::vector<SeedStep> &seed, int levels, Growth growth) {
    check_tiling(r, s, levels);
    PatchBuilder b(r, s);
    b.add_face(b.new_vertex(), 0, 1);
    for (const auto &step : seed) {
        if (step.face >= b.num_faces() || step.edge >= static_cast<uint32_t>(r)) {
            throw Error(ErrorCode::kInvalidArgument, "seed step refers to a missing face or edge");
        }
        const auto &c = b.corners(step.face)[step.edge];
        if (b.faces_on(b.edge_of(c)) != 1) {
            throw Error(ErrorCode::kInvalidArgument, "seed step crosses an interior edge");
        }
        // The face leaves c through spoke slot + 1; the slot beyond it is free.
        b.add_face(c.vertex, c.slot + 1, 1);
    }
    grow_levels(b, levels, growth);
    return b.finish();
}

std::vector<SeedStep> seed_layout(int r, int s, int seed_faces, SeedLayout layout) {
    if (seed_faces < 1) {
        throw Error(ErrorCode::kInvalidArgument, "need at least one seed face");
    }
    if (layout == SeedLayout::kFan && seed_faces > s) {
        throw Error(ErrorCode::kInvalidArgument, "a fan holds at most s faces");
    }
    std::vector<SeedStep> steps;
    for (uint32_t i = 1; i < static_cast<uint32_t>(seed_faces); ++i) {
        switch (layout) {
            case SeedLayout::kFan:
                // Corner 0 of every fan face is the hub; the face after it
                // counterclockwise lies across the face's last edge.
                steps.push_back({i - 1, static_cast<uint32_t>(r - 1)});
                break;
            case SeedLayout::kStrip:
                // A glued face lists the shared edge first.
                steps.push_back({i - 1, static_cast<uint32_t>(r / 2)});
                break;
            case SeedLayout::kStar:
                steps.push_back({0, (i - 1) % static_cast<uint32_t>(r)});
                break;
        }
    }
    return steps;
}

PlanarPatch grow_patch(int r, int s, int seed_faces, int levels, SeedLayout layout, Growth growth) {
    check_tiling(r, s, levels);
    return grow_patch(r, s, seed_layout(r, s, seed_faces, layout), levels, growth);
}

PlanarCode carve_boundaries(const PlanarPatch &patch, const CarveOptions &options) {
    const size_t regions = options.regions;
    if (regions < 3) {
        throw Error(ErrorCode::kInvalidArgument, "need at least 3 rough/smooth pairs");
    }
    const size_t nb = patch.boundary.size();
    const size_t arcs = 2 * regions;
    const size_t base = nb / arcs;
    if (base < 2) {
        throw Error(ErrorCode::kRegionTooShort, std::to_string(nb) + " boundary edges cannot form " +
                                                    std::to_string(arcs) + " arcs of at least 2 edges");
    }
    const size_t extra = nb % arcs;

    PlanarCode out;
    size_t pos = options.offset % nb;
    for (size_t i = 0; i < arcs; ++i) {
        size_t len = base + (i < extra ? 1 : 0);
        out.arcs.emplace_back(pos, len);
        out.arc_rough.push_back((i % 2 == 0) == options.first_rough);
        pos = (pos + len) % nb;
    }

    const auto degree = patch.vertex_degrees();
    std::vector<bool> removed(patch.num_vertices, false);
    for (size_t i = 0; i < arcs; ++i) {
        if (!out.arc_rough[i]) {
            continue;
        }
        const auto [begin, len] = out.arcs[i];
        auto vertex_at = [&](size_t q) { return patch.boundary_vertices[(begin + q) % nb]; };
        auto edge_at = [&](size_t q) { return patch.boundary[(begin + q) % nb]; };
        std::vector<size_t> picked;
        const size_t lo = options.strip_arc_ends ? 0 : 1;
        const size_t hi = options.strip_arc_ends ? len : len - 1;
        for (size_t q = lo; q <= hi; ++q) {
            if (degree[vertex_at(q)] == 2) {
                picked.push_back(q);
            }
        }
        if (picked.empty()) {
            // No weight-2 checks here: strip the whole arc interior instead.
            for (size_t q = 1; q < len; ++q) {
                picked.push_back(q);
            }
        }
        for (size_t q : picked) {
            removed[vertex_at(q)] = true;
        }
        // A retained check between two stripped ones would let a Z string end
        // inside the arc; the path through it becomes a stabilizer.
        for (size_t a = 0; a + 1 < picked.size(); ++a) {
            if (picked[a + 1] - picked[a] > 1) {
                std::vector<uint32_t> path;
                for (size_t q = picked[a]; q < picked[a + 1]; ++q) {
                    path.push_back(edge_at(q));
                }
                out.added_z_checks.push_back(std::move(path));
            }
        }
    }

    std::vector<uint32_t> face_count(patch.num_edges(), 0);
    for (const auto &es : patch.face_edges) {
        for (uint32_t e : es) {
            ++face_count[e];
        }
    }
    std::vector<int64_t> qubit_of(patch.num_edges(), -1);
    for (uint32_t e = 0; e < patch.num_edges(); ++e) {
        const auto &ends = patch.edge_ends[e];
        if (removed[ends[0]] && removed[ends[1]] && face_count[e] == 1) {
            out.removed_edges.push_back(e);
            continue;
        }
        qubit_of[e] = static_cast<int64_t>(out.qubit_edges.size());
        out.qubit_edges.push_back(e);
    }
    for (uint32_t v = 0; v < patch.num_vertices; ++v) {
        if (removed[v]) {
            out.removed_vertices.push_back(v);
        }
    }

    auto restrict_to_qubits = [&](const std::vector<uint32_t> &edges) {
        std::vector<uint32_t> row;
        for (uint32_t e : edges) {
            if (qubit_of[e] >= 0) {
                row.push_back(static_cast<uint32_t>(qubit_of[e]));
            }
        }
        std::sort(row.begin(), row.end());
        return row;
    };
    std::vector<std::vector<uint32_t>> stars(patch.num_vertices);
    for (uint32_t e = 0; e < patch.num_edges(); ++e) {
        stars[patch.edge_ends[e][0]].push_back(e);
        stars[patch.edge_ends[e][1]].push_back(e);
    }
    std::vector<std::vector<uint32_t>> x_rows;
    for (uint32_t v = 0; v < patch.num_vertices; ++v) {
        if (removed[v]) {
            continue;
        }
        auto row = restrict_to_qubits(stars[v]);
        if (!row.empty()) {
            x_rows.push_back(std::move(row));
            out.x_check_vertices.push_back(v);
        }
    }
    std::vector<std::vector<uint32_t>> z_rows;
    for (const auto &es : patch.face_edges) {
        auto row = restrict_to_qubits(es);
        if (!row.empty()) {
            z_rows.push_back(std::move(row));
        }
    }
    for (const auto &es : out.added_z_checks) {
        z_rows.push_back(restrict_to_qubits(es));
    }
    const size_t n = out.qubit_edges.size();
    out.code = CssCode::from_checks(BitMatrix::from_rows(n, x_rows), BitMatrix::from_rows(n, z_rows));
    return out;
}

BoundReport boundary_bound_report(const CssCode &code, size_t d) {
    BoundReport rep;
    rep.n = code.n;
    rep.k = code.k;
    rep.d = code.k == 0 ? 0 : d;
    rep.kd_over_n = code.n == 0 ? 0 : static_cast<double>(rep.k * rep.d) / static_cast<double>(code.n);
    return rep;
}

const std::vector<PlanarPreset> &planar_presets() {
    static const std::vector<PlanarPreset> presets = {
        // Five pentagons around a vertex plus one reflected level: 60 boundary
        // edges in 10 arcs of 6. Encodes [[65,4,4]]; X distance 4.
        {"55-65", 5, 5, 5, 2, SeedLayout::kFan, Growth::kReflect, CarveOptions{5, 1, true, true}},
        // Same patch with the arcs shifted by one edge: [[70,4,4]], X distance 5.
        {"55-70", 5, 5, 5, 2, SeedLayout::kFan, Growth::kReflect, CarveOptions{5, 0, true, true}},
    };
    return presets;
}

const PlanarPreset &find_preset(const std::string &name) {
    for (const auto &p : planar_presets()) {
        if (p.name == name) {
            return p;
        }
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown planar preset '" + name + "'");
}

}  // namespace hypsurf
