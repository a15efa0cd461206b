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

#ifndef HYPSURF_PLANAR_H
#define HYPSURF_PLANAR_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hypsurf/csscode.h"

namespace hypsurf {

/// How the first-level faces are arranged.
///   kFan: consecutive faces around one vertex (at most s).
///   kStrip: each face glued to the previous one across the edge
///           floor(r/2) steps after the shared edge.
///   kStar: a central face with neighbours across its consecutive edges.
enum class SeedLayout { kFan, kStrip, kStar };

/// How level m + 1 is grown from level m.
///   kReflect: the face across every boundary edge.
///   kRotate: every missing face around every boundary vertex.
enum class Growth { kReflect, kRotate };

/// Level-1 face number i+1 is glued to face `face` across its edge `edge`
/// (index into that face's cyclic edge list). Face 0 always exists.
struct SeedStep {
    uint32_t face = 0;
    uint32_t edge = 0;
};

/// A finite disc cut out of the {r,s} tiling. Vertices, edges and faces are
/// numbered in creation order; face corners and edges are listed in cyclic
/// order with edge i joining corner i to corner i+1.
struct PlanarPatch {
    int r = 0;
    int s = 0;
    size_t num_vertices = 0;
    std::vector<std::array<uint32_t, 2>> edge_ends;
    std::vector<std::vector<uint32_t>> face_vertices;
    std::vector<std::vector<uint32_t>> face_edges;
    std::vector<int> face_level;
    /// Edges with one incident face, in cyclic order around the outer face.
    std::vector<uint32_t> boundary;
    /// boundary_vertices[i] is shared by boundary[i-1] and boundary[i].
    std::vector<uint32_t> boundary_vertices;

    size_t num_edges() const {
        return edge_ends.size();
    }
    size_t num_faces() const {
        return face_edges.size();
    }
    std::vector<uint32_t> vertex_degrees() const;
    /// Star X-checks on vertices, plaquette Z-checks on faces; encodes nothing.
    CssCode code() const;
};

/// Grows `levels` levels of faces: level 1 is the seed layout, each further
/// level is added by `growth`.
PlanarPatch grow_patch(int r, int s, int seed_faces, int levels, SeedLayout layout = SeedLayout::kFan,
                       Growth growth = Growth::kReflect);
PlanarPatch grow_patch(int r, int s, const std::vector<SeedStep> &seed, int levels,
                       Growth growth = Growth::kReflect);
std::vector<SeedStep> seed_layout(int r, int s, int seed_faces, SeedLayout layout);

struct CarveOptions {
    /// Number of rough/smooth pairs; the result encodes regions - 1 qubits.
    size_t regions = 3;
    /// Boundary position at which arc 0 starts.
    size_t offset = 0;
    /// Whether arc 0 is rough (arcs alternate).
    bool first_rough = true;
    /// Also strip weight-2 X-checks at the two ends of a rough arc.
    bool strip_arc_ends = true;
};

struct PlanarCode {
    CssCode code;
    /// Patch edge of each qubit.
    std::vector<uint32_t> qubit_edges;
    /// Patch vertex of each X-check.
    std::vector<uint32_t> x_check_vertices;
    /// Boundary positions [begin, begin + length) modulo |boundary|.
    std::vector<std::pair<size_t, size_t>> arcs;
    std::vector<bool> arc_rough;
    std::vector<uint32_t> removed_vertices;
    std::vector<uint32_t> removed_edges;
    /// Extra Z checks as patch edge lists.
    std::vector<std::vector<uint32_t>> added_z_checks;
};

/// Splits the boundary into 2 * regions arcs of floor(|boundary| / (2 regions))
/// edges, the remainder going one per arc from arc 0, and turns every other arc
/// into a rough boundary. Throws Error(kRegionTooShort) if an arc would have
/// fewer than two edges, Error(kInvalidArgument) if regions < 3.
PlanarCode carve_boundaries(const PlanarPatch &patch, const CarveOptions &options);

struct BoundReport {
    size_t n = 0;
    size_t k = 0;
    size_t d = 0;
    double kd_over_n = 0;
};

/// k d / n for a code with boundaries (informational).
BoundReport boundary_bound_report(const CssCode &code, size_t d);

/// A named set of growth and carving parameters.
struct PlanarPreset {
    std::string name;
    int r = 0;
    int s = 0;
    int seed_faces = 1;
    int levels = 1;
    SeedLayout layout = SeedLayout::kFan;
    Growth growth = Growth::kReflect;
    CarveOptions carve;

    PlanarPatch patch() const {
        return grow_patch(r, s, seed_faces, levels, layout, growth);
    }
};

const std::vector<PlanarPreset> &planar_presets();
/// Throws Error(kInvalidArgument) for an unknown name.
const PlanarPreset &find_preset(const std::string &name);

}  // namespace hypsurf

#endif
