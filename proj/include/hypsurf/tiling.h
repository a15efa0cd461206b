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

#ifndef HYPSURF_TILING_H
#define HYPSURF_TILING_H

#include <array>
#include <cstdint>
#include <vector>

#include "hypsurf/fpgroup.h"

namespace hypsurf {

/// A closed {r,s}-tiled surface described by three partitions of the quotient
/// group's elements. Element g lies in face g<rho>, vertex g<sigma> and edge
/// g<rho sigma>; two cells are incident iff their element sets intersect.
///
/// Every cell lists its elements in rotation order (g, g rho, g rho^2, ... for
/// faces), so `face_edges` and `vertex_edges` are cyclically ordered.
struct Tiling {
    int r = 0;
    int s = 0;

    std::vector<std::vector<uint32_t>> faces;
    std::vector<std::vector<uint32_t>> edges;
    std::vector<std::vector<uint32_t>> vertices;

    std::vector<uint32_t> face_of;
    std::vector<uint32_t> edge_of;
    std::vector<uint32_t> vertex_of;

    std::vector<std::array<uint32_t, 2>> edge_faces;
    std::vector<std::array<uint32_t, 2>> edge_vertices;
    std::vector<std::vector<uint32_t>> face_edges;
    std::vector<std::vector<uint32_t>> vertex_edges;

    size_t num_elements() const {
        return face_of.size();
    }
    size_t num_faces() const {
        return faces.size();
    }
    size_t num_edges() const {
        return edges.size();
    }
    size_t num_vertices() const {
        return vertices.size();
    }
    long euler_characteristic() const {
        return static_cast<long>(num_vertices()) - static_cast<long>(num_edges()) +
               static_cast<long>(num_faces());
    }

    bool operator==(const Tiling &other) const = default;
};

/// Throws Error(kDegenerateQuotient) when an orbit is short or an edge has a
/// repeated face or vertex.
Tiling build_tiling(const CosetTable &table, int r, int s);

/// {s,r} tiling with faces and vertices exchanged; edges keep their indices.
Tiling dual(const Tiling &tiling);

/// Combinatorial L x L square grid on the torus, expressed as the rotation
/// action on its 4L^2 darts so it shares the group-based pipeline.
CosetTable toric_table(int L);
Tiling build_toric(int L);

}  // namespace hypsurf

#endif
