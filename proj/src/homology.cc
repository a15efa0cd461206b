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

#include "hypsurf/homology.h"

namespace hypsurf {

BitMatrix boundary2(const Tiling &t) {
    BitMatrix m(t.num_edges(), t.num_faces());
    for (size_t f = 0; f < t.num_faces(); ++f) {
        for (uint32_t e : t.face_edges[f]) {
            m.set(e, f, !m.get(e, f));
        }
    }
    return m;
}

BitMatrix boundary1(const Tiling &t) {
    BitMatrix m(t.num_vertices(), t.num_edges());
    for (size_t e = 0; e < t.num_edges(); ++e) {
        for (uint32_t v : t.edge_vertices[e]) {
            m.set(v, e, !m.get(v, e));
        }
    }
    return m;
}

size_t first_betti_number(const Tiling &t) {
    return t.num_edges() - rank(boundary1(t)) - rank(boundary2(t));
}

}  // namespace hypsurf
