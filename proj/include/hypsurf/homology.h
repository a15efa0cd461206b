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

#ifndef HYPSURF_HOMOLOGY_H
#define HYPSURF_HOMOLOGY_H

#include "hypsurf/bitmatrix.h"
#include "hypsurf/tiling.h"

namespace hypsurf {

/// Edges x faces; column f marks the edges around face f.
BitMatrix boundary2(const Tiling &t);

/// Vertices x edges; column e marks the two endpoints of edge e.
BitMatrix boundary1(const Tiling &t);

/// dim H_1 = E - rank(boundary1) - rank(boundary2).
size_t first_betti_number(const Tiling &t);

}  // namespace hypsurf

#endif
