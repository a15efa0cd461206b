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

#ifndef HYPSURF_DISTANCE_H
#define HYPSURF_DISTANCE_H

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hypsurf/bitmatrix.h"
#include "hypsurf/csscode.h"

namespace hypsurf {

/// Graph whose nodes are checks and whose edges are qubits, built from a check
/// matrix in which every column has weight exactly two (the 1-skeleton for
/// h_x, the dual 1-skeleton for h_z).
class CheckGraph {
   public:
    struct Arc {
        uint32_t to;
        uint32_t edge;
    };

    static CheckGraph from_checks(const BitMatrix &checks);

    size_t num_nodes() const {
        return adjacency_.size();
    }
    size_t num_edges() const {
        return ends_.size();
    }
    const std::array<uint32_t, 2> &ends(uint32_t edge) const {
        return ends_[edge];
    }
    /// Arcs sorted by (to, edge).
    const std::vector<Arc> &arcs(uint32_t node) const {
        return adjacency_[node];
    }

   private:
    std::vector<std::array<uint32_t, 2>> ends_;
    std::vector<std::vector<Arc>> adjacency_;
};

/// Two copies of a CheckGraph in which every edge in the cocycle's support
/// joins the copies crosswise. Node v of copy c has index v + c * num_nodes.
struct DoubledGraph {
    size_t num_nodes = 0;
    std::vector<std::array<uint32_t, 2>> edges;
    std::vector<uint32_t> source_edge;
    size_t crossing_edges = 0;
};

DoubledGraph doubled_graph(const CheckGraph &graph, const Chain &cocycle);

/// A shortest cycle with odd overlap with `cocycle`, found as the shortest
/// v -> v' path in the doubled graph over base points v on cut edges.
/// Returns nullopt if none exists or none is shorter than `bound`.
std::optional<Chain> shortest_odd_cycle(const CheckGraph &graph, const Chain &cocycle,
                                        size_t bound = SIZE_MAX);

struct CycleResult {
    size_t length = 0;
    Chain witness;
};

/// Shortest homologically non-trivial cycle of the primal lattice (minimum
/// weight Z logical). Throws Error(kNoNontrivialCycle) if k == 0.
CycleResult systole(const CssCode &code);
/// Same on the dual lattice (minimum weight X logical).
CycleResult cosystole(const CssCode &code);
/// min(systole, cosystole).
size_t code_distance(const CssCode &code);

/// Exhaustive search of Z-type chains (checks = h_x, trivial = rowspace h_z) or
/// X-type chains up to `w_max`. Throws Error(kBudgetExceeded) before a weight
/// level whose C(n, w) exceeds `budget`.
enum class Species { kX, kZ };
inline constexpr double kDefaultBruteForceBudget = 2e9;
std::optional<size_t> brute_force_species_distance(const CssCode &code, Species species, size_t w_max,
                                                   double budget = kDefaultBruteForceBudget);
std::optional<size_t> brute_force_distance(const CssCode &code, size_t w_max,
                                           double budget = kDefaultBruteForceBudget);

struct LogicalSpectrum {
    /// weight -> count, for the Z (cycle) and X (cocycle) logical bases.
    std::map<size_t, size_t> z;
    std::map<size_t, size_t> x;
    std::vector<Chain> z_basis;
    std::vector<Chain> x_basis;
};

/// Greedy minimum-weight logical bases: repeatedly take the lightest cycle
/// whose class is independent of those already chosen (ties: lexicographic
/// support). Throws Error(kNoNontrivialCycle) if k == 0.
LogicalSpectrum logical_weight_spectrum(const CssCode &code);

}  // namespace hypsurf

#endif
