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

#ifndef HYPSURF_DECODER_H
#define HYPSURF_DECODER_H

#include <cstdint>
#include <vector>

#include "hypsurf/bitmatrix.h"
#include "hypsurf/csscode.h"
#include "hypsurf/distance.h"

namespace hypsurf {

/// Pauli errors of one species on the qubits. Z errors are seen by the X checks
/// (vertices of the tiling), X errors by the Z checks (faces, i.e. vertices of
/// the dual).
struct ErrorChain {
    Chain support;
    Species species = Species::kZ;
};

/// Sorted indices of the flipped checks.
struct Syndrome {
    std::vector<uint32_t> nodes;
    Species species = Species::kZ;

    bool empty() const {
        return nodes.empty();
    }
};

Syndrome syndrome_of(const CssCode &code, const ErrorChain &e);

/// Matching decoder for one species. Holds BFS scratch space, so use one
/// instance per thread; copies are independent.
class Decoder {
   public:
    Decoder(const CssCode &code, Species species);

    Species species() const {
        return species_;
    }
    const CheckGraph &graph() const {
        return graph_;
    }

    Syndrome syndrome_of(const Chain &e) const;
    /// Lowest-weight-pairing correction: the sum of shortest paths between
    /// matched defects. Throws Error(kOddSyndrome) for an odd defect count.
    Chain correct(const Syndrome &s);
    /// Whether e + r is a boundary. Throws Error(kOpenSyndrome) unless e + r
    /// is a cycle.
    bool is_success(const Chain &e, const Chain &r) const;
    /// Convenience: decode e and report success.
    bool decode_succeeds(const Chain &e);

   private:
    // BFS from `source` that stops once `targets` wanted nodes are reached.
    void bfs(uint32_t source, size_t targets);
    void next_call_epoch();

    const CssCode *code_;
    Species species_;
    CheckGraph graph_;
    const std::vector<Chain> *opposite_logicals_;

    std::vector<uint32_t> seen_;
    std::vector<uint32_t> want_;
    std::vector<uint32_t> dist_;
    std::vector<uint32_t> parent_edge_;
    std::vector<uint32_t> queue_;
    uint32_t bfs_epoch_ = 0;
    uint32_t call_epoch_ = 0;
};

Chain correct(const CssCode &code, const Syndrome &s);
bool is_success(const CssCode &code, const ErrorChain &e, const ErrorChain &r);

}  // namespace hypsurf

#endif
