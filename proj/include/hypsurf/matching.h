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

#ifndef HYPSURF_MATCHING_H
#define HYPSURF_MATCHING_H

#include <cstdint>
#include <utility>
#include <vector>

namespace hypsurf {

struct WeightedEdge {
    uint32_t u;
    uint32_t v;
    int64_t weight;
};

/// Maximum-weight matching in a general graph by Edmonds' blossom algorithm
/// with primal-dual updates, O(n^3). With `max_cardinality`, the maximum weight
/// among maximum-cardinality matchings. Returns mate[v] or -1.
std::vector<int32_t> max_weight_matching(size_t num_nodes, const std::vector<WeightedEdge> &edges,
                                         bool max_cardinality);

/// Complete graph on an even number of nodes with symmetric non-negative
/// integer weights, stored row-major.
class MatchingProblem {
   public:
    explicit MatchingProblem(size_t num_nodes) : n_(num_nodes), w_(num_nodes * num_nodes, 0) {
    }
    size_t size() const {
        return n_;
    }
    int64_t weight(size_t i, size_t j) const {
        return w_[i * n_ + j];
    }
    void set_weight(size_t i, size_t j, int64_t w) {
        w_[i * n_ + j] = w;
        w_[j * n_ + i] = w;
    }

   private:
    size_t n_;
    std::vector<int64_t> w_;
};

struct Pairing {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    int64_t total_weight = 0;
};

/// Exact minimum-weight perfect matching. Throws Error(kOddSyndrome) for an odd
/// node count.
Pairing mwpm(const MatchingProblem &problem);

}  // namespace hypsurf

#endif
