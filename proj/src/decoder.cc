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

#include "hypsurf/decoder.h"

#include <algorithm>
#include <string>

#include "hypsurf/error.h"
#include "hypsurf/matching.h"

namespace hypsurf {

namespace {

const BitMatrix &checks_for(const CssCode &code, Species species) {
    return species == Species::kZ ? code.h_x : code.h_z;
}

constexpr uint32_t kUnreached = UINT32_MAX;

}  // namespace

Syndrome syndrome_of(const CssCode &code, const ErrorChain &e) {
    Syndrome s;
    s.species = e.species;
    s.nodes = checks_for(code, e.species).multiply(e.support).support();
    return s;
}

Decoder::Decoder(const CssCode &code, Species species)
    : code_(&code),
      species_(species),
      graph_(CheckGraph::from_checks(checks_for(code, species))),
      opposite_logicals_(species == Species::kZ ? &code.logical_x : &code.logical_z) {
    const size_t v = graph_.num_nodes();
    seen_.assign(v, 0);
    want_.assign(v, 0);
    dist_.assign(v, 0);
    parent_edge_.assign(v, 0);
    queue_.reserve(v);
}

Syndrome Decoder::syndrome_of(const Chain &e) const {
    Syndrome s;
    s.species = species_;
    Chain flipped(graph_.num_nodes());
    for (uint32_t q : e.support()) {
        const auto &ends = graph_.ends(q);
        flipped.flip(ends[0]);
        flipped.flip(ends[1]);
    }
    s.nodes = flipped.support();
    return s;
}

void Decoder::next_call_epoch() {
    if (++call_epoch_ == 0) {
        std::fill(want_.begin(), want_.end(), 0);
        call_epoch_ = 1;
    }
}

void Decoder::bfs(uint32_t source, size_t targets) {
    if (++bfs_epoch_ == 0) {
        std::fill(seen_.begin(), seen_.end(), 0);
        bfs_epoch_ = 1;
    }
    queue_.clear();
    queue_.push_back(source);
    seen_[source] = bfs_epoch_;
    dist_[source] = 0;
    size_t found = 0;
    for (size_t head = 0; head < queue_.size() && found < targets; ++head) {
        uint32_t u = queue_[head];
        for (const auto &arc : graph_.arcs(u)) {
            if (seen_[arc.to] == bfs_epoch_) {
                continue;
            }
            seen_[arc.to] = bfs_epoch_;
            dist_[arc.to] = dist_[u] + 1;
            parent_edge_[arc.to] = arc.edge;
            queue_.push_back(arc.to);
            if (want_[arc.to] == call_epoch_) {
                ++found;
            }
        }
    }
}

Chain Decoder::correct(const Syndrome &s) {
    const size_t m = s.nodes.size();
    if (m % 2 != 0) {
        throw Error(ErrorCode::kOddSyndrome, "syndrome has " + std::to_string(m) + " defects");
    }
    Chain r(graph_.num_edges());
    if (m == 0) {
        return r;
    }
    next_call_epoch();
    for (size_t i = 0; i < m; ++i) {
        want_[s.nodes[i]] = call_epoch_;
    }

    // Unreachable pairs get a weight no finite pairing can beat.
    const int64_t far = static_cast<int64_t>(graph_.num_nodes()) * static_cast<int64_t>(m) + 1;
    MatchingProblem problem(m);
    for (size_t i = 0; i + 1 < m; ++i) {
        bfs(s.nodes[i], m - 1);
        for (size_t j = i + 1; j < m; ++j) {
            uint32_t v = s.nodes[j];
            problem.set_weight(i, j, seen_[v] == bfs_epoch_ ? dist_[v] : far);
        }
    }

    Pairing pairing = mwpm(problem);
    for (const auto &[i, j] : pairing.pairs) {
        uint32_t a = s.nodes[i];
        uint32_t b = s.nodes[j];
        next_call_epoch();
        want_[b] = call_epoch_;
        bfs(a, 1);
        if (seen_[b] != bfs_epoch_) {
            throw Error(ErrorCode::kInvalidArgument, "defects lie in different components");
        }
        for (uint32_t v = b; v != a;) {
            uint32_t edge = parent_edge_[v];
            r.flip(edge);
            const auto &ends = graph_.ends(edge);
            v = ends[0] == v ? ends[1] : ends[0];
        }
    }
    return r;
}

bool Decoder::is_success(const Chain &e, const Chain &r) const {
    Chain total = e ^ r;
    if (!syndrome_of(total).empty()) {
        throw Error(ErrorCode::kOpenSyndrome, "error plus correction is not closed");
    }
    for (const Chain &l : *opposite_logicals_) {
        if (total.dot(l)) {
            return false;
        }
    }
    return true;
}

bool Decoder::decode_succeeds(const Chain &e) {
    return is_success(e, correct(syndrome_of(e)));
}

Chain correct(const CssCode &code, const Syndrome &s) {
    return Decoder(code, s.species).correct(s);
}

bool is_success(const CssCode &code, const ErrorChain &e, const ErrorChain &r) {
    if (e.species != r.species) {
        throw Error(ErrorCode::kInvalidArgument, "error and correction of different species");
    }
    Chain total = e.support ^ r.support;
    if (checks_for(code, e.species).multiply(total).any()) {
        throw Error(ErrorCode::kOpenSyndrome, "error plus correction is not closed");
    }
    const auto &logicals = e.species == Species::kZ ? code.logical_x : code.logical_z;
    for (const Chain &l : logicals) {
        if (total.dot(l)) {
            return false;
        }
    }
    return true;
}

}  // namespace hypsurf
