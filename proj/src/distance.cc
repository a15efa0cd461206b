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

#include "hypsurf/distance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "hypsurf/error.h"

namespace hypsurf {

CheckGraph CheckGraph::from_checks(const BitMatrix &checks) {
    CheckGraph g;
    g.adjacency_.resize(checks.rows());
    auto cols = checks.col_supports();
    for (size_t e = 0; e < cols.size(); ++e) {
        if (cols[e].size() != 2) {
            throw Error(ErrorCode::kInvalidArgument, "qubit " + std::to_string(e) + " is in " +
                                                         std::to_string(cols[e].size()) +
                                                         " checks; a check graph needs exactly 2");
        }
        g.ends_.push_back({cols[e][0], cols[e][1]});
        auto edge = static_cast<uint32_t>(e);
        g.adjacency_[cols[e][0]].push_back({cols[e][1], edge});
        g.adjacency_[cols[e][1]].push_back({cols[e][0], edge});
    }
    for (auto &arcs : g.adjacency_) {
        std::sort(arcs.begin(), arcs.end(),
                  [](const Arc &a, const Arc &b) { return a.to != b.to ? a.to < b.to : a.edge < b.edge; });
    }
    return g;
}

DoubledGraph doubled_graph(const CheckGraph &graph, const Chain &cocycle) {
    DoubledGraph d;
    const auto n = static_cast<uint32_t>(graph.num_nodes());
    d.num_nodes = 2 * graph.num_nodes();
    for (uint32_t e = 0; e < graph.num_edges(); ++e) {
        auto [u, v] = graph.ends(e);
        if (cocycle.get(e)) {
            d.edges.push_back({u, v + n});
            d.edges.push_back({u + n, v});
            d.crossing_edges += 2;
        } else {
            d.edges.push_back({u, v});
            d.edges.push_back({u + n, v + n});
        }
        d.source_edge.push_back(e);
        d.source_edge.push_back(e);
    }
    return d;
}

namespace {

// BFS over the doubled graph without materialising it.
class DoubledSearch {
   public:
    explicit DoubledSearch(const CheckGraph &graph)
        : graph_(graph), n_(graph.num_nodes()), stamp_(2 * n_, 0), dist_(2 * n_), parent_(2 * n_) {
    }

    // Walk of length <= limit from (v, 0) to (v, 1), projected to a chain.
    std::optional<Chain> search(uint32_t v, const Chain &cocycle, size_t limit) {
        ++epoch_;
        queue_.clear();
        visit(v, 0, {UINT32_MAX, UINT32_MAX});
        const size_t target = v + n_;
        for (size_t head = 0; head < queue_.size(); ++head) {
            size_t node = queue_[head];
            if (node == target) {
                return trace(target, v);
            }
            if (dist_[node] >= limit) {
                continue;
            }
            size_t layer = node >= n_ ? 1 : 0;
            auto base = static_cast<uint32_t>(node - layer * n_);
            for (const auto &arc : graph_.arcs(base)) {
                size_t next_layer = cocycle.get(arc.edge) ? 1 - layer : layer;
                size_t next = arc.to + next_layer * n_;
                if (stamp_[next] != epoch_) {
                    visit(next, dist_[node] + 1, {static_cast<uint32_t>(node), arc.edge});
                }
            }
        }
        return std::nullopt;
    }

   private:
    void visit(size_t node, size_t d, std::pair<uint32_t, uint32_t> parent) {
        stamp_[node] = epoch_;
        dist_[node] = d;
        parent_[node] = parent;
        queue_.push_back(node);
    }

    Chain trace(size_t node, size_t source) const {
        Chain c(graph_.num_edges());
        while (node != source) {
            auto [prev, edge] = parent_[node];
            c.flip(edge);
            node = prev;
        }
        return c;
    }

    const CheckGraph &graph_;
    size_t n_;
    uint64_t epoch_ = 0;
    std::vector<uint64_t> stamp_;
    std::vector<size_t> dist_;
    std::vector<std::pair<uint32_t, uint32_t>> parent_;
    std::vector<size_t> queue_;
};

bool better(const Chain &candidate, const std::optional<Chain> &best) {
    if (!best) {
        return true;
    }
    size_t a = candidate.popcount();
    size_t b = best->popcount();
    return a != b ? a < b : candidate.support_less(*best);
}

std::optional<Chain> shortest_odd_cycle_impl(DoubledSearch &search, const CheckGraph &graph, const Chain &cocycle,
                                             size_t bound) {
    std::vector<uint32_t> base_points;
    for (uint32_t e : cocycle.support()) {
        auto [u, v] = graph.ends(e);
        base_points.push_back(u);
        base_points.push_back(v);
    }
    std::sort(base_points.begin(), base_points.end());
    base_points.erase(std::unique(base_points.begin(), base_points.end()), base_points.end());

    std::optional<Chain> best;
    size_t limit = bound == SIZE_MAX ? SIZE_MAX : bound;
    for (uint32_t v : base_points) {
        auto found = search.search(v, cocycle, limit);
        if (found && found->dot(cocycle) && better(*found, best)) {
            limit = found->popcount();
            best = std::move(found);
        }
    }
    return best;
}

CycleResult min_over_cocycles(const BitMatrix &checks, const std::vector<Chain> &cocycles) {
    if (cocycles.empty()) {
        throw Error(ErrorCode::kNoNontrivialCycle, "the code encodes no logical qubits");
    }
    CheckGraph graph = CheckGraph::from_checks(checks);
    DoubledSearch search(graph);
    std::optional<Chain> best;
    for (const Chain &b : cocycles) {
        size_t bound = best ? best->popcount() : SIZE_MAX;
        auto found = shortest_odd_cycle_impl(search, graph, b, bound);
        if (found && better(*found, best)) {
            best = std::move(found);
        }
    }
    if (!best) {
        throw Error(ErrorCode::kNoNontrivialCycle, "no cycle pairs oddly with the cocycle basis");
    }
    return {best->popcount(), *best};
}

}  // namespace

std::optional<Chain> shortest_odd_cycle(const CheckGraph &graph, const Chain &cocycle, size_t bound) {
    DoubledSearch search(graph);
    return shortest_odd_cycle_impl(search, graph, cocycle, bound);
}

CycleResult systole(const CssCode &code) {
    return min_over_cocycles(code.h_x, code.logical_x);
}

CycleResult cosystole(const CssCode &code) {
    return min_over_cocycles(code.h_z, code.logical_z);
}

size_t code_distance(const CssCode &code) {
    return std::min(systole(code).length, cosystole(code).length);
}

namespace {

double binomial(size_t n, size_t k) {
    if (k > n) {
        return 0;
    }
    return std::exp(std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
                    std::lgamma(static_cast<double>(n - k) + 1));
}

// Enumerates weight-w chains with zero syndrome, in increasing lexicographic
// order of support, testing each against the stabilizer row space.
class ExhaustiveSearch {
   public:
    ExhaustiveSearch(const BitMatrix &checks, const BitMatrix &stabilizers)
        : n_(checks.cols()), checks_(checks.rows()), trivial_(checks.cols()) {
        for (size_t r = 0; r < stabilizers.rows(); ++r) {
            trivial_.insert(stabilizers.row(r));
        }
        auto cols = checks.col_supports();
        for (size_t c = 0; c < n_; ++c) {
            columns_.push_back(BitVec::from_support(checks.rows(), cols[c]));
            max_col_weight_ = std::max(max_col_weight_, cols[c].size());
            by_syndrome_[cols[c]].push_back(static_cast<uint32_t>(c));
        }
    }

    bool has_logical_of_weight(size_t w) {
        chosen_.clear();
        BitVec syndrome(checks_);
        return recurse(0, w, syndrome);
    }

   private:
    struct VecHash {
        size_t operator()(const std::vector<uint32_t> &v) const {
            size_t h = v.size();
            for (uint32_t x : v) {
                h = h * 1000003u ^ x;
            }
            return h;
        }
    };

    bool nontrivial() const {
        BitVec c(n_);
        for (uint32_t i : chosen_) {
            c.set(i);
        }
        return !trivial_.in_span(c);
    }

    bool recurse(size_t start, size_t remaining, BitVec &syndrome) {
        if (remaining == 1) {
            auto it = by_syndrome_.find(syndrome.support());
            if (it == by_syndrome_.end()) {
                return false;
            }
            for (uint32_t c : it->second) {
                if (c < start) {
                    continue;
                }
                chosen_.push_back(c);
                bool ok = nontrivial();
                chosen_.pop_back();
                if (ok) {
                    return true;
                }
            }
            return false;
        }
        if (syndrome.popcount() > remaining * max_col_weight_) {
            return false;
        }
        for (size_t c = start; c + remaining <= n_; ++c) {
            syndrome ^= columns_[c];
            chosen_.push_back(static_cast<uint32_t>(c));
            bool found = recurse(c + 1, remaining - 1, syndrome);
            chosen_.pop_back();
            syndrome ^= columns_[c];
            if (found) {
                return true;
            }
        }
        return false;
    }

    size_t n_;
    size_t checks_;
    RowReducer trivial_;
    std::vector<BitVec> columns_;
    size_t max_col_weight_ = 0;
    std::unordered_map<std::vector<uint32_t>, std::vector<uint32_t>, VecHash> by_syndrome_;
    std::vector<uint32_t> chosen_;
};

void check_budget(size_t n, size_t w, double budget) {
    double count = binomial(n, w);
    if (count > budget) {
        throw Error(ErrorCode::kBudgetExceeded, "C(" + std::to_string(n) + ", " + std::to_string(w) +
                                                    ") exceeds the search budget");
    }
}

}  // namespace

std::optional<size_t> brute_force_species_distance(const CssCode &code, Species species, size_t w_max,
                                                   double budget) {
    if (code.k == 0) {
        return std::nullopt;
    }
    const BitMatrix &checks = species == Species::kZ ? code.h_x : code.h_z;
    const BitMatrix &stabilizers = species == Species::kZ ? code.h_z : code.h_x;
    ExhaustiveSearch search(checks, stabilizers);
    for (size_t w = 1; w <= std::min(w_max, code.n); ++w) {
        check_budget(code.n, w, budget);
        if (search.has_logical_of_weight(w)) {
            return w;
        }
    }
    return std::nullopt;
}

std::optional<size_t> brute_force_distance(const CssCode &code, size_t w_max, double budget) {
    if (code.k == 0) {
        return std::nullopt;
    }
    ExhaustiveSearch z_search(code.h_x, code.h_z);
    ExhaustiveSearch x_search(code.h_z, code.h_x);
    for (size_t w = 1; w <= std::min(w_max, code.n); ++w) {
        check_budget(code.n, w, budget);
        if (z_search.has_logical_of_weight(w) || x_search.has_logical_of_weight(w)) {
            return w;
        }
    }
    return std::nullopt;
}

namespace {

// Greedy minimum-weight basis of the cycle classes of `checks`, using the
// paired cocycle basis to detect independence: a cycle is independent of the
// chosen ones iff it pairs oddly with some cocycle annihilating all of them.
std::vector<Chain> greedy_basis(const BitMatrix &checks, const std::vector<Chain> &paired_cocycles) {
    const size_t k = paired_cocycles.size();
    if (k == 0) {
        throw Error(ErrorCode::kNoNontrivialCycle, "the code encodes no logical qubits");
    }
    CheckGraph graph = CheckGraph::from_checks(checks);
    DoubledSearch search(graph);
    std::vector<Chain> chosen;
    BitMatrix classes(0, k);
    while (chosen.size() < k) {
        std::optional<Chain> best;
        for (const Chain &coeffs : kernel_basis(classes)) {
            Chain cocycle(checks.cols());
            for (uint32_t i : coeffs.support()) {
                cocycle ^= paired_cocycles[i];
            }
            size_t bound = best ? best->popcount() : SIZE_MAX;
            auto found = shortest_odd_cycle_impl(search, graph, cocycle, bound);
            if (found && better(*found, best)) {
                best = std::move(found);
            }
        }
        if (!best) {
            throw Error(ErrorCode::kNoNontrivialCycle, "ran out of independent cycles");
        }
        BitVec cls(k);
        for (size_t i = 0; i < k; ++i) {
            cls.set(i, best->dot(paired_cocycles[i]));
        }
        classes.append_row(std::move(cls));
        chosen.push_back(std::move(*best));
    }
    return chosen;
}

}  // namespace

LogicalSpectrum logical_weight_spectrum(const CssCode &code) {
    LogicalSpectrum spec;
    spec.z_basis = greedy_basis(code.h_x, code.logical_x);
    spec.x_basis = greedy_basis(code.h_z, code.logical_z);
    for (const auto &c : spec.z_basis) {
        ++spec.z[c.popcount()];
    }
    for (const auto &c : spec.x_basis) {
        ++spec.x[c.popcount()];
    }
    return spec;
}

}  // namespace hypsurf
