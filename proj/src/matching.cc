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

#include "hypsurf/matching.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hypsurf/error.h"

namespace hypsurf {

namespace {

// Edge k has endpoints 2k and 2k+1; endpoint_[p] is the node at endpoint p
// and p ^ 1 is the opposite end. Nodes are 0..n-1, non-trivial blossoms
// n..2n-1. Labels: 0 free, 1 S (outer), 2 T (inner); bit 4 marks a blossom
// during scan_blossom.
class BlossomMatcher {
   public:
    BlossomMatcher(size_t n, const std::vector<WeightedEdge> &edges, bool max_cardinality)
        : n_(static_cast<int>(n)), edges_(edges), max_cardinality_(max_cardinality) {
        const int m = static_cast<int>(edges_.size());
        int64_t max_weight = 0;
        for (const auto &e : edges_) {
            if (e.u >= n || e.v >= n || e.u == e.v) {
                throw std::invalid_argument("bad matching edge");
            }
            max_weight = std::max(max_weight, e.weight);
        }
        endpoint_.resize(2 * static_cast<size_t>(m));
        for (int p = 0; p < 2 * m; ++p) {
            const auto &e = edges_[static_cast<size_t>(p / 2)];
            endpoint_[static_cast<size_t>(p)] = static_cast<int>(p % 2 == 0 ? e.u : e.v);
        }
        neighbend_.resize(n);
        for (int k = 0; k < m; ++k) {
            neighbend_[edges_[static_cast<size_t>(k)].u].push_back(2 * k + 1);
            neighbend_[edges_[static_cast<size_t>(k)].v].push_back(2 * k);
        }
        const size_t n2 = 2 * n;
        mate_.assign(n, -1);
        label_.assign(n2, 0);
        labelend_.assign(n2, -1);
        inblossom_.resize(n);
        for (int i = 0; i < n_; ++i) {
            inblossom_[static_cast<size_t>(i)] = i;
        }
        blossomparent_.assign(n2, -1);
        blossomchilds_.assign(n2, {});
        blossombase_.assign(n2, -1);
        for (int i = 0; i < n_; ++i) {
            blossombase_[static_cast<size_t>(i)] = i;
        }
        blossomendps_.assign(n2, {});
        bestedge_.assign(n2, -1);
        blossombestedges_.assign(n2, {});
        has_bestedges_.assign(n2, false);
        for (int b = 2 * n_ - 1; b >= n_; --b) {
            unused_.push_back(b);
        }
        dualvar_.assign(n2, 0);
        for (int i = 0; i < n_; ++i) {
            dualvar_[static_cast<size_t>(i)] = max_weight;
        }
        allowedge_.assign(static_cast<size_t>(m), false);
    }

    std::vector<int32_t> run() {
        for (int stage = 0; stage < n_; ++stage) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = n_; b < 2 * n_; ++b) {
                blossombestedges_[static_cast<size_t>(b)].clear();
                has_bestedges_[static_cast<size_t>(b)] = false;
            }
            std::fill(allowedge_.begin(), allowedge_.end(), false);
            queue_.clear();
            for (int v = 0; v < n_; ++v) {
                if (mate_[static_cast<size_t>(v)] == -1 && label_[in(v)] == 0) {
                    assign_label(v, 1, -1);
                }
            }
            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    int v = queue_.back();
                    queue_.pop_back();
                    for (int p : neighbend_[static_cast<size_t>(v)]) {
                        int k = p / 2;
                        int w = endpoint_[static_cast<size_t>(p)];
                        if (inblossom_[static_cast<size_t>(v)] == inblossom_[static_cast<size_t>(w)]) {
                            continue;
                        }
                        int64_t kslack = 0;
                        if (!allowedge_[static_cast<size_t>(k)]) {
                            kslack = slack(k);
                            if (kslack <= 0) {
                                allowedge_[static_cast<size_t>(k)] = true;
                            }
                        }
                        if (allowedge_[static_cast<size_t>(k)]) {
                            if (label_[in(w)] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[in(w)] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[static_cast<size_t>(w)] == 0) {
                                label_[static_cast<size_t>(w)] = 2;
                                labelend_[static_cast<size_t>(w)] = p ^ 1;
                            }
                        } else if (label_[in(w)] == 1) {
                            int b = inblossom_[static_cast<size_t>(v)];
                            if (bestedge_[static_cast<size_t>(b)] == -1 ||
                                kslack < slack(bestedge_[static_cast<size_t>(b)])) {
                                bestedge_[static_cast<size_t>(b)] = k;
                            }
                        } else if (label_[static_cast<size_t>(w)] == 0) {
                            if (bestedge_[static_cast<size_t>(w)] == -1 ||
                                kslack < slack(bestedge_[static_cast<size_t>(w)])) {
                                bestedge_[static_cast<size_t>(w)] = k;
                            }
                        }
                    }
                }
                if (augmented) {
                    break;
                }

                int deltatype = -1;
                int64_t delta = 0;
                int deltaedge = -1;
                int deltablossom = -1;
                if (!max_cardinality_) {
                    deltatype = 1;
                    delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
                }
                for (int v = 0; v < n_; ++v) {
                    int be = bestedge_[static_cast<size_t>(v)];
                    if (label_[in(v)] == 0 && be != -1) {
                        int64_t d = slack(be);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = be;
                        }
                    }
                }
                for (int b = 0; b < 2 * n_; ++b) {
                    auto bs = static_cast<size_t>(b);
                    if (blossomparent_[bs] == -1 && label_[bs] == 1 && bestedge_[bs] != -1) {
                        int64_t kslack = slack(bestedge_[bs]);
                        int64_t d = kslack / 2;
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[bs];
                        }
                    }
                }
                for (int b = n_; b < 2 * n_; ++b) {
                    auto bs = static_cast<size_t>(b);
                    if (blossombase_[bs] >= 0 && blossomparent_[bs] == -1 && label_[bs] == 2 &&
                        (deltatype == -1 || dualvar_[bs] < delta)) {
                        delta = dualvar_[bs];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if (deltatype == -1) {
                    deltatype = 1;
                    delta = std::max<int64_t>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
                }

                for (int v = 0; v < n_; ++v) {
                    int lab = label_[in(v)];
                    if (lab == 1) {
                        dualvar_[static_cast<size_t>(v)] -= delta;
                    } else if (lab == 2) {
                        dualvar_[static_cast<size_t>(v)] += delta;
                    }
                }
                for (int b = n_; b < 2 * n_; ++b) {
                    auto bs = static_cast<size_t>(b);
                    if (blossombase_[bs] >= 0 && blossomparent_[bs] == -1) {
                        if (label_[bs] == 1) {
                            dualvar_[bs] += delta;
                        } else if (label_[bs] == 2) {
                            dualvar_[bs] -= delta;
                        }
                    }
                }

                if (deltatype == 1) {
                    break;
                } else if (deltatype == 2) {
                    allowedge_[static_cast<size_t>(deltaedge)] = true;
                    int i = static_cast<int>(edges_[static_cast<size_t>(deltaedge)].u);
                    int j = static_cast<int>(edges_[static_cast<size_t>(deltaedge)].v);
                    if (label_[in(i)] == 0) {
                        std::swap(i, j);
                    }
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[static_cast<size_t>(deltaedge)] = true;
                    queue_.push_back(static_cast<int>(edges_[static_cast<size_t>(deltaedge)].u));
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) {
                break;
            }
            for (int b = n_; b < 2 * n_; ++b) {
                auto bs = static_cast<size_t>(b);
                if (blossomparent_[bs] == -1 && blossombase_[bs] >= 0 && label_[bs] == 1 && dualvar_[bs] == 0) {
                    expand_blossom(b, true);
                }
            }
        }
        std::vector<int32_t> result(static_cast<size_t>(n_), -1);
        for (int v = 0; v < n_; ++v) {
            int p = mate_[static_cast<size_t>(v)];
            if (p >= 0) {
                result[static_cast<size_t>(v)] = endpoint_[static_cast<size_t>(p)];
            }
        }
        return result;
    }

   private:
    size_t in(int v) const {
        return static_cast<size_t>(inblossom_[static_cast<size_t>(v)]);
    }

    int64_t slack(int k) const {
        const auto &e = edges_[static_cast<size_t>(k)];
        return dualvar_[e.u] + dualvar_[e.v] - 2 * e.weight;
    }

    void leaves(int b, std::vector<int> &out) const {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds_[static_cast<size_t>(b)]) {
            leaves(t, out);
        }
    }

    std::vector<int> leaves(int b) const {
        std::vector<int> out;
        leaves(b, out);
        return out;
    }

    void assign_label(int w, int t, int p) {
        while (true) {
            auto b = in(w);
            auto ws = static_cast<size_t>(w);
            label_[ws] = label_[b] = t;
            labelend_[ws] = labelend_[b] = p;
            bestedge_[ws] = bestedge_[b] = -1;
            if (t == 1) {
                leaves(static_cast<int>(b), queue_);
                return;
            }
            int base = blossombase_[b];
            int mp = mate_[static_cast<size_t>(base)];
            w = endpoint_[static_cast<size_t>(mp)];
            t = 1;
            p = mp ^ 1;
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            auto b = in(v);
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            path.push_back(static_cast<int>(b));
            label_[b] = 5;
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[static_cast<size_t>(labelend_[b])];
                auto bt = in(v);
                v = endpoint_[static_cast<size_t>(labelend_[bt])];
            }
            if (w != -1) {
                std::swap(v, w);
            }
        }
        for (int b : path) {
            label_[static_cast<size_t>(b)] = 1;
        }
        return base;
    }

    void add_blossom(int base, int k) {
        int v = static_cast<int>(edges_[static_cast<size_t>(k)].u);
        int w = static_cast<int>(edges_[static_cast<size_t>(k)].v);
        int bb = inblossom_[static_cast<size_t>(base)];
        int bv = inblossom_[static_cast<size_t>(v)];
        int bw = inblossom_[static_cast<size_t>(w)];
        int b = unused_.back();
        unused_.pop_back();
        auto bs = static_cast<size_t>(b);
        blossombase_[bs] = base;
        blossomparent_[bs] = -1;
        blossomparent_[static_cast<size_t>(bb)] = b;
        std::vector<int> path;
        std::vector<int> endps;
        while (bv != bb) {
            blossomparent_[static_cast<size_t>(bv)] = b;
            path.push_back(bv);
            endps.push_back(labelend_[static_cast<size_t>(bv)]);
            v = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bv)])];
            bv = inblossom_[static_cast<size_t>(v)];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[static_cast<size_t>(bw)] = b;
            path.push_back(bw);
            endps.push_back(labelend_[static_cast<size_t>(bw)] ^ 1);
            w = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bw)])];
            bw = inblossom_[static_cast<size_t>(w)];
        }
        blossomchilds_[bs] = path;
        blossomendps_[bs] = endps;
        label_[bs] = 1;
        labelend_[bs] = labelend_[static_cast<size_t>(bb)];
        dualvar_[bs] = 0;
        for (int leaf : leaves(b)) {
            if (label_[in(leaf)] == 2) {
                queue_.push_back(leaf);
            }
            inblossom_[static_cast<size_t>(leaf)] = b;
        }

        std::vector<int> bestedgeto(2 * static_cast<size_t>(n_), -1);
        for (int child : path) {
            auto cs = static_cast<size_t>(child);
            std::vector<int> candidates;
            if (!has_bestedges_[cs]) {
                for (int leaf : leaves(child)) {
                    for (int p : neighbend_[static_cast<size_t>(leaf)]) {
                        candidates.push_back(p / 2);
                    }
                }
            } else {
                candidates = blossombestedges_[cs];
            }
            for (int kk : candidates) {
                int i = static_cast<int>(edges_[static_cast<size_t>(kk)].u);
                int j = static_cast<int>(edges_[static_cast<size_t>(kk)].v);
                if (inblossom_[static_cast<size_t>(j)] == b) {
                    std::swap(i, j);
                }
                int bj = inblossom_[static_cast<size_t>(j)];
                auto bjs = static_cast<size_t>(bj);
                if (bj != b && label_[bjs] == 1 &&
                    (bestedgeto[bjs] == -1 || slack(kk) < slack(bestedgeto[bjs]))) {
                    bestedgeto[bjs] = kk;
                }
            }
            blossombestedges_[cs].clear();
            has_bestedges_[cs] = false;
            bestedge_[cs] = -1;
        }
        blossombestedges_[bs].clear();
        for (int kk : bestedgeto) {
            if (kk != -1) {
                blossombestedges_[bs].push_back(kk);
            }
        }
        has_bestedges_[bs] = true;
        bestedge_[bs] = -1;
        for (int kk : blossombestedges_[bs]) {
            if (bestedge_[bs] == -1 || slack(kk) < slack(bestedge_[bs])) {
                bestedge_[bs] = kk;
            }
        }
    }

    void expand_blossom(int b, bool endstage) {
        auto bs = static_cast<size_t>(b);
        for (int s : blossomchilds_[bs]) {
            blossomparent_[static_cast<size_t>(s)] = -1;
            if (s < n_) {
                inblossom_[static_cast<size_t>(s)] = s;
            } else if (endstage && dualvar_[static_cast<size_t>(s)] == 0) {
                expand_blossom(s, endstage);
            } else {
                for (int leaf : leaves(s)) {
                    inblossom_[static_cast<size_t>(leaf)] = s;
                }
            }
        }
        if (!endstage && label_[bs] == 2) {
            const auto &childs = blossomchilds_[bs];
            const auto &endps = blossomendps_[bs];
            const int len = static_cast<int>(childs.size());
            auto at = [len](int j) { return static_cast<size_t>(((j % len) + len) % len); };
            int entrychild = inblossom_[static_cast<size_t>(
                endpoint_[static_cast<size_t>(labelend_[bs] ^ 1)])];
            int j = static_cast<int>(std::find(childs.begin(), childs.end(), entrychild) - childs.begin());
            int jstep;
            int endptrick;
            if (j & 1) {
                j -= len;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[bs];
            while (j != 0) {
                label_[static_cast<size_t>(endpoint_[static_cast<size_t>(p ^ 1)])] = 0;
                label_[static_cast<size_t>(
                    endpoint_[static_cast<size_t>(endps[at(j - endptrick)] ^ endptrick ^ 1)])] = 0;
                assign_label(endpoint_[static_cast<size_t>(p ^ 1)], 2, p);
                allowedge_[static_cast<size_t>(endps[at(j - endptrick)] / 2)] = true;
                j += jstep;
                p = endps[at(j - endptrick)] ^ endptrick;
                allowedge_[static_cast<size_t>(p / 2)] = true;
                j += jstep;
            }
            int bv = childs[at(j)];
            auto ep = static_cast<size_t>(endpoint_[static_cast<size_t>(p ^ 1)]);
            label_[ep] = label_[static_cast<size_t>(bv)] = 2;
            labelend_[ep] = labelend_[static_cast<size_t>(bv)] = p;
            bestedge_[static_cast<size_t>(bv)] = -1;
            j += jstep;
            while (childs[at(j)] != entrychild) {
                bv = childs[at(j)];
                if (label_[static_cast<size_t>(bv)] == 1) {
                    j += jstep;
                    continue;
                }
                int found = -1;
                for (int leaf : leaves(bv)) {
                    if (label_[static_cast<size_t>(leaf)] != 0) {
                        found = leaf;
                        break;
                    }
                }
                if (found != -1) {
                    label_[static_cast<size_t>(found)] = 0;
                    int mb = mate_[static_cast<size_t>(blossombase_[static_cast<size_t>(bv)])];
                    label_[static_cast<size_t>(endpoint_[static_cast<size_t>(mb)])] = 0;
                    assign_label(found, 2, labelend_[static_cast<size_t>(found)]);
                }
                j += jstep;
            }
        }
        label_[bs] = labelend_[bs] = -1;
        blossomchilds_[bs].clear();
        blossomendps_[bs].clear();
        blossombase_[bs] = -1;
        blossombestedges_[bs].clear();
        has_bestedges_[bs] = false;
        bestedge_[bs] = -1;
        unused_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[static_cast<size_t>(t)] != b) {
            t = blossomparent_[static_cast<size_t>(t)];
        }
        if (t >= n_) {
            augment_blossom(t, v);
        }
        auto bs = static_cast<size_t>(b);
        auto &childs = blossomchilds_[bs];
        auto &endps = blossomendps_[bs];
        const int len = static_cast<int>(childs.size());
        auto at = [len](int j) { return static_cast<size_t>(((j % len) + len) % len); };
        int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
        int j = i;
        int jstep;
        int endptrick;
        if (i & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = childs[at(j)];
            int p = endps[at(j - endptrick)] ^ endptrick;
            if (t >= n_) {
                augment_blossom(t, endpoint_[static_cast<size_t>(p)]);
            }
            j += jstep;
            t = childs[at(j)];
            if (t >= n_) {
                augment_blossom(t, endpoint_[static_cast<size_t>(p ^ 1)]);
            }
            mate_[static_cast<size_t>(endpoint_[static_cast<size_t>(p)])] = p ^ 1;
            mate_[static_cast<size_t>(endpoint_[static_cast<size_t>(p ^ 1)])] = p;
        }
        std::rotate(childs.begin(), childs.begin() + i, childs.end());
        std::rotate(endps.begin(), endps.begin() + i, endps.end());
        blossombase_[bs] = blossombase_[static_cast<size_t>(childs[0])];
    }

    void augment_matching(int k) {
        const int ends[2][2] = {{static_cast<int>(edges_[static_cast<size_t>(k)].u), 2 * k + 1},
                                {static_cast<int>(edges_[static_cast<size_t>(k)].v), 2 * k}};
        for (const auto &sp : ends) {
            int s = sp[0];
            int p = sp[1];
            while (true) {
                int bs = inblossom_[static_cast<size_t>(s)];
                if (bs >= n_) {
                    augment_blossom(bs, s);
                }
                mate_[static_cast<size_t>(s)] = p;
                if (labelend_[static_cast<size_t>(bs)] == -1) {
                    break;
                }
                int t = endpoint_[static_cast<size_t>(labelend_[static_cast<size_t>(bs)])];
                int bt = inblossom_[static_cast<size_t>(t)];
                auto bts = static_cast<size_t>(bt);
                s = endpoint_[static_cast<size_t>(labelend_[bts])];
                int j = endpoint_[static_cast<size_t>(labelend_[bts] ^ 1)];
                if (bt >= n_) {
                    augment_blossom(bt, j);
                }
                mate_[static_cast<size_t>(j)] = labelend_[bts];
                p = labelend_[bts] ^ 1;
            }
        }
    }

    int n_;
    const std::vector<WeightedEdge> &edges_;
    bool max_cardinality_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> blossomparent_;
    std::vector<std::vector<int>> blossomchilds_;
    std::vector<int> blossombase_;
    std::vector<std::vector<int>> blossomendps_;
    std::vector<int> bestedge_;
    std::vector<std::vector<int>> blossombestedges_;
    std::vector<bool> has_bestedges_;
    std::vector<int> unused_;
    std::vector<int64_t> dualvar_;
    std::vector<bool> allowedge_;
    std::vector<int> queue_;
};

}  // namespace

std::vector<int32_t> max_weight_matching(size_t num_nodes, const std::vector<WeightedEdge> &edges,
                                         bool max_cardinality) {
    if (num_nodes == 0) {
        return {};
    }
    return BlossomMatcher(num_nodes, edges, max_cardinality).run();
}

Pairing mwpm(const MatchingProblem &problem) {
    const size_t n = problem.size();
    if (n % 2 != 0) {
        throw Error(ErrorCode::kOddSyndrome, "perfect matching needs an even node count, got " + std::to_string(n));
    }
    Pairing out;
    if (n == 0) {
        return out;
    }
    int64_t max_w = 0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            max_w = std::max(max_w, problem.weight(i, j));
        }
    }
    // Maximising sum(C - w) over maximum-cardinality (perfect) matchings
    // minimises sum(w).
    std::vector<WeightedEdge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = i + 1; j < n; ++j) {
            edges.push_back({i, j, max_w + 1 - problem.weight(i, j)});
        }
    }
    auto mate = max_weight_matching(n, edges, true);
    for (uint32_t i = 0; i < n; ++i) {
        if (mate[i] < 0) {
            throw std::logic_error("matching is not perfect");
        }
        if (static_cast<uint32_t>(mate[i]) > i) {
            out.pairs.emplace_back(i, static_cast<uint32_t>(mate[i]));
            out.total_weight += problem.weight(i, static_cast<size_t>(mate[i]));
        }
    }
    return out;
}

}  // namespace hypsurf
