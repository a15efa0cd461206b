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

#include <gtest/gtest.h>

#include <chrono>
#include <functional>

#include "hypsurf/catalog.h"
#include "hypsurf/error.h"

namespace hypsurf {
namespace {

CssCode code_of(const std::string &id) {
    auto e = *find_entry(id);
    return from_tiling(build_tiling(enumerate_quotient(e.presentation()), e.r, e.s));
}

// For each weight w, how many independent logicals of weight exactly w
// the span of all logicals up to w needs. Any minimum-weight basis has this
// weight profile, so it is an oracle for the greedy spectrum.
std::map<size_t, size_t> spectrum_oracle(const BitMatrix &kernel_of, const BitMatrix &stabilizers, size_t k,
                                         size_t w_max) {
    const size_t n = kernel_of.cols();
    const auto cols = kernel_of.col_supports();
    RowReducer span(n);
    for (size_t i = 0; i < stabilizers.rows(); ++i) {
        span.insert(stabilizers.row(i));
    }
    const size_t base = span.rank();
    std::map<size_t, size_t> out;
    std::vector<uint32_t> chosen;
    std::vector<uint8_t> parity(kernel_of.rows(), 0);
    size_t odd = 0;
    for (size_t w = 1; w <= w_max && span.rank() < base + k; ++w) {
        std::vector<BitVec> hits;
        std::function<void(size_t)> rec = [&](size_t start) {
            if (chosen.size() == w) {
                if (odd == 0) {
                    hits.push_back(BitVec::from_support(n, chosen));
                }
                return;
            }
            for (size_t q = start; q + (w - chosen.size()) <= n; ++q) {
                for (uint32_t c : cols[q]) {
                    odd += parity[c] ? -1 : 1;
                    parity[c] ^= 1;
                }
                chosen.push_back(static_cast<uint32_t>(q));
                rec(q + 1);
                chosen.pop_back();
                for (uint32_t c : cols[q]) {
                    odd += parity[c] ? -1 : 1;
                    parity[c] ^= 1;
                }
            }
        };
        rec(0);
        size_t before = span.rank();
        for (auto &v : hits) {
            span.insert(v);
        }
        if (span.rank() > before) {
            out[w] = span.rank() - before;
        }
    }
    return out;
}

TEST(Systole, TableOne) {
    struct Row {
        const char *id;
        size_t csys, cosys;
    };
    for (Row row : {Row{"54-60", 6, 4}, Row{"54-160", 8, 6}, Row{"54-360", 8, 8}}) {
        CssCode c = code_of(row.id);
        EXPECT_EQ(systole(c).length, row.csys) << row.id;
        EXPECT_EQ(cosystole(c).length, row.cosys) << row.id;
        EXPECT_EQ(code_distance(c), std::min(row.csys, row.cosys)) << row.id;
    }
}

TEST(Systole, EightThree) {
    CssCode c = code_of("83-168");
    EXPECT_EQ(systole(c).length, 8u);
    EXPECT_EQ(cosystole(c).length, 4u);
}

TEST(Systole, WitnessIsANontrivialLogical) {
    for (const char *id : {"54-60", "55-30", "66-54"}) {
        CssCode c = code_of(id);
        auto z = systole(c);
        EXPECT_EQ(z.witness.popcount(), z.length);
        EXPECT_TRUE(c.h_x.multiply(z.witness).none());
        bool anti = false;
        for (const auto &lx : c.logical_x) {
            anti = anti || lx.dot(z.witness);
        }
        EXPECT_TRUE(anti) << id;

        auto x = cosystole(c);
        EXPECT_EQ(x.witness.popcount(), x.length);
        EXPECT_TRUE(c.h_z.multiply(x.witness).none());
        anti = false;
        for (const auto &lz : c.logical_z) {
            anti = anti || lz.dot(x.witness);
        }
        EXPECT_TRUE(anti) << id;
    }
}

TEST(Systole, Toric) {
    for (int L : {3, 4, 5, 6}) {
        CssCode c = from_tiling(build_toric(L));
        EXPECT_EQ(systole(c).length, static_cast<size_t>(L));
        EXPECT_EQ(cosystole(c).length, static_cast<size_t>(L));
    }
}

TEST(Systole, NoCycleOnSphere) {
    CssCode c = from_tiling(build_tiling(enumerate_quotient(Presentation(3, 3)), 3, 3));
    try {
        systole(c);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kNoNontrivialCycle);
    }
}

TEST(Systole, DistanceBudget) {
    // Polynomial algorithm: the n = 360 code must be quick.
    CssCode c = code_of("54-360");
    auto t0 = std::chrono::steady_clock::now();
    EXPECT_EQ(code_distance(c), 8u);
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_LT(secs, 60.0);
}

TEST(BruteForce, SmallCodes) {
    EXPECT_EQ(brute_force_distance(code_of("55-30"), 30), std::optional<size_t>(3));
    EXPECT_EQ(brute_force_distance(code_of("55-40"), 40), std::optional<size_t>(4));
    EXPECT_EQ(brute_force_distance(from_tiling(build_toric(3)), 18), std::optional<size_t>(3));
}

TEST(BruteForce, AgreesWithBravyi) {
    std::vector<std::pair<std::string, CssCode>> codes;
    for (const char *id : {"55-30", "55-40", "64-36", "66-54", "54-60", "65-60", "66-60"}) {
        codes.emplace_back(id, code_of(id));
    }
    for (int L : {2, 3, 4}) {
        codes.emplace_back("toric-" + std::to_string(L), from_tiling(build_toric(L)));
    }
    for (const auto &[name, c] : codes) {
        EXPECT_EQ(brute_force_species_distance(c, Species::kZ, c.n), systole(c).length) << name;
        EXPECT_EQ(brute_force_species_distance(c, Species::kX, c.n), cosystole(c).length) << name;
    }
}

TEST(BruteForce, BoundAndBudget) {
    CssCode c = code_of("54-60");
    EXPECT_EQ(brute_force_species_distance(c, Species::kX, 3), std::nullopt);
    try {
        brute_force_species_distance(c, Species::kZ, 60, 1000);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
    }
}

TEST(Spectrum, FiveFourSixty) {
    auto sp = logical_weight_spectrum(code_of("54-60"));
    EXPECT_EQ(sp.z, (std::map<size_t, size_t>{{6, 8}}));
    EXPECT_EQ(sp.x, (std::map<size_t, size_t>{{4, 8}}));
}

TEST(Spectrum, Toric) {
    auto sp = logical_weight_spectrum(from_tiling(build_toric(4)));
    EXPECT_EQ(sp.z, (std::map<size_t, size_t>{{4, 2}}));
    EXPECT_EQ(sp.x, (std::map<size_t, size_t>{{4, 2}}));
}

TEST(Spectrum, BasisIsIndependentAndLogical) {
    CssCode c = code_of("65-60");
    auto sp = logical_weight_spectrum(c);
    ASSERT_EQ(sp.z_basis.size(), c.k);
    ASSERT_EQ(sp.x_basis.size(), c.k);
    RowReducer z(c.n);
    for (size_t i = 0; i < c.h_z.rows(); ++i) {
        z.insert(c.h_z.row(i));
    }
    for (const auto &v : sp.z_basis) {
        EXPECT_TRUE(c.h_x.multiply(v).none());
        EXPECT_TRUE(z.insert(v));
    }
    RowReducer x(c.n);
    for (size_t i = 0; i < c.h_x.rows(); ++i) {
        x.insert(c.h_x.row(i));
    }
    for (const auto &v : sp.x_basis) {
        EXPECT_TRUE(c.h_z.multiply(v).none());
        EXPECT_TRUE(x.insert(v));
    }
}

TEST(Spectrum, MatchesEnumerationOracle) {
    struct Case {
        std::string name;
        CssCode code;
        size_t z_max, x_max;
    };
    std::vector<Case> cases = {
        {"toric-3", from_tiling(build_toric(3)), 3, 3},
        {"55-30", code_of("55-30"), 3, 3},
        {"64-36", code_of("64-36"), 4, 4},
        {"55-40", code_of("55-40"), 4, 4},
        {"66-54", code_of("66-54"), 4, 4},
        {"65-60", code_of("65-60"), 4, 4},
    };
    for (const auto &cs : cases) {
        auto sp = logical_weight_spectrum(cs.code);
        EXPECT_EQ(sp.z, spectrum_oracle(cs.code.h_x, cs.code.h_z, cs.code.k, cs.z_max)) << cs.name;
        EXPECT_EQ(sp.x, spectrum_oracle(cs.code.h_z, cs.code.h_x, cs.code.k, cs.x_max)) << cs.name;
    }
}

TEST(Spectrum, SixSixFiftyFour) {
    // All twenty Z logicals can be chosen at weight four.
    auto sp = logical_weight_spectrum(code_of("66-54"));
    EXPECT_EQ(sp.z, (std::map<size_t, size_t>{{4, 20}}));
    EXPECT_EQ(sp.x, (std::map<size_t, size_t>{{4, 20}}));
}

TEST(OddCycle, DoubledGraphShape) {
    CssCode c = from_tiling(build_toric(3));
    CheckGraph g = CheckGraph::from_checks(c.h_x);
    EXPECT_EQ(g.num_nodes(), 9u);
    EXPECT_EQ(g.num_edges(), 18u);
    DoubledGraph d = doubled_graph(g, c.logical_x[0]);
    EXPECT_EQ(d.num_nodes, 18u);
    EXPECT_EQ(d.edges.size(), 36u);
    EXPECT_EQ(d.crossing_edges, 2 * c.logical_x[0].popcount());
    auto cyc = shortest_odd_cycle(g, c.logical_x[0]);
    ASSERT_TRUE(cyc.has_value());
    EXPECT_EQ(cyc->popcount(), 3u);
    EXPECT_TRUE(cyc->dot(c.logical_x[0]));
    EXPECT_FALSE(shortest_odd_cycle(g, c.logical_x[0], 2).has_value());
}

}  // namespace
}  // namespace hypsurf
