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

#include <gtest/gtest.h>

#include "hypsurf/catalog.h"
#include "hypsurf/csscode.h"
#include "hypsurf/planar.h"

namespace hypsurf {
namespace {

std::vector<std::pair<std::string, Tiling>> all_tilings() {
    std::vector<std::pair<std::string, Tiling>> out;
    out.emplace_back("tetrahedron", build_tiling(enumerate_quotient(Presentation(3, 3)), 3, 3));
    for (int L : {2, 3, 4, 5}) {
        out.emplace_back("toric-" + std::to_string(L), build_toric(L));
    }
    for (const auto *list : {&catalog(), &small_codes()}) {
        for (const auto &e : *list) {
            if (e.n <= 1000) {
                out.emplace_back(e.id, build_tiling(enumerate_quotient(e.presentation()), e.r, e.s));
            }
        }
    }
    return out;
}

// Brute force: does any subset of columns sum to c?
bool span_oracle(const BitMatrix &m, const Chain &c) {
    const size_t cols = m.cols();
    EXPECT_LE(cols, 20u);
    BitMatrix t = m.transposed();
    for (uint64_t mask = 0; mask < (uint64_t{1} << cols); ++mask) {
        Chain sum(m.rows());
        for (size_t j = 0; j < cols; ++j) {
            if ((mask >> j) & 1) {
                sum ^= t.row(j);
            }
        }
        if (sum == c) {
            return true;
        }
    }
    return false;
}

TEST(Homology, BoundaryOfBoundaryVanishes) {
    for (const auto &[name, t] : all_tilings()) {
        BitMatrix d1 = boundary1(t);
        BitMatrix d2 = boundary2(t);
        EXPECT_TRUE(d1.multiply_transpose(d2.transposed()).is_zero()) << name;
    }
}

TEST(Homology, ChecksCommuteEverywhere) {
    for (const auto &[name, t] : all_tilings()) {
        CssCode c = from_tiling(t);
        EXPECT_TRUE(c.h_x.multiply_transpose(c.h_z).is_zero()) << name;
        EXPECT_EQ(c.k, first_betti_number(t)) << name;
    }
    for (const auto &preset : planar_presets()) {
        PlanarCode pc = carve_boundaries(preset.patch(), preset.carve);
        EXPECT_TRUE(pc.code.h_x.multiply_transpose(pc.code.h_z).is_zero()) << preset.name;
        EXPECT_TRUE(preset.patch().code().checks_commute()) << preset.name;
    }
}

TEST(Homology, BettiFromEuler) {
    // Orientable closed surface: b1 = 2 - chi.
    for (const auto &[name, t] : all_tilings()) {
        EXPECT_EQ(static_cast<long>(first_betti_number(t)), 2 - t.euler_characteristic()) << name;
    }
}

TEST(InSpan, ZeroAndFaceBoundary) {
    Tiling tet = build_tiling(enumerate_quotient(Presentation(3, 3)), 3, 3);
    BitMatrix d2 = boundary2(tet);
    EXPECT_TRUE(in_span(d2, Chain(tet.num_edges())));
    Chain face = Chain::from_support(tet.num_edges(), tet.face_edges[0]);
    EXPECT_TRUE(in_span(d2, face));
}

TEST(InSpan, ToricLoopsAgainstBruteForce) {
    Tiling t = build_toric(4);
    BitMatrix d1 = boundary1(t);
    BitMatrix d2 = boundary2(t);
    CssCode c = from_tiling(t);
    for (const Chain &z : c.logical_z) {
        ASSERT_TRUE(d1.multiply(z).none());
        EXPECT_FALSE(in_span(d2, z));
        EXPECT_FALSE(span_oracle(d2, z));
    }
    // A sum of two face boundaries is a trivial cycle.
    Chain two = Chain::from_support(t.num_edges(), t.face_edges[0]) ^
                Chain::from_support(t.num_edges(), t.face_edges[5]);
    EXPECT_TRUE(in_span(d2, two));
    EXPECT_TRUE(span_oracle(d2, two));
    // A single edge is not even a cycle.
    Chain edge(t.num_edges());
    edge.set(3);
    EXPECT_FALSE(in_span(d2, edge));
    EXPECT_FALSE(span_oracle(d2, edge));
}

}  // namespace
}  // namespace hypsurf
