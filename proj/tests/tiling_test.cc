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


#include "hypsurf/tiling.h"

#include <gtest/gtest.h>

#include "hypsurf/catalog.h"
#include "hypsurf/error.h"

namespace hypsurf {
namespace {

Tiling tiling_of(int r, int s, const std::string &word = "") {
    std::vector<Word> extra;
    if (!word.empty()) {
        extra.push_back(Word::parse(word));
    }
    return build_tiling(enumerate_quotient(Presentation(r, s, extra)), r, s);
}

// Each edge in two faces and two vertices, incidence lists consistent.
void expect_well_formed(const Tiling &t) {
    ASSERT_EQ(t.edge_faces.size(), t.num_edges());
    for (size_t e = 0; e < t.num_edges(); ++e) {
        for (uint32_t f : t.edge_faces[e]) {
            const auto &fe = t.face_edges[f];
            EXPECT_EQ(std::count(fe.begin(), fe.end(), e), 1);
        }
        for (uint32_t v : t.edge_vertices[e]) {
            const auto &ve = t.vertex_edges[v];
            EXPECT_EQ(std::count(ve.begin(), ve.end(), e), 1);
        }
    }
    for (const auto &fe : t.face_edges) {
        EXPECT_EQ(fe.size(), static_cast<size_t>(t.r));
    }
    for (const auto &ve : t.vertex_edges) {
        EXPECT_EQ(ve.size(), static_cast<size_t>(t.s));
    }
}

TEST(Tiling, Tetrahedron) {
    Tiling t = tiling_of(3, 3);
    EXPECT_EQ(t.num_faces(), 4u);
    EXPECT_EQ(t.num_edges(), 6u);
    EXPECT_EQ(t.num_vertices(), 4u);
    EXPECT_EQ(t.euler_characteristic(), 2);
    expect_well_formed(t);
}

TEST(Tiling, FiveFourSixty) {
    Tiling t = tiling_of(5, 4, "((S r)^2 r)^2");
    EXPECT_EQ(t.num_faces(), 24u);
    EXPECT_EQ(t.num_edges(), 60u);
    EXPECT_EQ(t.num_vertices(), 30u);
    expect_well_formed(t);
}

TEST(Tiling, EightThreeFortyEight) {
    Tiling t = tiling_of(8, 3, "(R^2 s)^3");
    EXPECT_EQ(t.num_faces(), 12u);
    EXPECT_EQ(t.num_edges(), 48u);
    EXPECT_EQ(t.num_vertices(), 32u);
    expect_well_formed(t);
}

TEST(Tiling, CountsFollowOrder) {
    for (const auto *list : {&catalog(), &small_codes()}) {
        for (const auto &e : *list) {
            if (e.n > 1000) {
                continue;
            }
            CosetTable table = enumerate_quotient(e.presentation());
            Tiling t = build_tiling(table, e.r, e.s);
            EXPECT_EQ(t.num_faces(), table.order() / e.r) << e.id;
            EXPECT_EQ(t.num_edges(), table.order() / 2) << e.id;
            EXPECT_EQ(t.num_vertices(), table.order() / e.s) << e.id;
            expect_well_formed(t);
        }
    }
}

TEST(Tiling, DualSwapsCounts) {
    Tiling t = tiling_of(5, 4, "((S r)^2 r)^2");
    Tiling d = dual(t);
    EXPECT_EQ(d.r, 4);
    EXPECT_EQ(d.s, 5);
    EXPECT_EQ(d.num_faces(), 30u);
    EXPECT_EQ(d.num_edges(), 60u);
    EXPECT_EQ(d.num_vertices(), 24u);
    expect_well_formed(d);
    EXPECT_EQ(dual(d), t);

    Tiling tet = tiling_of(3, 3);
    Tiling tet_d = dual(tet);
    EXPECT_EQ(tet_d.num_faces(), tet.num_faces());
    EXPECT_EQ(tet_d.num_vertices(), tet.num_vertices());
}

TEST(Tiling, DegenerateQuotient) {
    // sigma = rho collapses each edge onto a single face.
    try {
        tiling_of(4, 4, "S r");
        FAIL() << "expected a degenerate quotient";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kDegenerateQuotient);
    }
}

TEST(Toric, Counts) {
    for (int L : {2, 3, 4, 6}) {
        Tiling t = build_toric(L);
        EXPECT_EQ(t.num_edges(), static_cast<size_t>(2 * L * L));
        EXPECT_EQ(t.num_faces(), static_cast<size_t>(L * L));
        EXPECT_EQ(t.num_vertices(), static_cast<size_t>(L * L));
        EXPECT_EQ(t.euler_characteristic(), 0);
        expect_well_formed(t);
        EXPECT_EQ(toric_table(L).order(), static_cast<size_t>(4 * L * L));
    }
}

}  // namespace
}  // namespace hypsurf
