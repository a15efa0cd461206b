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


#include "hypsurf/planar.h"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "hypsurf/distance.h"
#include "hypsurf/error.h"

namespace hypsurf {
namespace {

// Independent oracle: build the same patch geometrically in the hyperboloid
// model by reflecting regular polygons across their edges, then count.
// Hyperbolic tilings only (1/r + 1/s < 1/2).
struct GeoCounts {
    size_t vertices = 0;
    size_t edges = 0;
    size_t faces = 0;
    size_t boundary = 0;
    std::multiset<size_t> degrees;
};

using Vec3 = std::array<double, 3>;

double minkowski(const Vec3 &a, const Vec3 &b) {
    return a[0] * b[0] + a[1] * b[1] - a[2] * b[2];
}

Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Reflection of x in the geodesic through a and b.
Vec3 reflect(const Vec3 &x, const Vec3 &a, const Vec3 &b) {
    Vec3 n = cross(a, b);
    n[2] = -n[2];
    double t = 2 * minkowski(x, n) / minkowski(n, n);
    return {x[0] - t * n[0], x[1] - t * n[1], x[2] - t * n[2]};
}

using Key = std::array<long long, 3>;

Key key(const Vec3 &p) {
    return {std::llround(p[0] * 1e6), std::llround(p[1] * 1e6), std::llround(p[2] * 1e6)};
}

bool close(const Vec3 &a, const Vec3 &b) {
    return std::abs(a[0] - b[0]) + std::abs(a[1] - b[1]) + std::abs(a[2] - b[2]) < 1e-6;
}

GeoCounts geometric_patch(int r, int s, int seed_faces, int levels, bool star) {
    using Face = std::vector<Vec3>;
    const double pi = std::numbers::pi;
    const double R = std::acosh(1 / (std::tan(pi / r) * std::tan(pi / s)));
    Face base;
    for (int i = 0; i < r; ++i) {
        base.push_back({std::sinh(R) * std::cos(2 * pi * i / r), std::sinh(R) * std::sin(2 * pi * i / r),
                        std::cosh(R)});
    }
    std::vector<Face> faces{base};
    auto reflect_face = [](const Face &f, const Vec3 &a, const Vec3 &b) {
        Face g;
        for (const auto &p : f) {
            g.push_back(reflect(p, a, b));
        }
        return g;
    };
    if (star) {
        for (int i = 1; i < seed_faces; ++i) {
            faces.push_back(reflect_face(base, base[(i - 1) % r], base[i % r]));
        }
    } else {
        // Fan around vertex base[0].
        Face cur = base;
        for (int i = 1; i < seed_faces; ++i) {
            Face g = reflect_face(cur, cur[0], cur[r - 1]);
            size_t at = 0;
            while (!close(g[at], base[0])) {
                ++at;
            }
            std::rotate(g.begin(), g.begin() + static_cast<long>(at), g.end());
            if (!close(g[1], cur[r - 1])) {
                std::reverse(g.begin() + 1, g.end());
            }
            faces.push_back(g);
            cur = g;
        }
    }
    auto face_key = [](const Face &f) {
        Vec3 c{0, 0, 0};
        for (const auto &p : f) {
            for (int i = 0; i < 3; ++i) {
                c[i] += p[i] / static_cast<double>(f.size());
            }
        }
        return key(c);
    };
    auto edge_counts = [&](const std::vector<Face> &fs) {
        std::map<std::pair<Key, Key>, int> cnt;
        for (const auto &f : fs) {
            for (int i = 0; i < r; ++i) {
                Key a = key(f[i]);
                Key b = key(f[(i + 1) % r]);
                ++cnt[{std::min(a, b), std::max(a, b)}];
            }
        }
        return cnt;
    };
    std::set<Key> seen;
    for (const auto &f : faces) {
        seen.insert(face_key(f));
    }
    for (int level = 2; level <= levels; ++level) {
        auto cnt = edge_counts(faces);
        std::vector<Face> fresh;
        for (const auto &f : faces) {
            for (int i = 0; i < r; ++i) {
                Key a = key(f[i]);
                Key b = key(f[(i + 1) % r]);
                if (cnt[{std::min(a, b), std::max(a, b)}] == 1) {
                    Face g = reflect_face(f, f[i], f[(i + 1) % r]);
                    if (seen.insert(face_key(g)).second) {
                        fresh.push_back(g);
                    }
                }
            }
        }
        faces.insert(faces.end(), fresh.begin(), fresh.end());
    }
    GeoCounts out;
    auto cnt = edge_counts(faces);
    std::map<Key, size_t> degree;
    for (const auto &[e, c] : cnt) {
        ++degree[e.first];
        ++degree[e.second];
        out.boundary += c == 1 ? 1 : 0;
    }
    out.vertices = degree.size();
    out.edges = cnt.size();
    out.faces = faces.size();
    for (const auto &[v, d] : degree) {
        out.degrees.insert(d);
    }
    return out;
}

GeoCounts combinatorial_counts(const PlanarPatch &p) {
    GeoCounts out;
    out.vertices = p.num_vertices;
    out.edges = p.num_edges();
    out.faces = p.num_faces();
    out.boundary = p.boundary.size();
    for (uint32_t d : p.vertex_degrees()) {
        out.degrees.insert(d);
    }
    return out;
}

void expect_disc(const PlanarPatch &p) {
    // Euler characteristic of a disc, every interior edge in two faces.
    EXPECT_EQ(static_cast<long>(p.num_vertices) - static_cast<long>(p.num_edges()) +
                  static_cast<long>(p.num_faces()),
              1);
    std::vector<int> face_count(p.num_edges(), 0);
    for (const auto &fe : p.face_edges) {
        EXPECT_EQ(fe.size(), static_cast<size_t>(p.r));
        for (uint32_t e : fe) {
            ++face_count[e];
        }
    }
    std::set<uint32_t> bset(p.boundary.begin(), p.boundary.end());
    EXPECT_EQ(bset.size(), p.boundary.size());
    for (uint32_t e = 0; e < p.num_edges(); ++e) {
        EXPECT_EQ(face_count[e], bset.count(e) ? 1 : 2) << "edge " << e;
    }
    // The boundary is one closed walk.
    ASSERT_EQ(p.boundary_vertices.size(), p.boundary.size());
    for (size_t i = 0; i < p.boundary.size(); ++i) {
        const auto &ends = p.edge_ends[p.boundary[i]];
        uint32_t from = p.boundary_vertices[i];
        uint32_t to = p.boundary_vertices[(i + 1) % p.boundary.size()];
        EXPECT_TRUE((ends[0] == from && ends[1] == to) || (ends[1] == from && ends[0] == to));
    }
    for (uint32_t d : p.vertex_degrees()) {
        EXPECT_GE(d, 2u);
        EXPECT_LE(d, static_cast<uint32_t>(p.s));
    }
}

TEST(GrowPatch, SingleSquare) {
    PlanarPatch p = grow_patch(4, 4, 1, 1);
    EXPECT_EQ(p.num_faces(), 1u);
    EXPECT_EQ(p.num_edges(), 4u);
    EXPECT_EQ(p.num_vertices, 4u);
    EXPECT_EQ(p.boundary.size(), 4u);
    expect_disc(p);
}

TEST(GrowPatch, FiveFiveBoundaryOfSixty) {
    // Five level-1 pentagons around a vertex plus one reflected layer.
    PlanarPatch p = grow_patch(5, 5, 5, 2);
    EXPECT_EQ(p.boundary.size(), 60u);
    expect_disc(p);
}

TEST(GrowPatch, FourSeedFacesFallShort) {
    // With only four seed pentagons no layout reaches 60 boundary edges.
    for (SeedLayout layout : {SeedLayout::kFan, SeedLayout::kStrip, SeedLayout::kStar}) {
        PlanarPatch p = grow_patch(5, 5, 4, 2, layout);
        EXPECT_LT(p.boundary.size(), 60u);
        expect_disc(p);
    }
}

TEST(GrowPatch, UncarvedPatchEncodesNothing) {
    for (auto [r, s] : {std::pair{4, 4}, {5, 5}, {5, 4}, {8, 3}}) {
        PlanarPatch p = grow_patch(r, s, 2, 2);
        CssCode c = p.code();
        EXPECT_EQ(c.k, 0u);
        EXPECT_TRUE(c.checks_commute());
    }
}

TEST(GrowPatch, MatchesGeometricOracle) {
    struct Case {
        int r, s, seeds, levels;
        bool star;
    };
    std::vector<Case> cases;
    for (int n = 1; n <= 5; ++n) {
        cases.push_back({5, 5, n, 2, false});
        cases.push_back({5, 5, n, 2, true});
    }
    cases.push_back({5, 4, 1, 3, false});
    cases.push_back({4, 5, 3, 3, true});
    cases.push_back({7, 3, 2, 4, false});
    cases.push_back({8, 3, 3, 3, false});
    cases.push_back({6, 4, 2, 3, false});
    cases.push_back({4, 5, 4, 3, false});
    cases.push_back({5, 5, 1, 3, false});
    for (const auto &c : cases) {
        SCOPED_TRACE(std::to_string(c.r) + "," + std::to_string(c.s) + " seeds=" + std::to_string(c.seeds) +
                     " levels=" + std::to_string(c.levels) + (c.star ? " star" : " fan"));
        GeoCounts geo = geometric_patch(c.r, c.s, c.seeds, c.levels, c.star);
        PlanarPatch p = grow_patch(c.r, c.s, c.seeds, c.levels, c.star ? SeedLayout::kStar : SeedLayout::kFan);
        GeoCounts comb = combinatorial_counts(p);
        EXPECT_EQ(comb.vertices, geo.vertices);
        EXPECT_EQ(comb.edges, geo.edges);
        EXPECT_EQ(comb.faces, geo.faces);
        EXPECT_EQ(comb.boundary, geo.boundary);
        EXPECT_EQ(comb.degrees, geo.degrees);
        expect_disc(p);
    }
}

TEST(Carve, ToySquarePatch) {
    PlanarPatch p = grow_patch(4, 4, 1, 2);
    PlanarCode pc = carve_boundaries(p, {3, 0, true, true});
    EXPECT_EQ(pc.code.k, 2u);
    EXPECT_TRUE(pc.code.checks_commute());
    EXPECT_EQ(pc.arcs.size(), 6u);
}

TEST(Carve, ArcsCoverBoundary) {
    PlanarPatch p = grow_patch(5, 5, 5, 2);
    PlanarCode pc = carve_boundaries(p, {5, 0, true, true});
    ASSERT_EQ(pc.arcs.size(), 10u);
    size_t total = 0;
    for (size_t i = 0; i < pc.arcs.size(); ++i) {
        EXPECT_EQ(pc.arcs[i].first, total);
        EXPECT_EQ(pc.arcs[i].second, 6u);
        EXPECT_EQ(pc.arc_rough[i], i % 2 == 0);
        total += pc.arcs[i].second;
    }
    EXPECT_EQ(total, p.boundary.size());
}

TEST(Carve, PresetSixtyFive) {
    const PlanarPreset &preset = find_preset("55-65");
    PlanarCode pc = carve_boundaries(preset.patch(), preset.carve);
    const CssCode &c = pc.code;
    EXPECT_EQ(c.n, 65u);
    EXPECT_EQ(c.k, 4u);
    EXPECT_TRUE(c.checks_commute());
    EXPECT_EQ(brute_force_species_distance(c, Species::kZ, c.n), std::optional<size_t>(4));
    // X-distance comes out 4 for this layout, not 5.
    EXPECT_EQ(brute_force_species_distance(c, Species::kX, c.n), std::optional<size_t>(4));
}

TEST(Carve, PresetSeventy) {
    const PlanarPreset &preset = find_preset("55-70");
    PlanarCode pc = carve_boundaries(preset.patch(), preset.carve);
    const CssCode &c = pc.code;
    EXPECT_EQ(c.n, 70u);
    EXPECT_EQ(c.k, 4u);
    EXPECT_EQ(brute_force_species_distance(c, Species::kZ, c.n), std::optional<size_t>(4));
    EXPECT_EQ(brute_force_species_distance(c, Species::kX, c.n), std::optional<size_t>(5));
    BoundReport rep = boundary_bound_report(c, 4);
    EXPECT_EQ(rep.n, 70u);
    EXPECT_NEAR(rep.kd_over_n, 16.0 / 70, 1e-12);
}

TEST(Carve, Errors) {
    PlanarPatch p = grow_patch(4, 4, 1, 1);
    try {
        carve_boundaries(p, {2, 0, true, true});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    }
    try {
        carve_boundaries(p, {3, 0, true, true});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kRegionTooShort);
    }
    EXPECT_THROW(find_preset("nope"), Error);
}

TEST(Carve, PropertySuiteOverRandomPatches) {
    std::mt19937_64 rng(2026);
    const std::vector<std::pair<int, int>> tilings = {{4, 4}, {5, 4}, {4, 5}, {5, 5}, {6, 4}, {8, 3}, {6, 6}, {7, 3}};
    size_t checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto [r, s] = tilings[rng() % tilings.size()];
        int seeds = 1 + static_cast<int>(rng() % 5);
        int levels = 1 + static_cast<int>(rng() % 3);
        auto layout = static_cast<SeedLayout>(rng() % 3);
        if (layout == SeedLayout::kFan) {
            seeds = std::min(seeds, s);
        }
        auto growth = static_cast<Growth>(rng() % 2);
        PlanarPatch p = grow_patch(r, s, seeds, levels, layout, growth);
        expect_disc(p);
        size_t max_regions = p.boundary.size() / 4;
        if (max_regions < 3) {
            continue;
        }
        size_t regions = 3 + rng() % (max_regions - 2);
        CarveOptions opt{regions, static_cast<size_t>(rng() % p.boundary.size()), rng() % 2 == 0,
                         rng() % 2 == 0};
        SCOPED_TRACE(std::to_string(r) + "," + std::to_string(s) + " seeds=" + std::to_string(seeds) +
                     " levels=" + std::to_string(levels) + " regions=" + std::to_string(regions));
        PlanarCode pc = carve_boundaries(p, opt);
        EXPECT_EQ(pc.code.k, regions - 1);
        EXPECT_TRUE(pc.code.h_x.multiply_transpose(pc.code.h_z).is_zero());
        EXPECT_EQ(pc.code.n, pc.qubit_edges.size());
        EXPECT_EQ(pc.code.h_x.rows(), pc.x_check_vertices.size());
        ++checked;
    }
    EXPECT_GT(checked, 100u);
}

}  // namespace
}  // namespace hypsurf
