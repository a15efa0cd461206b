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


#include "hypsurf/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hypsurf/montecarlo.h"
#include "hypsurf/serialize.h"

namespace hypsurf {
namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("hypsurf_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override {
        std::filesystem::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    std::filesystem::path dir_;
};

TEST_F(CliTest, CatalogHasTenRows) {
    CliRun r = run({"catalog"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::vector<std::string> ids;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        ids.push_back(line.substr(0, line.find(' ')));
    }
    ASSERT_EQ(ids.size(), 10u);
    EXPECT_EQ(ids.front(), "54-60");
    EXPECT_EQ(ids.back(), "83-768");
    EXPECT_GT(run({"catalog", "--all"}).out.size(), r.out.size());
}

TEST_F(CliTest, ParamsLine) {
    CliRun r = run({"params", "--code", "54-60"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[[60,8,4]] csys=6 csys*=4 rate-check: ok\n");
}

TEST_F(CliTest, ParamsFlagsCatalogDisagreement) {
    CliRun r = run({"params", "--code", "83-48"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("rate-check: ok"), std::string::npos);
    EXPECT_NE(r.out.find("catalog-k=4"), std::string::npos);
}

TEST_F(CliTest, SimulateZeroNoise) {
    CliRun r = run({"simulate", "--code", "toric-4", "--p", "0", "--trials", "100"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    auto curves = read_csv(in);
    ASSERT_EQ(curves.size(), 1u);
    ASSERT_EQ(curves[0].points.size(), 1u);
    EXPECT_EQ(curves[0].points[0].failures, 0u);
    EXPECT_EQ(curves[0].points[0].trials, 100u);
}

TEST_F(CliTest, SimulateWritesCsvAndManifest) {
    std::string csv = path("run.csv");
    CliRun r = run({"simulate", "--code", "55-30", "--p-grid", "0.01:0.03:0.01", "--trials", "200", "--seed", "4",
                 "--workers", "2", "--out", csv});
    ASSERT_EQ(r.code, 0) << r.err;
    std::string text = slurp(csv);
    std::istringstream in(text);
    auto curves = read_csv(in);
    ASSERT_EQ(curves[0].points.size(), 3u);
    std::ostringstream again;
    write_csv(again, curves);
    EXPECT_EQ(again.str(), text);

    RunManifest m = manifest_from_json(slurp(csv + ".manifest.json"));
    EXPECT_EQ(m.subcommand, "simulate");
    EXPECT_EQ(m.seed, 4u);
    EXPECT_EQ(m.rng, kRngName);
    EXPECT_EQ(m.arguments.at("code"), "55-30");
    EXPECT_EQ(manifest_to_json(m), slurp(csv + ".manifest.json"));

    // Same seed, different worker count, same numbers.
    std::string csv1 = path("run1.csv");
    ASSERT_EQ(run({"simulate", "--code", "55-30", "--p-grid", "0.01:0.03:0.01", "--trials", "200", "--seed", "4",
                   "--out", csv1})
                  .code,
              0);
    EXPECT_EQ(slurp(csv1), text);
}

TEST_F(CliTest, BuildThenReadBack) {
    std::string code = path("code.json");
    std::string tiling = path("tiling.json");
    CliRun b = run({"build", "--tiling", "5,4", "--word", "((S r)^2 r)^2", "--out", code, "--tiling-out", tiling});
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_NE(b.out.find("n=60 k=8"), std::string::npos);
    EXPECT_TRUE(std::filesystem::exists(code + ".manifest.json"));
    EXPECT_TRUE(std::filesystem::exists(tiling + ".manifest.json"));

    std::string text = slurp(code);
    EXPECT_EQ(code_to_json(code_from_json(text)), text);
    std::string ttext = slurp(tiling);
    EXPECT_EQ(tiling_to_json(tiling_from_json(ttext)), ttext);

    CliRun p = run({"params", "--code", code});
    EXPECT_EQ(p.out, "[[60,8,4]] csys=6 csys*=4\n");
    CliRun s = run({"spectrum", "--code", code});
    EXPECT_EQ(s.out, "Z: 6 (8)\nX: 4 (8)\n");
}

TEST_F(CliTest, DistanceMethods) {
    CliRun a = run({"distance", "--code", "55-30"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "systole=3 cosystole=3 d=3");
    CliRun b = run({"distance", "--code", "55-30", "--method", "brute"});
    EXPECT_EQ(b.out, "dZ=3 dX=3 d=3\n");
    CliRun c = run({"distance", "--code", "55-30", "--method", "brute", "--max-weight", "2"});
    EXPECT_EQ(c.out, "dZ=> dX=>\n");
}

TEST_F(CliTest, PlanarBuild) {
    std::string out = path("planar.json");
    CliRun r = run({"planar-build", "--preset", "55-70", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find(" boundary")), "[[70,4,4]] dX=5 dZ=4");
    CliRun p = run({"params", "--code", out});
    EXPECT_EQ(p.out, "[[70,4,4]] dX=5 dZ=4\n");

    CliRun custom = run({"planar-build", "--tiling", "5,5", "--seed-faces", "5", "--levels", "2", "--regions", "5",
                      "--offset", "1"});
    ASSERT_EQ(custom.code, 0) << custom.err;
    EXPECT_EQ(custom.out.substr(0, custom.out.find(" boundary")), "[[65,4,4]] dX=4 dZ=4");
}

TEST_F(CliTest, Version) {
    CliRun r = run({"--version"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find(kToolVersion), std::string::npos);
    EXPECT_NE(r.out.find(kRngName), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"params"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"simulate", "--code", "toric-4"}).code, 2);
    EXPECT_EQ(run({"simulate", "--code", "toric-4", "--p", "1.5"}).code, 2);
    EXPECT_EQ(run({"simulate", "--code", "toric-4", "--p-grid", "0.3:0.1:0.1"}).code, 2);
    EXPECT_EQ(run({"distance", "--code", "54-60", "--method", "magic"}).code, 2);
    EXPECT_EQ(run({"planar-build"}).code, 2);
}

TEST_F(CliTest, DomainErrorsExitOne) {
    CliRun a = run({"params", "--code", "no-such-code"});
    EXPECT_EQ(a.code, 1);
    EXPECT_EQ(a.err.rfind("INVALID_ARGUMENT:", 0), 0u);

    CliRun b = run({"build", "--tiling", "5,4"});
    EXPECT_EQ(b.code, 1);
    EXPECT_EQ(b.err.rfind("ENUMERATION_OVERFLOW:", 0), 0u);

    CliRun c = run({"planar-build", "--tiling", "4,4", "--seed-faces", "1", "--levels", "1"});
    EXPECT_EQ(c.code, 1);
    EXPECT_EQ(c.err.rfind("REGION_TOO_SHORT:", 0), 0u);

    std::string bad = path("bad.json");
    std::ofstream(bad) << "{not json";
    CliRun d = run({"params", "--code", bad});
    EXPECT_EQ(d.code, 1);
    EXPECT_EQ(d.err.rfind("PARSE_ERROR:", 0), 0u);
}

}  // namespace
}  // namespace hypsurf
