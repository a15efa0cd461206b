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

#ifndef HYPSURF_MONTECARLO_H
#define HYPSURF_MONTECARLO_H

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "hypsurf/csscode.h"

namespace hypsurf {

/// Identifies the per-trial generator: std::mt19937_64 seeded with
/// splitmix64(seed ^ splitmix64(trial)), uniforms from the top 53 bits.
inline constexpr const char *kRngName = "mt19937_64+splitmix64/v1";

uint64_t splitmix64(uint64_t x);

/// The generator for trial `trial` of a run seeded with `seed`.
std::mt19937_64 trial_rng(uint64_t seed, uint64_t trial);

/// Uniform double in [0, 1) from one 64-bit draw.
inline double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Interval {
    double low = 0;
    double high = 0;
};

/// Wilson score interval; z defaults to the two-sided 95% quantile.
Interval wilson_interval(uint64_t successes, uint64_t trials, double z = 1.959963984540054);

struct SimPoint {
    double p = 0;
    uint64_t trials = 0;
    uint64_t failures = 0;
    double p_log = 0;
    double ci_low = 0;
    double ci_high = 0;
    uint64_t seed = 0;
};

struct CodeLabel {
    int r = 0;
    int s = 0;
    size_t n = 0;
    size_t k = 0;
    size_t d = 0;
};

struct SimCurve {
    CodeLabel code;
    std::vector<SimPoint> points;
};

/// Independent X and Z errors with probability p on every qubit, both species
/// decoded; a trial fails if either leaves a logical error. Deterministic in
/// (code, p, trials, seed) for any worker count (0 = hardware concurrency).
SimPoint run_point(const CssCode &code, double p, uint64_t trials, uint64_t seed, unsigned workers = 1);

/// Points sorted by p.
SimCurve run_curve(const CssCode &code, const CodeLabel &label, std::vector<double> p_grid, uint64_t trials,
                   uint64_t seed, unsigned workers = 1);

/// Largest p in [0, 0.5] with estimated P_log <= 1 - target, by bisection on a
/// p -> P_log estimator.
double overhead_point(const std::function<double(double)> &p_log_at, double target = 0.999, int iterations = 20);
double overhead_point(const CssCode &code, double target, uint64_t trials, uint64_t seed, unsigned workers = 1,
                      int iterations = 20);

inline constexpr const char *kCsvHeader = "r,s,n,k,d,p,trials,failures,p_log,ci_low,ci_high,seed,rng";

void write_csv(std::ostream &out, const std::vector<SimCurve> &curves);
/// Parses CSV written by write_csv; rows with equal (r,s,n,k,d) form one curve.
/// Throws Error(kParse) on a malformed header or row.
std::vector<SimCurve> read_csv(std::istream &in);

}  // namespace hypsurf

#endif
