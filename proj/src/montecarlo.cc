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

#include "hypsurf/montecarlo.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "hypsurf/decoder.h"
#include "hypsurf/error.h"

namespace hypsurf {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::mt19937_64 trial_rng(uint64_t seed, uint64_t trial) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(trial)));
}

Interval wilson_interval(uint64_t successes, uint64_t trials, double z) {
    if (trials == 0) {
        return {0, 1};
    }
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1 + z2 / n;
    const double center = (phat + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
    // Clamp so the interval always contains phat despite rounding.
    return {std::min(phat, std::max(0.0, center - half)), std::max(phat, std::min(1.0, center + half))};
}

namespace {

struct TrialRunner {
    TrialRunner(const CssCode &code, double p) : p(p), z_dec(code, Species::kZ), x_dec(code, Species::kX) {
        ex = Chain(code.n);
        ez = Chain(code.n);
    }

    bool fails(uint64_t seed, uint64_t trial) {
        if (p <= 0) {
            return false;
        }
        auto rng = trial_rng(seed, trial);
        const size_t n = ex.size();
        for (size_t q = 0; q < n; ++q) {
            ex.set(q, uniform01(rng) < p);
        }
        for (size_t q = 0; q < n; ++q) {
            ez.set(q, uniform01(rng) < p);
        }
        return !z_dec.decode_succeeds(ez) || !x_dec.decode_succeeds(ex);
    }

    double p;
    Decoder z_dec;
    Decoder x_dec;
    Chain ex;
    Chain ez;
};

}  // namespace

SimPoint run_point(const CssCode &code, double p, uint64_t trials, uint64_t seed, unsigned workers) {
    if (!(p >= 0 && p <= 1)) {
        throw Error(ErrorCode::kInvalidArgument, "p must lie in [0, 1]");
    }
    if (trials == 0) {
        throw Error(ErrorCode::kInvalidArgument, "need at least one trial");
    }
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<uint64_t>(workers, trials));

    constexpr uint64_t kChunk = 256;
    std::atomic<uint64_t> next{0};
    std::vector<uint64_t> counts(workers, 0);
    auto work = [&](unsigned w) {
        TrialRunner runner(code, p);
        uint64_t local = 0;
        while (true) {
            uint64_t begin = next.fetch_add(kChunk);
            if (begin >= trials) {
                break;
            }
            uint64_t end = std::min(trials, begin + kChunk);
            for (uint64_t t = begin; t < end; ++t) {
                local += runner.fails(seed, t) ? 1 : 0;
            }
        }
        counts[w] = local;
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    SimPoint pt;
    pt.p = p;
    pt.trials = trials;
    pt.seed = seed;
    for (uint64_t c : counts) {
        pt.failures += c;
    }
    pt.p_log = static_cast<double>(pt.failures) / static_cast<double>(trials);
    Interval ci = wilson_interval(pt.failures, trials);
    pt.ci_low = ci.low;
    pt.ci_high = ci.high;
    return pt;
}

SimCurve run_curve(const CssCode &code, const CodeLabel &label, std::vector<double> p_grid, uint64_t trials,
                   uint64_t seed, unsigned workers) {
    std::sort(p_grid.begin(), p_grid.end());
    SimCurve curve;
    curve.code = label;
    for (double p : p_grid) {
        curve.points.push_back(run_point(code, p, trials, seed, workers));
    }
    return curve;
}

double overhead_point(const std::function<double(double)> &p_log_at, double target, int iterations) {
    const double limit = 1 - target;
    double lo = 0;
    double hi = 0.5;
    if (p_log_at(hi) <= limit) {
        return hi;
    }
    for (int i = 0; i < iterations; ++i) {
        double mid = (lo + hi) / 2;
        if (p_log_at(mid) <= limit) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

double overhead_point(const CssCode &code, double target, uint64_t trials, uint64_t seed, unsigned workers,
                      int iterations) {
    return overhead_point([&](double p) { return run_point(code, p, trials, seed, workers).p_log; }, target,
                          iterations);
}

namespace {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

template <typename T>
T parse_field(const std::string &field, size_t line) {
    T value{};
    auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": bad field '" + field + "'");
    }
    return value;
}

}  // namespace

void write_csv(std::ostream &out, const std::vector<SimCurve> &curves) {
    out << kCsvHeader << "\n";
    for (const auto &c : curves) {
        for (const auto &pt : c.points) {
            out << c.code.r << ',' << c.code.s << ',' << c.code.n << ',' << c.code.k << ',' << c.code.d << ','
                << format_double(pt.p) << ',' << pt.trials << ',' << pt.failures << ',' << format_double(pt.p_log)
                << ',' << format_double(pt.ci_low) << ',' << format_double(pt.ci_high) << ',' << pt.seed << ','
                << kRngName << "\n";
        }
    }
}

std::vector<SimCurve> read_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw Error(ErrorCode::kParse, "missing or unexpected CSV header");
    }
    std::vector<SimCurve> curves;
    std::map<std::tuple<int, int, size_t, size_t, size_t>, size_t> index;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            f.push_back(cell);
        }
        if (f.size() != 13) {
            throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": expected 13 fields");
        }
        CodeLabel label{parse_field<int>(f[0], lineno), parse_field<int>(f[1], lineno),
                        parse_field<size_t>(f[2], lineno), parse_field<size_t>(f[3], lineno),
                        parse_field<size_t>(f[4], lineno)};
        SimPoint pt;
        pt.p = parse_field<double>(f[5], lineno);
        pt.trials = parse_field<uint64_t>(f[6], lineno);
        pt.failures = parse_field<uint64_t>(f[7], lineno);
        pt.p_log = parse_field<double>(f[8], lineno);
        pt.ci_low = parse_field<double>(f[9], lineno);
        pt.ci_high = parse_field<double>(f[10], lineno);
        pt.seed = parse_field<uint64_t>(f[11], lineno);
        if (pt.failures > pt.trials) {
            throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": failures exceed trials");
        }
        auto key = std::make_tuple(label.r, label.s, label.n, label.k, label.d);
        auto [it, inserted] = index.emplace(key, curves.size());
        if (inserted) {
            curves.push_back({label, {}});
        }
        curves[it->second].points.push_back(pt);
    }
    return curves;
}

}  // namespace hypsurf
