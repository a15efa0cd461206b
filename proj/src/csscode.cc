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

#include "hypsurf/csscode.h"

#include <stdexcept>

#include "hypsurf/error.h"
#include "hypsurf/homology.h"

namespace hypsurf {

namespace {

// Representatives of ker(checks) modulo rowspace(stabilizers), `count` of them.
std::vector<Chain> homology_representatives(const BitMatrix &checks, const BitMatrix &stabilizers, size_t count) {
    RowReducer reducer(checks.cols());
    for (size_t r = 0; r < stabilizers.rows(); ++r) {
        reducer.insert(stabilizers.row(r));
    }
    std::vector<Chain> reps;
    for (Chain &v : kernel_basis(checks)) {
        if (reps.size() == count) {
            break;
        }
        if (reducer.insert(v)) {
            reps.push_back(std::move(v));
        }
    }
    return reps;
}

}  // namespace

CssCode CssCode::from_checks(BitMatrix h_x, BitMatrix h_z) {
    if (h_x.cols() != h_z.cols()) {
        throw Error(ErrorCode::kInvalidArgument, "h_x and h_z act on different qubit counts");
    }
    CssCode code;
    code.n = h_x.cols();
    code.h_x = std::move(h_x);
    code.h_z = std::move(h_z);
    if (!code.checks_commute()) {
        throw Error(ErrorCode::kInvalidArgument, "X and Z checks do not commute");
    }
    code.k = code.n - rank(code.h_x) - rank(code.h_z);

    code.logical_z = homology_representatives(code.h_x, code.h_z, code.k);
    std::vector<Chain> xs = homology_representatives(code.h_z, code.h_x, code.k);
    if (code.logical_z.size() != code.k || xs.size() != code.k) {
        throw std::logic_error("logical basis size disagrees with k");
    }

    BitMatrix overlap(code.k, code.k);
    for (size_t i = 0; i < code.k; ++i) {
        for (size_t j = 0; j < code.k; ++j) {
            overlap.set(i, j, xs[i].dot(code.logical_z[j]));
        }
    }
    BitMatrix inv = inverse(overlap);
    if (inv.rows() != code.k) {
        throw std::logic_error("logical overlap matrix is singular");
    }
    for (size_t i = 0; i < code.k; ++i) {
        Chain x(code.n);
        for (uint32_t j : inv.row(i).support()) {
            x ^= xs[j];
        }
        code.logical_x.push_back(std::move(x));
    }
    return code;
}

bool CssCode::checks_commute() const {
    for (size_t i = 0; i < h_x.rows(); ++i) {
        for (size_t j = 0; j < h_z.rows(); ++j) {
            if (h_x.row(i).dot(h_z.row(j))) {
                return false;
            }
        }
    }
    return true;
}

CssCode from_tiling(const Tiling &t) {
    return CssCode::from_checks(boundary1(t), boundary2(t).transposed());
}

RateReport rate_check(const CssCode &code, int r, int s) {
    RateReport rep;
    rep.n = code.n;
    rep.k = code.k;
    const long rs = static_cast<long>(r) * s;
    rep.formula_numerator = static_cast<long>(code.n) * (rs - 2L * r - 2L * s) + 2 * rs;
    rep.formula_denominator = rs;
    rep.formula_integral = rep.formula_numerator % rs == 0;
    rep.match = rep.formula_integral && rep.formula_numerator / rs == static_cast<long>(code.k);
    return rep;
}

}  // namespace hypsurf
