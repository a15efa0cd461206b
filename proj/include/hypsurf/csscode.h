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

#ifndef HYPSURF_CSSCODE_H
#define HYPSURF_CSSCODE_H

#include <string>
#include <vector>

#include "hypsurf/bitmatrix.h"
#include "hypsurf/tiling.h"

namespace hypsurf {

/// CSS code with qubits on edges, Z-checks on faces and X-checks on vertices.
///
/// logical_z[i] are cycles (Z-type logicals) and logical_x[i] cocycles (X-type),
/// paired so that logical_x[i] . logical_z[j] = delta_ij.
struct CssCode {
    size_t n = 0;
    size_t k = 0;
    BitMatrix h_x;
    BitMatrix h_z;
    std::vector<Chain> logical_x;
    std::vector<Chain> logical_z;

    /// Computes k and symplectically paired logical bases from the checks.
    static CssCode from_checks(BitMatrix h_x, BitMatrix h_z);

    /// h_x . h_z^T == 0.
    bool checks_commute() const;
};

CssCode from_tiling(const Tiling &t);

struct RateReport {
    size_t n = 0;
    size_t k = 0;
    /// n (1 - 2/r - 2/s) + 2, as numerator / (r s).
    long formula_numerator = 0;
    long formula_denominator = 1;
    bool formula_integral = false;
    bool match = false;

    double formula_value() const {
        return static_cast<double>(formula_numerator) / static_cast<double>(formula_denominator);
    }
};

/// Compares the homology k to k = n (1 - 2/r - 2/s) + 2. A mismatch is reported,
/// never thrown.
RateReport rate_check(const CssCode &code, int r, int s);

}  // namespace hypsurf

#endif
