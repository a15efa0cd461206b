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

#include "hypsurf/error.h"

namespace hypsurf {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kEnumerationOverflow:
            return "ENUMERATION_OVERFLOW";
        case ErrorCode::kDegenerateQuotient:
            return "DEGENERATE_QUOTIENT";
        case ErrorCode::kNoNontrivialCycle:
            return "NO_NONTRIVIAL_CYCLE";
        case ErrorCode::kBudgetExceeded:
            return "BUDGET_EXCEEDED";
        case ErrorCode::kOddSyndrome:
            return "ODD_SYNDROME";
        case ErrorCode::kOpenSyndrome:
            return "OPEN_SYNDROME";
        case ErrorCode::kRegionTooShort:
            return "REGION_TOO_SHORT";
        case ErrorCode::kParse:
            return "PARSE_ERROR";
        case ErrorCode::kInvalidArgument:
            return "INVALID_ARGUMENT";
    }
    return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string &what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {
}

}  // namespace hypsurf
