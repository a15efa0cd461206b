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

#ifndef HYPSURF_ERROR_H
#define HYPSURF_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypsurf {

enum class ErrorCode {
    kEnumerationOverflow,
    kDegenerateQuotient,
    kNoNontrivialCycle,
    kBudgetExceeded,
    kOddSyndrome,
    kOpenSyndrome,
    kRegionTooShort,
    kParse,
    kInvalidArgument,
};

/// Stable upper-case name printed by the CLI, e.g. "ENUMERATION_OVERFLOW".
std::string_view error_name(ErrorCode code);

/// Domain error raised by every hypsurf module.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace hypsurf

#endif
