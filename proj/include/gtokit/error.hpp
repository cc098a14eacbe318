// Copyright 2026 The gtokit Authors
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

#ifndef GTOKIT_ERROR_HPP
#define GTOKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gtokit {

enum class ErrorCode {
    NotHermitian,
    NotSymmetric,
    NotUnitary,
    DimensionMismatch,
    ShapeMismatch,
    NotPhysical,
    NonPositiveProduct,
    IndexOutOfRange,
    InvalidArgument,
    NotMajorized,
    NotWeaklyMajorized,
    NegativeEntry,
    ModeCountMismatch,
    NegativeDelta,
    Infeasible,
    RatioConflict,
    DegenerateRatio,
    NotDecouplable,
    ParameterOutOfRange,
    SolverFailure,
    DegenerateInput,
    ParseError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace gtokit

#endif
