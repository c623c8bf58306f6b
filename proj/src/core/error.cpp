// Copyright 2026 The infogeo Authors
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

#include "infogeo/error.hpp"

namespace infogeo {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMetric: return "SingularMetric";
    case ErrorCode::AbsoluteContinuityViolation: return "AbsoluteContinuityViolation";
    case ErrorCode::ZeroLikelihoodBoth: return "ZeroLikelihoodBoth";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::WrongType: return "WrongType";
    case ErrorCode::ImpossibleOutcome: return "ImpossibleOutcome";
    }
    return "Unknown";
}

}  // namespace infogeo
