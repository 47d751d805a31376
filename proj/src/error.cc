// Copyright 2026 The qsearch Authors
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

#include "qsearch/error.h"

namespace qsearch {

const char *to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonHermitian:
            return "NonHermitian";
        case ErrorCode::NonFinite:
            return "NonFinite";
        case ErrorCode::NonPositiveScale:
            return "NonPositiveScale";
        case ErrorCode::InvalidOverlap:
            return "InvalidOverlap";
        case ErrorCode::DegenerateOffDiagonal:
            return "DegenerateOffDiagonal";
        case ErrorCode::StepUnderflow:
            return "StepUnderflow";
        case ErrorCode::LabelMismatch:
            return "LabelMismatch";
        case ErrorCode::InvalidThreshold:
            return "InvalidThreshold";
        case ErrorCode::QuadratureFailure:
            return "QuadratureFailure";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {
}

}  // namespace qsearch
