// Copyright 2026 The gqd Authors
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

#include "gqd/error.hpp"

namespace gqd {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonHermitianInput:
            return "NonHermitianInput";
        case ErrorCode::NotPositiveSemiDefinite:
            return "NotPositiveSemiDefinite";
        case ErrorCode::InvalidState:
            return "InvalidState";
        case ErrorCode::NegativeTime:
            return "NegativeTime";
        case ErrorCode::DomainError:
            return "DomainError";
        case ErrorCode::StepTooLarge:
            return "StepTooLarge";
        case ErrorCode::NotXState:
            return "NotXState";
        case ErrorCode::OptimizerStall:
            return "OptimizerStall";
        case ErrorCode::NoConvergence:
            return "NoConvergence";
        case ErrorCode::ValidationError:
            return "ValidationError";
        case ErrorCode::ParseError:
            return "ParseError";
        case ErrorCode::IoError:
            return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

}  // namespace gqd
