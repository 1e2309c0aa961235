// Copyright 2026 The sparserank Authors
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

#include "sparserank/errors.hpp"

namespace sparserank {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::kLoopRejected: return "LoopRejected";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kInfeasibleParameters: return "InfeasibleParameters";
    case ErrorKind::kRejectionCapExceeded: return "RejectionCapExceeded";
    case ErrorKind::kOddDegreeSum: return "OddDegreeSum";
    case ErrorKind::kNotASpecialCycle: return "NotASpecialCycle";
    case ErrorKind::kNotPrime: return "NotPrime";
    case ErrorKind::kExactSizeExceeded: return "ExactSizeExceeded";
    case ErrorKind::kCriticalPoint: return "CriticalPoint";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kNoSeparation: return "NoSeparation";
    case ErrorKind::kNonPositiveLambda: return "NonPositiveLambda";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace sparserank
