// Copyright 2026 The ionc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ionc/error.hpp"

namespace ionc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidRegister: return "invalid-register";
    case ErrorCode::MalformedGate: return "malformed-gate";
    case ErrorCode::Wire: return "wire";
    case ErrorCode::Splice: return "splice";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::UnsupportedFeature: return "unsupported-feature";
    case ErrorCode::UnsupportedGate: return "unsupported-gate";
    case ErrorCode::Capacity: return "capacity";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::InvalidPermutation: return "invalid-permutation";
    case ErrorCode::PassOrder: return "pass-order";
    case ErrorCode::Verification: return "verification";
    case ErrorCode::Io: return "io";
    case ErrorCode::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

ParseError::ParseError(ErrorCode code, const std::string& message, int line, int column)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

}  // namespace ionc
