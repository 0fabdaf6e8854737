// Copyright 2026 The paretogof Authors
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

#include "paretogof/error.hpp"

namespace paretogof {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kDegenerateSample: return "degenerate sample";
    case ErrorCode::kSupportViolation: return "support violation";
    case ErrorCode::kContractViolation: return "contract violation";
    case ErrorCode::kNonfiniteStatistic: return "nonfinite statistic";
    case ErrorCode::kDegenerateSpacing: return "degenerate spacing";
    case ErrorCode::kBandwidth: return "bandwidth";
    case ErrorCode::kWeightSingularity: return "weight singularity";
    case ErrorCode::kInsufficientResolution: return "insufficient resolution";
    case ErrorCode::kUnsupportedFamily: return "unsupported family";
    case ErrorCode::kResampleExhausted: return "resample exhausted";
    case ErrorCode::kParse: return "parse error";
  }
  return "error";
}

}  // namespace paretogof
