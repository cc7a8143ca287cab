/*
   Copyright 2026 The rmsid Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "rmsid/error.hpp"

namespace rmsid {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_parameter: return "invalid_parameter";
        case ErrorKind::shape_mismatch: return "shape_mismatch";
        case ErrorKind::field_mismatch: return "field_mismatch";
        case ErrorKind::division_by_zero: return "division_by_zero";
        case ErrorKind::capacity_exceeded: return "capacity_exceeded";
        case ErrorKind::too_large: return "too_large";
        case ErrorKind::infeasible: return "infeasible";
        case ErrorKind::parse_error: return "parse_error";
    }
    return "unknown";
}

}  // namespace rmsid
