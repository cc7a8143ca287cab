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

#ifndef RMSID_ERROR_HPP
#define RMSID_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace rmsid {

enum class ErrorKind {
    invalid_parameter,  // parameter outside its documented domain
    shape_mismatch,     // vector/sequence lengths disagree
    field_mismatch,     // operands live in different fields
    division_by_zero,
    capacity_exceeded,  // value does not fit the code / format
    too_large,          // enumeration or table beyond the supported budget
    infeasible,         // no parameters satisfy the request
    parse_error,        // malformed serialized input
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type thrown by the library; `kind()` is stable and
/// machine-readable, `what()` is for humans.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace rmsid

#endif
