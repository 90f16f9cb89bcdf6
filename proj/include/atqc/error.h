// Copyright 2026 The atqc Authors
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

#ifndef ATQC_ERROR_H
#define ATQC_ERROR_H

#include <stdexcept>
#include <string>

namespace atqc {

enum class ErrorKind {
    kInvalidInput,  // malformed arguments or out-of-domain parameters
    kIntegrity,     // a complex or code violates a structural invariant
    kDiscrepancy,   // two independent computations disagree
    kIo,
};

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string &message) {
    throw Error(ErrorKind::kInvalidInput, message);
}

[[noreturn]] inline void throw_integrity(const std::string &message) {
    throw Error(ErrorKind::kIntegrity, message);
}

[[noreturn]] inline void throw_discrepancy(const std::string &message) {
    throw Error(ErrorKind::kDiscrepancy, message);
}

[[noreturn]] inline void throw_io(const std::string &message) {
    throw Error(ErrorKind::kIo, message);
}

}  // namespace atqc

#endif
