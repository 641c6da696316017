// Copyright 2026 The cohlab Authors
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

#ifndef COHLAB_ERROR_HPP
#define COHLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cohlab {

/// Failure categories. The CLI maps each category onto a process exit code.
enum class ErrorKind {
    dimension,
    non_hermitian,
    invalid_state,
    invalid_witness,
    incoherent_input,
    empty_detection_set,
    invalid_bound_witness,
    invalid_channel,
    non_convergence,
    parse,
    usage,
    out_of_range,
};

const char *error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string &message);

}  // namespace cohlab

#endif
