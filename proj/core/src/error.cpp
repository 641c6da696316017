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

#include "cohlab/error.hpp"

namespace cohlab {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::dimension:
            return "dimension";
        case ErrorKind::non_hermitian:
            return "non_hermitian";
        case ErrorKind::invalid_state:
            return "invalid_state";
        case ErrorKind::invalid_witness:
            return "invalid_witness";
        case ErrorKind::incoherent_input:
            return "incoherent_input";
        case ErrorKind::empty_detection_set:
            return "empty_detection_set";
        case ErrorKind::invalid_bound_witness:
            return "invalid_bound_witness";
        case ErrorKind::invalid_channel:
            return "invalid_channel";
        case ErrorKind::non_convergence:
            return "non_convergence";
        case ErrorKind::parse:
            return "parse";
        case ErrorKind::usage:
            return "usage";
        case ErrorKind::out_of_range:
            return "out_of_range";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

void fail(ErrorKind kind, const std::string &message) {
    throw Error(kind, message);
}

}  // namespace cohlab
