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

#ifndef COHLAB_SERIALIZE_HPP
#define COHLAB_SERIALIZE_HPP

// JSON forms of matrices, witnesses, channels and every report type.
// Matrices are {"dim": d, "re": [...], "im": [...]} with row-major d^2
// arrays. Output field order is fixed and doubles print with 17
// significant digits, so identical inputs give byte-identical text.

#include <string>

#include <nlohmann/json.hpp>

#include "cohlab/channels.hpp"
#include "cohlab/linalg.hpp"
#include "cohlab/measures.hpp"
#include "cohlab/scheduler.hpp"
#include "cohlab/tomography.hpp"
#include "cohlab/witness.hpp"

namespace cohlab::io {

using Json = nlohmann::ordered_json;

/// Throws ErrorKind::parse on malformed text.
Json parse(const std::string &text);
Json read_file(const std::string &path);

/// Deterministic dump: %.17g doubles, non-finite doubles as null.
std::string dump(const Json &j, int indent = 2);

Json to_json(const Matrix &m);
/// Throws ErrorKind::parse for missing fields, wrong lengths or non-finite values.
Matrix matrix_from_json(const Json &j);

HermitianOperator hermitian_from_json(const Json &j, double tol = kDefaultTol);
DensityMatrix state_from_json(const Json &j, double tol = kDefaultTol);

/// Matrix object with {"kind": "witness", "tol": ...} prepended.
Json witness_to_json(const Witness &w);
/// Accepts a plain matrix or a witness object; "tol" in the file overrides `tol`.
Witness witness_from_json(const Json &j, double tol = kDefaultTol);

Json channel_to_json(const IncoherentChannel &channel);
IncoherentChannel channel_from_json(const Json &j, double tol = kDefaultTol);

Json to_json(const WitnessCheck &c);
Json to_json(const FinerReport &r);
Json to_json(const RatioReport &r);
Json to_json(const RobustnessSolution &s);
Json to_json(const Theorem4Report &r);
Json to_json(const StokesRecord &r);
Json to_json(const CountRecord &r);
Json to_json(const CoherenceDecision &d);
Json to_json(const DetectionResult &r);
Json to_json(const ExpectationReport &r);
Json to_json(const DickeReport &r);

}  // namespace cohlab::io

#endif
