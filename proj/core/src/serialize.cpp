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

#include "cohlab/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cohlab::io {

namespace {

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void dump_into(std::string &out, const Json &j, int indent, int depth) {
    const auto newline = [&](int d) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += Json(it.key()).dump();
                out += indent < 0 ? ":" : ": ";
                dump_into(out, it.value(), indent, depth + 1);
            }
            newline(depth);
            out += '}';
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line.
            bool scalar = true;
            for (const auto &e : j) scalar = scalar && !e.is_structured();
            out += '[';
            bool first = true;
            for (const auto &e : j) {
                if (!first) out += scalar && indent >= 0 ? ", " : ",";
                first = false;
                if (!scalar) newline(depth + 1);
                dump_into(out, e, indent, depth + 1);
            }
            if (!scalar) newline(depth);
            out += ']';
            return;
        }
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
    }
}

const Json &field(const Json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) fail(ErrorKind::parse, std::string("missing field \"") + name + "\"");
    return j.at(name);
}

double finite_number(const Json &v, const char *what) {
    if (!v.is_number()) fail(ErrorKind::parse, std::string(what) + " must be numeric");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(ErrorKind::parse, std::string(what) + " must be finite");
    return x;
}

Json optional_double(double v) {
    return std::isfinite(v) ? Json(v) : Json(nullptr);
}

}  // namespace

Json parse(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::parse, std::string("malformed JSON: ") + e.what());
    }
}

Json read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::parse, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string dump(const Json &j, int indent) {
    std::string out;
    dump_into(out, j, indent, 0);
    return out;
}

Json to_json(const Matrix &m) {
    Json j;
    j["dim"] = m.rows();
    Json re = Json::array(), im = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            re.push_back(m(r, c).real());
            im.push_back(m(r, c).imag());
        }
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j;
}

Matrix matrix_from_json(const Json &j) {
    const Json &dim_v = field(j, "dim");
    if (!dim_v.is_number_integer() || dim_v.get<long long>() < 1 ||
        dim_v.get<long long>() > static_cast<long long>(kMaxDim)) {
        fail(ErrorKind::parse, "\"dim\" must be an integer in [1, 64]");
    }
    const auto d = static_cast<Eigen::Index>(dim_v.get<long long>());
    const Json &re = field(j, "re");
    const Json &im = field(j, "im");
    if (!re.is_array() || !im.is_array()) fail(ErrorKind::parse, "\"re\" and \"im\" must be arrays");
    const auto n = static_cast<std::size_t>(d * d);
    if (re.size() != n || im.size() != n) {
        fail(ErrorKind::parse, "\"re\" and \"im\" must hold dim^2 = " + std::to_string(n) + " entries");
    }
    Matrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            const auto k = static_cast<std::size_t>(r * d + c);
            m(r, c) = Complex(finite_number(re[k], "matrix entry"), finite_number(im[k], "matrix entry"));
        }
    }
    return m;
}

HermitianOperator hermitian_from_json(const Json &j, double tol) {
    return HermitianOperator(matrix_from_json(j), tol);
}

DensityMatrix state_from_json(const Json &j, double tol) {
    return DensityMatrix(matrix_from_json(j), tol);
}

Json witness_to_json(const Witness &w) {
    Json j;
    j["kind"] = "witness";
    j["tol"] = w.tol();
    const Json m = to_json(w.matrix());
    for (auto it = m.begin(); it != m.end(); ++it) j[it.key()] = *it;
    return j;
}

Witness witness_from_json(const Json &j, double tol) {
    if (j.is_object() && j.contains("kind") && j.at("kind") != "witness") {
        fail(ErrorKind::parse, "expected \"kind\": \"witness\"");
    }
    if (j.is_object() && j.contains("tol")) tol = finite_number(j.at("tol"), "\"tol\"");
    return Witness(HermitianOperator(matrix_from_json(j), tol));
}

Json channel_to_json(const IncoherentChannel &channel) {
    Json j;
    j["kind"] = "incoherent_channel";
    Json list = Json::array();
    for (const auto &k : channel.kraus()) list.push_back(to_json(k.matrix()));
    j["kraus"] = std::move(list);
    return j;
}

IncoherentChannel channel_from_json(const Json &j, double tol) {
    if (field(j, "kind") != "incoherent_channel") fail(ErrorKind::parse, "expected \"kind\": \"incoherent_channel\"");
    const Json &list = field(j, "kraus");
    if (!list.is_array() || list.empty()) fail(ErrorKind::parse, "\"kraus\" must be a non-empty array");
    std::vector<ComplexMatrix> kraus;
    for (const auto &m : list) kraus.emplace_back(matrix_from_json(m));
    return IncoherentChannel(std::move(kraus), tol);
}

Json to_json(const WitnessCheck &c) {
    Json j;
    j["witness"] = c.valid;
    j["diagonal_nonnegative"] = c.diagonal_nonnegative;
    j["detects_something"] = c.detects_something;
    j["min_diagonal"] = c.min_diagonal;
    j["lambda_min"] = c.lambda_min;
    j["trace"] = c.trace;
    if (!c.diagnostic.empty()) j["diagnostic"] = c.diagnostic;
    return j;
}

Json to_json(const FinerReport &r) {
    Json j;
    j["finer"] = r.finer;
    j["epsilon"] = r.epsilon;
    j["epsilon_max"] = r.epsilon_max;
    j["positive_part"] = r.positive_part ? to_json(r.positive_part->matrix()) : Json(nullptr);
    j["xi_lower"] = optional_double(r.xi_lower);
    j["witness_margin"] = r.witness_margin;
    return j;
}

Json to_json(const RatioReport &r) {
    Json j;
    j["c_h"] = r.c_h;
    j["c_l1"] = r.c_l1;
    j["upper_holds"] = r.upper_holds;
    j["lower_holds"] = r.lower_holds;
    return j;
}

Json to_json(const RobustnessSolution &s) {
    Json j;
    j["value"] = s.value;
    j["d"] = s.incoherent_cover;
    j["tau"] = s.tau ? to_json(s.tau->matrix()) : Json(nullptr);
    j["dual_witness"] = s.dual_witness ? to_json(s.dual_witness->matrix()) : Json(nullptr);
    j["primal_gap"] = s.primal_gap;
    j["dual_gap"] = s.dual_gap;
    j["iterations"] = s.iterations;
    return j;
}

Json to_json(const Theorem4Report &r) {
    Json j;
    j["residual"] = r.residual;
    j["c_h_rho"] = r.c_h_rho;
    j["s"] = r.s;
    j["c_h_tau"] = r.c_h_tau;
    j["tau_bound_holds"] = r.tau_bound_holds;
    return j;
}

Json to_json(const StokesRecord &r) {
    Json j;
    j["n0"] = r.counts[0];
    j["n1"] = r.counts[1];
    j["n2"] = r.counts[2];
    j["n3"] = r.counts[3];
    j["N"] = r.intensity;
    j["expectation"] = r.expectation;
    return j;
}

Json to_json(const CountRecord &r) {
    Json j;
    j["generator"] = r.generator;
    j["kind"] = generator_kind_name(r.kind);
    j["shots"] = r.shots;
    j["outcomes"] = r.outcomes;
    j["counts"] = r.counts;
    j["estimate"] = r.estimate;
    j["stderr"] = r.std_error;
    j["expectation"] = r.expectation;
    return j;
}

Json to_json(const CoherenceDecision &d) {
    Json j;
    j["verdict"] = d.coherent ? "coherent" : "incoherent";
    j["witness_index"] = d.witness ? Json(*d.witness) : Json(nullptr);
    j["threshold"] = d.threshold;
    Json z = Json::array();
    for (double v : d.z_scores) z.push_back(optional_double(v));
    j["z_scores"] = std::move(z);
    return j;
}

Json to_json(const DetectionResult &r) {
    Json j;
    j["verdict"] = verdict_name(r.verdict);
    j["measurements_used"] = r.measurements_used;
    j["witness_index"] = r.witness_index ? Json(*r.witness_index) : Json(nullptr);
    j["ordering"] = r.ordering;
    j["estimates"] = r.estimates;
    Json z = Json::array();
    for (double v : r.z_scores) z.push_back(optional_double(v));
    j["z_scores"] = std::move(z);
    j["threshold"] = r.threshold;
    return j;
}

Json to_json(const ExpectationReport &r) {
    Json j;
    j["N"] = r.n;
    j["i"] = r.i;
    j["E_formula"] = r.e_formula;
    j["E_closed"] = r.e_closed;
    j["E_mc"] = r.e_mc;
    j["mc_stderr"] = r.mc_stderr;
    j["trials"] = r.trials;
    return j;
}

Json to_json(const DickeReport &r) {
    Json j;
    j["reported_value"] = r.reported_value;
    j["observables"] = to_json(r.observables);
    j["ordered"] = to_json(r.ordered);
    j["detect_mean"] = r.detect_mean;
    j["detect_stderr"] = r.detect_stderr;
    j["detect_runs"] = r.detect_runs;
    j["reported_matches_observables"] = r.reported_matches_observables;
    j["reported_matches_ordered"] = r.reported_matches_ordered;
    return j;
}

}  // namespace cohlab::io
