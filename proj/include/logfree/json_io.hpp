/*
   Copyright 2026 The logfree authors

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

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "logfree/criterion.hpp"

namespace logfree {

// JSON schemas. nlohmann orders object keys alphabetically, so dumping a
// document twice yields identical bytes; certificates stay reproducible.
//
//   problem   "logfree-problem/1"
//   freeness  "logfree-certificate/1"
//   poschar   "logfree-poschar/1"
//   syzygies  "logfree-syzygies/1"
//   divisor   "logfree-divisor/1"
//   indep     "logfree-independence/1"
//   error     "logfree-error/1"
//   fixtures  "logfree-fixtures/1"

using json = nlohmann::json;

inline json field_to_json(const FieldSpec& f) {
    if (f.is_rationals()) return json{{"kind", "rationals"}};
    return json{{"kind", "prime"}, {"p", f.characteristic()}};
}

inline FieldSpec field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        fail(ErrorCode::InvalidProblem, "field must be an object with a 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rationals") {
        for (auto& [k, v] : j.items())
            if (k != "kind") fail(ErrorCode::InvalidProblem, "unknown field key '" + k + "'");
        return FieldSpec::rationals();
    }
    if (kind == "prime") {
        for (auto& [k, v] : j.items())
            if (k != "kind" && k != "p")
                fail(ErrorCode::InvalidProblem, "unknown field key '" + k + "'");
        if (!j.contains("p") || !j.at("p").is_number_unsigned())
            fail(ErrorCode::InvalidProblem, "prime field needs an unsigned 'p'");
        return FieldSpec::prime_field(j.at("p").get<std::uint64_t>());
    }
    fail(ErrorCode::InvalidProblem, "unknown field kind '" + kind + "'");
}

inline json ring_to_json(const RingPtr& ring) {
    return json{{"field", field_to_json(ring->field)},
                {"variables", ring->vars},
                {"order", ring->order.name()}};
}

inline json error_to_json(const Error& e) {
    json j{{"schema", "logfree-error/1"},
           {"verdict", "PreconditionFailed"},
           {"error", json{{"code", error_code_name(e.code())}, {"message", e.what()}}}};
    if (e.position()) j["error"]["location"] = *e.position();
    if (!e.witness().empty()) j["error"]["witness"] = e.witness();
    return j;
}

inline json certificate_to_json(const FreenessCertificate& c) {
    json j;
    j["schema"] = "logfree-certificate/1";
    j["command"] = c.command;
    j["verdict"] = verdict_name(c.verdict);
    j["h"] = to_string(c.h);
    j["g_theta"] = to_string(c.g_theta);
    j["g_alpha"] = to_string(c.g_alpha);
    j["g_alphagamma"] = to_string(c.g_alphagamma);
    j["splitting_degrees"] = c.splitting_degrees;
    j["chern"] = json{{"sum_splitting_degrees", c.chern_sum_splitting},
                      {"sum_twists_minus_deg_g_alpha", c.chern_sum_twists}};
    j["ring"] = ring_to_json(c.ring);
    j["gamma_kind"] = c.gamma_kind;
    j["inputs_echo"] = json{{"sequence", c.sigma_echo}, {"nu", c.nu_echo},
                            {"gamma", c.gamma_echo},   {"theta", c.theta_echo},
                            {"alpha", c.alpha_echo},   {"alphagamma", c.alphagamma_echo}};
    j["notes"] = c.notes;
    return j;
}

inline json split_certificate_to_json(const SplitCertificate& c) {
    json j;
    j["schema"] = "logfree-poschar/1";
    j["command"] = "poschar";
    j["verdict"] = c.certified ? "Free" : "NotCertified";
    j["certified"] = c.certified;
    j["char_p"] = c.char_p;
    j["d"] = c.d;
    j["gcd_degree"] = c.gcd_degree;
    j["alt_formula_d"] = c.alt_formula_d;
    j["formula_agrees"] = c.formula_agrees;
    j["oracle_degrees"] = c.oracle_degrees;
    j["syzygy_generator_degrees"] = c.syzygy_generator_degrees;
    j["pair"] = c.pair_echo;
    j["ring"] = ring_to_json(c.ring);
    j["inputs_echo"] = json{{"sequence", c.sigma_echo}};
    j["notes"] = c.notes;
    return j;
}

inline json syzygies_to_json(const SyzygyBasis& s, const RingPtr& ring,
                             const std::vector<std::string>& sequence_echo) {
    json cols = json::array();
    for (const auto& col : s.columns) {
        json c = json::array();
        for (const Poly& p : col) c.push_back(to_string(p));
        cols.push_back(c);
    }
    json j;
    j["schema"] = "logfree-syzygies/1";
    j["command"] = "syzygies";
    j["columns"] = cols;
    j["degrees"] = s.degrees;
    j["truncated"] = s.truncated;
    if (s.degree_bound) j["degree_bound"] = *s.degree_bound;
    j["ring"] = ring_to_json(ring);
    j["inputs_echo"] = json{{"sequence", sequence_echo}};
    return j;
}

inline json divisor_to_json(const DivisorClass& d, const PolyMatrix& m, std::size_t rank) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m.at(i, j)));
        rows.push_back(r);
    }
    json j;
    j["schema"] = "logfree-divisor/1";
    j["command"] = "divisor-of-map";
    j["equation"] = to_string(d.equation);
    j["degree"] = d.degree;
    j["rank"] = rank;
    j["matrix"] = rows;
    j["ring"] = ring_to_json(m.ring());
    json notes = json::array();
    if (rank < std::min(m.rows(), m.cols()))
        notes.push_back("matrix is rank deficient; minors taken at the generic rank " +
                        std::to_string(rank));
    j["notes"] = notes;
    return j;
}

inline json independence_to_json(const IndependenceResult& r, const RingPtr& ring,
                                 const std::vector<std::string>& sequence_echo) {
    json j;
    j["schema"] = "logfree-independence/1";
    j["command"] = "independence";
    j["independent"] = r.independent;
    if (r.witness) {
        j["witness"] = to_string(*r.witness);
        j["witness_variables"] = r.witness->ring()->vars;
    }
    j["ring"] = ring_to_json(ring);
    j["inputs_echo"] = json{{"sequence", sequence_echo}};
    return j;
}

/// Problem file ("logfree-problem/1"). Unknown keys are rejected at every
/// level so typos cannot silently change a run.
struct ProblemOptions {
    MonomialOrder order = MonomialOrder::grevlex();
    std::optional<Degree> degree_bound;
    bool assume_independent = false;
    DetMethod method = DetMethod::Bareiss;
};

struct ProblemBlock {
    std::vector<std::string> vars;
    std::string poly;
};

struct ProblemFile {
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::string> variables;
    std::vector<std::string> sequence;
    std::optional<std::vector<std::vector<std::string>>> nu;
    std::optional<std::string> gamma_kind; // "euler" | "block-euler" | "explicit"
    std::vector<std::vector<std::string>> gamma_partition;
    std::optional<std::vector<std::vector<std::string>>> gamma_matrix;
    std::optional<std::vector<std::vector<std::string>>> matrix; // divisor-of-map input
    std::optional<std::vector<ProblemBlock>> blocks;
    ProblemOptions options;
};

namespace detail {

inline void check_keys(const json& obj, const std::vector<std::string>& allowed,
                       const std::string& where) {
    for (auto& [k, v] : obj.items()) {
        bool ok = false;
        for (const auto& a : allowed)
            if (k == a) ok = true;
        if (!ok) fail(ErrorCode::InvalidProblem, "unknown key '" + k + "' in " + where);
    }
}

inline std::vector<std::vector<std::string>> string_matrix_from_json(const json& j,
                                                                     const std::string& where) {
    if (!j.is_array()) fail(ErrorCode::InvalidProblem, where + " must be an array of rows");
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) fail(ErrorCode::InvalidProblem, where + " rows must be arrays");
        std::vector<std::string> row;
        for (const auto& e : r) {
            if (!e.is_string())
                fail(ErrorCode::InvalidProblem, where + " entries must be strings");
            row.push_back(e.get<std::string>());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace detail

inline ProblemFile problem_from_json(const json& j) {
    if (!j.is_object()) fail(ErrorCode::InvalidProblem, "problem must be a JSON object");
    detail::check_keys(j,
                       {"schema", "field", "variables", "sequence", "nu", "gamma", "matrix",
                        "blocks", "options"},
                       "problem");
    if (!j.contains("schema") || j.at("schema") != "logfree-problem/1")
        fail(ErrorCode::InvalidProblem, "missing or unsupported schema (want logfree-problem/1)");

    ProblemFile p;
    if (j.contains("field")) p.field = field_from_json(j.at("field"));
    if (!j.contains("variables") || !j.at("variables").is_array())
        fail(ErrorCode::InvalidProblem, "problem needs a 'variables' array");
    for (const auto& v : j.at("variables")) {
        if (!v.is_string()) fail(ErrorCode::InvalidProblem, "variable names must be strings");
        p.variables.push_back(v.get<std::string>());
    }

    if (j.contains("sequence")) {
        if (!j.at("sequence").is_array())
            fail(ErrorCode::InvalidProblem, "'sequence' must be an array of strings");
        for (const auto& s : j.at("sequence")) {
            if (!s.is_string())
                fail(ErrorCode::InvalidProblem, "'sequence' entries must be strings");
            p.sequence.push_back(s.get<std::string>());
        }
    }

    if (j.contains("nu")) p.nu = detail::string_matrix_from_json(j.at("nu"), "'nu'");
    if (j.contains("matrix"))
        p.matrix = detail::string_matrix_from_json(j.at("matrix"), "'matrix'");

    if (j.contains("gamma")) {
        const json& g = j.at("gamma");
        if (g.is_string()) {
            const std::string s = g.get<std::string>();
            if (s != "euler")
                fail(ErrorCode::InvalidProblem, "gamma string must be 'euler', got '" + s + "'");
            p.gamma_kind = "euler";
        } else if (g.is_object()) {
            detail::check_keys(g, {"block-euler"}, "gamma");
            if (!g.contains("block-euler"))
                fail(ErrorCode::InvalidProblem, "gamma object must carry 'block-euler'");
            p.gamma_kind = "block-euler";
            p.gamma_partition =
                detail::string_matrix_from_json(g.at("block-euler"), "'block-euler'");
        } else if (g.is_array()) {
            p.gamma_kind = "explicit";
            p.gamma_matrix = detail::string_matrix_from_json(g, "'gamma'");
        } else {
            fail(ErrorCode::InvalidProblem, "bad 'gamma' value");
        }
    }

    if (j.contains("blocks")) {
        if (!j.at("blocks").is_array())
            fail(ErrorCode::InvalidProblem, "'blocks' must be an array");
        std::vector<ProblemBlock> blocks;
        for (const auto& b : j.at("blocks")) {
            if (!b.is_object()) fail(ErrorCode::InvalidProblem, "block must be an object");
            detail::check_keys(b, {"vars", "poly"}, "block");
            ProblemBlock pb;
            if (!b.contains("vars") || !b.at("vars").is_array())
                fail(ErrorCode::InvalidProblem, "block needs a 'vars' array");
            for (const auto& v : b.at("vars")) pb.vars.push_back(v.get<std::string>());
            if (!b.contains("poly") || !b.at("poly").is_string())
                fail(ErrorCode::InvalidProblem, "block needs a 'poly' string");
            pb.poly = b.at("poly").get<std::string>();
            blocks.push_back(std::move(pb));
        }
        p.blocks = std::move(blocks);
    }

    if (j.contains("options")) {
        const json& o = j.at("options");
        if (!o.is_object()) fail(ErrorCode::InvalidProblem, "'options' must be an object");
        detail::check_keys(o, {"order", "degree_bound", "assume_independent", "method"},
                           "options");
        if (o.contains("order")) p.options.order = order_from_name(o.at("order").get<std::string>());
        if (o.contains("degree_bound")) {
            if (!o.at("degree_bound").is_number_integer())
                fail(ErrorCode::InvalidProblem, "'degree_bound' must be an integer");
            p.options.degree_bound = o.at("degree_bound").get<Degree>();
        }
        if (o.contains("assume_independent")) {
            if (!o.at("assume_independent").is_boolean())
                fail(ErrorCode::InvalidProblem, "'assume_independent' must be a boolean");
            p.options.assume_independent = o.at("assume_independent").get<bool>();
        }
        if (o.contains("method"))
            p.options.method = det_method_from_name(o.at("method").get<std::string>());
    }
    return p;
}

inline json problem_to_json(const ProblemFile& p) {
    json j;
    j["schema"] = "logfree-problem/1";
    j["field"] = field_to_json(p.field);
    j["variables"] = p.variables;
    if (!p.sequence.empty()) j["sequence"] = p.sequence;
    if (p.nu) j["nu"] = *p.nu;
    if (p.gamma_kind) {
        if (*p.gamma_kind == "euler")
            j["gamma"] = "euler";
        else if (*p.gamma_kind == "block-euler")
            j["gamma"] = json{{"block-euler", p.gamma_partition}};
        else
            j["gamma"] = *p.gamma_matrix;
    }
    if (p.matrix) j["matrix"] = *p.matrix;
    if (p.blocks) {
        json bs = json::array();
        for (const auto& b : *p.blocks) bs.push_back(json{{"vars", b.vars}, {"poly", b.poly}});
        j["blocks"] = bs;
    }
    json o;
    o["order"] = p.options.order.name();
    if (p.options.degree_bound) o["degree_bound"] = *p.options.degree_bound;
    o["assume_independent"] = p.options.assume_independent;
    o["method"] = p.options.method == DetMethod::Bareiss ? "bareiss" : "cofactor";
    j["options"] = o;
    return j;
}

/// Canonical one-true-rendering of every emitted document.
inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

} // namespace logfree
