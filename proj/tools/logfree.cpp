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

// Command-line front end: parses problem files, runs the freeness engine
// and writes machine-checkable certificates.
//
// Exit codes: 0 = Free / verified, 1 = NotCertified (or dependent),
// 2 = precondition failure, bad input, or internal error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "logfree/logfree.hpp"

namespace {

using namespace logfree;

constexpr int kExitFree = 0;
constexpr int kExitNotCertified = 1;
constexpr int kExitError = 2;

struct CommonArgs {
    std::string input;
    std::string emit;
    std::optional<std::string> order;
    std::optional<long> degree_bound;
    bool assume_independent = false;
    std::optional<std::string> method;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_input = true) {
    auto* in = cmd->add_option("--input", args.input, "problem file (logfree-problem/1 JSON)");
    if (needs_input) in->required();
    cmd->add_option("--emit", args.emit, "write the certificate to this path instead of stdout");
    cmd->add_option("--order", args.order, "monomial order: grevlex|lex|gradedlex")
        ->check(CLI::IsMember({"grevlex", "lex", "gradedlex"}));
    cmd->add_option("--syzygy-degree-bound", args.degree_bound,
                    "truncate syzygy searches at this degree");
    cmd->add_flag("--assume-independent", args.assume_independent,
                  "skip the algebraic independence check");
    cmd->add_option("--method", args.method, "determinant path: bareiss|cofactor")
        ->check(CLI::IsMember({"bareiss", "cofactor"}));
}

void write_output(const std::string& emit_path, const json& doc) {
    const std::string text = dump_json(doc);
    if (emit_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(emit_path, std::ios::binary);
    if (!out) fail(ErrorCode::InvalidProblem, "cannot open emit path '" + emit_path + "'");
    out << text;
}

struct LoadedProblem {
    ProblemFile problem;
    RingPtr ring;
    CheckOptions check;
};

LoadedProblem load_problem(const CommonArgs& args) {
    std::ifstream in(args.input);
    if (!in) fail(ErrorCode::InvalidProblem, "cannot read input file '" + args.input + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(ErrorCode::InvalidProblem, std::string("input is not valid JSON: ") + e.what());
    }
    LoadedProblem lp{problem_from_json(j), nullptr, {}};
    // command-line flags take precedence over the problem file's options
    if (args.order) lp.problem.options.order = order_from_name(*args.order);
    if (args.degree_bound) lp.problem.options.degree_bound = *args.degree_bound;
    if (args.assume_independent) lp.problem.options.assume_independent = true;
    if (args.method) lp.problem.options.method = det_method_from_name(*args.method);

    lp.ring = make_ring(lp.problem.field, lp.problem.variables, lp.problem.options.order);
    lp.check.assume_independent = lp.problem.options.assume_independent;
    lp.check.method = lp.problem.options.method;
    lp.check.degree_bound = lp.problem.options.degree_bound;
    return lp;
}

std::vector<Poly> parse_sequence(const LoadedProblem& lp) {
    if (lp.problem.sequence.empty())
        fail(ErrorCode::InvalidProblem, "problem needs a nonempty 'sequence'");
    std::vector<Poly> polys;
    for (const auto& s : lp.problem.sequence) polys.push_back(parse_poly(s, lp.ring));
    return polys;
}

PolyMatrix parse_string_matrix(const RingPtr& ring,
                               const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Poly>> ps;
    for (const auto& row : rows) {
        std::vector<Poly> pr;
        for (const auto& s : row) pr.push_back(parse_poly(s, ring));
        ps.push_back(std::move(pr));
    }
    return PolyMatrix::from_rows(ring, ps);
}

GammaSpec gamma_from_problem(const LoadedProblem& lp) {
    if (!lp.problem.gamma_kind || *lp.problem.gamma_kind == "euler") return GammaSpec::euler();
    if (*lp.problem.gamma_kind == "block-euler")
        return GammaSpec::block_euler(lp.problem.gamma_partition);
    return GammaSpec::explicit_matrix(parse_string_matrix(lp.ring, *lp.problem.gamma_matrix));
}

int exit_code_for(Verdict v) {
    return v == Verdict::Free ? kExitFree : kExitNotCertified;
}

// When nu is missing, search the syzygy module for candidate matrices and
// certify with the first one that works.
template <typename CheckFn>
std::pair<json, int> run_with_candidate_search(const SequenceSpec& sigma,
                                               const LoadedProblem& lp, CheckFn&& check_one) {
    auto candidates = find_candidate_nu(sigma, lp.check.degree_bound, lp.check);
    std::optional<FreenessCertificate> first_failed;
    std::size_t tried = 0;
    for (const PolyMatrix& nu : candidates) {
        FreenessCertificate cert = check_one(nu);
        ++tried;
        if (cert.verdict == Verdict::Free) {
            cert.notes.push_back("nu found by candidate search (candidate #" +
                                 std::to_string(tried) + " of " +
                                 std::to_string(candidates.size()) + ")");
            return {certificate_to_json(cert), kExitFree};
        }
        if (!first_failed) first_failed = std::move(cert);
    }
    if (first_failed) {
        first_failed->notes.push_back(
            "no candidate nu certified freeness; echoing the first of " +
            std::to_string(candidates.size()) + " candidates");
        return {certificate_to_json(*first_failed), kExitNotCertified};
    }
    json j;
    j["schema"] = "logfree-certificate/1";
    j["command"] = "candidate-search";
    j["verdict"] = "NotCertified";
    j["ring"] = ring_to_json(sigma.ring());
    json seq = json::array();
    for (const Poly& f : sigma.polys()) seq.push_back(to_string(f));
    j["inputs_echo"] = json{{"sequence", seq}};
    j["notes"] = json::array({"no candidate nu with matching column degrees was found at the "
                              "configured degree bound; this does not prove non-freeness"});
    return {j, kExitNotCertified};
}

int cmd_check_divisor(const CommonArgs& args) {
    LoadedProblem lp = load_problem(args);
    auto polys = parse_sequence(lp);
    if (polys.size() != 1)
        fail(ErrorCode::InvalidProblem, "check-divisor expects exactly one polynomial");
    const Poly& f = polys[0];

    if (lp.problem.nu) {
        auto cert = check_divisor_free(f, parse_string_matrix(lp.ring, *lp.problem.nu), lp.check);
        write_output(args.emit, certificate_to_json(cert));
        return exit_code_for(cert.verdict);
    }
    SequenceSpec sigma({f});
    auto [doc, code] = run_with_candidate_search(
        sigma, lp, [&](const PolyMatrix& nu) { return check_divisor_free(f, nu, lp.check); });
    write_output(args.emit, doc);
    return code;
}

int cmd_check_sequence(const CommonArgs& args) {
    LoadedProblem lp = load_problem(args);

    if (lp.problem.blocks) {
        std::vector<BlockSpec> blocks;
        for (const auto& b : *lp.problem.blocks)
            blocks.push_back({b.vars, {parse_poly(b.poly, lp.ring)}});
        auto bs = block_sequence(lp.ring, blocks);
        auto cert =
            check_sequence(bs.sigma, bs.nu, GammaSpec::block_euler(bs.partition), lp.check);
        write_output(args.emit, certificate_to_json(cert));
        return exit_code_for(cert.verdict);
    }

    SequenceSpec sigma(parse_sequence(lp));
    GammaSpec gamma = gamma_from_problem(lp);
    if (lp.problem.nu) {
        auto cert =
            check_sequence(sigma, parse_string_matrix(lp.ring, *lp.problem.nu), gamma, lp.check);
        write_output(args.emit, certificate_to_json(cert));
        return exit_code_for(cert.verdict);
    }
    auto [doc, code] = run_with_candidate_search(sigma, lp, [&](const PolyMatrix& nu) {
        return check_sequence(sigma, nu, gamma, lp.check);
    });
    write_output(args.emit, doc);
    return code;
}

int cmd_poschar(const CommonArgs& args) {
    LoadedProblem lp = load_problem(args);
    SequenceSpec sigma(parse_sequence(lp));
    auto cert = positive_char_split(sigma, lp.check);
    write_output(args.emit, split_certificate_to_json(cert));
    return cert.certified ? kExitFree : kExitNotCertified;
}

int cmd_syzygies(const CommonArgs& args) {
    LoadedProblem lp = load_problem(args);
    SequenceSpec sigma(parse_sequence(lp));
    PolyMatrix alpha = jacobian(sigma);
    auto syz = syzygy_basis(alpha, lp.check.degree_bound);
    write_output(args.emit, syzygies_to_json(syz, lp.ring, lp.problem.sequence));
    return kExitFree;
}

int cmd_divisor_of_map(const CommonArgs& args) {
    LoadedProblem lp = load_problem(args);
    if (!lp.problem.matrix)
        fail(ErrorCode::InvalidProblem, "divisor-of-map needs a 'matrix' entry");
    PolyMatrix m = parse_string_matrix(lp.ring, *lp.problem.matrix);
    auto dv = divisor_of_map(m, lp.check.method);
    write_output(args.emit, divisor_to_json(dv, m, generic_rank(m, lp.check.method)));
    return kExitFree;
}

int cmd_independence(const CommonArgs& args) {
    LoadedProblem lp = load_problem(args);
    auto polys = parse_sequence(lp);
    auto r = algebraic_independence(polys);
    write_output(args.emit, independence_to_json(r, lp.ring, lp.problem.sequence));
    return r.independent ? kExitFree : kExitNotCertified;
}

int cmd_fixtures(const CommonArgs& args) {
    auto outcomes = run_fixtures();
    bool all = true;
    for (const auto& o : outcomes) {
        std::cout << (o.pass ? "PASS " : "FAIL ") << o.name;
        if (!o.pass) std::cout << " (" << o.detail << ")";
        std::cout << "\n";
        all = all && o.pass;
    }
    if (!args.emit.empty()) write_output(args.emit, fixtures_to_json(outcomes));
    return all ? kExitFree : kExitNotCertified;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"logfree: exact freeness certificates for logarithmic tangent sheaves"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string chosen;

    auto wire = [&](const char* name, const char* desc, bool needs_input = true) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        add_common(cmd, args, needs_input);
        cmd->callback([&chosen, name]() { chosen = name; });
        return cmd;
    };

    wire("check-divisor", "Saito criterion for a single hypersurface");
    wire("check-sequence", "generalized criterion for a polynomial sequence");
    wire("poschar", "positive characteristic splitting certificate");
    wire("syzygies", "Jacobian syzygy module of a sequence");
    wire("divisor-of-map", "gcd of the maximal minors of a matrix");
    wire("independence", "algebraic independence via elimination");
    wire("fixtures", "run the built-in regression corpus", false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (chosen == "check-divisor") return cmd_check_divisor(args);
        if (chosen == "check-sequence") return cmd_check_sequence(args);
        if (chosen == "poschar") return cmd_poschar(args);
        if (chosen == "syzygies") return cmd_syzygies(args);
        if (chosen == "divisor-of-map") return cmd_divisor_of_map(args);
        if (chosen == "independence") return cmd_independence(args);
        if (chosen == "fixtures") return cmd_fixtures(args);
        std::cerr << "no subcommand chosen\n";
        return kExitError;
    } catch (const Error& e) {
        try {
            write_output(args.emit, error_to_json(e));
        } catch (const std::exception&) {
            std::cout << dump_json(error_to_json(e));
        }
        return kExitError;
    } catch (const std::exception& e) {
        json j{{"schema", "logfree-error/1"},
               {"verdict", "PreconditionFailed"},
               {"error", json{{"code", "InternalError"}, {"message", e.what()}}}};
        try {
            write_output(args.emit, j);
        } catch (const std::exception&) {
            std::cout << dump_json(j);
        }
        return kExitError;
    }
}
