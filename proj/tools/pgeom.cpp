// Command-line front end: exact projective-geometry predicates, seeded
// instance generators, and polynomial identity proofs, reporting JSON.
//
// Exit codes: 0 predicate true / proof succeeded, 1 predicate false,
// 2 hypothesis or degeneracy error, 3 input or resource error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pgeom/json_io.hpp"
#include "pgeom/pascal.hpp"
#include "pgeom/quadric3.hpp"
#include "pgeom/rnc.hpp"
#include "pgeom/rsb.hpp"

namespace {

using namespace pgeom;
using Clock = std::chrono::steady_clock;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitInput = 3;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bad_input("cannot open input file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw bad_input(std::string("malformed JSON: ") + e.what());
    }
}

void maybe_dump(const std::string& path, const MPoly& p) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw bad_input("cannot open dump file: " + path);
    p.dump(out);
}

struct Report {
    json body = json::object();
    Clock::time_point start = Clock::now();

    int finish(bool truth) {
        body["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
        body["hypothesis_errors"] = json::array();
        std::cout << body.dump(2) << std::endl;
        return truth ? kExitTrue : kExitFalse;
    }
};

json identity_json(const IdentityProof& proof) {
    json j;
    j["proved"] = proof.proved;
    j["mode"] = proof.mode;
    j["lhs_degree"] = proof.lhs_degree;
    j["rhs_degree"] = proof.rhs_degree;
    if (proof.mode == "symbolic") {
        j["lhs_terms"] = proof.lhs_terms;
        j["rhs_terms"] = proof.rhs_terms;
    } else {
        j["trials"] = proof.trials;
        j["failure_bound"] = proof.failure_bound;
    }
    return j;
}

int cmd_pascal_check(const std::string& input) {
    Report rep;
    rep.body["command"] = "pascal check";
    std::vector<PPoint> pts = points_from_json(load_json(input));
    if (pts.size() != 6) throw bad_input("pascal check needs exactly 6 points");
    PascalInstance inst({pts[0], pts[1], pts[2], pts[3], pts[4], pts[5]});
    Rat f = pascal_F(inst), g = pascal_G(inst);
    rep.body["member"] = is_zero(f);
    rep.body["witnesses"] = {{"F", rat_str(f)}, {"G", rat_str(g)}};
    rep.body["no_three_collinear"] = inst.no_three_collinear();
    return rep.finish(is_zero(f));
}

int cmd_pascal_identity(size_t ceiling, const std::string& dump) {
    Report rep;
    rep.body["command"] = "pascal identity";
    IdentityProof proof = pascal_identity(ceiling);
    rep.body.update(identity_json(proof));
    rep.body["degree"] = proof.lhs_degree;
    rep.body["per_point_degree"] = proof.lhs.degree_in_block(0, 3);
    maybe_dump(dump, proof.lhs);
    return rep.finish(proof.proved);
}

int cmd_rnc_check(size_t d, const std::string& input) {
    Report rep;
    rep.body["command"] = "rnc check";
    std::vector<PPoint> pts = points_from_json(load_json(input));
    RncInstance inst(d, std::move(pts));
    RncVerdict v = rnc_check(inst);
    rep.body["member"] = v.member;
    json w;
    w["equations"] = rat_vector_to_json(v.equation_values);
    w["projections"] = rat_vector_to_json(v.projection_values);
    rep.body["witnesses"] = w;
    return rep.finish(v.member);
}

int cmd_rnc_sample(size_t d, uint64_t seed) {
    RncInstance inst = rnc_sample(d, seed);
    json out;
    out["d"] = inst.d;
    out["seed"] = seed;
    out["points"] = points_to_json(inst.points);
    std::cout << out.dump(2) << std::endl;
    return kExitTrue;
}

int cmd_rnc_jacobian(size_t d, const std::string& input) {
    Report rep;
    rep.body["command"] = "rnc jacobian";
    std::vector<PPoint> pts = points_from_json(load_json(input));
    RncInstance inst(d, std::move(pts));
    if (!general_position(inst.points))
        throw hypothesis_error("points are not in general position");
    RncNormalForm nf = rnc_normalize(inst);
    size_t r = rnc_jacobian_rank(nf);
    rep.body["rank"] = r;
    rep.body["expected_codimension"] = d - 1;
    return rep.finish(r == d - 1);
}

int cmd_quadric3_exists(const std::string& input) {
    Report rep;
    rep.body["command"] = "quadric3 exists";
    auto constraints = constraints_from_json(load_json(input));
    auto [ok, form] = exists_quadric(constraints);
    rep.body["member"] = ok;
    if (form) rep.body["quadric"] = rat_vector_to_json(form->coeffs);
    return rep.finish(ok);
}

int cmd_quadric3_p3l(const std::string& input) {
    Report rep;
    rep.body["command"] = "quadric3 p3l";
    json j = load_json(input);
    if (!j.contains("point") || !j.contains("lines") || j["lines"].size() != 3)
        throw bad_input("p3l input needs a point and 3 lines");
    PPoint p = point_from_json(j["point"]);
    std::array<PLine, 3> lines = {line_from_json(j["lines"][0]), line_from_json(j["lines"][1]),
                                  line_from_json(j["lines"][2])};
    auto r = p3l_normalize(p, lines);
    Rat d = p3l_det(r[0], r[1], r[2]);
    rep.body["member"] = is_zero(d);
    rep.body["witnesses"] = {{"determinant", rat_str(d)}};
    rep.body["concurrent"] = p3l_concurrent(p, lines);
    return rep.finish(is_zero(d));
}

int cmd_quadric3_reduce42(const std::string& input) {
    Report rep;
    rep.body["command"] = "quadric3 reduce42";
    json j = load_json(input);
    if (!j.contains("points") || !j.contains("lines") || j["points"].size() != 4 ||
        j["lines"].size() != 2)
        throw bad_input("reduce42 input needs 4 points and 2 lines");
    std::vector<PPoint> pts = points_from_json(j["points"]);
    PLine l1 = line_from_json(j["lines"][0]), l2 = line_from_json(j["lines"][1]);
    auto [p0, ts] = reduce_4p2l({pts[0], pts[1], pts[2], pts[3]}, l1, l2);

    std::vector<QuadricConstraint> original;
    for (const PPoint& p : pts) original.push_back(QuadricConstraint::point_on(p));
    original.push_back(QuadricConstraint::line_on(l1));
    original.push_back(QuadricConstraint::line_on(l2));
    std::vector<QuadricConstraint> reduced = {QuadricConstraint::point_on(p0)};
    for (const PLine& t : ts) reduced.push_back(QuadricConstraint::line_on(t));
    bool lhs = exists_quadric(original).first;
    bool rhs = exists_quadric(reduced).first;

    rep.body["reduced"] = {{"point", point_to_json(p0)},
                           {"lines", json::array({line_to_json(ts[0]), line_to_json(ts[1]),
                                                  line_to_json(ts[2])})}};
    rep.body["member"] = lhs;
    rep.body["reduced_member"] = rhs;
    if (lhs != rhs) throw hypothesis_error("reduction equivalence failed on this input");
    return rep.finish(lhs);
}

int cmd_quadric3_factorization(size_t ceiling, const std::string& dump) {
    Report rep;
    rep.body["command"] = "quadric3 identity-factorization";
    IdentityProof proof = p3l_factorization_identity(ceiling);
    rep.body.update(identity_json(proof));
    rep.body["degree"] = proof.lhs_degree;
    rep.body["tridegree"] = proof.lhs.degree_in_block(0, 4);
    maybe_dump(dump, proof.lhs);
    return rep.finish(proof.proved);
}

int cmd_rsb_check(const std::string& input) {
    Report rep;
    rep.body["command"] = "rsb check";
    json j = load_json(input);
    if (!j.is_array() || j.size() != 5) throw bad_input("rsb check needs 5 lines");
    std::array<PLine, 5> lines = {line_from_json(j[0]), line_from_json(j[1]),
                                  line_from_json(j[2]), line_from_json(j[3]),
                                  line_from_json(j[4])};
    RsbVerdict v = rsb_check(lines);
    rep.body["member"] = v.quadric_exists;
    rep.body["rsb_type"] = v.rsb_type;
    rep.body["witnesses"] = {{"F", rat_str(v.F)}, {"G", rat_str(v.G)}};
    return rep.finish(v.quadric_exists);
}

int cmd_rsb_sample(uint64_t seed) {
    auto lines = rsb_sample_on_quadric(seed);
    json out = json::array();
    for (const PLine& l : lines) out.push_back(line_to_json(l));
    std::cout << out.dump(2) << std::endl;
    return kExitTrue;
}

int cmd_rsb_identity(const std::string& mode, uint64_t trials, uint64_t seed, size_t ceiling,
                     const std::string& dump) {
    Report rep;
    rep.body["command"] = "rsb identity";
    IdentityProof proof;
    if (mode == "symbolic") {
        proof = rsb_identity_symbolic(ceiling);
        maybe_dump(dump, proof.lhs);
    } else if (mode == "pit") {
        proof = rsb_identity_pit(trials, seed);
    } else {
        throw bad_input("mode must be symbolic or pit");
    }
    rep.body.update(identity_json(proof));
    return rep.finish(proof.proved);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact projective geometry predicates and identity proofs"};
    app.require_subcommand(1);

    std::string input, dump, mode = "pit";
    size_t d = 3, ceiling = pgeom::kDefaultTermCeiling;
    uint64_t seed = 0, trials = 200;

    auto* pascal = app.add_subcommand("pascal", "Six points on a conic in P^2");
    auto* pascal_check = pascal->add_subcommand("check", "Evaluate the conic and collinearity determinants");
    pascal_check->add_option("--input", input, "points JSON file")->required();
    auto* pascal_id = pascal->add_subcommand("identity", "Prove F = G in 18 variables");
    pascal_id->add_option("--term-ceiling", ceiling, "polynomial term ceiling");
    pascal_id->add_option("--dump", dump, "archive the proved polynomial");

    auto* rnc = app.add_subcommand("rnc", "d+4 points on a rational normal curve in P^d");
    auto* rnc_check_cmd = rnc->add_subcommand("check", "Membership test with both witnesses");
    rnc_check_cmd->add_option("--d", d, "curve degree")->required();
    rnc_check_cmd->add_option("--input", input, "points JSON file")->required();
    auto* rnc_sample_cmd = rnc->add_subcommand("sample", "Sample d+4 points on a curve");
    rnc_sample_cmd->add_option("--d", d, "curve degree")->required();
    rnc_sample_cmd->add_option("--seed", seed, "generator seed")->required();
    auto* rnc_jac = rnc->add_subcommand("jacobian", "Jacobian rank at a solution");
    rnc_jac->add_option("--d", d, "curve degree")->required();
    rnc_jac->add_option("--input", input, "points JSON file")->required();

    auto* q3 = app.add_subcommand("quadric3", "Quadric membership conditions in P^3");
    auto* q3_exists = q3->add_subcommand("exists", "Quadric through a constraint list");
    q3_exists->add_option("--input", input, "constraints JSON file")->required();
    auto* q3_p3l = q3->add_subcommand("p3l", "One point and three lines");
    q3_p3l->add_option("--input", input, "instance JSON file")->required();
    auto* q3_red = q3->add_subcommand("reduce42", "Four points and two lines");
    q3_red->add_option("--input", input, "instance JSON file")->required();
    auto* q3_fac = q3->add_subcommand("identity-factorization",
                                      "Prove the 6x6 determinant factorization");
    q3_fac->add_option("--term-ceiling", ceiling, "polynomial term ceiling");
    q3_fac->add_option("--dump", dump, "archive the proved polynomial");

    auto* rsb = app.add_subcommand("rsb", "Five lines on a quadric in P^4");
    auto* rsb_check_cmd = rsb->add_subcommand("check", "Quadric existence and RSB type");
    rsb_check_cmd->add_option("--input", input, "lines JSON file")->required();
    auto* rsb_sample_cmd = rsb->add_subcommand("sample", "Five lines on x0x1+x2x3+x4^2");
    rsb_sample_cmd->add_option("--seed", seed, "generator seed")->required();
    auto* rsb_id = rsb->add_subcommand("identity", "Prove F = G in 25 variables");
    rsb_id->add_option("--mode", mode, "symbolic or pit");
    rsb_id->add_option("--trials", trials, "pit trial count");
    rsb_id->add_option("--seed", seed, "pit seed");
    rsb_id->add_option("--term-ceiling", ceiling, "polynomial term ceiling");
    rsb_id->add_option("--dump", dump, "archive the proved polynomial");

    CLI11_PARSE(app, argc, argv);

    try {
        if (pascal_check->parsed()) return cmd_pascal_check(input);
        if (pascal_id->parsed()) return cmd_pascal_identity(ceiling, dump);
        if (rnc_check_cmd->parsed()) return cmd_rnc_check(d, input);
        if (rnc_sample_cmd->parsed()) return cmd_rnc_sample(d, seed);
        if (rnc_jac->parsed()) return cmd_rnc_jacobian(d, input);
        if (q3_exists->parsed()) return cmd_quadric3_exists(input);
        if (q3_p3l->parsed()) return cmd_quadric3_p3l(input);
        if (q3_red->parsed()) return cmd_quadric3_reduce42(input);
        if (q3_fac->parsed()) return cmd_quadric3_factorization(ceiling, dump);
        if (rsb_check_cmd->parsed()) return cmd_rsb_check(input);
        if (rsb_sample_cmd->parsed()) return cmd_rsb_sample(seed);
        if (rsb_id->parsed()) return cmd_rsb_identity(mode, trials, seed, ceiling, dump);
        std::cerr << app.help() << std::endl;
        return kExitInput;
    } catch (const pgeom::hypothesis_error& e) {
        std::cout << pgeom::json{{"hypothesis_errors", {e.what()}}}.dump(2) << std::endl;
        return kExitHypothesis;
    } catch (const pgeom::bad_input& e) {
        std::cerr << "input error: " << e.what() << std::endl;
        return kExitInput;
    } catch (const pgeom::resource_error& e) {
        std::cerr << "resource error: " << e.what() << std::endl;
        return kExitInput;
    } catch (const pgeom::dimension_error& e) {
        std::cerr << "input error: " << e.what() << std::endl;
        return kExitInput;
    }
}
