// Command line front end: normalize expressions, dump moments, build the
// orthogonal families and their Gram matrices, evaluate closed forms, inspect
// the finite matrix model, and run the verification suites.

#include "ospoly/errors.hpp"
#include "ospoly/expr.hpp"
#include "ospoly/hypergeom.hpp"
#include "ospoly/matrix_rep.hpp"
#include "ospoly/ortho.hpp"
#include "ospoly/supertrace.hpp"
#include "ospoly/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace ospoly;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCaseMismatch = 3;

struct CommonOpts {
    std::string case_name = "generic";
    std::string lambda = "sym";
    bool unicode = false;
    std::string format = "json";
    std::string out;
};

AlgebraCase parse_case(const std::string& name) {
    auto c = case_from_name(name);
    if (!c) throw CLI::ValidationError("--case", "expected generic, weyl or matrix");
    return *c;
}

std::optional<Rational> parse_lambda(const std::string& s) {
    if (s == "sym") return std::nullopt;
    return rational_from_string(s);
}

std::string render_value(const LambdaPoly& p, const std::optional<Rational>& lambda,
                         const RenderOptions& opts) {
    if (lambda) return to_string(p.evaluate(*lambda));
    return p.to_string(opts.lambda_var());
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        f << text;
    }
}

int cmd_normalize(const std::string& expr, const CommonOpts& o) {
    const AlgebraCase cas = parse_case(o.case_name);
    GradedElement u = parse_expression(expr, cas);
    const auto lam = parse_lambda(o.lambda);
    if (lam) {
        GradedElement v = GradedElement::zero(cas);
        for (const auto& [g, f] : u.coeffs())
            v += GradedElement::monomial(f.specialize_lambda(*lam), g);
        u = v;
    }
    RenderOptions ropts;
    ropts.unicode = o.unicode;
    emit(u.to_string(ropts) + "\n", o.out);
    return kExitOk;
}

int cmd_trace(const std::string& expr, const CommonOpts& o) {
    const AlgebraCase cas = parse_case(o.case_name);
    const GradedElement u = parse_expression(expr, cas);
    MomentTable table(cas, 8);
    const LambdaPoly value = trace(u, table);
    RenderOptions ropts;
    ropts.unicode = o.unicode;
    emit(render_value(value, parse_lambda(o.lambda), ropts) + "\n", o.out);
    return kExitOk;
}

int cmd_moments(const CommonOpts& o, int max_order) {
    const AlgebraCase cas = parse_case(o.case_name);
    MomentTable table(cas, max_order);
    const auto lam = parse_lambda(o.lambda);
    RenderOptions ropts;
    ropts.unicode = o.unicode;
    if (o.format == "csv") {
        std::string out = "k,L(H^k),L(tau*H^k)\n";
        for (int k = 0; k <= max_order; ++k) {
            out += std::to_string(k) + "," + render_value(table.even_moment(k), lam, ropts) +
                   "," + render_value(table.odd_moment(k), lam, ropts) + "\n";
        }
        emit(out, o.out);
    } else {
        ordered_json j;
        j["case"] = case_name(cas);
        j["moments"] = ordered_json::array();
        for (int k = 0; k <= max_order; ++k) {
            ordered_json e;
            e["k"] = k;
            e["even"] = render_value(table.even_moment(k), lam, ropts);
            e["odd"] = render_value(table.odd_moment(k), lam, ropts);
            j["moments"].push_back(e);
        }
        emit(j.dump(2) + "\n", o.out);
    }
    return kExitOk;
}

std::vector<HTauPoly> family_members(AlgebraCase cas, int grade, int kmax) {
    std::vector<HTauPoly> members;
    if (cas == AlgebraCase::GenericFG) {
        GenericFamily fam;
        for (int k = 0; k <= kmax; ++k) members.push_back(fam.member(k, grade));
    } else if (cas == AlgebraCase::WeylPQ) {
        WeylFamily fam;
        for (int k = 0; k <= kmax; ++k) members.push_back(fam.member(k, grade));
    } else {
        MatrixFamily fam;
        for (int k = 0; k <= kmax; ++k) members.push_back(fam.member(k, grade));
    }
    return members;
}

int cmd_polys(const CommonOpts& o, int grade, int kmax, bool with_gram) {
    const AlgebraCase cas = parse_case(o.case_name);
    if (grade < 0) throw CLI::ValidationError("--grade", "families are indexed by grade >= 0");
    const auto members = family_members(cas, grade, kmax);
    RenderOptions ropts;
    ropts.unicode = o.unicode;
    const auto lam = parse_lambda(o.lambda);
    auto render_member = [&](const HTauPoly& f) {
        return (lam ? f.specialize_lambda(*lam) : f).to_string(ropts);
    };
    std::vector<std::vector<LambdaPoly>> gram;
    if (with_gram) {
        MomentTable table(cas, 2 * (grade + kmax) + 4);
        gram = gram_matrix(members, grade, table);
    }
    if (o.format == "csv" && with_gram) {
        std::string out;
        for (const auto& row : gram) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out += (c ? "," : "") + render_value(row[c], lam, ropts);
            out += "\n";
        }
        emit(out, o.out);
        return kExitOk;
    }
    ordered_json j;
    j["case"] = case_name(cas);
    j["grade"] = grade;
    j["members"] = ordered_json::array();
    for (const auto& f : members) j["members"].push_back(render_member(f));
    if (with_gram) {
        j["gram"] = ordered_json::array();
        for (const auto& row : gram) {
            ordered_json r = ordered_json::array();
            for (const auto& v : row) r.push_back(render_value(v, lam, ropts));
            j["gram"].push_back(r);
        }
    }
    emit(j.dump(2) + "\n", o.out);
    return kExitOk;
}

int cmd_closedform(const CommonOpts& o, int grade, int kmax, bool with_mfact) {
    const AlgebraCase cas = parse_case(o.case_name);
    if (grade < 0) throw CLI::ValidationError("--grade", "families are indexed by grade >= 0");
    RenderOptions ropts;
    ropts.unicode = o.unicode;
    ordered_json j;
    j["case"] = case_name(cas);
    j["grade"] = grade;
    j["entries"] = ordered_json::array();
    const int i = grade / 2;
    for (int k = 0; k <= kmax; ++k) {
        ordered_json e;
        e["k"] = k;
        HTauPoly closed(cas), recursive(cas);
        if (cas == AlgebraCase::GenericFG) {
            GenericFamily fam;
            const bool even_grade = grade % 2 == 0;
            if (k % 2 == 0) {
                closed = even_grade ? hahn_closed_even_grade(k / 2, i)
                                    : hahn_closed_odd_grade(k / 2, i);
            } else {
                closed = even_grade ? hahn_closed_even_grade_tie(k / 2, i, true)
                                    : hahn_closed_odd_grade_tie(k / 2, i);
            }
            recursive = fam.member(k, grade);
        } else if (cas == AlgebraCase::WeylPQ) {
            WeylFamily fam;
            closed = meixner_closed(k, grade, with_mfact);
            recursive = fam.member(k, grade);
        } else {
            MatrixFamily fam;
            if (grade % 2 != 0 || k % 2 != 0) {
                e["note"] = "printed closed form covers even members at even grades";
                j["entries"].push_back(e);
                continue;
            }
            closed = dualhahn_closed(k / 2, i, false);
            recursive = fam.member(k, grade);
        }
        const CompareResult r = compare_up_to_constant(recursive, closed);
        e["closed"] = closed.to_string(ropts);
        e["recursive"] = recursive.to_string(ropts);
        e["relation"] = r.outcome == CompareOutcome::Equal
                            ? "equal"
                            : (r.outcome == CompareOutcome::Proportional ? "proportional"
                                                                         : "mismatch");
        if (r.outcome != CompareOutcome::Mismatch) e["ratio"] = r.ratio;
        j["entries"].push_back(e);
    }
    emit(j.dump(2) + "\n", o.out);
    return kExitOk;
}

int cmd_matrix(const CommonOpts& o, int lambda, const std::string& op, const std::string& gen,
               int max_degree) {
    if (lambda < 0) throw CLI::ValidationError("--lambda", "expects a nonnegative integer");
    if (op == "images") {
        const RepImages rep = build_rep(lambda);
        const SuperMatrix* m = nullptr;
        if (gen == "H") m = &rep.H;
        else if (gen == "F") m = &rep.F;
        else if (gen == "G") m = &rep.G;
        else if (gen == "tau") m = &rep.tau;
        else if (gen == "U") m = &rep.U;
        else if (gen == "V") m = &rep.V;
        else if (gen == "X") m = &rep.X;
        else if (gen == "Y") m = &rep.Y;
        else throw CLI::ValidationError("--gen", "expected one of H F G tau U V X Y");
        emit(m->to_csv(), o.out);
        return kExitOk;
    }
    if (op == "relations") {
        ordered_json j;
        j["lambda"] = lambda;
        j["relations"] = ordered_json::array();
        bool all_ok = true;
        for (const auto& r : check_relations(lambda)) {
            ordered_json e;
            e["id"] = r.id;
            e["status"] = r.ok ? "pass" : "fail";
            all_ok = all_ok && r.ok;
            j["relations"].push_back(e);
        }
        emit(j.dump(2) + "\n", o.out);
        return all_ok ? kExitOk : kExitFalsified;
    }
    if (op == "nilpotency") {
        const RepImages rep = build_rep(lambda);
        ordered_json j;
        j["lambda"] = lambda;
        j["exponent"] = nilpotency_exponent(rep.V, 2 * lambda + 2);
        emit(j.dump(2) + "\n", o.out);
        return kExitOk;
    }
    if (op == "crosscheck") {
        ordered_json j;
        j["lambda"] = lambda;
        j["max_degree"] = max_degree;
        j["mismatches"] = ordered_json::array();
        for (AlgebraCase cas : {AlgebraCase::GenericFG, AlgebraCase::MatrixUV}) {
            MomentTable table(cas, max_degree + 2);
            for (const auto& m : crosscheck_trace(lambda, max_degree, table)) {
                ordered_json e;
                e["case"] = case_name(cas);
                e["monomial"] = m.monomial;
                e["matrix"] = to_string(m.matrix_value);
                e["abstract"] = to_string(m.abstract_value);
                j["mismatches"].push_back(e);
            }
        }
        emit(j.dump(2) + "\n", o.out);
        return j["mismatches"].empty() ? kExitOk : kExitFalsified;
    }
    throw CLI::ValidationError("--op", "expected images, relations, nilpotency or crosscheck");
}

int cmd_verify(const std::string& suite, const CommonOpts& o) {
    auto rep = run_suite(suite);
    if (!rep) throw CLI::ValidationError("--suite", "unknown suite " + suite);
    const std::string json = to_json(*rep);
    std::cout << to_text(*rep);
    if (o.out.empty())
        std::cout << json;
    else
        emit(json, o.out);
    return rep->all_passed() ? kExitOk : kExitFalsified;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for the osp(1|2) quotient algebras and their "
                 "discrete orthogonal polynomials"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string expr, suite = "all", op = "relations", gen = "H";
    int grade = 0, kmax = 4, max_order = 8, lambda_int = 1, max_degree = 6;

    auto add_common = [&](CLI::App* sub, bool with_case = true) {
        if (with_case)
            sub->add_option("--case", o.case_name, "presentation: generic, weyl or matrix");
        sub->add_option("--lambda", o.lambda, "sym or a rational p/q");
        sub->add_flag("--unicode", o.unicode, "render lambda and tau as glyphs");
        sub->add_option("--format", o.format, "json or csv");
        sub->add_option("--out", o.out, "write the payload to a file instead of stdout");
    };

    auto* normalize = app.add_subcommand("normalize", "print the normal form of an expression");
    normalize->add_option("expr", expr, "expression text")->required();
    add_common(normalize);

    auto* tracecmd = app.add_subcommand("trace", "apply the invariant functional");
    tracecmd->add_option("expr", expr, "expression text")->required();
    add_common(tracecmd);

    auto* moments = app.add_subcommand("moments", "dump the moment table");
    moments->add_option("--max-order", max_order, "largest H power");
    add_common(moments);

    auto* gram = app.add_subcommand("gram", "family members and their Gram matrix");
    gram->add_option("--grade", grade, "grade index (>= 0)");
    gram->add_option("--kmax", kmax, "largest member index");
    add_common(gram);

    auto* polys = app.add_subcommand("polys", "family members");
    polys->add_option("--grade", grade, "grade index (>= 0)");
    polys->add_option("--kmax", kmax, "largest member index");
    add_common(polys);

    bool with_mfact = false;
    auto* closed = app.add_subcommand("closedform", "closed forms vs recursive members");
    closed->add_option("--grade", grade, "grade index (>= 0)");
    closed->add_option("--kmax", kmax, "largest member index");
    closed->add_flag("--mfact", with_mfact,
                     "use the conventional m!-included sum for the 2F1-at-2 display");
    add_common(closed);

    auto* matrix = app.add_subcommand("matrix", "finite matrix model");
    matrix->add_option("--lambda", lambda_int, "nonnegative integer highest weight")->required();
    matrix->add_option("--op", op, "images, relations, nilpotency or crosscheck");
    matrix->add_option("--gen", gen, "generator for --op images");
    matrix->add_option("--max-degree", max_degree, "degree bound for --op crosscheck");
    matrix->add_option("--format", o.format, "json or csv");
    matrix->add_option("--out", o.out, "write the payload to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "casimir, trace, ortho, diffeq, closed, matrix or all");
    verify->add_option("--out", o.out, "write the JSON report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (normalize->parsed()) return cmd_normalize(expr, o);
        if (tracecmd->parsed()) return cmd_trace(expr, o);
        if (moments->parsed()) return cmd_moments(o, max_order);
        if (gram->parsed()) return cmd_polys(o, grade, kmax, true);
        if (polys->parsed()) return cmd_polys(o, grade, kmax, false);
        if (closed->parsed()) return cmd_closedform(o, grade, kmax, with_mfact);
        if (matrix->parsed()) return cmd_matrix(o, lambda_int, op, gen, max_degree);
        if (verify->parsed()) return cmd_verify(suite, o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CaseMismatchError& e) {
        std::cerr << "case mismatch: " << e.what() << "\n";
        return kExitCaseMismatch;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
