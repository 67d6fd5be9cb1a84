#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qchar/char_ring.hpp"
#include "qchar/io.hpp"
#include "qchar/schur.hpp"
#include "qchar/super_rings.hpp"
#include "qchar/verify.hpp"
#include "qchar/weyl_groupoid.hpp"

namespace {

using namespace qchar;

RenderFormat parse_format(const std::string& f) {
    if (f == "text") return RenderFormat::Text;
    if (f == "json") return RenderFormat::Json;
    if (f == "latex") return RenderFormat::Latex;
    throw DomainError("unknown format '" + f + "' (text|json|latex)");
}

// -f accepts either an inline expression or the name of a file holding one.
std::string load_expression(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return arg;
}

Weight checked_weight(const std::string& text, int n) {
    const GeneralWeight w = parse_weight(text);
    if (static_cast<int>(w.size()) != n)
        throw DomainError("weight " + weight_str(w) + " has " + std::to_string(w.size()) +
                          " parts, expected n = " + std::to_string(n));
    return w;
}

// "p:3,1,0,0" or "s:2,1" -> the named basis polynomial.
LaurentPoly basis_poly(const std::string& spec, int n) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw DomainError("basis shorthand must look like p:3,1,0,0 or s:2,1");
    const std::string basis = spec.substr(0, colon);
    const Weight w = checked_weight(spec.substr(colon + 1), n);
    if (basis == "p") return schur_p(w);
    if (basis == "s") return schur_s(w);
    throw DomainError("unknown basis '" + basis + "' in shorthand (use p or s)");
}

int run_verify(int n, std::int64_t max_entry, const std::string& suite) {
    struct Suite {
        std::string name;
        std::vector<CheckResult> checks;
    };
    std::vector<Suite> suites;
    const std::int64_t lo = -max_entry, hi = max_entry;
    if (suite == "lift" || suite == "all") suites.push_back({"lift", verify_lift(n, lo, hi)});
    if (suite == "kernel" || suite == "all") suites.push_back({"kernel", verify_kernel(n, lo, hi)});
    if (suite == "euler" || suite == "all") suites.push_back({"euler", verify_euler(n, lo, hi)});
    if (suite == "typical" || suite == "all") suites.push_back({"typical", verify_typical(n, lo, hi)});
    if (suite == "groupoid" || suite == "all") suites.push_back({"groupoid", verify_groupoid(n, 50)});
    if (suites.empty()) throw DomainError("unknown suite '" + suite + "' (lift|kernel|euler|typical|groupoid|all)");

    int failures = 0;
    for (const Suite& s : suites) {
        for (const CheckResult& c : s.checks) {
            if (c.pass) {
                std::cout << "PASS [" << s.name << "] " << c.name << "\n";
            } else {
                ++failures;
                std::cout << "FAIL [" << s.name << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail)
                          << "\n";
            }
        }
    }
    std::cout << (failures == 0 ? "all identities hold" : std::to_string(failures) + " identities failed") << "\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the character rings of queer Lie supergroups"};
    app.require_subcommand(1);

    int n = 0;
    std::string weight_arg, expr_arg, format_arg = "text", ring_arg, wbasis_arg, suite_arg = "all";
    std::int64_t max_entry = 3;

    auto add_common = [&](CLI::App* cmd, bool with_weight, bool with_expr) {
        cmd->add_option("-n,--nvars", n, "number of variables")->required();
        if (with_weight) cmd->add_option("-w,--weight", weight_arg, "comma-separated weight, e.g. 3,1,0,0")->required();
        if (with_expr) cmd->add_option("-f,--poly", expr_arg, "polynomial expression or file");
        cmd->add_option("--format", format_arg, "output format: text|json|latex");
    };

    CLI::App* schur_p_cmd = app.add_subcommand("schur-p", "Schur P-function p_{w,n}");
    add_common(schur_p_cmd, true, false);
    CLI::App* schur_s_cmd = app.add_subcommand("schur-s", "Schur Laurent polynomial s_w");
    add_common(schur_s_cmd, true, false);
    CLI::App* euler_cmd = app.add_subcommand("euler", "Euler characteristic E(w)");
    add_common(euler_cmd, true, false);
    CLI::App* typical_cmd = app.add_subcommand("typical", "typical simple character ch L(w)");
    add_common(typical_cmd, true, false);

    CLI::App* ev_cmd = app.add_subcommand("ev", "evaluation map J_n -> J_{n-2}");
    add_common(ev_cmd, false, true);
    ev_cmd->add_option("--w-basis", wbasis_arg, "basis shorthand input, e.g. p:3,1,0,0 or s:2,1");

    CLI::App* member_cmd = app.add_subcommand("member", "ring membership test (exit 0 member, 1 non-member)");
    add_common(member_cmd, false, true);
    member_cmd->add_option("--ring", ring_arg, "q|sq|pq|psq|half|alg-q|alg-pq|groupoid")->required();

    CLI::App* decompose_cmd = app.add_subcommand("decompose", "P-basis coefficients of a J_n element");
    add_common(decompose_cmd, false, true);
    CLI::App* kernel_cmd = app.add_subcommand("kernel", "s-basis factorization of a kernel element");
    add_common(kernel_cmd, false, true);

    CLI::App* lift_cmd = app.add_subcommand("lift", "insert two zeros: Lambda_{n-2} -> Lambda_n");
    lift_cmd->add_option("-n,--nvars", n, "target variable count")->required();
    lift_cmd->add_option("-w,--weight", weight_arg, "weight in Lambda_{n-2}")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "replay the structural identities, one pass/fail per line");
    verify_cmd->add_option("-n,--nvars", n, "number of variables")->default_val(4);
    verify_cmd->add_option("--max-entry", max_entry, "weight entry bound")->default_val(3);
    verify_cmd->add_option("--suite", suite_arg, "lift|kernel|euler|typical|groupoid|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const RenderFormat fmt = parse_format(format_arg);

        if (schur_p_cmd->parsed()) {
            std::cout << render(schur_p(checked_weight(weight_arg, n)), fmt) << "\n";
        } else if (schur_s_cmd->parsed()) {
            std::cout << render(schur_s(checked_weight(weight_arg, n)), fmt) << "\n";
        } else if (euler_cmd->parsed()) {
            std::cout << render(euler_char(checked_weight(weight_arg, n)), fmt) << "\n";
        } else if (typical_cmd->parsed()) {
            std::cout << render(typical_char(checked_weight(weight_arg, n)), fmt) << "\n";
        } else if (ev_cmd->parsed()) {
            if (expr_arg.empty() == wbasis_arg.empty())
                throw DomainError("ev needs exactly one of -f or --w-basis");
            const LaurentPoly f =
                expr_arg.empty() ? basis_poly(wbasis_arg, n) : parse_poly(load_expression(expr_arg), n);
            const LaurentPoly r = ev(f);
            std::cout << render(r, fmt) << "\n";
            std::cout << "P-basis: " << expansion_json(decompose_p(r).coefficients) << "\n";
        } else if (member_cmd->parsed()) {
            if (expr_arg.empty()) throw DomainError("member needs -f");
            const LaurentPoly f = parse_poly(load_expression(expr_arg), n);
            MembershipResult m;
            std::string label = ring_arg;
            if (ring_arg == "q") m = is_in_ring(f, RingId::GroupQ);
            else if (ring_arg == "sq") m = is_in_ring(f, RingId::GroupSQ);
            else if (ring_arg == "pq") m = is_in_ring(f, RingId::GroupPQ);
            else if (ring_arg == "psq") m = is_in_ring(f, RingId::GroupPSQ);
            else if (ring_arg == "half") m = is_in_ring(f, RingId::HalfIntegerCategory);
            else if (ring_arg == "alg-q") m = is_in_ring(f, RingId::AlgebraQ);
            else if (ring_arg == "alg-pq") m = is_in_ring(f, RingId::AlgebraPQ);
            else if (ring_arg == "groupoid") m = groupoid_invariance(f);
            else throw DomainError("unknown ring '" + ring_arg + "'");
            if (m.member) {
                std::cout << "member of " << label << "\n";
                return 0;
            }
            std::cout << "not a member of " << label << ": " << m.reason << "\n";
            return 1;
        } else if (decompose_cmd->parsed()) {
            if (expr_arg.empty()) throw DomainError("decompose needs -f");
            const LaurentPoly f = parse_poly(load_expression(expr_arg), n);
            std::cout << expansion_json(decompose_p(f).coefficients) << "\n";
        } else if (kernel_cmd->parsed()) {
            if (expr_arg.empty()) throw DomainError("kernel needs -f");
            const LaurentPoly f = parse_poly(load_expression(expr_arg), n);
            std::cout << expansion_json(kernel_decompose(f).s_coefficients) << "\n";
        } else if (lift_cmd->parsed()) {
            const Weight mu = checked_weight(weight_arg, n - 2);
            const Weight lifted = lift_weight(mu);
            std::string out;
            for (std::size_t i = 0; i < lifted.size(); ++i) out += (i ? "," : "") + std::to_string(lifted[i]);
            std::cout << out << "\n";
        } else if (verify_cmd->parsed()) {
            return run_verify(n, max_entry, suite_arg);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
