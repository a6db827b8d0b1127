// multiseg: dual / speh / product / downset / lnt / diagram / verify
//
// Verdicts and enumerations are data and go to stdout; exit codes report
// only operational problems (2 = bad input, 3 = internal mismatch,
// 4 = downset budget exceeded).

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "multiseg/criteria.hpp"
#include "multiseg/diagram.hpp"
#include "multiseg/involution.hpp"
#include "multiseg/lnt.hpp"
#include "multiseg/verify.hpp"

using namespace multiseg;

namespace {

std::size_t default_budget() {
    if (const char* env = std::getenv("MULTISEG_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        std::cerr << "warning: ignoring malformed MULTISEG_BUDGET\n";
    }
    return kDefaultDownsetBudget;
}

SpehParams parse_quad(const std::string& text, const std::string& line_label) {
    std::vector<int> v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
    if (v.size() != 4) throw std::invalid_argument("expected A,B,C,D: " + text);
    return SpehParams(Line{line_label}, v[0], v[1], v[2], v[3]);
}

Partition parse_partition(const std::string& text) {
    std::vector<int> v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
    return Partition(std::move(v));
}

void print_verdict(const Verdict& v, bool json) {
    if (json)
        std::cout << v.to_json() << "\n";
    else {
        std::cout << to_string(v.status) << " (" << v.criterion << ")";
        if (!v.evidence.empty()) std::cout << ": " << v.evidence;
        std::cout << "\n";
    }
}

int cmd_dual(const std::string& text, const std::string& algo, bool trace, bool json) {
    Multisegment a = parse_multisegment(text);
    std::vector<StepTrace> traces;
    std::vector<StepTrace>* tp = trace ? &traces : nullptr;
    Multisegment result;
    if (algo == "left")
        result = mwa_left(a, tp);
    else if (algo == "right")
        result = mwa_right(a, tp);
    else {
        result = mwa_left(a, tp);
        if (mwa_right(a) != result) {
            std::cerr << "internal error: left/right algorithms disagree on "
                      << format_multisegment(a) << "\n";
            return 3;
        }
    }
    if (json) {
        nlohmann::json out;
        out["input"] = nlohmann::json::parse(to_json(a));
        out["dual"] = nlohmann::json::parse(to_json(result));
        if (trace) out["trace"] = nlohmann::json::parse(traces_to_json(traces));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << format_multisegment(result) << "\n";
        if (trace)
            for (const auto& st : traces) {
                std::cout << "  produced [" << st.produced.b << "," << st.produced.e << "] from";
                for (const auto& s : st.used) std::cout << " [" << s.b << "," << s.e << "]";
                std::cout << "\n";
            }
    }
    return 0;
}

Verdict speh_criterion(const std::string& name, const SpehParams& p1, const SpehParams& p2,
                       std::size_t budget) {
    if (name == "thm72") return speh_reducible_thm72(p1, p2);
    if (name == "thm71") return speh_reducible_thm71(p1, p2);
    if (name == "rc") return rc_check(speh_multisegment(p1), speh_multisegment(p2));
    if (name == "badulescu")
        return badulescu_check(speh_multisegment(p1), speh_multisegment(p2), budget);
    if (name == "lnt") {
        Partition alpha(std::vector<int>(p1.segment_count(), p1.segment_length()));
        Partition beta(std::vector<int>(p2.segment_count(), p2.segment_length()));
        return lnt_reducible(alpha, p1.C, beta, p2.C, p1.line == p2.line);
    }
    throw std::invalid_argument("unknown criterion: " + name);
}

int cmd_speh(const SpehParams& p1, const SpehParams& p2, const std::string& criterion,
             bool json, std::size_t budget) {
    std::vector<std::string> names;
    if (criterion == "all")
        names = {"thm72", "thm71", "rc", "badulescu", "lnt", "mw"};
    else
        names = {criterion};
    Verdict first;
    bool agree = true;
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < names.size(); ++i) {
        Verdict v;
        if (names[i] == "mw") {
            // doubled J-parameters of an integral quadruple: t2 = B-A,
            // a2 = A+B, b2 = C+D (then the doubled quad is 2A,2B,2C,2D)
            MWParams j1(p1.line, p1.B - p1.A, p1.A + p1.B, p1.C + p1.D);
            MWParams j2(p2.line, p2.B - p2.A, p2.A + p2.B, p2.C + p2.D);
            bool linked = (p1.line == p2.line) && mw_linked(j1, j2);
            v.status = linked ? Status::Reducible : Status::Irreducible;
            v.criterion = linked ? "mw-linked" : "mw-not-linked";
        } else {
            v = speh_criterion(names[i], p1, p2, budget);
        }
        if (i == 0)
            first = v;
        else if (v.status != Status::Unknown && first.status != Status::Unknown &&
                 v.status != first.status)
            agree = false;
        if (json) {
            nlohmann::json jv = nlohmann::json::parse(v.to_json());
            jv["criterion_name"] = names[i];
            out.push_back(jv);
        } else {
            if (names.size() > 1) std::cout << names[i] << ": ";
            print_verdict(v, false);
        }
    }
    if (json)
        std::cout << (names.size() == 1 ? out[0].dump(2) : out.dump(2)) << "\n";
    else if (names.size() > 1)
        std::cout << (agree ? "all criteria agree" : "CRITERIA DISAGREE") << "\n";
    return agree ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multisegment combinatorics: duals, partial order, Speh reducibility"};
    app.require_subcommand(1);
    std::size_t budget = default_budget();

    // dual
    std::string dual_text, dual_algo = "left";
    bool dual_trace = false, dual_json = false;
    auto* sc_dual = app.add_subcommand("dual", "Zelevinsky dual of a multisegment");
    sc_dual->add_option("multisegment", dual_text, "e.g. \"[0,2]+[1,3]\"")->required();
    sc_dual->add_option("--algo", dual_algo)->check(CLI::IsMember({"left", "right", "both"}));
    sc_dual->add_flag("--trace", dual_trace, "print step traces");
    sc_dual->add_flag("--json", dual_json);

    // speh
    std::string p1_text, p2_text, line1 = "rho", line2 = "rho", criterion = "thm72";
    bool speh_json = false;
    auto* sc_speh = app.add_subcommand("speh", "reducibility of a product of two Speh reps");
    sc_speh->add_option("--p1", p1_text, "A,B,C,D")->required();
    sc_speh->add_option("--p2", p2_text, "A,B,C,D")->required();
    sc_speh->add_option("--line1", line1);
    sc_speh->add_option("--line2", line2);
    sc_speh->add_option("--criterion", criterion)
        ->check(CLI::IsMember({"thm72", "thm71", "rc", "badulescu", "lnt", "mw", "all"}));
    sc_speh->add_flag("--json", speh_json);

    // product
    std::vector<std::string> prod_quads;
    bool prod_json = false;
    auto* sc_prod = app.add_subcommand("product", "irreducibility of a product of Speh reps");
    sc_prod->add_option("--p", prod_quads, "A,B,C,D (repeatable)")->required();
    sc_prod->add_flag("--json", prod_json);

    // downset
    std::string down_text;
    bool down_strict = false, down_json = false;
    std::size_t down_limit = 0;
    auto* sc_down = app.add_subcommand("downset", "enumerate { c : c < b } (or <=)");
    sc_down->add_option("multisegment", down_text)->required();
    sc_down->add_flag("--strict", down_strict, "exclude b itself");
    sc_down->add_option("--limit", down_limit, "visited-state budget");
    sc_down->add_flag("--json", down_json);

    // lnt
    std::string alpha_text, beta_text;
    int lnt_x = 0, lnt_y = 0;
    bool lnt_json = false;
    auto* sc_lnt = app.add_subcommand("lnt", "ladder-pair reducibility (interval criterion)");
    sc_lnt->add_option("--alpha", alpha_text, "partition, e.g. 4,4")->required();
    sc_lnt->add_option("--x", lnt_x)->required();
    sc_lnt->add_option("--beta", beta_text)->required();
    sc_lnt->add_option("--y", lnt_y)->required();
    sc_lnt->add_flag("--json", lnt_json);

    // diagram
    std::string diag_text, diag_quad, diag_format = "text";
    auto* sc_diag = app.add_subcommand("diagram", "dot-row rendering of a multisegment");
    sc_diag->add_option("multisegment", diag_text);
    sc_diag->add_option("--p", diag_quad, "Speh quadruple A,B,C,D");
    sc_diag->add_option("--format", diag_format)->check(CLI::IsMember({"text", "svg"}));

    // verify
    std::string suite = "all";
    VerifyConfig vcfg;
    vcfg.budget = budget;
    bool verify_json = false;
    auto* sc_verify = app.add_subcommand("verify", "run property suites");
    sc_verify->add_option("--suite", suite, "suite name or 'all'");
    sc_verify->add_option("--max-end", vcfg.max_end);
    sc_verify->add_option("--max-segments", vcfg.max_segments);
    sc_verify->add_option("--budget", vcfg.budget);
    sc_verify->add_option("--seed", vcfg.seed);
    sc_verify->add_option("--trials", vcfg.trials);
    sc_verify->add_flag("--json", verify_json);
    sc_verify->add_flag("--parallel", vcfg.parallel);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_dual->parsed()) return cmd_dual(dual_text, dual_algo, dual_trace, dual_json);

        if (sc_speh->parsed()) {
            SpehParams p1 = parse_quad(p1_text, line1);
            SpehParams p2 = parse_quad(p2_text, line2);
            return cmd_speh(p1, p2, criterion, speh_json, budget);
        }

        if (sc_prod->parsed()) {
            std::vector<SpehParams> ps;
            for (const auto& q : prod_quads) ps.push_back(parse_quad(q, "rho"));
            Verdict v = product_irreducible(ps);
            print_verdict(v, prod_json);
            return 0;
        }

        if (sc_down->parsed()) {
            Multisegment b = parse_multisegment(down_text);
            std::size_t limit = down_limit ? down_limit : budget;
            std::set<Multisegment> down;
            try {
                down = strict_downset(b, limit);
            } catch (const DownsetBudgetExceeded& ex) {
                std::cerr << "budget exceeded after " << ex.partial_count << " states\n";
                return 4;
            }
            if (!down_strict) down.insert(b);
            if (down_json) {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& c : down) out.push_back(nlohmann::json::parse(to_json(c)));
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << down.size() << " element" << (down.size() == 1 ? "" : "s") << "\n";
                for (const auto& c : down) std::cout << format_multisegment(c) << "\n";
            }
            return 0;
        }

        if (sc_lnt->parsed()) {
            Verdict v = lnt_reducible(parse_partition(alpha_text), lnt_x,
                                      parse_partition(beta_text), lnt_y);
            print_verdict(v, lnt_json);
            return 0;
        }

        if (sc_diag->parsed()) {
            if (diag_text.empty() == diag_quad.empty()) {
                std::cerr << "diagram: give either a multisegment or --p, not both\n";
                return 2;
            }
            Multisegment a = diag_quad.empty() ? parse_multisegment(diag_text)
                                               : speh_multisegment(parse_quad(diag_quad, "rho"));
            std::cout << (diag_format == "svg" ? render_svg(a) : render_text(a));
            return 0;
        }

        if (sc_verify->parsed()) {
            std::vector<std::string> to_run;
            if (suite == "all") {
                to_run = suite_names();
            } else {
                const auto& names = suite_names();
                if (std::find(names.begin(), names.end(), suite) == names.end()) {
                    std::cerr << "unknown suite: " << suite << "\nknown suites:";
                    for (const auto& n : names) std::cerr << ' ' << n;
                    std::cerr << '\n';
                    return 2;
                }
                to_run = {suite};
            }
            bool all_passed = true;
            nlohmann::json reports = nlohmann::json::array();
            for (const auto& name : to_run) {
                Report rep = run_suite(name, vcfg);  // throws on unknown suite
                all_passed = all_passed && rep.passed();
                if (verify_json)
                    reports.push_back(nlohmann::json::parse(rep.to_json()));
                else {
                    std::cout << rep.suite << ": " << (rep.passed() ? "pass" : "FAIL") << " ("
                              << rep.cases_run << " cases, " << rep.failures.size()
                              << " failures, " << rep.wall_time << "s)\n";
                    for (std::size_t i = 0; i < rep.failures.size() && i < 10; ++i)
                        std::cout << "  " << rep.failures[i].inputs << "\n    expected "
                                  << rep.failures[i].expected << "\n    got      "
                                  << rep.failures[i].got << "\n";
                }
            }
            if (verify_json)
                std::cout << (to_run.size() == 1 ? reports[0].dump(2) : reports.dump(2)) << "\n";
            return all_passed ? 0 : 1;
        }
    } catch (const ParseError& ex) {
        std::cerr << "parse error at position " << ex.position << ": " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
