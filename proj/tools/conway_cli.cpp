// Command-line front end: expand expressions, verify the family table,
// emit the table, run the identity suite, evaluate at assignments.
#include "conway/notation.hpp"
#include "conway/oracle.hpp"
#include "conway/polyring.hpp"
#include "conway/registry.hpp"
#include "conway/tangle2.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitUnknownId = 4;
constexpr int kExitMissingVar = 5;

using namespace conway;

std::vector<FamilyRecord> load_registry(const std::string& path) {
    return path.empty() ? load_default() : load(path);
}

int count_factorizations(const FamilyRecord& r) {
    int n = 0;
    for (const std::string& text : r.expressions) {
        ExprNode e = parse(text);
        std::vector<const ExprNode*> branches;
        if (e.kind == ExprNode::Kind::Assertion)
            for (const ExprNode& c : e.children) branches.push_back(&c);
        else
            branches.push_back(&e);
        for (const ExprNode* b : branches) {
            bool scalar_literal = b->kind == ExprNode::Kind::PolyLit ||
                                  (b->kind == ExprNode::Kind::Product && b->children.size() == 1 &&
                                   b->children[0].kind == ExprNode::Kind::PolyLit);
            if (!scalar_literal) ++n;
        }
    }
    return n;
}

int cmd_expand(const std::string& text) {
    ExprNode e;
    try {
        e = parse(text);
    } catch (const ParseError& ex) {
        std::cerr << ex.what() << "\n";
        return kExitParse;
    }
    try {
        IdentityOutcome out = check_identity(e);
        if (!out.all_equal) {
            std::cerr << "branches disagree; first difference: " << out.mismatches[0].str()
                      << "\n";
            return kExitVerifyFail;
        }
        std::cout << out.canonical.str() << " (" << out.canonical.term_count() << " terms)\n";
        return kExitOk;
    } catch (const DimensionError& ex) {
        std::cerr << ex.what() << "\n";
        return kExitDimension;
    }
}

std::string report_reasons(const VerificationReport& rep) {
    std::vector<std::string> why;
    if (!rep.errors.empty()) why.push_back("errors");
    if (!rep.branches_agree) why.push_back("branch mismatch");
    if (!rep.multilinear_unit) why.push_back("not unit-multilinear");
    if (!rep.vars_complete) why.push_back("unused variables");
    if (!rep.chain_agree) why.push_back("chain path disagrees");
    if (!rep.naive_agree) why.push_back("naive expansion disagrees");
    if (!rep.point_agree) why.push_back("point check disagrees");
    if (rep.expected_match && !*rep.expected_match) why.push_back("term count != expected");
    std::string out;
    for (const std::string& w : why) {
        if (!out.empty()) out += ", ";
        out += w;
    }
    return out;
}

nlohmann::ordered_json report_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["id"] = rep.id;
    j["canonical"] = rep.canonical.str();
    j["branches_agree"] = rep.branches_agree;
    j["multilinear_unit"] = rep.multilinear_unit;
    j["vars_complete"] = rep.vars_complete;
    j["seed_count"] = rep.seed_count;
    if (rep.expected_match)
        j["expected_match"] = *rep.expected_match;
    else
        j["expected_match"] = nullptr;
    j["mismatches"] = nlohmann::ordered_json::array();
    for (const Polynomial& p : rep.mismatches) j["mismatches"].push_back(p.str());
    j["chain_agree"] = rep.chain_agree;
    j["naive_agree"] = rep.naive_agree;
    j["point_agree"] = rep.point_agree;
    j["errors"] = rep.errors;
    j["pass"] = rep.pass();
    return j;
}

int cmd_verify(const std::string& registry_path, bool all, const std::string& id,
               bool as_printed, int trials, std::uint64_t seed, bool json_out) {
    std::vector<FamilyRecord> records;
    try {
        records = load_registry(registry_path);
    } catch (const RegistryError& ex) {
        std::cerr << ex.what() << "\n";
        return kExitVerifyFail;
    }
    std::vector<const FamilyRecord*> selected;
    if (all) {
        for (const FamilyRecord& r : records) selected.push_back(&r);
    } else {
        for (const FamilyRecord& r : records)
            if (r.id == id) selected.push_back(&r);
        if (selected.empty()) {
            std::cerr << "unknown family id: " << id << "\n";
            return kExitUnknownId;
        }
    }

    VerifyOptions opt;
    opt.as_printed = as_printed;
    opt.oracle_trials = trials;
    opt.seed = seed;

    std::size_t passed = 0;
    std::map<int, int> by_count;
    nlohmann::ordered_json jreports = nlohmann::ordered_json::array();
    std::ostringstream lines;
    for (const FamilyRecord* r : selected) {
        VerificationReport rep = verify_family(*r, opt);
        if (rep.pass()) {
            ++passed;
            ++by_count[r->conway_count];
            lines << rep.id << " OK terms=" << rep.seed_count;
            if (rep.expected_match) lines << " expected=" << r->expected_terms->value;
            lines << "\n";
        } else {
            lines << rep.id << " FAIL [" << report_reasons(rep) << "]\n";
        }
        if (json_out) jreports.push_back(report_json(rep));
    }

    if (json_out) {
        nlohmann::ordered_json doc;
        doc["families"] = std::move(jreports);
        doc["passed"] = passed;
        doc["total"] = selected.size();
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << lines.str();
        std::cout << passed << "/" << selected.size() << " OK\n";
        if (all && passed == selected.size()) {
            std::cout << "families per conway count:";
            for (const auto& [k, n] : by_count) std::cout << " " << k << ":" << n;
            std::cout << "\n";
        }
    }
    return passed == selected.size() ? kExitOk : kExitVerifyFail;
}

int cmd_table(const std::string& registry_path, const std::string& format) {
    std::vector<FamilyRecord> records;
    try {
        records = load_registry(registry_path);
    } catch (const RegistryError& ex) {
        std::cerr << ex.what() << "\n";
        return kExitVerifyFail;
    }
    struct Row {
        std::string id, label;
        int conways;
        long long number;
        int factorizations;
    };
    std::vector<Row> rows;
    for (const FamilyRecord& r : records) {
        VerificationReport rep = verify_family(r, VerifyOptions{});
        rows.push_back({r.id, r.seed_label, r.conway_count, rep.seed_count,
                        count_factorizations(r)});
    }
    if (format == "csv") {
        std::cout << "id,seed_label,conway_count,conway_number,factorizations\n";
        for (const Row& r : rows)
            std::cout << r.id << "," << r.label << "," << r.conways << "," << r.number << ","
                      << r.factorizations << "\n";
    } else {
        std::cout << "| id | seed label | conways | conway number | factorizations |\n";
        std::cout << "| --- | --- | --- | --- | --- |\n";
        for (const Row& r : rows)
            std::cout << "| " << r.id << " | " << r.label << " | " << r.conways << " | "
                      << r.number << " | " << r.factorizations << " |\n";
    }
    return kExitOk;
}

Polynomial random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 4), coef(-3, 3), var(1, 6), deg(0, 2);
    Polynomial p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Polynomial term(coef(rng));
        int factors = deg(rng);
        for (int f = 0; f < factors; ++f) term *= Polynomial::var(static_cast<VarId>(var(rng)));
        p += term;
    }
    return p;
}

int cmd_identities(int trials, std::uint64_t seed) {
    bool ok = true;
    auto line = [&ok](const std::string& name, bool good) {
        std::cout << name << ": " << (good ? "OK" : "FAIL") << "\n";
        if (!good) ok = false;
    };

    const Polynomial a1 = Polynomial::var(1), a2 = Polynomial::var(2), a3 = Polynomial::var(3),
                     a4 = Polynomial::var(4);
    line("commutation and closed forms, fresh symbols", check_commute(a1, a2, a3, a4));
    line("boundary lift, fresh symbols", check_boundary_lift(a1, a2, a3, a4));

    std::mt19937_64 rng(seed);
    bool random_commute = true, random_lift = true;
    for (int t = 0; t < trials; ++t) {
        Polynomial p1 = random_poly(rng), q1 = random_poly(rng), p2 = random_poly(rng),
                   q2 = random_poly(rng);
        if (!check_commute(p1, q1, p2, q2)) random_commute = false;
        if (!check_boundary_lift(p1, q1, p2, q2)) random_lift = false;
    }
    line("commutation, " + std::to_string(trials) + " random instantiations", random_commute);
    line("boundary lift, " + std::to_string(trials) + " random instantiations", random_lift);

    // A generic pair must not commute: only the special shapes do.
    const Mat2 m = metric_m();
    const Mat2 g1{{{{Polynomial::var(1), Polynomial::var(2)},
                    {Polynomial::var(3), Polynomial::var(4)}}}};
    const Mat2 g2{{{{Polynomial::var(5), Polynomial::var(6)},
                    {Polynomial::var(7), Polynomial::var(8)}}}};
    bool generic_commutes = mat_mul(mat_mul(g1, m), g2) == mat_mul(mat_mul(g2, m), g1);
    line("generic matrix pair refuses to commute", !generic_commutes);

    std::cout << (ok ? "all identity checks passed" : "identity checks FAILED") << "\n";
    return ok ? kExitOk : kExitVerifyFail;
}

int parse_assignment(const std::string& text, std::map<VarId, Int>& out) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq < 2 || item[0] != 'a') {
            std::cerr << "malformed assignment \"" << item << "\" (want a<j>=<integer>)\n";
            return kExitParse;
        }
        std::string idx = item.substr(1, eq - 1);
        std::string val = item.substr(eq + 1);
        if (idx.find_first_not_of("0123456789") != std::string::npos || idx.empty() ||
            idx[0] == '0' || val.empty() ||
            val.find_first_not_of("0123456789", val[0] == '-' ? 1 : 0) != std::string::npos) {
            std::cerr << "malformed assignment \"" << item << "\" (want a<j>=<integer>)\n";
            return kExitParse;
        }
        out[static_cast<VarId>(std::stoul(idx))] = Int(val);
    }
    return kExitOk;
}

int cmd_eval(const std::string& text, const std::string& assign, bool ones) {
    ExprNode e;
    try {
        e = parse(text);
    } catch (const ParseError& ex) {
        std::cerr << ex.what() << "\n";
        return kExitParse;
    }
    try {
        IdentityOutcome out = check_identity(e);
        if (!out.all_equal) {
            std::cerr << "branches disagree; refusing to evaluate\n";
            return kExitVerifyFail;
        }
        std::map<VarId, Int> asg;
        if (ones) {
            for (VarId v : out.canonical.variables()) asg[v] = 1;
        } else if (int rc = parse_assignment(assign, asg); rc != kExitOk) {
            return rc;
        }
        std::cout << out.canonical.eval(asg).str() << "\n";
        return kExitOk;
    } catch (const DimensionError& ex) {
        std::cerr << ex.what() << "\n";
        return kExitDimension;
    } catch (const MissingAssignment& ex) {
        std::cerr << ex.what() << "\n";
        return kExitMissingVar;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conway function engine: expand, verify and tabulate the family table"};
    app.require_subcommand(1);

    std::string expr_text, registry_path, family_id, assign_text;
    std::string format = "markdown";
    bool all = false, as_printed = false, json_out = false, ones = false;
    int trials = 100;
    std::uint64_t seed = 12345;

    CLI::App* expand_cmd = app.add_subcommand("expand", "expand an expression to canonical form");
    expand_cmd->add_option("expr", expr_text, "expression text")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "verify families from the registry");
    verify_cmd->add_flag("--all", all, "verify every family");
    verify_cmd->add_option("--id", family_id, "verify one family");
    verify_cmd->add_flag("--as-printed", as_printed, "use the verbatim transliterations");
    verify_cmd->add_option("--oracle-trials", trials, "random-point trials per family");
    verify_cmd->add_option("--seed", seed, "random-point seed");
    verify_cmd->add_flag("--json", json_out, "machine-readable report");
    verify_cmd->add_option("--registry", registry_path, "registry file (default: embedded)");

    CLI::App* table_cmd = app.add_subcommand("table", "emit the family table");
    table_cmd->add_option("--format", format, "markdown or csv")
        ->check(CLI::IsMember({"markdown", "csv"}));
    table_cmd->add_option("--registry", registry_path, "registry file (default: embedded)");

    CLI::App* ident_cmd = app.add_subcommand("identities", "run the matrix identity suite");
    ident_cmd->add_option("--trials", trials, "random instantiations per identity");
    ident_cmd->add_option("--seed", seed, "random generator seed");

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression at an assignment");
    eval_cmd->add_option("expr", expr_text, "expression text")->required();
    eval_cmd->add_option("--assign", assign_text, "comma-separated a<j>=<value> pairs");
    eval_cmd->add_flag("--ones", ones, "assign 1 to every variable");

    CLI11_PARSE(app, argc, argv);

    if (expand_cmd->parsed()) return cmd_expand(expr_text);
    if (verify_cmd->parsed()) {
        if (!all && family_id.empty()) {
            std::cerr << "verify needs --all or --id <id>\n";
            return kExitUnknownId;
        }
        return cmd_verify(registry_path, all, family_id, as_printed, trials, seed, json_out);
    }
    if (table_cmd->parsed()) return cmd_table(registry_path, format);
    if (ident_cmd->parsed()) return cmd_identities(trials, seed);
    if (eval_cmd->parsed()) return cmd_eval(expr_text, assign_text, ones);
    return kExitOk;
}
