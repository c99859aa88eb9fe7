#include "conway/registry.hpp"

#include "conway/oracle.hpp"
#include "conway/tangle2.hpp"
#include "conway/tangle3.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace conway {

namespace detail {
extern const char* embedded_registry_json;
}

using nlohmann::json;

std::string FamilyRecord::group() const {
    std::size_t cut = id.rfind('-');
    return cut == std::string::npos ? id : id.substr(0, cut);
}

namespace {

[[noreturn]] void schema_fail(std::size_t index, const std::string& msg) {
    throw RegistryError("families[" + std::to_string(index) + "]: " + msg);
}

std::string require_string(const json& rec, std::size_t index, const char* field) {
    if (!rec.contains(field) || !rec[field].is_string())
        schema_fail(index, std::string("missing or non-string field \"") + field + "\"");
    return rec[field].get<std::string>();
}

std::vector<std::string> string_list(const json& arr, std::size_t index, const char* field) {
    if (!arr.is_array() || arr.empty())
        schema_fail(index, std::string("field \"") + field + "\" must be a non-empty array");
    std::vector<std::string> out;
    for (const auto& s : arr) {
        if (!s.is_string())
            schema_fail(index, std::string("field \"") + field + "\" must contain strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

FamilyRecord parse_record(const json& rec, std::size_t index) {
    if (!rec.is_object()) schema_fail(index, "record must be an object");
    FamilyRecord r;
    r.id = require_string(rec, index, "id");
    r.seed_label = require_string(rec, index, "seed_label");
    if (!rec.contains("conway_count") || !rec["conway_count"].is_number_integer())
        schema_fail(index, "missing or non-integer field \"conway_count\"");
    r.conway_count = rec["conway_count"].get<int>();
    if (r.conway_count < 1 || r.conway_count > 6)
        schema_fail(index, "conway_count must be in 1..6");
    if (!rec.contains("expressions"))
        schema_fail(index, "missing field \"expressions\"");
    r.expressions = string_list(rec["expressions"], index, "expressions");
    r.as_printed =
        rec.contains("as_printed") ? string_list(rec["as_printed"], index, "as_printed") : r.expressions;
    if (rec.contains("errata")) {
        if (!rec["errata"].is_array()) schema_fail(index, "field \"errata\" must be an array");
        for (const auto& e : rec["errata"]) {
            Erratum err;
            err.original = require_string(e, index, "original");
            err.corrected = require_string(e, index, "corrected");
            err.note = require_string(e, index, "note");
            r.errata.push_back(std::move(err));
        }
    }
    if (rec.contains("expected_terms")) {
        const auto& et = rec["expected_terms"];
        if (!et.is_object() || !et.contains("value") || !et["value"].is_number_integer() ||
            !et.contains("provenance") || !et["provenance"].is_string())
            schema_fail(index, "field \"expected_terms\" must hold integer value and provenance");
        ExpectedTerms ex;
        ex.value = et["value"].get<int>();
        std::string prov = et["provenance"].get<std::string>();
        if (prov == "paper") {
            ex.provenance = Provenance::Paper;
        } else if (prov == "derived") {
            ex.provenance = Provenance::Derived;
        } else {
            schema_fail(index, "expected_terms.provenance must be \"paper\" or \"derived\"");
        }
        if (ex.provenance == Provenance::Paper && ex.value != 11 && ex.value != 12 &&
            ex.value != 13 && ex.value != 16)
            schema_fail(index, "stated term counts are limited to 11, 12, 13 and 16");
        r.expected_terms = ex;
    }
    if (rec.contains("notes")) r.notes = require_string(rec, index, "notes");
    return r;
}

void check_variable_usage(const FamilyRecord& r, std::size_t index) {
    std::set<VarId> used;
    for (const std::string& text : r.expressions) {
        ExprNode e;
        try {
            e = parse(text);
        } catch (const ParseError& ex) {
            schema_fail(index, "expression \"" + text + "\" does not parse: " + ex.what());
        }
        std::vector<const ExprNode*> stack{&e};
        while (!stack.empty()) {
            const ExprNode* n = stack.back();
            stack.pop_back();
            for (const Polynomial& p : n->polys)
                for (VarId v : p.variables()) used.insert(v);
            for (const ExprNode& c : n->children) stack.push_back(&c);
        }
    }
    std::set<VarId> expected;
    for (int j = 1; j <= r.conway_count; ++j) expected.insert(static_cast<VarId>(j));
    if (used != expected)
        schema_fail(index, "id " + r.id + ": conway_count " + std::to_string(r.conway_count) +
                               " does not match the variables used");
}

std::vector<FamilyRecord> load_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("families") || !doc["families"].is_array())
        throw RegistryError("registry document must hold a \"families\" array");
    const auto& arr = doc["families"];
    if (arr.empty()) throw RegistryError("registry is empty");
    std::vector<FamilyRecord> out;
    std::set<std::string> ids;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        FamilyRecord r = parse_record(arr[i], i);
        if (!ids.insert(r.id).second) schema_fail(i, "duplicate id \"" + r.id + "\"");
        check_variable_usage(r, i);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::vector<FamilyRecord> load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RegistryError("cannot open registry file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& ex) {
        throw RegistryError(std::string("registry is not valid JSON: ") + ex.what());
    }
    return load_json(doc);
}

std::vector<FamilyRecord> load_from_string(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw RegistryError(std::string("registry is not valid JSON: ") + ex.what());
    }
    return load_json(doc);
}

const char* embedded_registry_json() { return detail::embedded_registry_json; }

std::vector<FamilyRecord> load_default() { return load_from_string(embedded_registry_json()); }

bool VerificationReport::pass() const {
    return errors.empty() && branches_agree && multilinear_unit && vars_complete && chain_agree &&
           naive_agree && point_agree && expected_match.value_or(true);
}

namespace {

// Branches shaped row2 M (mat2 M)* col2 get re-evaluated through the
// metric-chain path; row5 P5 col5 through the bilinear product.
bool try_chain2(const ExprNode& prod, Chain2& out) {
    using K = ExprNode::Kind;
    const auto& a = prod.children;
    std::size_t n = a.size();
    if (n < 3 || n % 2 == 0) return false;
    if (a.front().kind != K::Row2 || a.back().kind != K::Col2) return false;
    for (std::size_t i = 1; i + 1 < n; i += 2)
        if (a[i].kind != K::MetricM) return false;
    for (std::size_t i = 2; i + 1 < n; i += 2)
        if (a[i].kind != K::Mat2Lit) return false;
    out.row = row2(a.front().polys[0], a.front().polys[1]);
    out.interior.clear();
    for (std::size_t i = 2; i + 1 < n; i += 2)
        out.interior.push_back(
            Mat2{{{{a[i].polys[0], a[i].polys[1]}, {a[i].polys[2], a[i].polys[3]}}}});
    out.column = col2(a.back().polys[0], a.back().polys[1]);
    return true;
}

bool try_bilinear(const ExprNode& prod, Vec5& u, Vec5& v) {
    using K = ExprNode::Kind;
    const auto& a = prod.children;
    if (a.size() != 3 || a[0].kind != K::Row5 || a[1].kind != K::MetricP5 ||
        a[2].kind != K::Col5)
        return false;
    u = row5({a[0].polys[0], a[0].polys[1], a[0].polys[2], a[0].polys[3], a[0].polys[4]});
    v = col5({a[2].polys[0], a[2].polys[1], a[2].polys[2], a[2].polys[3], a[2].polys[4]});
    return true;
}

}  // namespace

VerificationReport verify_family(const FamilyRecord& r, const VerifyOptions& opt) {
    VerificationReport rep;
    rep.id = r.id;
    const auto& sources = opt.as_printed ? r.as_printed : r.expressions;

    std::vector<ExprNode> branches;
    for (const std::string& text : sources) {
        try {
            ExprNode e = parse(text);
            if (e.kind == ExprNode::Kind::Assertion)
                for (ExprNode& b : e.children) branches.push_back(std::move(b));
            else
                branches.push_back(std::move(e));
        } catch (const ParseError& ex) {
            rep.errors.push_back("\"" + text + "\": " + ex.what());
        }
    }

    std::vector<Polynomial> polys;
    std::vector<const ExprNode*> expanded;  // branches that evaluated cleanly
    for (const ExprNode& b : branches) {
        try {
            polys.push_back(expand(b));
            expanded.push_back(&b);
        } catch (const DimensionError& ex) {
            rep.errors.push_back("\"" + print(b) + "\": " + ex.what());
        }
    }
    if (polys.empty()) return rep;

    rep.canonical = polys[0];
    rep.branches_agree = true;
    for (std::size_t i = 1; i < polys.size(); ++i) {
        if (!(polys[i] == rep.canonical)) {
            rep.branches_agree = false;
            rep.mismatches.push_back(polys[i] - rep.canonical);
        }
    }

    rep.multilinear_unit = rep.canonical.is_unit_multilinear();
    rep.seed_count = static_cast<long long>(rep.canonical.term_count());
    std::vector<VarId> expected_vars;
    for (int j = 1; j <= r.conway_count; ++j) expected_vars.push_back(static_cast<VarId>(j));
    rep.vars_complete = rep.canonical.variables() == expected_vars;
    if (r.expected_terms) rep.expected_match = rep.seed_count == r.expected_terms->value;

    rep.chain_agree = true;
    for (std::size_t i = 0; i < expanded.size(); ++i) {
        const ExprNode& b = *expanded[i];
        if (b.kind != ExprNode::Kind::Product) continue;
        Chain2 chain;
        Vec5 u, v;
        if (try_chain2(b, chain)) {
            if (!(chain_eval(chain) == polys[i])) rep.chain_agree = false;
        } else if (try_bilinear(b, u, v)) {
            if (!(bilinear(u, v) == polys[i])) rep.chain_agree = false;
        }
    }

    rep.naive_agree = true;
    for (std::size_t i = 0; i < expanded.size(); ++i)
        if (!naive_matches(naive_expand(*expanded[i]), polys[i])) rep.naive_agree = false;

    ExprNode joint;
    if (expanded.size() == 1) {
        joint = *expanded[0];
    } else {
        joint.kind = ExprNode::Kind::Assertion;
        for (const ExprNode* b : expanded) joint.children.push_back(*b);
    }
    rep.point_agree = point_check(joint, opt.oracle_trials, opt.seed);

    return rep;
}

std::vector<VerificationReport> verify_all(const std::vector<FamilyRecord>& records,
                                           const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    out.reserve(records.size());
    for (const FamilyRecord& r : records) out.push_back(verify_family(r, opt));
    return out;
}

}  // namespace conway
