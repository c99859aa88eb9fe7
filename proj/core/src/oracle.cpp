#include "conway/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace conway {

namespace {

using TermList = std::vector<NTerm>;

TermList poly_term_list(const Polynomial& p) {
    TermList out;
    for (const auto& [m, c] : p.terms()) {
        NTerm t{c, {}};
        for (const auto& [v, e] : m.exps) t.vars.insert(t.vars.end(), e, v);
        out.push_back(std::move(t));
    }
    return out;
}

TermList tl_mul(const TermList& a, const TermList& b) {
    TermList out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) {
            NTerm t{x.coeff * y.coeff, {}};
            t.vars.resize(x.vars.size() + y.vars.size());
            std::merge(x.vars.begin(), x.vars.end(), y.vars.begin(), y.vars.end(), t.vars.begin());
            out.push_back(std::move(t));
        }
    return out;
}

struct TLMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<TermList> at;

    TermList& operator()(std::size_t r, std::size_t c) { return at[r * cols + c]; }
    const TermList& operator()(std::size_t r, std::size_t c) const { return at[r * cols + c]; }
};

// Shares expand()'s atom shapes but none of its arithmetic.
TLMatrix tl_atom(const ExprNode& a) {
    using K = ExprNode::Kind;
    auto lift = [](std::initializer_list<int> bits, std::size_t rows, std::size_t cols) {
        TLMatrix m{rows, cols, {}};
        for (int b : bits) {
            TermList cell;
            if (b != 0) cell.push_back(NTerm{Int(b), {}});
            m.at.push_back(std::move(cell));
        }
        return m;
    };
    auto from_polys = [](const std::vector<Polynomial>& ps, std::size_t rows, std::size_t cols) {
        TLMatrix m{rows, cols, {}};
        for (const Polynomial& p : ps) m.at.push_back(poly_term_list(p));
        return m;
    };
    switch (a.kind) {
        case K::PolyLit: return from_polys(a.polys, 1, 1);
        case K::Row2: return from_polys(a.polys, 1, 2);
        case K::Col2: return from_polys(a.polys, 2, 1);
        case K::Mat2Lit: return from_polys(a.polys, 2, 2);
        case K::Row5: return from_polys(a.polys, 1, 5);
        case K::Col5: return from_polys(a.polys, 5, 1);
        case K::MetricM: return lift({0, 1, 1, 0}, 2, 2);
        case K::MetricP5:
            return lift({0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0},
                        5, 5);
        default: throw std::logic_error("not an atom");
    }
}

TLMatrix tl_mat_mul(const TLMatrix& x, const TLMatrix& y) {
    TLMatrix r{x.rows, y.cols, {}};
    r.at.resize(x.rows * y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x(i, k).empty()) continue;
            for (std::size_t j = 0; j < y.cols; ++j) {
                TermList prod = tl_mul(x(i, k), y(k, j));
                TermList& cell = r(i, j);
                cell.insert(cell.end(), std::make_move_iterator(prod.begin()),
                            std::make_move_iterator(prod.end()));
            }
        }
    return r;
}

bool nterm_order(const NTerm& a, const NTerm& b) {
    if (a.vars.size() != b.vars.size()) return a.vars.size() < b.vars.size();
    return a.vars < b.vars;
}

}  // namespace

std::vector<NTerm> naive_expand(const ExprNode& e) {
    if (e.kind == ExprNode::Kind::Assertion)
        throw std::invalid_argument("naive_expand takes a single product");
    std::vector<const ExprNode*> atoms;
    if (e.kind == ExprNode::Kind::Product)
        for (const ExprNode& c : e.children) atoms.push_back(&c);
    else
        atoms.push_back(&e);

    TLMatrix acc = tl_atom(*atoms[0]);
    for (std::size_t i = 1; i < atoms.size(); ++i) {
        TLMatrix next = tl_atom(*atoms[i]);
        if (acc.cols != next.rows)
            throw DimensionError("dimension mismatch between \"" + print(*atoms[i - 1]) +
                                 "\" and \"" + print(*atoms[i]) + "\"");
        acc = tl_mat_mul(acc, next);
    }
    if (acc.rows != 1 || acc.cols != 1)
        throw DimensionError("product is not a scalar");

    // The single final combining pass.
    TermList raw = std::move(acc.at[0]);
    std::sort(raw.begin(), raw.end(), nterm_order);
    TermList merged;
    for (NTerm& t : raw) {
        if (!merged.empty() && merged.back().vars == t.vars) {
            merged.back().coeff += t.coeff;
            if (merged.back().coeff == 0) merged.pop_back();
        } else if (t.coeff != 0) {
            merged.push_back(std::move(t));
        }
    }
    return merged;
}

bool naive_matches(const std::vector<NTerm>& terms, const Polynomial& p) {
    return terms == poly_term_list(p);
}

namespace {

struct NumMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> at;

    Int& operator()(std::size_t r, std::size_t c) { return at[r * cols + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return at[r * cols + c]; }
};

NumMatrix num_atom(const ExprNode& a, const std::map<VarId, Int>& asg) {
    using K = ExprNode::Kind;
    auto dims = [&a]() -> std::pair<std::size_t, std::size_t> {
        switch (a.kind) {
            case K::PolyLit: return {1, 1};
            case K::Row2: return {1, 2};
            case K::Col2: return {2, 1};
            case K::Mat2Lit: return {2, 2};
            case K::Row5: return {1, 5};
            case K::Col5: return {5, 1};
            default: throw std::logic_error("handled elsewhere");
        }
    };
    if (a.kind == K::MetricM) return NumMatrix{2, 2, {0, 1, 1, 0}};
    if (a.kind == K::MetricP5)
        return NumMatrix{5, 5, {0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0,
                                0, 1, 1, 0, 0, 1, 0, 0, 0, 0}};
    auto [r, c] = dims();
    NumMatrix m{r, c, {}};
    for (const Polynomial& p : a.polys) m.at.push_back(p.eval(asg));
    return m;
}

NumMatrix num_mul(const NumMatrix& x, const NumMatrix& y) {
    NumMatrix r{x.rows, y.cols, {}};
    r.at.assign(x.rows * y.cols, Int(0));
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

Int num_eval(const ExprNode& e, const std::map<VarId, Int>& asg) {
    std::vector<const ExprNode*> atoms;
    if (e.kind == ExprNode::Kind::Product)
        for (const ExprNode& c : e.children) atoms.push_back(&c);
    else
        atoms.push_back(&e);
    NumMatrix acc = num_atom(*atoms[0], asg);
    for (std::size_t i = 1; i < atoms.size(); ++i) {
        NumMatrix next = num_atom(*atoms[i], asg);
        if (acc.cols != next.rows)
            throw DimensionError("dimension mismatch between \"" + print(*atoms[i - 1]) +
                                 "\" and \"" + print(*atoms[i]) + "\"");
        acc = num_mul(acc, next);
    }
    if (acc.rows != 1 || acc.cols != 1) throw DimensionError("product is not a scalar");
    return acc.at[0];
}

void collect_vars(const ExprNode& e, std::set<VarId>& out) {
    for (const Polynomial& p : e.polys)
        for (VarId v : p.variables()) out.insert(v);
    for (const ExprNode& c : e.children) collect_vars(c, out);
}

}  // namespace

bool point_check(const ExprNode& e, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    std::vector<const ExprNode*> branches;
    if (e.kind == ExprNode::Kind::Assertion)
        for (const ExprNode& c : e.children) branches.push_back(&c);
    else
        branches.push_back(&e);

    std::set<VarId> vars;
    collect_vars(e, vars);

    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::map<VarId, Int> asg;
        for (VarId v : vars) asg[v] = Int(1 + (rng() & 0xFFFF));
        Int ref;
        bool have_ref = false;
        for (const ExprNode* b : branches) {
            Int val = num_eval(*b, asg);
            if (!have_ref) {
                ref = val;
                have_ref = true;
            } else if (val != ref) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace conway
