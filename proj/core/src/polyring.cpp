#include "conway/polyring.hpp"

#include <algorithm>
#include <set>

namespace conway {

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [v, e] : exps) d += e;
    return d;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // Same degree: walk the flattened variable sequences in step without
    // materializing them.
    std::size_t ia = 0, ib = 0;
    std::uint32_t ra = 0, rb = 0;  // repeats already consumed of the current entry
    while (ia < a.exps.size() && ib < b.exps.size()) {
        VarId va = a.exps[ia].first, vb = b.exps[ib].first;
        if (va != vb) return va < vb;
        std::uint32_t ea = a.exps[ia].second, eb = b.exps[ib].second;
        std::uint32_t step = std::min(ea - ra, eb - rb);
        ra += step;
        rb += step;
        if (ra == ea) { ++ia; ra = 0; }
        if (rb == eb) { ++ib; rb = 0; }
    }
    return false;  // equal sequences (degrees match, so both ended)
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exps.reserve(a.exps.size() + b.exps.size());
    std::size_t i = 0, j = 0;
    while (i < a.exps.size() || j < b.exps.size()) {
        if (j == b.exps.size() || (i < a.exps.size() && a.exps[i].first < b.exps[j].first)) {
            r.exps.push_back(a.exps[i++]);
        } else if (i == a.exps.size() || b.exps[j].first < a.exps[i].first) {
            r.exps.push_back(b.exps[j++]);
        } else {
            r.exps.emplace_back(a.exps[i].first, a.exps[i].second + b.exps[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial::Polynomial(Int c) {
    if (c != 0) terms_.emplace_back(Monomial{}, std::move(c));
}

Polynomial Polynomial::var(VarId j) {
    if (j == 0) throw std::invalid_argument("variable index must be >= 1");
    Polynomial p;
    p.terms_.emplace_back(Monomial{{{j, 1}}}, Int(1));
    return p;
}

Polynomial Polynomial::from_terms(std::vector<std::pair<Monomial, Int>> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const auto& x, const auto& y) { return monomial_less(x.first, y.first); });
    Polynomial p;
    for (auto& [m, c] : raw) {
        if (!p.terms_.empty() && p.terms_.back().first == m) {
            p.terms_.back().second += c;
            if (p.terms_.back().second == 0) p.terms_.pop_back();
        } else if (c != 0) {
            p.terms_.emplace_back(std::move(m), std::move(c));
        }
    }
    return p;
}

std::uint32_t Polynomial::degree() const {
    return terms_.empty() ? 0 : terms_.back().first.total_degree();
}

std::vector<VarId> Polynomial::variables() const {
    std::set<VarId> seen;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.exps) seen.insert(v);
    return {seen.begin(), seen.end()};
}

bool Polynomial::is_unit_multilinear() const {
    for (const auto& [m, c] : terms_) {
        if (c != 1) return false;
        for (const auto& [v, e] : m.exps)
            if (e > 1) return false;
    }
    return true;
}

Int Polynomial::eval(const std::map<VarId, Int>& assignment) const {
    for (VarId v : variables())
        if (!assignment.count(v)) throw MissingAssignment(v);
    Int total = 0;
    for (const auto& [m, c] : terms_) {
        Int t = c;
        for (const auto& [v, e] : m.exps) t *= boost::multiprecision::pow(assignment.at(v), e);
        total += t;
    }
    return total;
}

Int Polynomial::eval_ones() const {
    Int total = 0;
    for (const auto& [m, c] : terms_) total += c;
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        Int mag = neg ? Int(-c) : c;
        if (m.exps.empty()) {
            out += mag.str();
            continue;
        }
        std::string vars;
        for (const auto& [v, e] : m.exps) {
            if (!vars.empty()) vars += "*";
            vars += "a" + std::to_string(v);
            if (e >= 2) vars += "^" + std::to_string(e);
        }
        if (mag != 1) out += mag.str() + "*";
        out += vars;
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    // Merge of two canonically sorted term lists.
    std::vector<std::pair<Monomial, Int>> out;
    out.reserve(terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < q.terms_.size()) {
        if (j == q.terms_.size() ||
            (i < terms_.size() && monomial_less(terms_[i].first, q.terms_[j].first))) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || monomial_less(q.terms_[j].first, terms_[i].first)) {
            out.push_back(q.terms_[j++]);
        } else {
            Int c = terms_[i].second + q.terms_[j].second;
            if (c != 0) out.emplace_back(std::move(terms_[i].first), std::move(c));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) { return *this += -q; }

Polynomial& Polynomial::operator*=(const Polynomial& q) {
    std::vector<std::pair<Monomial, Int>> raw;
    raw.reserve(terms_.size() * q.terms_.size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : q.terms_) raw.emplace_back(monomial_mul(ma, mb), ca * cb);
    *this = from_terms(std::move(raw));
    return *this;
}

Polynomial pow(const Polynomial& p, std::uint32_t e) {
    Polynomial r(1);
    for (std::uint32_t k = 0; k < e; ++k) r *= p;
    return r;
}

}  // namespace conway
