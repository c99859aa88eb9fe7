// Exact sparse multivariate polynomials over arbitrary-precision integers
// in the variables a1, a2, a3, ...
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conway {

using Int = boost::multiprecision::cpp_int;
using VarId = std::uint32_t;

struct MissingAssignment : std::runtime_error {
    VarId var;
    explicit MissingAssignment(VarId v)
        : std::runtime_error("missing assignment for a" + std::to_string(v)), var(v) {}
};

// Sparse exponent list sorted by variable id; exponents are >= 1.
// The empty list is the unit monomial.
struct Monomial {
    std::vector<std::pair<VarId, std::uint32_t>> exps;

    std::uint32_t total_degree() const;
    bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order: first by total degree, then by the flattened
// variable sequence (a1*a2^2 reads 1,2,2) compared lexicographically.
bool monomial_less(const Monomial& a, const Monomial& b);

Monomial monomial_mul(const Monomial& a, const Monomial& b);

// Immutable value type; terms are kept sorted by monomial_less and never
// store a zero coefficient, so equal polynomials compare equal memberwise.
class Polynomial {
  public:
    Polynomial() = default;  // zero
    Polynomial(int c) : Polynomial(Int(c)) {}
    explicit Polynomial(Int c);

    static Polynomial var(VarId j);  // a_j; rejects j == 0
    static Polynomial from_terms(std::vector<std::pair<Monomial, Int>> raw);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::uint32_t degree() const;              // total degree; 0 for the zero polynomial
    std::vector<VarId> variables() const;      // sorted, distinct
    bool is_unit_multilinear() const;          // every coefficient 1, every exponent <= 1

    // Exact evaluation; the assignment must cover every variable of the
    // polynomial, otherwise MissingAssignment names the smallest missing one.
    Int eval(const std::map<VarId, Int>& assignment) const;
    Int eval_ones() const;  // sum of coefficients

    // Canonical rendering: terms joined by " + " / " - ", coefficient
    // omitted when +-1 on a non-constant term, "^e" only for e >= 2,
    // the zero polynomial prints "0".
    std::string str() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    Polynomial& operator*=(const Polynomial& q);

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(Polynomial p, const Polynomial& q) { return p *= q; }

    bool operator==(const Polynomial&) const = default;

    const std::vector<std::pair<Monomial, Int>>& terms() const { return terms_; }

  private:
    std::vector<std::pair<Monomial, Int>> terms_;
};

Polynomial pow(const Polynomial& p, std::uint32_t e);

// Named aliases for the operator forms.
inline Polynomial poly_var(VarId j) { return Polynomial::var(j); }
inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline Int eval(const Polynomial& p, const std::map<VarId, Int>& a) { return p.eval(a); }
inline bool is_unit_multilinear(const Polynomial& p) { return p.is_unit_multilinear(); }
inline std::size_t term_count(const Polynomial& p) { return p.term_count(); }

}  // namespace conway
