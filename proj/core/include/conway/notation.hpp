// The factorization expression language.
//
// Grammar:
//   assertion := product ("=" product)*
//   product   := atom+
//   atom      := "M" | "P5"
//              | "row2(" poly "," poly ")" | "col2(" poly "," poly ")"
//              | "mat2(" poly "," poly ";" poly "," poly ")"
//              | "row5(" poly{5} ")" | "col5(" poly{5} ")"
//              | poly                                (a 1x1 scalar atom)
//   poly      := signed sum of products of integers, variables aj and
//                parenthesized subexpressions; "*" is optional before a
//                variable or "(", "^" takes an integer exponent
//
// Whitespace is insignificant. Juxtaposed atoms multiply left to right;
// a bare polynomial atom extends as far as it can, so two scalar atoms
// never sit next to each other.
#pragma once

#include "conway/polyring.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace conway {

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off) : std::runtime_error(msg), offset(off) {}
};

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExprNode {
    enum class Kind {
        PolyLit,
        Row2,
        Col2,
        Mat2Lit,
        Row5,
        Col5,
        MetricM,
        MetricP5,
        Product,
        Assertion,
    };

    Kind kind = Kind::PolyLit;
    std::vector<Polynomial> polys;   // atom arguments (PolyLit 1, Row2/Col2 2, Mat2Lit 4, Row5/Col5 5)
    std::vector<ExprNode> children;  // Product: atoms; Assertion: >= 2 products

    bool operator==(const ExprNode&) const = default;
};

// Errors carry a 0-based character offset into the input.
ExprNode parse(const std::string& text);

// Canonical text; parse(print(e)) is structurally equal to e.
std::string print(const ExprNode& e);

// Evaluates a product (or single atom) of shape 1xN ... Nx1 to its scalar.
// Throws DimensionError naming the adjacent atoms on an inner mismatch, or
// describing the final shape when the result is not 1x1.
Polynomial expand(const ExprNode& e);

struct IdentityOutcome {
    bool all_equal = false;
    Polynomial canonical;                // first branch
    std::vector<Polynomial> mismatches;  // branch minus first, disagreeing branches only
};

// Expands every branch of an assertion (a lone product counts as one
// branch) and compares them; inequality is data, not an error.
IdentityOutcome check_identity(const ExprNode& e);

}  // namespace conway
