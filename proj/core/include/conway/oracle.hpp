// Independent cross-checks: a naive term-list expansion that bypasses the
// polynomial ring's multiplication, and exact random-point evaluation of
// asserted identities.
#pragma once

#include "conway/notation.hpp"
#include "conway/polyring.hpp"

#include <cstdint>
#include <vector>

namespace conway {

// One fully distributed term: coefficient and the sorted variable multiset
// (a variable appears once per power).
struct NTerm {
    Int coeff;
    std::vector<VarId> vars;
    bool operator==(const NTerm&) const = default;
};

// Expands a product by raw term-by-term distribution, combining nothing
// until one final sort-and-merge. Ordered by (multiset size, multiset),
// which coincides with the polynomial ring's canonical order.
std::vector<NTerm> naive_expand(const ExprNode& product);

// True iff the naive term list is exactly the canonical form of p.
bool naive_matches(const std::vector<NTerm>& terms, const Polynomial& p);

// Draws `trials` assignments of every variable to a uniform integer in
// [1, 2^16] from a deterministic generator, evaluates each branch by plain
// big-integer matrix arithmetic, and reports whether all branches agreed
// on every trial.
bool point_check(const ExprNode& e, int trials, std::uint64_t seed);

}  // namespace conway
