#include "conway/polyring.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace conway;

namespace {

Polynomial v(VarId j) { return Polynomial::var(j); }

}  // namespace

TEST_CASE("generators print canonically") {
    CHECK(v(1).str() == "a1");
    CHECK(v(3).str() == "a3");
    CHECK((v(1) + v(2) * v(1)).str() == "a1 + a1*a2");
    CHECK_THROWS_AS(Polynomial::var(0), std::invalid_argument);
}

TEST_CASE("canonical order is graded lexicographic") {
    CHECK((Polynomial(1) + v(1) * v(2)).str() == "1 + a1*a2");
    CHECK((v(1) * v(1) + v(1) * v(2)).str() == "a1^2 + a1*a2");
    CHECK((v(2) * v(2) + v(1) * v(3)).str() == "a1*a3 + a2^2");
    CHECK((v(1) * v(1) * v(2) + v(1) * v(1) * v(1)).str() == "a1^3 + a1^2*a2");
    CHECK((v(1) * v(2) + v(2) * v(3) + v(3) * v(1)).str() == "a1*a2 + a1*a3 + a2*a3");
}

TEST_CASE("rendering of coefficients and signs") {
    CHECK(Polynomial().str() == "0");
    CHECK(Polynomial(-1).str() == "-1");
    CHECK((-v(1)).str() == "-a1");
    CHECK((Polynomial(2) - v(1)).str() == "2 - a1");
    CHECK((v(1) * 2).str() == "2*a1");
    CHECK(pow(v(1), 3).str() == "a1^3");
    CHECK((pow(v(1), 2) * v(3) - Polynomial(5)).str() == "-5 + a1^2*a3");
}

TEST_CASE("addition cancels and respects identities") {
    Polynomial p = v(1) * v(2) + v(2) * v(3) + v(3) * v(1);
    CHECK((p + Polynomial()) == p);
    CHECK((v(1) + Polynomial(-1) * v(1)).is_zero());
    CHECK((p - p).str() == "0");
}

TEST_CASE("multiplication distributes and collects exponents") {
    CHECK(((v(1) + v(2)) * (v(3) + v(4))).str() == "a1*a3 + a1*a4 + a2*a3 + a2*a4");
    CHECK((v(1) * v(1)).str() == "a1^2");
    CHECK((v(1) * v(2) * (v(3) * v(4) + v(3) + v(4))).str() ==
          "a1*a2*a3 + a1*a2*a4 + a1*a2*a3*a4");
}

TEST_CASE("evaluation is exact") {
    Polynomial trefoil = v(1) * v(2) + v(2) * v(3) + v(3) * v(1);
    CHECK(trefoil.eval_ones() == 3);
    CHECK((Polynomial(1) + v(1) * v(2)).eval_ones() == 2);

    std::map<VarId, Int> zeros{{1, 0}, {2, 0}, {3, 0}};
    CHECK((Polynomial(7) + trefoil).eval(zeros) == 7);

    std::map<VarId, Int> some{{1, 2}, {2, 3}, {3, 5}};
    CHECK(trefoil.eval(some) == 31);
}

TEST_CASE("evaluation names the smallest missing variable") {
    Polynomial p = v(2) * v(3) + v(5);
    std::map<VarId, Int> partial{{3, 1}, {5, 1}};
    try {
        p.eval(partial);
        FAIL("expected MissingAssignment");
    } catch (const MissingAssignment& ex) {
        CHECK(ex.var == 2);
        CHECK(std::string(ex.what()).find("a2") != std::string::npos);
    }
}

TEST_CASE("unit multilinearity predicate") {
    CHECK((v(1) * v(2) + v(2) * v(3) + v(3) * v(1)).is_unit_multilinear());
    CHECK_FALSE((v(1) * v(1)).is_unit_multilinear());
    CHECK_FALSE((v(1) * 2).is_unit_multilinear());
    CHECK_FALSE((-v(1)).is_unit_multilinear());
    CHECK(Polynomial().is_unit_multilinear());
}

TEST_CASE("term counting") {
    CHECK(Polynomial().term_count() == 0);
    CHECK((v(1) * v(2) + v(2) * v(3) + v(3) * v(1)).term_count() == 3);
    CHECK(Polynomial(4).term_count() == 1);
}

TEST_CASE("variables are reported sorted and distinct") {
    Polynomial p = v(4) * v(2) + v(2) + Polynomial(3);
    CHECK(p.variables() == std::vector<VarId>{2, 4});
    CHECK(p.degree() == 2);
    CHECK(Polynomial().degree() == 0);
}

TEST_CASE("ring laws hold on random polynomials") {
    std::mt19937_64 rng(7101);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = testutil::random_poly(rng), q = testutil::random_poly(rng),
                   r = testutil::random_poly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + Polynomial() == p);
        CHECK(p * Polynomial(1) == p);
        CHECK(p * Polynomial() == Polynomial());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(7102);
    std::uniform_int_distribution<int> value(-5, 5);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = testutil::random_poly(rng), q = testutil::random_poly(rng);
        std::map<VarId, Int> asg;
        for (VarId j = 1; j <= 6; ++j) asg[j] = value(rng);
        CHECK((p * q).eval(asg) == p.eval(asg) * q.eval(asg));
        CHECK((p + q).eval(asg) == p.eval(asg) + q.eval(asg));
    }
}

TEST_CASE("unit multilinear polynomials count terms at the all-ones point") {
    std::mt19937_64 rng(7103);
    std::uniform_int_distribution<int> pick(0, 1);
    for (int i = 0; i < 100; ++i) {
        // random sum of distinct square-free monomials over a1..a6
        std::vector<std::pair<Monomial, Int>> raw;
        std::set<std::vector<VarId>> seen;
        for (int t = 0; t < 8; ++t) {
            Monomial m;
            std::vector<VarId> key;
            for (VarId j = 1; j <= 6; ++j)
                if (pick(rng)) {
                    m.exps.emplace_back(j, 1);
                    key.push_back(j);
                }
            if (seen.insert(key).second) raw.emplace_back(std::move(m), 1);
        }
        Polynomial p = Polynomial::from_terms(std::move(raw));
        REQUIRE(p.is_unit_multilinear());
        CHECK(Int(p.term_count()) == p.eval_ones());
    }
}

TEST_CASE("canonical form ignores construction order") {
    std::mt19937_64 rng(7104);
    for (int i = 0; i < 50; ++i) {
        std::vector<Polynomial> parts;
        for (int t = 0; t < 6; ++t) parts.push_back(testutil::random_poly(rng));
        Polynomial forward, backward;
        for (const Polynomial& p : parts) forward += p;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) backward += *it;
        std::shuffle(parts.begin(), parts.end(), rng);
        Polynomial shuffled;
        for (const Polynomial& p : parts) shuffled += p;
        CHECK(forward == backward);
        CHECK(forward == shuffled);
        CHECK(forward.str() == shuffled.str());
    }
}
