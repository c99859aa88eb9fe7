#include "conway/oracle.hpp"

#include "conway/registry.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <random>

using namespace conway;

TEST_CASE("naive expansion reproduces small chains") {
    ExprNode trefoil = parse("row2(a1,1) M mat2(0,a2;a2,1) M col2(a3,1)");
    auto terms = naive_expand(trefoil);
    CHECK(terms.size() == 3);
    CHECK(naive_matches(terms, expand(trefoil)));
}

TEST_CASE("naive expansion of an annihilating product is empty") {
    ExprNode zero = parse("row2(1,0) M col2(1,0)");
    CHECK(naive_expand(zero).empty());
    CHECK(expand(zero).is_zero());
}

TEST_CASE("naive expansion handles the five-vector contraction") {
    ExprNode e = parse(
        "row5(a1+a3+a5, a3a5, a5a1, a1a3, a1a3a5) P5 "
        "col5(1, a2, a4, a6, a2a4+a4a6+a6a2)");
    auto terms = naive_expand(e);
    CHECK(terms.size() == 16);
    CHECK(naive_matches(terms, expand(e)));
}

TEST_CASE("naive expansion agrees with the ring on random products") {
    std::mt19937_64 rng(7501);
    int done = 0;
    while (done < 100) {
        ExprNode e = testutil::random_ast(rng);
        if (e.kind == ExprNode::Kind::Assertion) {
            ExprNode first = e.children[0];
            e = std::move(first);
        }
        Polynomial p;
        try {
            p = expand(e);
        } catch (const DimensionError&) {
            continue;  // random trees are frequently ill-shaped
        }
        CHECK(naive_matches(naive_expand(e), p));
        ++done;
    }
}

TEST_CASE("naive expansion agrees on every registry expression") {
    auto records = load(CONWAY_REGISTRY_FILE);
    for (const FamilyRecord& r : records) {
        for (const std::string& text : r.expressions) {
            ExprNode e = parse(text);
            std::vector<const ExprNode*> branches;
            if (e.kind == ExprNode::Kind::Assertion)
                for (const ExprNode& c : e.children) branches.push_back(&c);
            else
                branches.push_back(&e);
            for (const ExprNode* b : branches) CHECK(naive_matches(naive_expand(*b), expand(*b)));
        }
    }
}

TEST_CASE("point checking accepts identical branches") {
    CHECK(point_check(parse("a1 = a1"), 1, 99));
    CHECK(point_check(parse("row2(a1,1) M col2(0,1) = a1"), 10, 99));
}

TEST_CASE("point checking never contradicts symbolic equality") {
    std::mt19937_64 rng(7502);
    ExprNode e = parse(
        "row2(a1,1) M mat2(0,a2;a2,1) M col2(a3,1) = a1a2 + a2a3 + a3a1 = "
        "a3a1 + a2a3 + a1a2");
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 42ull, 12345ull})
        CHECK(point_check(e, 25, seed));
}

TEST_CASE("point checking exposes a perturbed coefficient") {
    // same chain with one conway bumped by one
    ExprNode bad = parse(
        "row2(a1,1) M mat2(0,a2;a2,1) M col2(a3,1) = "
        "row2(a1,1) M mat2(0,a2+1;a2,1) M col2(a3,1)");
    CHECK_FALSE(point_check(bad, 100, 12345));
}

TEST_CASE("trial counts must be positive") {
    CHECK_THROWS_AS(point_check(parse("a1 = a1"), 0, 1), std::invalid_argument);
}
