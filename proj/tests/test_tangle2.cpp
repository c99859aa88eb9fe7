#include "conway/tangle2.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <random>

using namespace conway;

namespace {

Polynomial v(VarId j) { return Polynomial::var(j); }

Polynomial fold_right(const Chain2& c) {
    // Associate the interior product from the right instead of the left.
    const Mat2 m = metric_m();
    std::vector<Mat2> factors{m};
    for (const Mat2& x : c.interior) {
        factors.push_back(x);
        factors.push_back(m);
    }
    Mat2 acc = factors.back();
    for (std::size_t i = factors.size() - 1; i-- > 0;) acc = mat_mul(factors[i], acc);
    return dot(vec_mat(c.row, acc), c.column);
}

}  // namespace

TEST_CASE("the metric is an involution") {
    CHECK(mat_mul(metric_m(), metric_m()) == identity2());
}

TEST_CASE("the metric swaps vector entries") {
    CHECK(vec_mat(row2(v(1), 1), metric_m()) == row2(1, v(1)));
    CHECK(mat_vec(metric_m(), col2(v(3), 1)) == col2(1, v(3)));
}

TEST_CASE("elementary matrices by conway position") {
    Polynomial a = v(2);
    CHECK(elem(ElemKind::Bottom, a) == Mat2{{{{Polynomial(0), a}, {a, Polynomial(1)}}}});
    CHECK(elem(ElemKind::Top, a) == Mat2{{{{Polynomial(1), a}, {a, Polynomial(0)}}}});
    CHECK(elem(ElemKind::Left, v(4)) ==
          Mat2{{{{v(4), Polynomial(1)}, {Polynomial(1), Polynomial(0)}}}});
    CHECK(elem(ElemKind::Right, v(3)) ==
          Mat2{{{{Polynomial(0), Polynomial(1)}, {Polynomial(1), v(3)}}}});
    CHECK(elem(ElemKind::Top, 1) != elem(ElemKind::Bottom, 1));
}

TEST_CASE("row-column contraction") {
    CHECK(dot(row2(1, v(1)), col2(1, v(2))) == Polynomial(1) + v(1) * v(2));
}

TEST_CASE("orientation misuse is rejected") {
    CHECK_THROWS_AS(dot(col2(1, 1), col2(1, 1)), OrientationError);
    CHECK_THROWS_AS(vec_mat(col2(1, 1), metric_m()), OrientationError);
    CHECK_THROWS_AS(mat_vec(metric_m(), row2(1, 1)), OrientationError);
}

TEST_CASE("one-conway chains") {
    Chain2 trefoil{row2(v(1), 1), {elem(ElemKind::Bottom, v(2))}, col2(v(3), 1)};
    CHECK(chain_eval(trefoil) == v(1) * v(2) + v(2) * v(3) + v(3) * v(1));

    Chain2 second{row2(v(1), 1), {elem(ElemKind::Right, v(2))}, col2(v(3), 1)};
    CHECK(chain_eval(second) == v(1) * v(2) * v(3) + v(1) + v(3));

    Chain2 bare{row2(v(1), 1), {}, col2(0, 1)};
    CHECK(chain_eval(bare) == v(1));
}

TEST_CASE("longer chains agree with split vector products") {
    Chain2 five{row2(v(1), 1),
                {elem(ElemKind::Bottom, v(2)), elem(ElemKind::Bottom, v(3)),
                 elem(ElemKind::Bottom, v(4))},
                col2(v(5), 1)};
    Polynomial lhs = chain_eval(five);
    Polynomial rhs = dot(vec_mat(row2(v(1) * v(2) * v(3), v(1) * v(2) + v(2) * v(3) + v(3) * v(1)),
                                 metric_m()),
                         col2(v(4) * v(5), v(4) + v(5)));
    CHECK(lhs == rhs);
    CHECK(lhs.is_unit_multilinear());
    CHECK(lhs.term_count() == 5);
}

TEST_CASE("chain evaluation is associativity-consistent") {
    std::mt19937_64 rng(7201);
    for (int i = 0; i < 50; ++i) {
        std::uniform_int_distribution<int> len(0, 5);
        Chain2 c{row2(testutil::random_poly(rng), testutil::random_poly(rng)),
                 {},
                 col2(testutil::random_poly(rng), testutil::random_poly(rng))};
        int n = len(rng);
        for (int k = 0; k < n; ++k) c.interior.push_back(testutil::random_mat2(rng));
        CHECK(chain_eval(c) == fold_right(c));
    }
}

TEST_CASE("chains of elementary matrices with distinct conways are unit multilinear") {
    std::mt19937_64 rng(7202);
    std::uniform_int_distribution<int> kind(0, 3), len(1, 4), flip(0, 1);
    const ElemKind kinds[4] = {ElemKind::Bottom, ElemKind::Top, ElemKind::Left, ElemKind::Right};
    for (int i = 0; i < 50; ++i) {
        int n = len(rng);
        Chain2 c;
        c.row = flip(rng) ? row2(v(1), 1) : row2(1, v(1));
        for (int k = 0; k < n; ++k)
            c.interior.push_back(elem(kinds[kind(rng)], v(static_cast<VarId>(k + 2))));
        VarId last = static_cast<VarId>(n + 2);
        c.column = flip(rng) ? col2(v(last), 1) : col2(1, v(last));
        CHECK(chain_eval(c).is_unit_multilinear());
    }
}

TEST_CASE("transpose duality: a reversed chain evaluates identically") {
    std::mt19937_64 rng(7203);
    std::uniform_int_distribution<int> len(0, 4);
    for (int i = 0; i < 50; ++i) {
        Chain2 c{row2(testutil::random_poly(rng), testutil::random_poly(rng)),
                 {},
                 col2(testutil::random_poly(rng), testutil::random_poly(rng))};
        int n = len(rng);
        for (int k = 0; k < n; ++k) c.interior.push_back(testutil::random_mat2(rng));

        Chain2 rev;
        rev.row = row2(c.column.e[0], c.column.e[1]);
        for (auto it = c.interior.rbegin(); it != c.interior.rend(); ++it)
            rev.interior.push_back(transpose(*it));
        rev.column = col2(c.row.e[0], c.row.e[1]);
        CHECK(chain_eval(c) == chain_eval(rev));
    }
}

TEST_CASE("weighted shapes commute under the metric and match closed forms") {
    CHECK(check_commute(v(1), v(2), v(3), v(4)));
    CHECK(check_commute(1, 1, 1, 1));

    // closed form spelled out once with fresh symbols
    Mat2 s1{{{{v(1), v(2)}, {v(2), Polynomial(0)}}}};
    Mat2 s2{{{{v(3), v(4)}, {v(4), Polynomial(0)}}}};
    Mat2 prod = mat_mul(mat_mul(s1, metric_m()), s2);
    Polynomial cross = v(1) * v(4) + v(3) * v(2), bb = v(2) * v(4);
    CHECK(prod == Mat2{{{{cross, bb}, {bb, Polynomial(0)}}}});

    Mat2 t1{{{{Polynomial(0), v(2)}, {v(2), v(1)}}}};
    Mat2 t2{{{{Polynomial(0), v(4)}, {v(4), v(3)}}}};
    Mat2 tprod = mat_mul(mat_mul(t1, metric_m()), t2);
    CHECK(tprod == Mat2{{{{Polynomial(0), bb}, {bb, cross}}}});
}

TEST_CASE("commutation holds for random polynomial slots") {
    std::mt19937_64 rng(7204);
    for (int i = 0; i < 100; ++i)
        CHECK(check_commute(testutil::random_poly(rng), testutil::random_poly(rng),
                            testutil::random_poly(rng), testutil::random_poly(rng)));
}

TEST_CASE("generic matrices do not commute under the metric") {
    Mat2 g1{{{{v(1), v(2)}, {v(3), v(4)}}}};
    Mat2 g2{{{{v(5), v(6)}, {v(7), v(8)}}}};
    Mat2 lhs = mat_mul(mat_mul(g1, metric_m()), g2);
    Mat2 rhs = mat_mul(mat_mul(g2, metric_m()), g1);
    CHECK(lhs != rhs);
    // exhibit a differing entry
    CHECK(lhs.e[0][0] != rhs.e[0][0]);
}

TEST_CASE("boundary rows lift through the weighted shapes") {
    CHECK(check_boundary_lift(v(1), v(2), v(3), v(4)));
    CHECK(check_boundary_lift(v(1), v(2), v(1), v(2)));
    std::mt19937_64 rng(7205);
    for (int i = 0; i < 100; ++i)
        CHECK(check_boundary_lift(testutil::random_poly(rng), testutil::random_poly(rng),
                                  testutil::random_poly(rng), testutil::random_poly(rng)));
}

TEST_CASE("transpose is an involution on matrices") {
    std::mt19937_64 rng(7206);
    Mat2 m = testutil::random_mat2(rng);
    CHECK(transpose(transpose(m)) == m);
    CHECK(transpose(metric_m()) == metric_m());
}
