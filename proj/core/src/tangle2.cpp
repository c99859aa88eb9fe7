#include "conway/tangle2.hpp"

namespace conway {

Vec2 row2(Polynomial x, Polynomial y) {
    return Vec2{{std::move(x), std::move(y)}, Orient::Row};
}

Vec2 col2(Polynomial x, Polynomial y) {
    return Vec2{{std::move(x), std::move(y)}, Orient::Column};
}

Mat2 metric_m() {
    return Mat2{{{{Polynomial(0), Polynomial(1)}, {Polynomial(1), Polynomial(0)}}}};
}

Mat2 identity2() {
    return Mat2{{{{Polynomial(1), Polynomial(0)}, {Polynomial(0), Polynomial(1)}}}};
}

Mat2 transpose(const Mat2& m) {
    return Mat2{{{{m.e[0][0], m.e[1][0]}, {m.e[0][1], m.e[1][1]}}}};
}

Mat2 elem(ElemKind k, const Polynomial& a) {
    const Polynomial zero(0), one(1);
    switch (k) {
        case ElemKind::Bottom: return Mat2{{{{zero, a}, {a, one}}}};
        case ElemKind::Top: return Mat2{{{{one, a}, {a, zero}}}};
        case ElemKind::Left: return Mat2{{{{a, one}, {one, zero}}}};
        case ElemKind::Right: return Mat2{{{{zero, one}, {one, a}}}};
    }
    throw std::logic_error("unreachable");
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.e[i][j] = x.e[i][0] * y.e[0][j] + x.e[i][1] * y.e[1][j];
    return r;
}

Vec2 vec_mat(const Vec2& v, const Mat2& m) {
    if (v.orient != Orient::Row) throw OrientationError("vec_mat requires a row vector");
    return row2(v.e[0] * m.e[0][0] + v.e[1] * m.e[1][0], v.e[0] * m.e[0][1] + v.e[1] * m.e[1][1]);
}

Vec2 mat_vec(const Mat2& m, const Vec2& v) {
    if (v.orient != Orient::Column) throw OrientationError("mat_vec requires a column vector");
    return col2(m.e[0][0] * v.e[0] + m.e[0][1] * v.e[1], m.e[1][0] * v.e[0] + m.e[1][1] * v.e[1]);
}

Polynomial dot(const Vec2& r, const Vec2& c) {
    if (r.orient != Orient::Row || c.orient != Orient::Column)
        throw OrientationError("dot requires row * column");
    return r.e[0] * c.e[0] + r.e[1] * c.e[1];
}

Polynomial chain_eval(const Chain2& c) {
    if (c.row.orient != Orient::Row || c.column.orient != Orient::Column)
        throw OrientationError("chain boundary must be row ... column");
    const Mat2 m = metric_m();
    Vec2 acc = vec_mat(c.row, m);
    for (const Mat2& x : c.interior) acc = vec_mat(vec_mat(acc, x), m);
    return dot(acc, c.column);
}

namespace {

Mat2 shape_bottom(const Polynomial& a, const Polynomial& b) {
    return Mat2{{{{a, b}, {b, Polynomial(0)}}}};  // [[A,B],[B,0]]
}

Mat2 shape_top(const Polynomial& a, const Polynomial& b) {
    return Mat2{{{{Polynomial(0), b}, {b, a}}}};  // [[0,B],[B,A]]
}

Mat2 shape_right(const Polynomial& a, const Polynomial& b) {
    return Mat2{{{{Polynomial(0), a}, {a, b}}}};  // [[0,A],[A,B]]
}

}  // namespace

bool check_commute(const Polynomial& A1, const Polynomial& B1, const Polynomial& A2,
                   const Polynomial& B2) {
    const Mat2 m = metric_m();
    const Polynomial cross = A1 * B2 + A2 * B1;
    const Polynomial bb = B1 * B2;

    const Mat2 s12 = mat_mul(mat_mul(shape_bottom(A1, B1), m), shape_bottom(A2, B2));
    const Mat2 s21 = mat_mul(mat_mul(shape_bottom(A2, B2), m), shape_bottom(A1, B1));
    const Mat2 s_closed{{{{cross, bb}, {bb, Polynomial(0)}}}};

    const Mat2 t12 = mat_mul(mat_mul(shape_top(A1, B1), m), shape_top(A2, B2));
    const Mat2 t21 = mat_mul(mat_mul(shape_top(A2, B2), m), shape_top(A1, B1));
    const Mat2 t_closed{{{{Polynomial(0), bb}, {bb, cross}}}};

    return s12 == s21 && s12 == s_closed && t12 == t21 && t12 == t_closed;
}

bool check_boundary_lift(const Polynomial& A1, const Polynomial& B1, const Polynomial& A2,
                         const Polynomial& B2) {
    const Mat2 m = metric_m();
    const Vec2 v1 = row2(A1, B1), v2 = row2(A2, B2);

    const Vec2 r_lhs = vec_mat(vec_mat(v1, m), shape_right(A2, B2));
    const Vec2 r_rhs = vec_mat(vec_mat(v2, m), shape_right(A1, B1));
    const Vec2 r_lift = vec_mat(row2(0, 1), shape_right(A1, B1));  // reproduces (A1,B1)
    const Vec2 r_lifted = vec_mat(vec_mat(r_lift, m), shape_right(A2, B2));

    const Vec2 b_lhs = vec_mat(vec_mat(v1, m), shape_bottom(A2, B2));
    const Vec2 b_rhs = vec_mat(vec_mat(v2, m), shape_bottom(A1, B1));
    const Vec2 b_lift = vec_mat(row2(1, 0), shape_bottom(A1, B1));  // reproduces (A1,B1)
    const Vec2 b_lifted = vec_mat(vec_mat(b_lift, m), shape_bottom(A2, B2));

    return r_lhs == r_rhs && r_lift == v1 && r_lifted == r_lhs && b_lhs == b_rhs &&
           b_lift == v1 && b_lifted == b_lhs;
}

}  // namespace conway
