// 2-tangle algebra: 2-vectors and 2x2 matrices of polynomials, the
// exchange metric, metric-separated chain products, and the identity
// checkers for the commuting matrix families.
#pragma once

#include "conway/polyring.hpp"

#include <array>
#include <vector>

namespace conway {

enum class Orient { Row, Column };

struct OrientationError : std::logic_error {
    using std::logic_error::logic_error;
};

struct Vec2 {
    std::array<Polynomial, 2> e;
    Orient orient = Orient::Row;
    bool operator==(const Vec2&) const = default;
};

struct Mat2 {
    std::array<std::array<Polynomial, 2>, 2> e;
    bool operator==(const Mat2&) const = default;
};

Vec2 row2(Polynomial x, Polynomial y);
Vec2 col2(Polynomial x, Polynomial y);

Mat2 metric_m();   // [[0,1],[1,0]]
Mat2 identity2();
Mat2 transpose(const Mat2& m);

// The four elementary one-conway matrices, named by where the extra
// constant entry sits relative to the conway a.
enum class ElemKind { Bottom, Top, Left, Right };

// Bottom: [[0,a],[a,1]]  Top: [[1,a],[a,0]]
// Left:   [[a,1],[1,0]]  Right: [[0,1],[1,a]]
Mat2 elem(ElemKind k, const Polynomial& a);

Mat2 mat_mul(const Mat2& x, const Mat2& y);
Vec2 vec_mat(const Vec2& v, const Mat2& m);    // row * matrix
Vec2 mat_vec(const Mat2& m, const Vec2& v);    // matrix * column
Polynomial dot(const Vec2& r, const Vec2& c);  // row * column

// row * M * m1 * M * m2 * ... * M * column, with the metric inserted
// between every adjacent pair. The interior may be empty.
struct Chain2 {
    Vec2 row;
    std::vector<Mat2> interior;
    Vec2 column;
};

Polynomial chain_eval(const Chain2& c);

// True iff [[A1,B1],[B1,0]] and [[A2,B2],[B2,0]] commute under the metric
// product, the mirrored shapes [[0,B],[B,A]] do as well, and both products
// equal their closed forms [[A1B2+A2B1, B1B2],[B1B2, 0]] and
// [[0, B1B2],[B1B2, A1B2+A2B1]].
bool check_commute(const Polynomial& A1, const Polynomial& B1, const Polynomial& A2,
                   const Polynomial& B2);

// True iff (A1,B1) M [[0,A2],[A2,B2]] = (A2,B2) M [[0,A1],[A1,B1]] and
// (A1,B1) M [[A2,B2],[B2,0]] = (A2,B2) M [[A1,B1],[B1,0]], including the
// lifted forms where (A,B) is produced as (0,1) or (1,0) times the
// corresponding matrix.
bool check_boundary_lift(const Polynomial& A1, const Polynomial& B1, const Polynomial& A2,
                         const Polynomial& B2);

}  // namespace conway
