// 3-tangle algebra: 5-vectors of polynomials and the 5x5 metric with its
// bilinear interior product.
#pragma once

#include "conway/polyring.hpp"
#include "conway/tangle2.hpp"

#include <array>

namespace conway {

struct Vec5 {
    std::array<Polynomial, 5> e;
    Orient orient = Orient::Row;
    bool operator==(const Vec5&) const = default;
};

struct Mat5 {
    std::array<std::array<Polynomial, 5>, 5> e;
    bool operator==(const Mat5&) const = default;
};

Vec5 row5(std::array<Polynomial, 5> e);
Vec5 col5(std::array<Polynomial, 5> e);

// Rows: e5; e3+e4; e2+e4; e2+e3; e1. Symmetric.
Mat5 metric_p5();
Mat5 transpose(const Mat5& m);

Vec5 vec_mat(const Vec5& v, const Mat5& m);    // row * matrix
Polynomial dot(const Vec5& r, const Vec5& c);  // row * column

// u P5 v = u1v5 + u2(v3+v4) + u3(v2+v4) + u4(v2+v3) + u5v1, computed
// through the metric. Orientations are immaterial: a column argument is
// read as its transpose.
Polynomial bilinear(const Vec5& u, const Vec5& v);

}  // namespace conway
