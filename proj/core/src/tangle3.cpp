#include "conway/tangle3.hpp"

namespace conway {

Vec5 row5(std::array<Polynomial, 5> e) { return Vec5{std::move(e), Orient::Row}; }
Vec5 col5(std::array<Polynomial, 5> e) { return Vec5{std::move(e), Orient::Column}; }

Mat5 metric_p5() {
    const int bits[5][5] = {
        {0, 0, 0, 0, 1},
        {0, 0, 1, 1, 0},
        {0, 1, 0, 1, 0},
        {0, 1, 1, 0, 0},
        {1, 0, 0, 0, 0},
    };
    Mat5 m;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m.e[i][j] = Polynomial(bits[i][j]);
    return m;
}

Mat5 transpose(const Mat5& m) {
    Mat5 r;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) r.e[i][j] = m.e[j][i];
    return r;
}

Vec5 vec_mat(const Vec5& v, const Mat5& m) {
    if (v.orient != Orient::Row) throw OrientationError("vec_mat requires a row vector");
    Vec5 r;
    r.orient = Orient::Row;
    for (int j = 0; j < 5; ++j) {
        Polynomial s;
        for (int i = 0; i < 5; ++i) s += v.e[i] * m.e[i][j];
        r.e[j] = s;
    }
    return r;
}

Polynomial dot(const Vec5& r, const Vec5& c) {
    if (r.orient != Orient::Row || c.orient != Orient::Column)
        throw OrientationError("dot requires row * column");
    Polynomial s;
    for (int i = 0; i < 5; ++i) s += r.e[i] * c.e[i];
    return s;
}

Polynomial bilinear(const Vec5& u, const Vec5& v) {
    const Mat5 p = metric_p5();
    Polynomial s;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (!p.e[i][j].is_zero()) s += u.e[i] * p.e[i][j] * v.e[j];
    return s;
}

}  // namespace conway
