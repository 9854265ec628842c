#include "orderk/predicates.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace orderk {

Mode mode_from_env(Mode fallback) {
    const char* v = std::getenv("ORDERK_MODE");
    if (v == nullptr) return fallback;
    if (std::strcmp(v, "robust") == 0) return Mode::Robust;
    if (std::strcmp(v, "float") == 0) return Mode::Float;
    return fallback;
}

namespace expansion {

namespace {

// Error-free transformations (Dekker / Knuth). x + y == a + b exactly,
// x = fl(a + b), y is the rounding error.
inline void two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    double bv = x - a;
    double av = x - bv;
    y = (a - av) + (b - bv);
}

inline void two_prod(double a, double b, double& x, double& y) {
    x = a * b;
    y = std::fma(a, b, -x);
}

}  // namespace

Exp from_product(double a, double b) {
    double hi, lo;
    two_prod(a, b, hi, lo);
    Exp e;
    if (lo != 0.0) e.push_back(lo);
    if (hi != 0.0) e.push_back(hi);
    if (e.empty()) e.push_back(0.0);
    return e;
}

// Shewchuk's fast expansion sum with zero elimination.
Exp sum(const Exp& e, const Exp& f) {
    Exp h;
    h.reserve(e.size() + f.size());
    std::size_t ei = 0, fi = 0;
    double q, hh;

    auto take = [&]() -> double {
        if (ei < e.size() && (fi >= f.size() || std::fabs(e[ei]) < std::fabs(f[fi])))
            return e[ei++];
        return f[fi++];
    };

    q = take();
    while (ei < e.size() || fi < f.size()) {
        double next = take();
        two_sum(q, next, q, hh);
        if (hh != 0.0) h.push_back(hh);
    }
    if (q != 0.0 || h.empty()) h.push_back(q);
    return h;
}

Exp negate(Exp e) {
    for (double& v : e) v = -v;
    return e;
}

Exp scale(const Exp& e, double b) {
    Exp h;
    h.reserve(2 * e.size());
    double q, hh, t1, t0;
    two_prod(e[0], b, q, hh);
    if (hh != 0.0) h.push_back(hh);
    for (std::size_t i = 1; i < e.size(); ++i) {
        two_prod(e[i], b, t1, t0);
        two_sum(q, t0, q, hh);
        if (hh != 0.0) h.push_back(hh);
        two_sum(q, t1, q, hh);
        if (hh != 0.0) h.push_back(hh);
    }
    if (q != 0.0 || h.empty()) h.push_back(q);
    return h;
}

Exp product(const Exp& e, const Exp& f) {
    Exp acc{0.0};
    for (double fv : f) acc = sum(acc, scale(e, fv));
    return acc;
}

double estimate(const Exp& e) {
    double s = 0.0;
    for (double v : e) s += v;
    return s;
}

int sign(const Exp& e) {
    double top = e.back();  // largest-magnitude component decides
    if (top > 0.0) return 1;
    if (top < 0.0) return -1;
    return 0;
}

bool is_zero(const Exp& e) {
    for (double v : e) {
        if (v != 0.0) return false;
    }
    return true;
}

}  // namespace expansion

namespace dd {

namespace {

inline void two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    double bv = x - a;
    double av = x - bv;
    y = (a - av) + (b - bv);
}

inline void quick_two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    y = b - (x - a);
}

inline void two_prod(double a, double b, double& x, double& y) {
    x = a * b;
    y = std::fma(a, b, -x);
}

}  // namespace

DD add(DD a, DD b) {
    double s, e;
    two_sum(a.hi, b.hi, s, e);
    e += a.lo + b.lo;
    double hi, lo;
    quick_two_sum(s, e, hi, lo);
    return {hi, lo};
}

DD sub(DD a, DD b) { return add(a, neg(b)); }

DD mul(DD a, DD b) {
    double p, e;
    two_prod(a.hi, b.hi, p, e);
    e += a.hi * b.lo + a.lo * b.hi;
    double hi, lo;
    quick_two_sum(p, e, hi, lo);
    return {hi, lo};
}

DD div(DD a, DD b) {
    double q1 = a.hi / b.hi;
    DD r = sub(a, mul(b, DD(q1)));
    double q2 = r.hi / b.hi;
    r = sub(r, mul(b, DD(q2)));
    double q3 = r.hi / b.hi;
    double hi, lo;
    quick_two_sum(q1, q2, hi, lo);
    DD q(hi, lo);
    return add(q, DD(q3));
}

DD from_diff(double a, double b) {
    double s, e;
    two_sum(a, -b, s, e);
    return {s, e};
}

}  // namespace dd

namespace {

using expansion::Exp;

// orient2d determinant expanded over the original coordinates:
//   ax by - ax cy - ay bx + ay cx + bx cy - by cx
Exp orient2d_expansion(const double* a, const double* b, const double* c) {
    using namespace expansion;
    Exp r = from_product(a[0], b[1]);
    r = sum(r, negate(from_product(a[0], c[1])));
    r = sum(r, negate(from_product(a[1], b[0])));
    r = sum(r, from_product(a[1], c[0]));
    r = sum(r, from_product(b[0], c[1]));
    r = sum(r, negate(from_product(b[1], c[0])));
    return r;
}

// One static filter stage (Shewchuk's A-bound), then fully exact.
constexpr double kCcwErrBoundA = 3.3306690738754716e-16;
constexpr double kIccErrBoundA = 1.1102230246251577e-15;

double orient2d_adapt(const double* a, const double* b, const double* c, double det, double detsum) {
    double errbound = kCcwErrBoundA * detsum;
    if (det >= errbound || -det >= errbound) return det;
    Exp e = orient2d_expansion(a, b, c);
    int s = expansion::sign(e);
    if (s == 0) return 0.0;
    double est = expansion::estimate(e);
    if (est != 0.0) return est;
    return s > 0 ? 1e-300 : -1e-300;
}

Exp lift_row(const double* p) {
    using namespace expansion;
    return sum(from_product(p[0], p[0]), from_product(p[1], p[1]));
}

// Exact 4x4 incircle determinant via cofactor expansion along the lifted
// column, with every product carried as an expansion.
Exp incircle_expansion(const double* a, const double* b, const double* c, const double* d) {
    using namespace expansion;
    const double* pts[4] = {a, b, c, d};
    Exp lifts[4] = {lift_row(a), lift_row(b), lift_row(c), lift_row(d)};

    // minor(i): 3x3 determinant of [x, y, 1] rows excluding row i.
    auto minor2 = [&](int r0, int r1) {
        // x_{r0} y_{r1} - x_{r1} y_{r0}
        return sum(from_product(pts[r0][0], pts[r1][1]), negate(from_product(pts[r1][0], pts[r0][1])));
    };
    // [x y 1] 3x3 minor over rows (i, j, k) = m(i,j) - m(i,k) + m(j,k).
    auto minor3 = [&](int i, int j, int k) { return sum(sum(minor2(i, j), negate(minor2(i, k))), minor2(j, k)); };

    Exp det{0.0};
    // Laplace along the lifted column: sum_i (-1)^{i+2} lift_i * minor3(rest).
    const int rest[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    for (int i = 0; i < 4; ++i) {
        Exp term = product(lifts[i], minor3(rest[i][0], rest[i][1], rest[i][2]));
        bool negative = (i % 2 == 0);  // signs -, +, -, + for rows a..d
        det = sum(det, negative ? negate(term) : term);
    }
    return det;
}

}  // namespace

double orient2d(const double* a, const double* b, const double* c, Mode mode) {
    double detleft = (a[0] - c[0]) * (b[1] - c[1]);
    double detright = (a[1] - c[1]) * (b[0] - c[0]);
    double det = detleft - detright;
    if (mode == Mode::Float) return det;

    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return det;
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return det;
        detsum = -detleft - detright;
    } else {
        return orient2d_adapt(a, b, c, det, 0.0);
    }
    return orient2d_adapt(a, b, c, det, detsum);
}

double incircle(const double* a, const double* b, const double* c, const double* d, Mode mode) {
    double adx = a[0] - d[0], ady = a[1] - d[1];
    double bdx = b[0] - d[0], bdy = b[1] - d[1];
    double cdx = c[0] - d[0], cdy = c[1] - d[1];

    double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    double alift = adx * adx + ady * ady;
    double cdxady = cdx * ady, adxcdy = adx * cdy;
    double blift = bdx * bdx + bdy * bdy;
    double adxbdy = adx * bdy, bdxady = bdx * ady;
    double clift = cdx * cdx + cdy * cdy;

    double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
    if (mode == Mode::Float) return det;

    double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                       (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                       (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    double errbound = kIccErrBoundA * permanent;
    if (det > errbound || -det > errbound) return det;

    Exp e = incircle_expansion(a, b, c, d);
    int s = expansion::sign(e);
    if (s == 0) return 0.0;
    double est = expansion::estimate(e);
    if (est != 0.0) return est;
    return s > 0 ? 1e-300 : -1e-300;
}

}  // namespace orderk
