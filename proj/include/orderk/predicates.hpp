#pragma once

#include <vector>

namespace orderk {

// Exactness mode. Float evaluates predicates in plain double arithmetic with
// a relative tolerance; Robust filters the double result against a forward
// error bound and falls back to exact floating-point expansion arithmetic.
// Only the sign predicates are exact in robust mode; constructions stay in
// doubles.
enum class Mode { Float, Robust };

// Default exactness mode for a context, honouring the ORDERK_MODE environment
// variable ("float" / "robust") when set.
Mode mode_from_env(Mode fallback);

// Relative tolerance used by float-mode degeneracy tests.
inline constexpr double kEpsRel = 1e-9;

namespace expansion {

// Nonoverlapping floating-point expansions, increasing magnitude order.
// Sums and products of doubles are represented exactly, so the sign of any
// polynomial in the input coordinates can be decided without rounding error.
using Exp = std::vector<double>;

Exp from_product(double a, double b);
Exp sum(const Exp& e, const Exp& f);
Exp negate(Exp e);
Exp scale(const Exp& e, double b);  // exact product expansion * double
Exp product(const Exp& e, const Exp& f);
double estimate(const Exp& e);
int sign(const Exp& e);
bool is_zero(const Exp& e);

}  // namespace expansion

namespace dd {

// Double-double value: hi + lo with |lo| <= ulp(hi)/2. Roughly 32
// significant digits; enough to make sliver-cell areas well conditioned.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    DD(double h) : hi(h) {}
    DD(double h, double l) : hi(h), lo(l) {}
    double value() const { return hi + lo; }
};

DD add(DD a, DD b);
DD sub(DD a, DD b);
DD mul(DD a, DD b);
DD div(DD a, DD b);
inline DD neg(DD a) { return {-a.hi, -a.lo}; }
// Exact difference of two doubles.
DD from_diff(double a, double b);

}  // namespace dd

// Orientation of the triple (a, b, c): positive when counter-clockwise,
// negative when clockwise, zero when collinear. The returned value is twice
// the signed triangle area (an estimate of it in robust fallback, with the
// exact sign).
double orient2d(const double* a, const double* b, const double* c, Mode mode);

// Incircle test: positive when d lies inside the circle through a, b, c
// (given in counter-clockwise order), negative outside, zero on the circle.
double incircle(const double* a, const double* b, const double* c, const double* d, Mode mode);

}  // namespace orderk
