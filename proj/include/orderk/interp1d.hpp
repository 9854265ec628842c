#pragma once

#include <utility>
#include <vector>

#include "orderk/errors.hpp"

namespace orderk {

// Scattered 1-D samples. The constructor sorts by abscissa and rejects
// duplicates, so interpolation always sees ascending xs.
struct Samples1D {
    std::vector<double> xs;
    std::vector<double> ys;

    Samples1D() = default;
    Samples1D(std::vector<double> x, std::vector<double> y);
    int size() const { return static_cast<int>(xs.size()); }
};

// The 1-D convex-combination identity for an odd list of 2l+1 distinct
// reals: the middle element equals the stated combination of the others.
// Sortedness is not required. Returns (lhs, rhs) = (x_l, combination).
std::pair<double, double> property_line(const std::vector<double>& xs);

// Piecewise-linear interpolation from the two neighbours of x. Returns the
// sample value when x hits a sample exactly.
double g1(double x, const Samples1D& s);

// Raw region-based estimates over the six-sample window x0..x5 around x
// (three nearest samples each side, x2 < x < x3) and the combined
// estimates derived from them.
double g2_raw(double x, const Samples1D& s);
double g2(double x, const Samples1D& s);
double g3_raw(double x, const Samples1D& s);
double g3(double x, const Samples1D& s);

// True iff every bounded order-k cell of the sample line contains exactly
// one order-(k-1) vertex and one order-(k+1) vertex strictly inside.
// Throws DegenerateInput when a vertex of an adjacent order coincides with
// a cell endpoint (repeated midpoints).
bool lemma1_check(const Samples1D& s, int k);

}  // namespace orderk
