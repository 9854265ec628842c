#include "orderk/interp1d.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orderk/predicates.hpp"

namespace orderk {

Samples1D::Samples1D(std::vector<double> x, std::vector<double> y) {
    if (x.size() != y.size()) throw DegenerateInput("Samples1D: xs and ys lengths differ");
    std::vector<int> order(x.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return x[a] < x[b]; });
    xs.reserve(x.size());
    ys.reserve(y.size());
    for (int i : order) {
        xs.push_back(x[i]);
        ys.push_back(y[i]);
    }
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        if (xs[i] == xs[i + 1]) throw DegenerateInput("Samples1D: duplicate abscissa");
    }
}

std::pair<double, double> property_line(const std::vector<double>& xs) {
    const int m = static_cast<int>(xs.size());
    if (m % 2 == 0 || m < 3) throw EvenLength("property_line: need an odd list of at least 3 values");
    const int l = m / 2;
    if (xs[2 * l] == xs[0]) throw CoincidentEndpoints("property_line: x_{2l} equals x_0");

    // The combination telescopes to x_l exactly, but a small x_{2l} - x_0
    // makes the plain double sum ill-conditioned for unsorted inputs.
    // Accumulate numerator and denominator exactly and round once.
    using namespace expansion;
    auto diff = [](double a, double b) { return sum(Exp{a}, Exp{-b}); };
    Exp num{0.0};
    for (int i = 0; i <= l - 1; ++i) num = sum(num, scale(diff(xs[l + 1 + i], xs[l + i]), xs[i]));
    for (int i = l + 1; i <= 2 * l; ++i) num = sum(num, scale(diff(xs[i - l], xs[i - l - 1]), xs[i]));
    return {xs[l], estimate(num) / estimate(diff(xs[2 * l], xs[0]))};
}

namespace {

// Six frame samples x0..x5 around the query, with x2 < x < x3.
struct Window {
    double x[6];
    double y[6];
};

// Index of the first sample > x; reports an exact sample hit instead.
int right_neighbour(const Samples1D& s, double x, bool* hit_sample, int* hit_index) {
    *hit_sample = false;
    for (int i = 0; i < s.size(); ++i) {
        if (s.xs[i] == x) {
            *hit_sample = true;
            *hit_index = i;
            return -1;
        }
    }
    auto it = std::upper_bound(s.xs.begin(), s.xs.end(), x);
    return static_cast<int>(it - s.xs.begin());
}

Window window6(const Samples1D& s, double x) {
    bool hit;
    int hit_idx;
    int r = right_neighbour(s, x, &hit, &hit_idx);
    if (hit) throw SampleCollision("query coincides with a sample abscissa");
    if (r < 3 || r > s.size() - 3)
        throw InsufficientSamples("need three samples on each side of the query");
    Window w;
    for (int i = 0; i < 6; ++i) {
        w.x[i] = s.xs[r - 3 + i];
        w.y[i] = s.ys[r - 3 + i];
    }
    return w;
}

}  // namespace

double g1(double x, const Samples1D& s) {
    bool hit;
    int hit_idx;
    int r = right_neighbour(s, x, &hit, &hit_idx);
    if (hit) return s.ys[hit_idx];
    if (r == 0 || r == s.size()) throw OutOfRange("g1: query outside the sample range");
    double x2 = s.xs[r - 1], x3 = s.xs[r];
    double y2 = s.ys[r - 1], y3 = s.ys[r];
    return (y2 * (x3 - x) + y3 * (x - x2)) / (x3 - x2);
}

double g2_raw(double x, const Samples1D& s) {
    Window w = window6(s, x);
    return (w.y[1] * (w.x[3] - x) + w.y[2] * (w.x[4] - w.x[3]) + w.y[3] * (w.x[2] - w.x[1]) +
            w.y[4] * (x - w.x[2])) /
           (w.x[4] - w.x[1]);
}

double g2(double x, const Samples1D& s) {
    Window w = window6(s, x);
    return (w.y[1] * (w.x[3] - x) + w.y[2] * (w.x[4] - x) + w.y[3] * (x - w.x[1]) + w.y[4] * (x - w.x[2])) /
           (w.x[4] - w.x[1] + w.x[3] - w.x[2]);
}

double g3_raw(double x, const Samples1D& s) {
    Window w = window6(s, x);
    return (w.y[0] * (w.x[3] - x) + w.y[1] * (w.x[4] - w.x[3]) + w.y[2] * (w.x[5] - w.x[4]) +
            w.y[3] * (w.x[1] - w.x[0]) + w.y[4] * (w.x[2] - w.x[1]) + w.y[5] * (x - w.x[2])) /
           (w.x[5] - w.x[0]);
}

double g3(double x, const Samples1D& s) {
    Window w = window6(s, x);
    return (w.y[0] * (w.x[3] - x) + w.y[1] * (w.x[4] - x) + w.y[2] * (w.x[5] - x) + w.y[3] * (x - w.x[0]) +
            w.y[4] * (x - w.x[1]) + w.y[5] * (x - w.x[2])) /
           (w.x[5] - w.x[0] + w.x[4] - w.x[1] + w.x[3] - w.x[2]);
}

bool lemma1_check(const Samples1D& s, int k) {
    const int n = s.size();
    if (k < 2 || k > n - 2) throw OrderOutOfRange("lemma1_check: need 2 <= k <= n-2");

    auto verts = [&](int order) {
        std::vector<double> v;
        for (int i = 0; i + order < n; ++i) v.push_back(0.5 * (s.xs[i] + s.xs[i + order]));
        return v;
    };
    std::vector<double> vk = verts(k), vm = verts(k - 1), vp = verts(k + 1);

    for (double boundary : vk) {
        for (double v : vm) {
            if (v == boundary) throw DegenerateInput("lemma1_check: repeated midpoint across orders k-1, k");
        }
        for (double v : vp) {
            if (v == boundary) throw DegenerateInput("lemma1_check: repeated midpoint across orders k, k+1");
        }
    }

    for (std::size_t i = 0; i + 1 < vk.size(); ++i) {
        double lo = vk[i], hi = vk[i + 1];
        auto strictly_inside = [&](const std::vector<double>& v) {
            int c = 0;
            for (double t : v) {
                if (t > lo && t < hi) ++c;
            }
            return c;
        };
        if (strictly_inside(vm) != 1 || strictly_inside(vp) != 1) return false;
    }
    return true;
}

}  // namespace orderk
