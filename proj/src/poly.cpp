#include "hp/poly.hpp"

#include <algorithm>
#include <cmath>

namespace hp::poly {

int RealPoly::degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (c[static_cast<size_t>(i)] != 0.0) return i;
    return -1;
}

double RealPoly::operator()(double t) const {
    double v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
    return v;
}

RealPoly RealPoly::derivative() const {
    RealPoly d;
    if (c.size() <= 1) { d.c = {0.0}; return d; }
    d.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i)
        d.c[i - 1] = static_cast<double>(i) * c[i];
    return d;
}

double cauchy_bound(const RealPoly& p) {
    const int n = p.degree();
    if (n <= 0) return 0.0;
    const double lead = std::abs(p.c[static_cast<size_t>(n)]);
    double m = 0.0;
    for (int i = 0; i < n; ++i)
        m = std::max(m, std::abs(p.c[static_cast<size_t>(i)]));
    return 1.0 + m / lead;
}

double residual_scale(const RealPoly& p, double B) {
    const double base = std::max(1.0, std::abs(B));
    double s = 0.0, pw = 1.0;
    for (double ci : p.c) {
        s = std::max(s, std::abs(ci) * pw);
        pw *= base;
    }
    return s;
}

namespace {

// One root of p in [lo, hi] with p(lo), p(hi) of opposite signs: bisection
// until the bracket is small, then Newton polished (falling back to the
// bisection midpoint whenever Newton leaves the bracket).
double refine_root(const RealPoly& p, const RealPoly& dp, double lo, double hi) {
    double flo = p(lo);
    if (flo == 0.0) return lo;
    if (p(hi) == 0.0) return hi;
    for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = p(mid);
        if (fm == 0.0) { lo = hi = mid; break; }
        if ((fm > 0.0) == (flo > 0.0)) { lo = mid; flo = fm; }
        else hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 8; ++it) {
        const double f = p(x), d = dp(x);
        if (d == 0.0) break;
        const double step = f / d;
        const double nx = x - step;
        if (!(nx >= lo && nx <= hi)) break;
        x = nx;
        if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

} // namespace

std::vector<double> real_roots_in(const RealPoly& p, double lo, double hi) {
    const int n = p.degree();
    std::vector<double> roots;
    if (n <= 0 || !(lo < hi)) return roots;
    if (n == 1) {
        const double r = -p.c[0] / p.c[1];
        if (r >= lo && r <= hi) roots.push_back(r);
        return roots;
    }
    const RealPoly dp = p.derivative();
    // Critical points split [lo, hi] into monotone panels.
    std::vector<double> knots = real_roots_in(dp, lo, hi);
    knots.insert(knots.begin(), lo);
    knots.push_back(hi);
    for (size_t i = 0; i + 1 < knots.size(); ++i) {
        const double a = knots[i], b = knots[i + 1];
        if (!(a < b)) continue;
        const double fa = p(a), fb = p(b);
        if (fa == 0.0) {
            if (roots.empty() || roots.back() < a - 1e-15) roots.push_back(a);
            continue;
        }
        if ((fa > 0.0) != (fb >= 0.0)) {
            roots.push_back(refine_root(p, dp, a, b));
        } else if (fb == 0.0 && i + 2 == knots.size()) {
            roots.push_back(b);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace hp::poly
