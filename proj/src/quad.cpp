#include "hp/quad.hpp"

#include <cmath>
#include <vector>

#include "hp/parallel.hpp"

namespace hp::quad {

namespace {

constexpr double kPiHalf = 1.5707963267948966;
constexpr double kTMax = 6.2; // tanh-sinh abscissa where weights underflow

struct Node {
    double da;     // distance to the left endpoint, exact
    double db;     // distance to the right endpoint, exact
    double w;      // quadrature weight (without the step size h)
};

// Node of the tanh-sinh rule at abscissa t, for the interval length L:
//   u = (pi/2) sinh t,  da = L / (1 + e^{-2u}),  db = L / (1 + e^{2u}),
//   w = L/2 * (pi/2) cosh t * sech^2(u).
Node ts_node(double t, double L) {
    const double u = kPiHalf * std::sinh(t);
    const double e2 = std::exp(-2.0 * std::abs(u));
    const double sech2 = 4.0 * e2 / ((1.0 + e2) * (1.0 + e2));
    Node n;
    n.da = L / (1.0 + std::exp(-2.0 * u));
    n.db = L / (1.0 + std::exp(2.0 * u));
    n.w = 0.5 * L * kPiHalf * std::cosh(t) * sech2;
    return n;
}

bool finite(const cplx& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// Shared driver: sums levels of a doubling rule.  `eval_level(h, first_call)`
// must return the sum of w*f over the new nodes of this level (spacing h).
template <typename LevelFn>
QuadResult levelled(const QuadSpec& spec, LevelFn&& eval_level) {
    QuadResult r;
    double h = 1.0;
    cplx total = eval_level(h, true) * h;
    cplx prev = total;
    for (int level = 1; level <= spec.max_level; ++level) {
        h *= 0.5;
        const cplx odd = eval_level(h, false);
        total = 0.5 * total + odd * h;
        const double delta = std::abs(total - prev);
        r.err_est = delta;
        if (delta <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
            r.converged = true;
            r.value = total;
            return r;
        }
        prev = total;
    }
    r.value = total;
    return r;
}

} // namespace

QuadResult integrate_de_w(const std::function<cplx(double, double, double)>& f,
                          double a, double b, const QuadSpec& spec) {
    const double L = b - a;
    long evals = 0;
    auto level_sum = [&](double h, bool first) {
        cplx s{0.0, 0.0};
        // first level: all multiples of h; later: odd multiples only
        const double step = first ? h : 2.0 * h;
        const double t0 = first ? 0.0 : h;
        for (double t = t0; t <= kTMax; t += step) {
            for (int sgn = 0; sgn < 2; ++sgn) {
                if (t == 0.0 && sgn == 1) continue;
                const Node n = ts_node(sgn ? -t : t, L);
                if (n.da <= 0.0 || n.db <= 0.0 || n.w <= 0.0) continue;
                const double x = n.da <= n.db ? a + n.da : b - n.db;
                const cplx v = f(x, n.da, n.db) * n.w;
                ++evals;
                if (finite(v)) s += v;
            }
        }
        return s;
    };
    QuadResult r = levelled(spec, level_sum);
    r.evals = evals;
    return r;
}

QuadResult integrate_de(const std::function<cplx(double)>& f,
                        double a, double b, const QuadSpec& spec) {
    return integrate_de_w([&f](double x, double, double) { return f(x); },
                          a, b, spec);
}

QuadResult integrate_de_parallel_w(
    const std::function<cplx(double, double, double)>& f,
    double a, double b, const QuadSpec& spec) {
    const double L = b - a;
    long evals = 0;
    auto level_sum = [&](double h, bool first) {
        // Materialize this level's nodes, evaluate them into per-node slots
        // (possibly in parallel), then reduce in index order.
        std::vector<Node> nodes;
        const double step = first ? h : 2.0 * h;
        const double t0 = first ? 0.0 : h;
        for (double t = t0; t <= kTMax; t += step) {
            for (int sgn = 0; sgn < 2; ++sgn) {
                if (t == 0.0 && sgn == 1) continue;
                const Node n = ts_node(sgn ? -t : t, L);
                if (n.da <= 0.0 || n.db <= 0.0 || n.w <= 0.0) continue;
                nodes.push_back(n);
            }
        }
        std::vector<cplx> slot(nodes.size());
        par::parallel_for(nodes.size(), [&](std::size_t i) {
            const Node& n = nodes[i];
            const double x = n.da <= n.db ? a + n.da : b - n.db;
            slot[i] = f(x, n.da, n.db) * n.w;
        });
        cplx s{0.0, 0.0};
        for (const cplx& v : slot)
            if (finite(v)) s += v;
        evals += static_cast<long>(nodes.size());
        return s;
    };
    QuadResult r = levelled(spec, level_sum);
    r.evals = evals;
    return r;
}

QuadResult integrate_semi_inf_w(const std::function<cplx(double, double)>& f,
                                double a, const QuadSpec& spec) {
    long evals = 0;
    auto level_sum = [&](double h, bool first) {
        cplx s{0.0, 0.0};
        const double step = first ? h : 2.0 * h;
        const double t0 = first ? 0.0 : h;
        for (double t = t0; t <= kTMax; t += step) {
            for (int sgn = 0; sgn < 2; ++sgn) {
                if (t == 0.0 && sgn == 1) continue;
                const double tt = sgn ? -t : t;
                const double u = kPiHalf * std::sinh(tt);
                const double da = std::exp(u);
                if (da == 0.0 || !std::isfinite(da)) continue;
                const double w = da * kPiHalf * std::cosh(tt);
                if (!std::isfinite(w)) continue;
                const cplx v = f(a + da, da) * w;
                ++evals;
                if (finite(v)) s += v;
            }
        }
        return s;
    };
    QuadResult r = levelled(spec, level_sum);
    r.evals = evals;
    return r;
}

QuadResult integrate_semi_inf(const std::function<cplx(double)>& f,
                              double a, const QuadSpec& spec) {
    return integrate_semi_inf_w([&f](double x, double) { return f(x); }, a, spec);
}

QuadResult integrate_semi_inf_down(const std::function<cplx(double)>& f,
                                   double a, const QuadSpec& spec) {
    return integrate_semi_inf_w(
        [&f, a](double x, double) { return f(a - (x - a)); }, a, spec);
}

QuadResult integrate_contour(const std::function<cplx(cplx)>& f,
                             const std::vector<cplx>& z,
                             const QuadSpec& spec) {
    QuadResult total;
    if (z.size() < 2) { total.converged = true; return total; }
    for (size_t seg = 0; seg + 1 < z.size(); ++seg) {
        const cplx za = z[seg], zb = z[seg + 1];
        const cplx dz = zb - za;
        if (std::abs(dz) == 0.0) continue;

        // Composite Simpson with doubling, watching the integrand phase on
        // the ordered node sequence of each level.
        cplx prev{0.0, 0.0};
        bool seg_ok = false;
        int n = 16;
        cplx simpson{0.0, 0.0};
        for (int level = 0; level <= spec.max_level; ++level, n *= 2) {
            std::vector<cplx> fv(static_cast<size_t>(n) + 1);
            bool jump = false;
            double prev_arg = 0.0;
            for (int i = 0; i <= n; ++i) {
                const cplx zi = za + (static_cast<double>(i) / n) * dz;
                fv[static_cast<size_t>(i)] = f(zi);
                total.evals++;
                const cplx vi = fv[static_cast<size_t>(i)];
                if (std::abs(vi) > 0.0) {
                    const double ai = std::arg(vi);
                    if (i > 0) {
                        double d = ai - prev_arg;
                        while (d > 3.141592653589793) d -= 6.283185307179586;
                        while (d < -3.141592653589793) d += 6.283185307179586;
                        if (std::abs(d) > 0.5 * 3.141592653589793) jump = true;
                    }
                    prev_arg = ai;
                }
            }
            simpson = fv[0] + fv[static_cast<size_t>(n)];
            for (int i = 1; i < n; ++i)
                simpson += fv[static_cast<size_t>(i)] * (i % 2 ? 4.0 : 2.0);
            simpson *= dz / (3.0 * n);
            const double delta = std::abs(simpson - prev);
            if (level > 0 && !jump &&
                delta <= std::max(spec.abs_tol, spec.rel_tol * std::abs(simpson))) {
                seg_ok = true;
                total.err_est = std::max(total.err_est, delta);
                break;
            }
            if (level == spec.max_level && jump)
                throw BranchJumpError(
                    "integrand phase jumped by more than pi/2 between adjacent "
                    "contour nodes after maximal refinement");
            prev = simpson;
        }
        if (!seg_ok) { total.value += simpson; total.converged = false; return total; }
        total.value += simpson;
    }
    total.converged = true;
    return total;
}

const QuadResult& require_converged(const QuadResult& r, const char* what) {
    if (!r.converged)
        throw NoConvergenceError(std::string("quadrature did not converge: ") + what);
    return r;
}

} // namespace hp::quad
