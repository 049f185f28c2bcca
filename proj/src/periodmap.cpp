#include "hp/periodmap.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace hp::periodmap {

namespace {

constexpr cplx kI{0.0, 1.0};

double nan_d() { return std::numeric_limits<double>::quiet_NaN(); }

// Outer integrands evaluate the branch ordering at tanh-sinh nodes that pile
// up exponentially close to the walls.  A node can round exactly onto a wall
// (or across it), in which case the ordering is undefined there; such nodes
// are reported as NaN and the quadrature driver drops them.  Every resolvable
// fiber is kept: the gap magnitudes grow only logarithmically as a branch
// pair collides, so even fibers within 1e-300 of a wall contribute finite,
// weight-damped values.
template <class Fn>
cplx guarded(double y, const walls::WallSet& ws, const ModuliPoint& m,
             Fn&& fn) {
    try {
        return fn(walls::ordering_at(y, ws, m));
    } catch (const OnWallError&) {
        return cplx{nan_d(), 0.0};
    } catch (const TableMismatchError&) {
        return cplx{nan_d(), 0.0};
    }
}

// Inner integral of du/|F| across branch slot `slot` by offset-aware
// tanh-sinh; nodes of one refinement level run in parallel.
//
// At a fiber very close to a wall the third branch point sits just outside
// the slot and the inner integrand develops a steep crossover, so the inner
// rule gets two extra refinement levels.  If it still fails *and* the fiber
// is inside the near-wall layer, the fiber is reported as unresolvable (NaN,
// dropped by the outer rule, weight ~ wall distance); a failure at a bulk
// fiber is a real error and propagates.
cplx inner_gap_de(double y, const walls::Ordering& ord, int slot,
                  const walls::WallSet& ws, const quad::QuadSpec& spec) {
    const auto f = [&ord, slot](double u, double da, double db) {
        return cplx{1.0 / walls::F_gap_abs(ord, slot, u, da, db), 0.0};
    };
    quad::QuadSpec inner = spec;
    inner.max_level = spec.max_level + 2;
    const quad::QuadResult r = quad::integrate_de_parallel_w(
        f, ord.w[static_cast<size_t>(slot)],
        ord.w[static_cast<size_t>(slot) + 1], inner);
    if (!r.converged) {
        double dist = y;
        for (double s : ws.s) dist = std::min(dist, std::abs(y - s));
        if (dist < 1e-6 * ws.s[4]) return cplx{nan_d(), 0.0};
        quad::require_converged(r, "inner du/|F| integral");
    }
    return cplx{r.value.real(), 0.0};
}

// One chamber: iterated double integral of du dy / |F|, outer range split at
// the interior walls where the inner integral turns logarithmic.
struct ChamberValue {
    double mag = 0.0;
    double err = 0.0;
};

ChamberValue chamber_magnitude(const walls::Chamber& ch,
                               const walls::WallSet& ws, const ModuliPoint& m,
                               const quad::QuadSpec& spec) {
    std::vector<double> cuts{ch.y_lo};
    for (int i = 0; i < ch.n_interior; ++i)
        cuts.push_back(ch.interior_walls[static_cast<size_t>(i)]);
    cuts.push_back(ch.y_hi);
    ChamberValue out;
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
        const auto outer = [&](double y) {
            return guarded(y, ws, m, [&](const walls::Ordering& ord) {
                return inner_gap_de(y, ord, ch.slot_lo, ws, spec);
            });
        };
        const quad::QuadResult r =
            quad::integrate_de(outer, cuts[k], cuts[k + 1], spec);
        quad::require_converged(r, "chamber outer integral");
        out.mag += r.value.real();
        out.err += r.err_est;
    }
    return out;
}

} // namespace

PeriodVector periods_chambers(const ModuliPoint& m, const walls::WallSet& ws,
                              const quad::QuadSpec& spec) {
    const auto chs = walls::chambers(ws);
    std::array<cplx, 4> R{};
    double err = 0.0;
    for (int i = 0; i < 4; ++i) {
        const ChamberValue v = chamber_magnitude(chs[static_cast<size_t>(i)],
                                                 ws, m, spec);
        R[static_cast<size_t>(i)] = chs[static_cast<size_t>(i)].phase * v.mag;
        err = std::max(err, v.err);
    }
    PeriodVector pv;
    pv.method = "chamber";
    pv.xi[0] = 2.0 * R[1] + 2.0 * R[3];
    pv.xi[1] = 2.0 * R[1];
    pv.xi[2] = 6.0 * R[0] + 2.0 * R[2];
    pv.xi[3] = -2.0 * R[0];
    pv.err_est = 8.0 * err;
    return pv;
}

namespace {

// Fiberwise route: the integrals over one gap of the two fiber magnitudes,
// evaluated with Carlson's R_F inside (independent of the chamber route's
// inner quadrature).
struct GapPieces {
    cplx p12{0.0, 0.0};
    cplx p23{0.0, 0.0};
    double err = 0.0;
};

GapPieces gap_pieces(int gap, const walls::WallSet& ws, const ModuliPoint& m,
                     const quad::QuadSpec& spec, bool need_p23) {
    const auto make = [&](bool which23) {
        return [&ws, &m, which23](double y) {
            return guarded(y, ws, m, [&](const walls::Ordering& ord) {
                const efiber::GapMagnitudes g = efiber::gap_magnitudes_rf(ord);
                return cplx{which23 ? g.j23 : g.j12, 0.0};
            });
        };
    };
    GapPieces out;
    if (gap == 5) {
        const quad::QuadResult r12 =
            quad::integrate_semi_inf(make(false), ws.s[4], spec);
        quad::require_converged(r12, "gap tail integral of J12");
        out.p12 = r12.value;
        out.err += r12.err_est;
        if (need_p23) {
            const quad::QuadResult r23 =
                quad::integrate_semi_inf(make(true), ws.s[4], spec);
            quad::require_converged(r23, "gap tail integral of J23");
            out.p23 = r23.value;
            out.err += r23.err_est;
        }
        return out;
    }
    const double lo = gap == 0 ? 0.0 : ws.s[static_cast<size_t>(gap - 1)];
    const double hi = ws.s[static_cast<size_t>(gap)];
    const quad::QuadResult r12 = quad::integrate_de(make(false), lo, hi, spec);
    quad::require_converged(r12, "gap integral of J12");
    out.p12 = r12.value;
    out.err += r12.err_est;
    if (need_p23) {
        const quad::QuadResult r23 =
            quad::integrate_de(make(true), lo, hi, spec);
        quad::require_converged(r23, "gap integral of J23");
        out.p23 = r23.value;
        out.err += r23.err_est;
    }
    return out;
}

struct ArcAssembly {
    std::array<cplx, 6> G{};
    double err = 0.0;
};

ArcAssembly assemble_arcs(const ModuliPoint& m, const walls::WallSet& ws,
                          const quad::QuadSpec& spec) {
    std::array<GapPieces, 6> P;
    for (int g = 0; g < 6; ++g)
        P[static_cast<size_t>(g)] = gap_pieces(g, ws, m, spec, g != 0);
    ArcAssembly a;
    for (const GapPieces& gp : P) a.err += gp.err;
    const auto p12 = [&](int g) { return P[static_cast<size_t>(g)].p12; };
    const auto p23 = [&](int g) { return P[static_cast<size_t>(g)].p23; };
    a.G[0] = -2.0 * kI * p23(5);
    a.G[1] = -2.0 * kI * p23(4);
    a.G[2] = 2.0 * (p12(3) + p12(5)) + 2.0 * (-kI * p23(4) + p12(4));
    a.G[3] = 2.0 * p12(2);
    a.G[4] = 2.0 * (-kI * p23(1) + p12(2) - kI * p23(2) - kI * p23(3));
    a.G[5] = 2.0 * (p12(0) + p12(1) + kI * p23(1) + kI * p23(2) + p12(3) +
                    kI * p23(3) + p12(4) + p12(5) + kI * p23(5));
    return a;
}

} // namespace

std::array<cplx, 6> arc_periods(const ModuliPoint& m, const walls::WallSet& ws,
                                const quad::QuadSpec& spec) {
    return assemble_arcs(m, ws, spec).G;
}

PeriodVector periods_fiberwise(const ModuliPoint& m, const walls::WallSet& ws,
                               const quad::QuadSpec& spec) {
    const ArcAssembly a = assemble_arcs(m, ws, spec);
    PeriodVector pv;
    pv.method = "fiberwise";
    pv.xi[0] = a.G[0] + a.G[1];
    pv.xi[1] = a.G[4] - a.G[3];
    pv.xi[3] = a.G[5] + a.G[4] - a.G[3] - a.G[2] + a.G[1] + a.G[0];
    pv.xi[2] = -a.G[3] - 3.0 * pv.xi[3];
    pv.err_est = 8.0 * a.err;
    return pv;
}

double quadric_residual(const PeriodVector& pv) {
    const cplx q = 2.0 * pv.xi[0] * pv.xi[1] + 2.0 * pv.xi[2] * pv.xi[2] +
                   2.0 * pv.xi[2] * pv.xi[3] - 2.0 * pv.xi[3] * pv.xi[3];
    double n = 0.0;
    for (const cplx& x : pv.xi) n += std::norm(x);
    if (!(n > 0.0)) return std::numeric_limits<double>::infinity();
    return std::abs(q) / n;
}

double positivity(const PeriodVector& pv) {
    const auto& x = pv.xi;
    return 2.0 * (x[0] * std::conj(x[1])).real() + 2.0 * std::norm(x[2]) +
           2.0 * (x[2] * std::conj(x[3])).real() - 2.0 * std::norm(x[3]);
}

HilbertPoint to_hilbert(const PeriodVector& pv) {
    double n = 0.0;
    for (const cplx& x : pv.xi) n += std::norm(x);
    if (!(std::norm(pv.xi[1]) > 1e-24 * n))
        throw DegeneratePeriodsError("to_hilbert: xi2 is negligible");
    const double s5 = std::sqrt(5.0);
    HilbertPoint z;
    z.z1 = -(pv.xi[2] + 0.5 * (1.0 - s5) * pv.xi[3]) / pv.xi[1];
    z.z2 = -(pv.xi[2] + 0.5 * (1.0 + s5) * pv.xi[3]) / pv.xi[1];
    return z;
}

HilbertPoint normalize_component(const HilbertPoint& z) {
    const double i1 = z.z1.imag(), i2 = z.z2.imag();
    if (i1 > 0.0 && i2 > 0.0) return z;
    if (i1 < 0.0 && i2 < 0.0)
        return HilbertPoint{std::conj(z.z1), std::conj(z.z2)};
    throw ComponentAmbiguousError(
        "normalize_component: coordinates do not lie in one product of half planes");
}

double product_identity_residual(const HilbertPoint& z,
                                 const PeriodVector& pv) {
    return std::abs(z.z1 * z.z2 + pv.xi[0] / pv.xi[1]);
}

} // namespace hp::periodmap
