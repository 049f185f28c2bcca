#include "hp/homlat.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "hp/efiber.hpp"
#include "hp/fixture_arcs_data.hpp"

namespace hp::homlat {

// ---------------------------------------------------------------------------
// Exact 2x2 integer matrices.

IMat2 IMat2::identity() { return IMat2{{{{1, 0}, {0, 1}}}}; }

long IMat2::det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

IMat2 IMat2::operator*(const IMat2& o) const {
    IMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.a[i][j] = a[i][0] * o.a[0][j] + a[i][1] * o.a[1][j];
    return r;
}

IMat2 IMat2::inverse() const {
    const long d = det();
    if (d != 1 && d != -1)
        throw NotIntegralError("IMat2::inverse: determinant is not a unit");
    return IMat2{{{{d * a[1][1], -d * a[0][1]}, {-d * a[1][0], d * a[0][0]}}}};
}

IMat2 IMat2::pow(int k) const {
    IMat2 base = k < 0 ? inverse() : *this;
    int e = k < 0 ? -k : k;
    IMat2 r = identity();
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Coeff apply(const Coeff& n, const IMat2& M) {
    return {n[0] * M.a[0][0] + n[1] * M.a[1][0],
            n[0] * M.a[0][1] + n[1] * M.a[1][1]};
}

// ---------------------------------------------------------------------------
// Monodromy data.

IMat2 monodromy(int j) {
    switch (j) {
        case 0: return IMat2{{{{1, -5}, {0, 1}}}};
        case 1:
        case 4:
        case 5: return IMat2{{{{3, -2}, {2, -1}}}};
        case 2:
        case 3: return IMat2{{{{1, 0}, {2, 1}}}};
        case 6: return IMat2{{{{3, 5}, {-2, -3}}}};
        default: throw Error("monodromy: index out of range");
    }
}

IMat2 kodaira_Ib(int b) { return IMat2{{{{1, 0}, {b, 1}}}}; }

namespace {

void expect(bool ok, const char* what) {
    if (!ok) throw RelationFailedError(what);
}

} // namespace

void verify_monodromy_relations() {
    const IMat2 I = IMat2::identity();
    const IMat2 M0 = monodromy(0), M1 = monodromy(1), M2 = monodromy(2),
                M3 = monodromy(3), M4 = monodromy(4), M5 = monodromy(5),
                Minf = monodromy(6);
    for (int j = 0; j <= 6; ++j)
        expect(monodromy(j).det() == 1, "monodromy determinant is not 1");
    const IMat2 T4 = IMat2{{{{1, 4}, {0, 1}}}};
    expect(M1 * M2 * M4 * M3 == T4, "M1 M2 M4 M3 != [[1,4],[0,1]]");
    expect(M1 * M2 * M5 * M3 == T4, "M1 M2 M5 M3 != [[1,4],[0,1]]");
    expect(M2 == M3, "M2 != M3");
    expect(M0 * M1 * M2 * M0.inverse() * M3.inverse() == M1,
           "M0 M1 M2 M0^-1 M3^-1 != M1");
    for (int j = 1; j <= 5; ++j) {
        IMat2 N = monodromy(j);
        N.a[0][0] -= 1;
        N.a[1][1] -= 1;
        expect(N * N == IMat2{}, "(Mj - I)^2 != 0");
    }
    IMat2 negI = I;
    negI.a[0][0] = negI.a[1][1] = -1;
    expect(Minf * Minf == negI, "Minf^2 != -I");
    // The I_b matrices conjugate into the wall matrices: B^-1 [[1,0],[2,1]] B
    // with B = [[1,-1],[0,1]] gives the matrix shared by walls 1, 4, 5.
    const IMat2 B{{{{1, -1}, {0, 1}}}};
    expect(B.inverse() * kodaira_Ib(2) * B == M1,
           "I_2 normal form does not conjugate to the wall matrix");
    expect(kodaira_Ib(2) == M2, "wall 2 matrix is not the I_2 normal form");
    const IMat2 S{{{{0, 1}, {1, 0}}}}; // generator swap
    expect(S * M0 * S == kodaira_Ib(-5),
           "wall 0 matrix is not an I_5 normal form up to basis swap");
}

// ---------------------------------------------------------------------------
// Intersection tables.

const IntersectionTables& intersection_tables() {
    static const IntersectionTables t = [] {
        IntersectionTables v;
        v.CC = {{{0, 2, 0, 0}, {2, 0, 0, 0}, {0, 0, -4, -6}, {0, 0, -6, -4}}};
        v.DD = {{{0, 2, 0, 0}, {2, 0, 0, 0}, {0, 0, 4, 2}, {0, 0, 2, -4}}};
        v.LC = {{{0, 1, 0, 0},
                 {1, -1, 0, 0},
                 {1, 1, 1, -1},
                 {0, 0, -2, -3},
                 {0, 1, -2, -3},
                 {0, 0, 2, 0}}};
        v.LD = {{{0, 1, 0, 0},
                 {1, -1, 0, 0},
                 {1, 1, -2, -1},
                 {0, 0, -1, -3},
                 {0, 1, -1, -3},
                 {0, 0, -2, 0}}};
        return v;
    }();
    return t;
}

std::array<std::array<long, 4>, 4> quad_form_A() {
    return {{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, -2}}};
}

void verify_intersection_tables() {
    const IntersectionTables& t = intersection_tables();
    // Basis change D = T C with rows of T expressing D1..D4 in C1..C4.
    const std::array<std::array<long, 4>, 4> T = {
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 1}, {0, 0, 0, 1}}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            long s = 0;
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                    s += T[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                         t.CC[static_cast<size_t>(k)][static_cast<size_t>(l)] *
                         T[static_cast<size_t>(j)][static_cast<size_t>(l)];
            expect(s == t.DD[static_cast<size_t>(i)][static_cast<size_t>(j)],
                   "DD does not match T CC T^t");
        }
    const auto A = quad_form_A();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            expect(t.DD[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                       2 * A[static_cast<size_t>(i)][static_cast<size_t>(j)],
                   "DD != 2A");
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 4; ++j) {
            long s = 0;
            for (int k = 0; k < 4; ++k)
                s += t.LC[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                     T[static_cast<size_t>(j)][static_cast<size_t>(k)];
            expect(s == t.LD[static_cast<size_t>(i)][static_cast<size_t>(j)],
                   "LD does not match LC T^t");
        }
    // Dual rows: the combinations below pair with D1..D4 as the identity.
    const auto& LD = t.LD;
    std::array<std::array<long, 4>, 4> dual{};
    for (int k = 0; k < 4; ++k) {
        dual[0][static_cast<size_t>(k)] = LD[0][static_cast<size_t>(k)] + LD[1][static_cast<size_t>(k)];
        dual[1][static_cast<size_t>(k)] = LD[0][static_cast<size_t>(k)];
        dual[3][static_cast<size_t>(k)] = LD[5][static_cast<size_t>(k)] + LD[4][static_cast<size_t>(k)] -
                                          LD[3][static_cast<size_t>(k)] - LD[2][static_cast<size_t>(k)] +
                                          LD[1][static_cast<size_t>(k)] + LD[0][static_cast<size_t>(k)];
        dual[2][static_cast<size_t>(k)] = -LD[3][static_cast<size_t>(k)] - 3 * dual[3][static_cast<size_t>(k)];
    }
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            expect(dual[static_cast<size_t>(i)][static_cast<size_t>(k)] == (i == k ? 1 : 0),
                   "dual combinations do not pair to the identity");
    // The second dual row has an alternative expression L5 - L4.
    for (int k = 0; k < 4; ++k)
        expect(LD[4][static_cast<size_t>(k)] - LD[3][static_cast<size_t>(k)] ==
                   dual[1][static_cast<size_t>(k)],
               "L5 - L4 does not pair like L1");
}

// ---------------------------------------------------------------------------
// Transport and the arc fixture.

Coeff transport(const Coeff& n, const std::vector<CutCrossing>& word) {
    Coeff r = n;
    for (const CutCrossing& c : word) r = homlat::apply(r, monodromy(c.wall).pow(c.sign));
    return r;
}

namespace {

using Pt = std::array<double, 2>;

double cut_x(int wall, const ArcFixture& fx) {
    return wall == 0 ? 0.0 : fx.walls[static_cast<size_t>(wall - 1)];
}

bool cut_is_down(int wall) { return wall <= 2; }

struct SegCross {
    double t = 0.0;
    CutCrossing c;
};

// Ordered cut crossings of the open segment (p, q).  Vertices of the fixture
// never sit on an open cut ray, so strict sign tests suffice; an endpoint on
// the cut line itself (x equal to a wall) only happens at the base point of
// the cut where no crossing occurs.
std::vector<SegCross> segment_crossings(const Pt& p, const Pt& q,
                                        const ArcFixture& fx) {
    std::vector<SegCross> out;
    for (int wall = 0; wall <= 5; ++wall) {
        const double c = cut_x(wall, fx);
        const double d1 = p[0] - c, d2 = q[0] - c;
        if (!(d1 < 0.0 && d2 > 0.0) && !(d1 > 0.0 && d2 < 0.0)) continue;
        const double t = d1 / (d1 - d2);
        const double y = p[1] + t * (q[1] - p[1]);
        if (std::abs(y) < 1e-9)
            throw FixtureError("arc passes through the base point of a cut");
        const bool down = cut_is_down(wall);
        if (down != (y < 0.0)) continue; // passes the wall on the cut-free side
        const int sign = (d1 < 0.0) == down ? +1 : -1;
        out.push_back(SegCross{t, CutCrossing{wall, sign}});
    }
    std::sort(out.begin(), out.end(),
              [](const SegCross& a, const SegCross& b) { return a.t < b.t; });
    return out;
}

std::vector<CutCrossing> arc_crossings(const BaseArc& a, const ArcFixture& fx) {
    std::vector<CutCrossing> out;
    for (size_t k = 0; k + 1 < a.pts.size(); ++k)
        for (const SegCross& sc : segment_crossings(a.pts[k], a.pts[k + 1], fx))
            out.push_back(sc.c);
    return out;
}

void validate_fixture(ArcFixture& fx) {
    for (int j = 0; j < 4; ++j)
        if (!(fx.walls[static_cast<size_t>(j)] < fx.walls[static_cast<size_t>(j + 1)]))
            throw FixtureError("fixture walls are not ascending");
    for (BaseArc& a : fx.arcs) {
        if (a.pts.size() < 2) throw FixtureError(a.name + ": fewer than two vertices");
        const auto recomputed = arc_crossings(a, fx);
        if (recomputed.size() != a.cut_crossings.size())
            throw FixtureError(a.name + ": crossing count disagrees with geometry");
        for (size_t i = 0; i < recomputed.size(); ++i)
            if (recomputed[i].wall != a.cut_crossings[i].wall ||
                recomputed[i].sign != a.cut_crossings[i].sign)
                throw FixtureError(a.name + ": crossing list disagrees with geometry");
        if (a.closed) {
            if (a.pts.front() != a.pts.back())
                throw FixtureError(a.name + ": closed arc does not repeat its start");
            if (transport(a.cycle, a.cut_crossings) != a.cycle)
                throw FixtureError(a.name + ": cycle is not invariant around the loop");
        }
    }
}

ArcFixture parse_fixture(const char* text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("schema").get<std::string>() != "tube-arcs/1")
        throw FixtureError("unexpected fixture schema");
    ArcFixture fx;
    const auto& w = j.at("walls");
    if (w.size() != 5) throw FixtureError("fixture must list five walls");
    for (size_t i = 0; i < 5; ++i) fx.walls[i] = w[i].get<double>();
    const double trunc = j.at("truncation_x").get<double>();
    for (const auto& ja : j.at("arcs")) {
        BaseArc a;
        a.name = ja.at("name").get<std::string>();
        a.closed = ja.at("closed").get<bool>();
        a.cycle = {ja.at("cycle")[0].get<long>(), ja.at("cycle")[1].get<long>()};
        for (const auto& jp : ja.at("points"))
            a.pts.push_back({jp[0].get<double>(), jp[1].get<double>()});
        for (const auto& jc : ja.at("cut_crossings"))
            a.cut_crossings.push_back(
                CutCrossing{jc.at("wall").get<int>(), jc.at("sign").get<int>()});
        if (!a.closed) {
            // Endpoint conditions: the carried cycle must (up to sign) be the
            // cycle dying at each endpoint wall; -1 marks the truncation edge.
            const auto& ew = ja.at("end_walls");
            const int w0 = ew[0].get<int>(), w1 = ew[1].get<int>();
            const auto at_wall = [&](const Pt& p, int wall) {
                const double x = wall == 0 ? 0.0 : fx.walls[static_cast<size_t>(wall - 1)];
                return std::abs(p[0] - x) < 1e-12 && std::abs(p[1]) < 1e-12;
            };
            const auto matches = [](const Coeff& c, const std::array<long, 2>& v) {
                return (c[0] == v[0] && c[1] == v[1]) ||
                       (c[0] == -v[0] && c[1] == -v[1]);
            };
            if (w0 >= 0) {
                if (!at_wall(a.pts.front(), w0))
                    throw FixtureError(a.name + ": start is not at its wall");
                if (!matches(a.cycle, efiber::vanishing_cycle(w0)))
                    throw FixtureError(a.name + ": start cycle does not die at its wall");
            } else if (std::abs(a.pts.front()[0] - trunc) > 1e-12) {
                throw FixtureError(a.name + ": start is not on the truncation edge");
            }
            Coeff end = transport(a.cycle, a.cut_crossings);
            if (w1 >= 0) {
                if (!at_wall(a.pts.back(), w1))
                    throw FixtureError(a.name + ": end is not at its wall");
                if (!matches(end, efiber::vanishing_cycle(w1)))
                    throw FixtureError(a.name + ": end cycle does not die at its wall");
            } else if (std::abs(a.pts.back()[0] - trunc) > 1e-12) {
                throw FixtureError(a.name + ": end is not on the truncation edge");
            }
        }
        fx.arcs.push_back(std::move(a));
    }
    validate_fixture(fx);
    return fx;
}

} // namespace

const BaseArc& ArcFixture::arc(const std::string& name) const {
    for (const BaseArc& a : arcs)
        if (a.name == name) return a;
    throw FixtureError("no arc named " + name);
}

const ArcFixture& fixture_arcs() {
    static const ArcFixture fx = parse_fixture(detail::kFixtureArcsJson);
    return fx;
}

// ---------------------------------------------------------------------------
// Tube intersection numbers.

namespace {

struct PreparedArc {
    const BaseArc* arc = nullptr;
    // Coefficient row at the start vertex of each segment.
    std::vector<Coeff> row_at;
    // Ordered crossings within each segment.
    std::vector<std::vector<SegCross>> crossings;
};

PreparedArc prepare(const BaseArc& a, const ArcFixture& fx) {
    PreparedArc p;
    p.arc = &a;
    Coeff row = a.cycle;
    for (size_t k = 0; k + 1 < a.pts.size(); ++k) {
        p.row_at.push_back(row);
        p.crossings.push_back(segment_crossings(a.pts[k], a.pts[k + 1], fx));
        for (const SegCross& sc : p.crossings.back())
            row = homlat::apply(row, monodromy(sc.c.wall).pow(sc.c.sign));
    }
    return p;
}

Coeff row_at_param(const PreparedArc& p, size_t seg, double t) {
    Coeff row = p.row_at[seg];
    for (const SegCross& sc : p.crossings[seg]) {
        if (sc.t >= t) break;
        row = homlat::apply(row, monodromy(sc.c.wall).pow(sc.c.sign));
    }
    return row;
}

} // namespace

long tube_intersection(const BaseArc& a, const BaseArc& b,
                       const ArcFixture& fx) {
    const PreparedArc pa = prepare(a, fx);
    const PreparedArc pb = prepare(b, fx);
    long total = 0;
    for (size_t i = 0; i + 1 < a.pts.size(); ++i) {
        const Pt& A1 = a.pts[i];
        const Pt& A2 = a.pts[i + 1];
        const double ux = A2[0] - A1[0], uy = A2[1] - A1[1];
        for (size_t j = 0; j + 1 < b.pts.size(); ++j) {
            const Pt& B1 = b.pts[j];
            const Pt& B2 = b.pts[j + 1];
            const double vx = B2[0] - B1[0], vy = B2[1] - B1[1];
            const double det = ux * vy - uy * vx;
            const double wx = B1[0] - A1[0], wy = B1[1] - A1[1];
            const double scale = std::hypot(ux, uy) * std::hypot(vx, vy);
            if (std::abs(det) <= 1e-12 * scale) {
                // Parallel: only a collinear overlap is a problem.
                const double off = ux * wy - uy * wx;
                if (std::abs(off) > 1e-12 * (std::hypot(ux, uy) *
                                             (std::hypot(wx, wy) + 1.0)))
                    continue;
                const double uu = ux * ux + uy * uy;
                const double t0 = (wx * ux + wy * uy) / uu;
                const double t1 = ((B2[0] - A1[0]) * ux + (B2[1] - A1[1]) * uy) / uu;
                const double lo = std::min(t0, t1), hi = std::max(t0, t1);
                if (hi > 1e-9 && lo < 1.0 - 1e-9)
                    throw NonTransverseError(a.name + " and " + b.name +
                                             " overlap along a segment");
                continue;
            }
            const double t = (wx * vy - wy * vx) / det;
            const double s = (wx * uy - wy * ux) / det;
            if (t < 0.0 || t >= 1.0 || s < 0.0 || s >= 1.0) continue;
            const Coeff m = row_at_param(pa, i, t);
            const Coeff n = row_at_param(pb, j, s);
            const long pairing = m[0] * n[1] - m[1] * n[0];
            total += (det > 0.0 ? -1L : 1L) * pairing;
        }
    }
    return total;
}

} // namespace hp::homlat
