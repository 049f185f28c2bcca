// Command-line front end: wall structure, chamber decomposition, periods
// and half-plane coordinates, numeric monodromy, exact lattice checks, a
// birational-map residual battery, and CSV grid scans.
//
// Exit codes: 0 success, 2 parameter outside the admissible region,
// 3 numerical failure, 4 argument error, 5 verification failure.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hp/algebra.hpp"
#include "hp/braid.hpp"
#include "hp/homlat.hpp"
#include "hp/io.hpp"
#include "hp/parallel.hpp"
#include "hp/periodmap.hpp"
#include "hp/quad.hpp"
#include "hp/types.hpp"
#include "hp/walls.hpp"

namespace {

using namespace hp;

nlohmann::json num(double v) { return nlohmann::json::parse(io::fmt_g17(v)); }

nlohmann::json cplx_pair(const cplx& z) {
    return nlohmann::json{{"re", num(z.real())}, {"im", num(z.imag())}};
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot open output file: " + path);
    os << content;
}

struct RunConfig {
    double x = 0.0, y = 0.0;
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int threads = 0;
    std::string out;
    std::string method = "fiberwise";
    std::string svg;
    int j = -1;
    int samples = 100;
    unsigned long long seed = 1;
    double x0 = 0.3, x1 = 0.9;
    double y0 = 0.3, y1 = 2.0;
    int nx = 5, ny = 5;

    quad::QuadSpec spec() const {
        quad::QuadSpec s;
        s.rel_tol = rel_tol;
        s.abs_tol = abs_tol;
        return s;
    }
};

// Optional JSON config file; explicit flags override its values.
void load_config(RunConfig& cfg, const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open config file: " + path);
    nlohmann::json j;
    is >> j;
    if (j.contains("rel_tol")) cfg.rel_tol = j["rel_tol"].get<double>();
    if (j.contains("abs_tol")) cfg.abs_tol = j["abs_tol"].get<double>();
    if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("method")) cfg.method = j["method"].get<std::string>();
    if (j.contains("samples")) cfg.samples = j["samples"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<unsigned long long>();
    if (j.contains("grid")) {
        const nlohmann::json& g = j["grid"];
        if (g.contains("x0")) cfg.x0 = g["x0"].get<double>();
        if (g.contains("x1")) cfg.x1 = g["x1"].get<double>();
        if (g.contains("y0")) cfg.y0 = g["y0"].get<double>();
        if (g.contains("y1")) cfg.y1 = g["y1"].get<double>();
        if (g.contains("nx")) cfg.nx = g["nx"].get<int>();
        if (g.contains("ny")) cfg.ny = g["ny"].get<int>();
    }
}

// ---------------------------------------------------------------------------
// Subcommand bodies.  Each returns the process exit code.

int cmd_walls(const RunConfig& cfg) {
    io::PointReport r;
    r.m = {cfg.x, cfg.y};
    nlohmann::json j;
    j["schema"] = "hilbert-period/1";
    j["point"] = {{"x", num(cfg.x)}, {"y", num(cfg.y)}};
    if (cfg.y == 0.0) {
        j["in_u0"] = false;
        j["error"] = "wall at y=0";
        emit(cfg.out, j.dump(2) + "\n");
        return 2;
    }
    if (!walls::in_U0(r.m)) {
        j["in_u0"] = false;
        j["error"] = "outside the five-wall region";
        emit(cfg.out, j.dump(2) + "\n");
        return 2;
    }
    r.in_u0 = true;
    r.ws = walls::walls(r.m);
    emit(cfg.out, io::to_json(r));
    return 0;
}

int cmd_chambers(const RunConfig& cfg) {
    const ModuliPoint m{cfg.x, cfg.y};
    const walls::WallSet ws = walls::walls(m);
    if (!cfg.svg.empty()) {
        emit(cfg.svg, io::chambers_svg(m, ws));
        return 0;
    }
    nlohmann::json j;
    j["schema"] = "hilbert-period/1";
    j["point"] = {{"x", num(cfg.x)}, {"y", num(cfg.y)}};
    j["in_u0"] = true;
    nlohmann::json w = nlohmann::json::array();
    for (double s : ws.s) w.push_back(num(s));
    j["walls"] = w;
    nlohmann::json chs = nlohmann::json::array();
    for (const walls::Chamber& c : walls::chambers(ws)) {
        nlohmann::json e;
        e["y_lo"] = num(c.y_lo);
        e["y_hi"] = num(c.y_hi);
        e["slot_lo"] = c.slot_lo;
        nlohmann::json iw = nlohmann::json::array();
        for (int k = 0; k < c.n_interior; ++k)
            iw.push_back(num(c.interior_walls[static_cast<size_t>(k)]));
        e["interior_walls"] = iw;
        e["phase"] = cplx_pair(c.phase);
        chs.push_back(e);
    }
    j["chambers"] = chs;
    emit(cfg.out, j.dump(2) + "\n");
    return 0;
}

int cmd_periods(const RunConfig& cfg) {
    const ModuliPoint m{cfg.x, cfg.y};
    const walls::WallSet ws = walls::walls(m);
    const quad::QuadSpec spec = cfg.spec();

    if (cfg.method == "both") {
        const periodmap::PeriodVector fw = periodmap::periods_fiberwise(m, ws, spec);
        const periodmap::PeriodVector ch = periodmap::periods_chambers(m, ws, spec);
        double scale = 0.0;
        for (const cplx& v : fw.xi) scale = std::max(scale, std::abs(v));
        double dev = 0.0;
        for (int k = 0; k < 4; ++k)
            dev = std::max(dev, std::abs(ch.xi[static_cast<size_t>(k)] -
                                         fw.xi[static_cast<size_t>(k)]) /
                                    scale);
        nlohmann::json j;
        j["schema"] = "hilbert-period/1";
        j["point"] = {{"x", num(cfg.x)}, {"y", num(cfg.y)}};
        j["in_u0"] = true;
        nlohmann::json w = nlohmann::json::array();
        for (double s : ws.s) w.push_back(num(s));
        j["walls"] = w;
        for (const auto* pv : {&fw, &ch}) {
            nlohmann::json xi = nlohmann::json::array();
            for (const cplx& v : pv->xi) xi.push_back(cplx_pair(v));
            j[pv->method] = {{"xi", xi}, {"err_est", num(pv->err_est)}};
        }
        j["deviation"] = num(dev);
        j["quadric_residual"] = num(periodmap::quadric_residual(fw));
        const periodmap::HilbertPoint z =
            periodmap::normalize_component(periodmap::to_hilbert(fw));
        j["z1"] = cplx_pair(z.z1);
        j["z2"] = cplx_pair(z.z2);
        emit(cfg.out, j.dump(2) + "\n");
        return dev <= 1e-6 ? 0 : 5;
    }

    io::PointReport r;
    r.m = m;
    r.in_u0 = true;
    r.ws = ws;
    r.pv = cfg.method == "chamber" ? periodmap::periods_chambers(m, ws, spec)
                                   : periodmap::periods_fiberwise(m, ws, spec);
    r.quadric_residual = periodmap::quadric_residual(*r.pv);
    r.z = periodmap::normalize_component(periodmap::to_hilbert(*r.pv));
    r.method = r.pv->method;
    emit(cfg.out, io::to_json(r));
    return 0;
}

nlohmann::json mat_json(const homlat::IMat2& M) {
    return nlohmann::json{{M.a[0][0], M.a[0][1]}, {M.a[1][0], M.a[1][1]}};
}

int cmd_monodromy(const RunConfig& cfg) {
    const ModuliPoint m{cfg.x, cfg.y};
    const walls::WallSet ws = walls::walls(m);
    nlohmann::json j;
    j["schema"] = "hilbert-period/1";
    j["point"] = {{"x", num(cfg.x)}, {"y", num(cfg.y)}};
    nlohmann::json loops = nlohmann::json::array();
    bool all_match = true;
    const int j_lo = cfg.j < 0 ? 0 : cfg.j;
    const int j_hi = cfg.j < 0 ? 5 : cfg.j;
    for (int wall = j_lo; wall <= j_hi; ++wall) {
        const braid::Loop L = braid::loop_for(wall, ws);
        const braid::Continuation c =
            braid::continue_periods_adaptive(m, ws, L, 256, 32768, cfg.spec());
        const braid::RecoveredMatrix rm = braid::recover_matrix(c);
        const bool match = rm.M == homlat::monodromy(wall);
        all_match = all_match && match;
        nlohmann::json e;
        e["wall"] = wall;
        e["matrix"] = mat_json(rm.M);
        e["expected"] = mat_json(homlat::monodromy(wall));
        e["residual"] = num(rm.residual);
        e["steps"] = c.steps_used;
        e["match"] = match;
        loops.push_back(e);
    }
    j["loops"] = loops;
    j["all_match"] = all_match;
    emit(cfg.out, j.dump(2) + "\n");
    return all_match ? 0 : 5;
}

int cmd_lattice_check(const RunConfig& cfg) {
    std::ostringstream os;
    bool ok = true;
    const auto line = [&](bool pass, const std::string& what) {
        os << (pass ? "[PASS] " : "[FAIL] ") << what << "\n";
        ok = ok && pass;
    };
    using homlat::IMat2;
    const IMat2 M0 = homlat::monodromy(0), M1 = homlat::monodromy(1),
                M2 = homlat::monodromy(2), M3 = homlat::monodromy(3),
                M4 = homlat::monodromy(4), M5 = homlat::monodromy(5);
    IMat2 shear;
    shear.a = {{{1, 4}, {0, 1}}};
    line(M1 * M2 * M4 * M3 == shear, "M1 M2 M4 M3 = [[1,4],[0,1]]");
    line(M1 * M2 * M5 * M3 == shear, "M1 M2 M5 M3 = [[1,4],[0,1]]");
    line(M2 == M3, "M2 = M3");
    line(M0 * M1 * M2 * M0.inverse() * M3.inverse() == M1,
         "M0 M1 M2 M0^-1 M3^-1 = M1");
    try {
        homlat::verify_monodromy_relations();
        line(true, "monodromy normal forms and determinants");
    } catch (const RelationFailedError& e) {
        line(false, std::string("monodromy normal forms: ") + e.what());
    }
    try {
        homlat::verify_intersection_tables();
        line(true, "intersection tables and dual-basis rows");
    } catch (const RelationFailedError& e) {
        line(false, std::string("intersection tables: ") + e.what());
    }
    try {
        const homlat::ArcFixture& fx = homlat::fixture_arcs();
        const homlat::IntersectionTables& t = homlat::intersection_tables();
        bool tubes = homlat::tube_intersection(fx.arc("C1"), fx.arc("C2"), fx) ==
                     t.CC[0][1];
        for (int i = 0; i < 6; ++i) {
            const homlat::BaseArc& li = fx.arc("L" + std::to_string(i + 1));
            tubes = tubes &&
                    homlat::tube_intersection(li, fx.arc("C1"), fx) ==
                        t.LC[static_cast<size_t>(i)][0] &&
                    homlat::tube_intersection(li, fx.arc("C2"), fx) ==
                        t.LC[static_cast<size_t>(i)][1];
        }
        line(tubes, "tube intersections over the fixture arcs");
    } catch (const Error& e) {
        line(false, std::string("fixture: ") + e.what());
    }
    emit(cfg.out, os.str());
    return ok ? 0 : 5;
}

int cmd_verify_maps(const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    const auto unit = [&] { return (rng() >> 11) * 0x1.0p-53; };
    const auto coord = [&] {
        const double v = 0.25 + 1.5 * unit();
        return (rng() & 1) ? v : -v;
    };
    const auto cpt = [&] { return cplx{coord(), coord()}; };
    const algebra::Params q{1.1, 0.4, 0.8};
    double worst_s = 0.0, worst_k = 0.0, worst_invol = 0.0, worst_kk = 0.0;
    for (int n = 0; n < cfg.samples; ++n) {
        const algebra::PointT P = algebra::lift_T(q, cpt(), cpt());
        const algebra::PointS Ps = algebra::map_T_to_S(P);
        worst_s = std::max(worst_s, std::abs(algebra::residual_S(q, Ps)) /
                                        algebra::residual_scale_S(q, Ps));
        const algebra::PointK Pk = algebra::map_T_to_K(q, P);
        worst_k = std::max(worst_k, std::abs(algebra::residual_K(q, Pk)) /
                                        algebra::residual_scale_K(q, Pk));
        const algebra::PointT iP = algebra::iota(P);
        const algebra::PointT iiP = algebra::iota(iP);
        worst_invol = std::max(worst_invol,
                               std::abs(iiP.x - P.x) / std::abs(P.x));
        worst_invol = std::max(worst_invol,
                               std::abs(iiP.z - P.z) / std::abs(P.z));
        const algebra::PointK iPk = algebra::map_T_to_K(q, iP);
        worst_kk = std::max(worst_kk, std::abs(iPk.u - Pk.u) / std::abs(Pk.u));
        worst_kk = std::max(worst_kk, std::abs(iPk.v - Pk.v) / std::abs(Pk.v));
    }
    std::ostringstream os;
    bool ok = true;
    const auto line = [&](double worst, double tol, const std::string& what) {
        const bool pass = worst <= tol;
        os << (pass ? "[PASS] " : "[FAIL] ") << what << ": worst "
           << io::fmt_g17(worst) << " (tolerance " << io::fmt_g17(tol)
           << ", " << cfg.samples << " samples)\n";
        ok = ok && pass;
    };
    line(worst_s, 1e-9, "curve-to-curve residual, map to the cubic model");
    line(worst_k, 1e-9, "curve-to-curve residual, map to the quintic model");
    line(worst_invol, 1e-12, "involution squares to the identity");
    line(worst_kk, 1e-10, "quintic-model map is involution-invariant");
    emit(cfg.out, os.str());
    return ok ? 0 : 5;
}

int cmd_scan(const RunConfig& cfg) {
    if (cfg.nx < 1 || cfg.ny < 1) throw Error("grid counts must be >= 1");
    const quad::QuadSpec spec = cfg.spec();
    const size_t total = static_cast<size_t>(cfg.nx) * static_cast<size_t>(cfg.ny);
    std::vector<std::string> rows(total);
    par::parallel_for(total, [&](size_t idx) {
        const int ix = static_cast<int>(idx) % cfg.nx;
        const int iy = static_cast<int>(idx) / cfg.nx;
        const double fx = cfg.nx == 1 ? 0.0 : static_cast<double>(ix) / (cfg.nx - 1);
        const double fy = cfg.ny == 1 ? 0.0 : static_cast<double>(iy) / (cfg.ny - 1);
        io::PointReport r;
        r.m = {cfg.x0 + fx * (cfg.x1 - cfg.x0), cfg.y0 + fy * (cfg.y1 - cfg.y0)};
        try {
            if (walls::in_U0(r.m)) {
                r.in_u0 = true;
                r.ws = walls::walls(r.m);
                r.pv = periodmap::periods_fiberwise(r.m, *r.ws, spec);
                r.quadric_residual = periodmap::quadric_residual(*r.pv);
                r.z = periodmap::normalize_component(periodmap::to_hilbert(*r.pv));
                r.method = r.pv->method;
            }
        } catch (const Error&) {
            // leave whatever stages completed; the row reports them
        }
        rows[idx] = io::csv_row(r);
    });
    std::ostringstream os;
    os << io::csv_header() << "\n";
    for (const std::string& row : rows) os << row << "\n";
    emit(cfg.out, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    // the config file provides defaults, so it must be read before the
    // option defaults are bound
    for (int k = 1; k + 1 < argc; ++k)
        if (std::string(argv[k]) == "--config") {
            try {
                load_config(cfg, argv[k + 1]);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 4;
            }
        }

    CLI::App app{"period map of a two-parameter family of quartic surfaces"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file with defaults");
    app.add_option("--threads", cfg.threads,
                   "worker threads (0 = environment/default)");
    app.add_option("--rel-tol", cfg.rel_tol, "quadrature relative tolerance");
    app.add_option("--abs-tol", cfg.abs_tol, "quadrature absolute tolerance");

    const auto add_point = [&](CLI::App* sub) {
        sub->add_option("--x", cfg.x, "first parameter")->required();
        sub->add_option("--y", cfg.y, "second parameter")->required();
    };
    const auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "output file (default stdout)");
    };

    CLI::App* walls_cmd = app.add_subcommand("walls", "wall positions and region verdict");
    add_point(walls_cmd);
    add_out(walls_cmd);

    CLI::App* chambers_cmd = app.add_subcommand("chambers", "chamber decomposition");
    add_point(chambers_cmd);
    add_out(chambers_cmd);
    chambers_cmd->add_option("--svg", cfg.svg, "write an SVG sketch to this path");

    CLI::App* periods_cmd = app.add_subcommand("periods", "period vector and half-plane coordinates");
    add_point(periods_cmd);
    add_out(periods_cmd);
    periods_cmd->add_option("--method", cfg.method, "chamber | fiberwise | both")
        ->check(CLI::IsMember({"chamber", "fiberwise", "both"}));

    CLI::App* mono_cmd = app.add_subcommand("monodromy", "numeric monodromy around the walls");
    add_point(mono_cmd);
    add_out(mono_cmd);
    mono_cmd->add_option("--j", cfg.j, "single wall index 0..5 (default: all)")
        ->check(CLI::Range(0, 5));

    CLI::App* lattice_cmd = app.add_subcommand("lattice-check", "exact integer verifications");
    add_out(lattice_cmd);

    CLI::App* maps_cmd = app.add_subcommand("verify-maps", "birational-map residual battery");
    add_out(maps_cmd);
    maps_cmd->add_option("--samples", cfg.samples, "points per map");
    maps_cmd->add_option("--seed", cfg.seed, "sampling seed");

    CLI::App* scan_cmd = app.add_subcommand("scan", "CSV grid scan");
    add_out(scan_cmd);
    scan_cmd->add_option("--x0", cfg.x0, "grid start, first parameter");
    scan_cmd->add_option("--x1", cfg.x1, "grid end, first parameter");
    scan_cmd->add_option("--nx", cfg.nx, "grid count, first parameter");
    scan_cmd->add_option("--y0", cfg.y0, "grid start, second parameter");
    scan_cmd->add_option("--y1", cfg.y1, "grid end, second parameter");
    scan_cmd->add_option("--ny", cfg.ny, "grid count, second parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 4;
    }

    if (cfg.threads > 0) par::set_threads(cfg.threads);

    try {
        if (walls_cmd->parsed()) return cmd_walls(cfg);
        if (chambers_cmd->parsed()) return cmd_chambers(cfg);
        if (periods_cmd->parsed()) return cmd_periods(cfg);
        if (mono_cmd->parsed()) return cmd_monodromy(cfg);
        if (lattice_cmd->parsed()) return cmd_lattice_check(cfg);
        if (maps_cmd->parsed()) return cmd_verify_maps(cfg);
        if (scan_cmd->parsed()) return cmd_scan(cfg);
        std::cerr << "error: no subcommand\n";
        return 4;
    } catch (const NotInU0Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OnWallError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BranchPointError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CuspPointError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ExceptionalLocusError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RelationFailedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const FixtureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const Error& e) {
        // remaining library failures are numerical: convergence, branch
        // tracking, snapping, degenerate or ambiguous periods
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
