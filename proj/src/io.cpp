#include "hp/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace hp::io {

std::string fmt_g17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    // Shortest representation that round-trips.
    for (int prec = 1; prec <= 17; ++prec) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == v) return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

nlohmann::json num(double v) {
    // Emit through the deterministic formatter; JSON numbers parsed back
    // from the string keep the exact value.
    return nlohmann::json::parse(fmt_g17(v));
}

nlohmann::json cplx_pair(const cplx& z) {
    return nlohmann::json{{"re", num(z.real())}, {"im", num(z.imag())}};
}

} // namespace

std::string to_json(const PointReport& r) {
    nlohmann::json j;
    j["schema"] = "hilbert-period/1";
    j["point"] = {{"x", num(r.m.x)}, {"y", num(r.m.y)}};
    j["in_u0"] = r.in_u0;
    if (r.ws) {
        nlohmann::json w = nlohmann::json::array();
        for (double s : r.ws->s) w.push_back(num(s));
        j["walls"] = w;
        j["min_gap"] = num(r.ws->min_gap);
    }
    if (r.pv) {
        nlohmann::json xi = nlohmann::json::array();
        for (const cplx& x : r.pv->xi) xi.push_back(cplx_pair(x));
        j["xi"] = xi;
        j["err_est"] = num(r.pv->err_est);
        j["quadric_residual"] = num(r.quadric_residual);
    }
    if (r.z) {
        j["z1"] = cplx_pair(r.z->z1);
        j["z2"] = cplx_pair(r.z->z2);
    }
    if (!r.method.empty()) j["method"] = r.method;
    return j.dump(2) + "\n";
}

std::string csv_header() {
    return "x,y,in_u0,s1,s2,s3,s4,s5,xi1_re,xi1_im,xi2_re,xi2_im,xi3_re,"
           "xi3_im,xi4_re,xi4_im,quadric_residual,z1_re,z1_im,z2_re,z2_im,"
           "method,err_est";
}

std::string csv_row(const PointReport& r) {
    std::ostringstream os;
    os << fmt_g17(r.m.x) << ',' << fmt_g17(r.m.y) << ','
       << (r.in_u0 ? 1 : 0);
    if (r.ws)
        for (double s : r.ws->s) os << ',' << fmt_g17(s);
    else
        os << ",,,,,";
    if (r.pv)
        for (const cplx& x : r.pv->xi)
            os << ',' << fmt_g17(x.real()) << ',' << fmt_g17(x.imag());
    else
        os << ",,,,,,,,";
    os << ',' << (r.pv ? fmt_g17(r.quadric_residual) : "");
    if (r.z)
        os << ',' << fmt_g17(r.z->z1.real()) << ',' << fmt_g17(r.z->z1.imag())
           << ',' << fmt_g17(r.z->z2.real()) << ',' << fmt_g17(r.z->z2.imag());
    else
        os << ",,,,";
    os << ',' << r.method << ',' << (r.pv ? fmt_g17(r.pv->err_est) : "");
    return os.str();
}

std::string chambers_svg(const ModuliPoint& m, const walls::WallSet& ws) {
    // Plot window: y from 0 to a bit past s5, u spanning the branch values.
    const double y_max = 1.08 * ws.s[4];
    const int n_samples = 160;
    double u_min = 0.0, u_max = 0.0;
    std::vector<std::array<double, 4>> rows; // y, beta, alpha, p
    for (int i = 1; i <= n_samples; ++i) {
        const double y = y_max * i / n_samples;
        const walls::BranchValues b = walls::branch_values(y, m);
        rows.push_back({y, b.beta, b.alpha, b.p});
        u_min = std::min({u_min, b.beta, b.p});
        u_max = std::max({u_max, b.alpha, b.p});
    }
    const double pad = 0.06 * (u_max - u_min);
    u_min -= pad;
    u_max += pad;
    const double W = 640.0, H = 420.0;
    const auto px = [&](double y) { return 40.0 + (W - 60.0) * y / y_max; };
    const auto py = [&](double u) {
        return 20.0 + (H - 50.0) * (u_max - u) / (u_max - u_min);
    };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
       << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H
       << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // Chambers as shaded u-strips between branch curves over their y-range.
    const auto chs = walls::chambers(ws);
    const char* fills[4] = {"#cfe8ff", "#ffd9c0", "#d6f5d6", "#f0d9ff"};
    for (int c = 0; c < 4; ++c) {
        const walls::Chamber& ch = chs[static_cast<size_t>(c)];
        std::ostringstream up, down;
        for (const auto& r : rows) {
            if (r[0] < ch.y_lo - 1e-12 || r[0] > ch.y_hi + 1e-12) continue;
            std::array<double, 3> w{r[1], r[2], r[3]};
            std::sort(w.begin(), w.end());
            const double lo = w[static_cast<size_t>(ch.slot_lo)];
            const double hi = w[static_cast<size_t>(ch.slot_lo) + 1];
            up << px(r[0]) << ',' << py(lo) << ' ';
            down << px(r[0]) << ',' << py(hi) << ' ';
        }
        std::string d = down.str(), u = up.str();
        if (u.empty()) continue;
        // reverse the lower boundary points
        std::vector<std::string> toks;
        std::istringstream is(d);
        for (std::string t; is >> t;) toks.push_back(t);
        std::reverse(toks.begin(), toks.end());
        os << "<polygon fill=\"" << fills[c] << "\" stroke=\"none\" points=\""
           << u;
        for (const auto& t : toks) os << t << ' ';
        os << "\"/>\n";
    }
    // Branch curves.
    const char* stroke[3] = {"#1f5fbf", "#1f5fbf", "#bf3f1f"};
    for (int k = 1; k <= 3; ++k) {
        os << "<polyline fill=\"none\" stroke=\"" << stroke[k - 1]
           << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& r : rows)
            os << px(r[0]) << ',' << py(r[static_cast<size_t>(k)]) << ' ';
        os << "\"/>\n";
    }
    // Wall lines.
    for (double s : ws.s)
        os << "<line x1=\"" << px(s) << "\" y1=\"" << py(u_min) << "\" x2=\""
           << px(s) << "\" y2=\"" << py(u_max)
           << "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace hp::io
