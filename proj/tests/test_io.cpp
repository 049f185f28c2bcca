#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "json.hpp"

#include "hp/io.hpp"
#include "hp/periodmap.hpp"
#include "hp/types.hpp"
#include "hp/walls.hpp"

using namespace hp;

namespace {

size_t count_of(const std::string& hay, const std::string& needle) {
    size_t n = 0;
    for (size_t p = hay.find(needle); p != std::string::npos;
         p = hay.find(needle, p + needle.size()))
        ++n;
    return n;
}

io::PointReport sample_report() {
    io::PointReport r;
    r.m = {0.5, 0.5};
    r.in_u0 = true;
    r.ws = walls::walls(r.m);
    periodmap::PeriodVector pv;
    pv.xi = {cplx{0.0, -14.4936281263825603}, cplx{0.0, -9.25981410292527807},
             cplx{-12.8673586455045219, 0.0}, cplx{2.09584856645815244, 0.0}};
    pv.err_est = 3e-11;
    pv.method = "fiberwise";
    r.pv = pv;
    r.z = periodmap::HilbertPoint{cplx{0.0, 1.5294760928704},
                                  cplx{0.0, 1.02336875496333}};
    r.quadric_residual = 2.5e-12;
    r.method = "fiberwise";
    return r;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("shortest round-trip formatting") {
    const double vals[] = {0.0,   1.0,       0.5,    1.0 / 3.0, 0.1,
                           -2.25, 6.02e23,   1e-300, 3.141592653589793,
                           -0.0,  5e-324,    1e17,   123456.75};
    for (double v : vals) {
        CAPTURE(v);
        const std::string s = io::fmt_g17(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    // shortest, not padded
    CHECK(io::fmt_g17(0.5) == "0.5");
    CHECK(io::fmt_g17(1.0) == "1");
    CHECK(io::fmt_g17(-2.25) == "-2.25");
}

TEST_CASE("JSON document round-trips numerically") {
    const io::PointReport r = sample_report();
    const std::string doc = io::to_json(r);
    const nlohmann::json j = nlohmann::json::parse(doc);
    CHECK(j["schema"] == "hilbert-period/1");
    CHECK(j["in_u0"] == true);
    CHECK(j["point"]["x"].get<double>() == 0.5);
    REQUIRE(j["walls"].size() == 5);
    CHECK(j["walls"][0].get<double>() == r.ws->s[0]);
    CHECK(j["walls"][4].get<double>() == r.ws->s[4]);
    REQUIRE(j["xi"].size() == 4);
    CHECK(j["xi"][0]["im"].get<double>() == r.pv->xi[0].imag());
    CHECK(j["xi"][2]["re"].get<double>() == r.pv->xi[2].real());
    CHECK(j["z1"]["im"].get<double>() == r.z->z1.imag());
    CHECK(j["quadric_residual"].get<double>() == 2.5e-12);
    CHECK(j["method"] == "fiberwise");
}

TEST_CASE("JSON omits what was not computed") {
    io::PointReport r;
    r.m = {1.0, 0.5};
    r.in_u0 = false;
    const nlohmann::json j = nlohmann::json::parse(io::to_json(r));
    CHECK(j["in_u0"] == false);
    CHECK(!j.contains("walls"));
    CHECK(!j.contains("xi"));
    CHECK(!j.contains("z1"));
}

TEST_CASE("CSV layout is stable") {
    const std::string header = io::csv_header();
    CHECK(header ==
          "x,y,in_u0,s1,s2,s3,s4,s5,xi1_re,xi1_im,xi2_re,xi2_im,xi3_re,"
          "xi3_im,xi4_re,xi4_im,quadric_residual,z1_re,z1_im,z2_re,z2_im,"
          "method,err_est");
    CHECK(count_of(header, ",") == 22);

    const std::string full = io::csv_row(sample_report());
    CHECK(count_of(full, ",") == 22);
    CHECK(full.find("fiberwise") != std::string::npos);

    io::PointReport empty;
    empty.m = {1.0, 0.5};
    const std::string row = io::csv_row(empty);
    CHECK(count_of(row, ",") == 22);
    CHECK(row.substr(0, 8) == "1,0.5,0,");
}

TEST_CASE("chamber sketch contains the expected elements") {
    const ModuliPoint m{0.5, 0.5};
    const std::string svg = io::chambers_svg(m, walls::walls(m));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count_of(svg, "<polygon") == 4);   // four shaded chambers
    CHECK(count_of(svg, "<polyline") == 3);  // three branch curves
    CHECK(count_of(svg, "stroke-dasharray") == 5); // five wall lines
}

} // TEST_SUITE
