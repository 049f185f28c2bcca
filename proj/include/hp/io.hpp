// Serialization of results: JSON documents (schema "hilbert-period/1"),
// the scan CSV, and a small SVG rendering of the chamber decomposition.
// All numeric formatting goes through fmt_g17 so outputs are deterministic.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hp/periodmap.hpp"
#include "hp/types.hpp"
#include "hp/walls.hpp"

namespace hp::io {

// Shortest round-trip decimal for a double (printf %.17g with cleanup).
std::string fmt_g17(double v);

struct PointReport {
    ModuliPoint m;
    bool in_u0 = false;
    std::optional<walls::WallSet> ws;
    std::optional<periodmap::PeriodVector> pv;
    std::optional<periodmap::HilbertPoint> z;
    double quadric_residual = 0.0;
    std::string method;
};

// JSON document for one parameter point; schema field "hilbert-period/1".
std::string to_json(const PointReport& r);

// Header: x,y,in_u0,s1,s2,s3,s4,s5,xi1_re,xi1_im,xi2_re,xi2_im,xi3_re,
// xi3_im,xi4_re,xi4_im,quadric_residual,z1_re,z1_im,z2_re,z2_im,method,
// err_est
std::string csv_header();
std::string csv_row(const PointReport& r);

// Chamber sketch over the fiber strip: wall lines, the three branch curves,
// and the four shaded chambers.
std::string chambers_svg(const ModuliPoint& m, const walls::WallSet& ws);

} // namespace hp::io
