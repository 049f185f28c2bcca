#!/usr/bin/env python3
"""Regenerates data/fixture_arcs.json.

The fixture realizes, over a normalized wall configuration s_j = j, the two
closed tube loops C1 (around walls 1,2,4,3) and C2 (around walls 1,2,5,3)
and the six vanishing arcs L1..L6, as polylines in the (Re y, Im y) plane.

Branch cuts hang downward from walls 0,1,2 and upward from walls 3,4,5.
All circular pieces are discretized on a 15-degree grid offset by 7.5
degrees so that no vertex lands on the real axis or on a cut line; every
crossing the intersection engine has to find is therefore transversal and
happens in the interior of both segments.
"""

import json
import math

GRID = 15.0
OFFSET = 7.5
TRUNC = 6.5


def arc_points(cx, cy, r, a0, a1):
    """Vertices on the circle (cx, cy, r) from angle a0 to a1 (degrees,
    traversed monotonically), with interior vertices on the offset grid."""
    pts = [(cx + r * math.cos(math.radians(a0)),
            cy + r * math.sin(math.radians(a0)))]
    step = GRID if a1 > a0 else -GRID
    # first interior grid angle strictly between a0 and a1
    if a1 > a0:
        k = math.floor((a0 - OFFSET) / GRID) + 1
        a = OFFSET + k * GRID
        while a < a1 - 1e-9:
            pts.append((cx + r * math.cos(math.radians(a)),
                        cy + r * math.sin(math.radians(a))))
            a += step
    else:
        k = math.ceil((a0 - OFFSET) / GRID) - 1
        a = OFFSET + k * GRID
        while a > a1 + 1e-9:
            pts.append((cx + r * math.cos(math.radians(a)),
                        cy + r * math.sin(math.radians(a))))
            a += step
    pts.append((cx + r * math.cos(math.radians(a1)),
                cy + r * math.sin(math.radians(a1))))
    return pts


def polyline(*pieces):
    """Concatenates points and point lists, dropping duplicated joints."""
    out = []
    for p in pieces:
        chunk = p if isinstance(p, list) else [p]
        for q in chunk:
            if out and abs(out[-1][0] - q[0]) < 1e-12 and abs(out[-1][1] - q[1]) < 1e-12:
                continue
            out.append(q)
    return [[round(x, 9), round(y, 9)] for (x, y) in out]


def semi_above(c, r):
    return arc_points(c, 0.0, r, 180.0, 0.0)


def semi_below(c, r):
    return arc_points(c, 0.0, r, 180.0, 360.0)


R1 = 0.25          # C1 circle radius
R2 = 0.35          # C2 radius at walls 1, 2
R2_5 = 0.30        # C2 radius at wall 5
R2_3 = 0.15        # C2 radius at wall 3
D = R1 / math.sqrt(2.0)      # 0.1767767
E = R2 / math.sqrt(2.0)      # 0.2474874
E5 = R2_5 / math.sqrt(2.0)   # 0.2121320
E3 = R2_3 / math.sqrt(2.0)   # 0.1060660

c1 = polyline(
    (2.50, 0.05),
    (2.50, 0.60),
    (1.02, 0.60),
    arc_points(1.0, 0.0, R1, 135.0, 405.0),    # around wall 1; cut at 270
    (2.0 - D, D),                              # connector
    arc_points(2.0, 0.0, R1, 135.0, 315.0),    # around wall 2; cut at 270
    (2.60, -0.45),
    (3.82, -0.45),
    arc_points(4.0, 0.0, R1, 225.0, 495.0),    # around wall 4; cut at 450
    arc_points(3.0, 0.0, R1, 315.0, 495.0),    # around wall 3; cut at 450
    (2.50, 0.05),
)

c2 = polyline(
    (2.45, 0.02),
    (2.45, 0.75),
    (0.85, 0.75),
    arc_points(1.0, 0.0, R2, 135.0, 405.0),
    (2.0 - E, E),
    arc_points(2.0, 0.0, R2, 135.0, 315.0),
    (2.60, -0.80),
    (5.0 - E5, -0.80),
    arc_points(5.0, 0.0, R2_5, 225.0, 495.0),
    (4.65, -0.65),
    (3.40, -0.65),
    (3.40, -0.30),
    arc_points(3.0, 0.0, R2_3, 315.0, 495.0),
    (2.45, 0.02),
)

l1 = polyline((5.0, 0.0), (TRUNC, 0.0))
l2 = polyline((4.0, 0.0), (5.0, 0.0))
l3 = polyline((3.0, 0.0), (3.9, 0.0), semi_below(4.0, 0.1),
              (4.9, 0.0), semi_below(5.0, 0.1), (TRUNC, 0.0))
l4 = polyline((2.0, 0.0), (3.0, 0.0))
l5 = polyline((1.0, 0.0), (1.9, 0.0), semi_above(2.0, 0.1),
              (2.9, 0.0), semi_below(3.0, 0.1), (4.0, 0.0))
l6 = polyline((0.0, 0.0), (0.88, 0.0), semi_above(1.0, 0.12),
              (1.88, 0.0), semi_above(2.0, 0.12),
              (2.88, 0.0), semi_below(3.0, 0.12),
              (3.88, 0.0), semi_below(4.0, 0.12),
              (4.88, 0.0), semi_below(5.0, 0.12), (TRUNC, 0.0))


def closed(name, cycle, pts, crossings):
    return {"name": name, "closed": True, "cycle": cycle, "points": pts,
            "cut_crossings": [{"wall": w, "sign": s} for (w, s) in crossings]}


def open_arc(name, cycle, pts, w_from, w_to):
    return {"name": name, "closed": False, "cycle": cycle, "points": pts,
            "cut_crossings": [], "end_walls": [w_from, w_to]}


fixture = {
    "schema": "tube-arcs/1",
    "comment": "Tube loops and vanishing arcs over normalized walls s_j = j; "
               "cuts run downward from walls 0..2 and upward from walls 3..5. "
               "Regenerate with tools/gen_fixture_arcs.py.",
    "walls": [1.0, 2.0, 3.0, 4.0, 5.0],
    "truncation_x": TRUNC,
    "arcs": [
        closed("C1", [0, 1], c1, [(1, 1), (2, 1), (4, 1), (3, 1)]),
        closed("C2", [0, 1], c2, [(1, 1), (2, 1), (5, 1), (3, 1)]),
        open_arc("L1", [1, -1], l1, 5, -1),
        open_arc("L2", [1, -1], l2, 4, 5),
        open_arc("L3", [1, 0], l3, 3, -1),
        open_arc("L4", [1, 0], l4, 2, 3),
        open_arc("L5", [1, -1], l5, 1, 4),
        open_arc("L6", [0, 1], l6, 0, -1),
    ],
}

import re

text = json.dumps(fixture, indent=1)
text = re.sub(r"\[\n\s+(-?[\d.]+),\n\s+(-?[\d.]+)\n\s+\]", r"[\1, \2]", text)
with open("data/fixture_arcs.json", "w") as f:
    f.write(text + "\n")
print("wrote data/fixture_arcs.json:",
      {a["name"]: len(a["points"]) for a in fixture["arcs"]})
