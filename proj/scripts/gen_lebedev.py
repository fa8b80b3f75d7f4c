#!/usr/bin/env python3
"""Regenerate src/lebedev_tables.cpp from SciPy's Lebedev rules.

The tables are embedded so the C++ library has no runtime dependency on
SciPy; tests re-verify exactness of every rule independently.
"""
import sys
from scipy.integrate import lebedev_rule

ORDERS = [3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29, 31]

out = sys.stdout if len(sys.argv) < 2 else open(sys.argv[1], "w")
out.write("// Generated by scripts/gen_lebedev.py -- do not edit by hand.\n")
out.write("// Lebedev rules on the unit sphere; weights sum to 4*pi.\n\n")
out.write('#include "floquet/lebedev.hpp"\n\nnamespace flq::detail {\n\n')
for o in ORDERS:
    x, w = lebedev_rule(o)
    n = x.shape[1]
    out.write(f"static const double kLeb{o}[{n}][4] = {{\n")
    for i in range(n):
        out.write("    {%r, %r, %r, %r},\n" % (float(x[0, i]), float(x[1, i]), float(x[2, i]), float(w[i])))
    out.write("};\n\n")
out.write("const LebedevTable kLebedevTables[] = {\n")
for o in ORDERS:
    x, _ = lebedev_rule(o)
    out.write(f"    {{{o}, {x.shape[1]}, &kLeb{o}[0][0]}},\n")
out.write("};\n\nconst int kLebedevTableCount = %d;\n\n} // namespace flq::detail\n" % len(ORDERS))
