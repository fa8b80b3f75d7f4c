// lebedev.hpp -- raw embedded Lebedev tables (generated; see scripts/gen_lebedev.py).

#pragma once

namespace flq::detail {

struct LebedevTable {
    int degree;
    int npoints;
    const double* data;  // npoints rows of (x, y, z, w)
};

extern const LebedevTable kLebedevTables[];
extern const int kLebedevTableCount;

} // namespace flq::detail
