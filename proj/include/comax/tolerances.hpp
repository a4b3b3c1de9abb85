#pragma once

namespace comax {

// Central numeric knobs. Every module takes these instead of burying
// magic constants in the call sites.
struct Tolerances {
    double primal = 1e-9;      // LP feasibility / pivoting
    double secular = 1e-10;    // secular equation residual
    double geom = 1e-9;        // sign decisions, rank cutoffs
    double eig = 1e-12;        // Jacobi off-diagonal sweep target (relative)
    double group_rel = 1e-8;   // relative eigenvalue grouping
};

struct Budget {
    int max_dim = 9;
    int max_planes = 512;
    long max_cells = 4000000;
};

} // namespace comax
