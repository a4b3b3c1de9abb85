"""Sparse convex maximization over low-rank quadratics."""

import os
import sys

try:
    from ._comax import (
        check_comonotone,
        ky_fan,
        solve_disjoint_spca,
        solve_multi_spca,
        solve_nn_spca,
        solve_single_spca,
        solve_sphere_quadratic_linear,
    )
except ImportError:
    # In-tree runs load the extension from the CMake build directory.
    ext_dir = os.environ.get("COMAX_EXT_DIR")
    if not ext_dir:
        raise
    sys.path.insert(0, ext_dir)
    from _comax import (
        check_comonotone,
        ky_fan,
        solve_disjoint_spca,
        solve_multi_spca,
        solve_nn_spca,
        solve_single_spca,
        solve_sphere_quadratic_linear,
    )

__all__ = [
    "check_comonotone",
    "ky_fan",
    "solve_disjoint_spca",
    "solve_multi_spca",
    "solve_nn_spca",
    "solve_single_spca",
    "solve_sphere_quadratic_linear",
]
