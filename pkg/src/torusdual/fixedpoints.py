"""Fixed sets of lattice automorphisms acting on the torus T = t/Gamma.

Everything here works in coordinates where Gamma = Z^n.  For w a lattice
automorphism, T^w = {x : (w - 1) x in Z^n} / Z^n is a finite disjoint
union of parallel subtori of dimension dim ker(w - 1); the components are
enumerated as rational coset representatives, exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .intlinalg import (
    SmithDecomposition,
    in_image_lattice,
    kernel_basis,
    restrict_to_sublattice,
    smith_normal_form,
    solve_mod_lattice,
)
from .rootdata import RootDatum
from .weyl import Matrix, as_matrix, mat_mul

__all__ = ["FixedSetReport", "fixed_set", "full_fixed_points", "centralizer_action"]


@dataclass(frozen=True)
class FixedSetReport:
    """Fixed-point data of one lattice automorphism (or a stacked family).

    components are rational points in [0,1)^n, one per connected component
    of the fixed set, sorted; fixed_lattice_basis is a Z-basis of
    Gamma intersected with ker(w - 1).
    """

    w: Matrix | None
    rank: int
    fixed_dim: int
    components: tuple[tuple[Fraction, ...], ...]
    fixed_lattice_basis: tuple[tuple[int, ...], ...]
    _matrix: np.ndarray = field(repr=False, compare=False, hash=False, default=None)
    _snf: SmithDecomposition = field(repr=False, compare=False, hash=False, default=None)

    def component_count(self) -> int:
        return len(self.components)

    def contains(self, x) -> bool:
        """Membership of a rational point in the fixed set, exactly."""
        vec = self._matrix @ np.array([Fraction(v) for v in x], dtype=object)
        return all(Fraction(v).denominator == 1 for v in vec)

    def component_of(self, x) -> int:
        """Index of the component containing x; x must lie in the fixed set."""
        if not self.contains(x):
            raise ValueError("point is not in the fixed set")
        xv = np.array([Fraction(v) for v in x], dtype=object)
        hits = []
        for idx, rep in enumerate(self.components):
            diff = xv - np.array(rep, dtype=object)
            if in_image_lattice(self._snf, self._matrix @ diff):
                hits.append(idx)
        if len(hits) != 1:
            raise AssertionError("component membership must be unique")
        return hits[0]


def _difference_matrix(w: Matrix) -> np.ndarray:
    n = len(w)
    return np.array(
        [[w[i][j] - int(i == j) for j in range(n)] for i in range(n)], dtype=object
    )


def fixed_set(w) -> FixedSetReport:
    """Fixed-set report for a single lattice automorphism w on Z^n."""
    wm = as_matrix(w)
    n = len(wm)
    m = _difference_matrix(wm)
    snf = smith_normal_form(m)
    kern = kernel_basis(m)
    comps = solve_mod_lattice(m, modulo_kernel=True)
    return FixedSetReport(
        w=wm,
        rank=n,
        fixed_dim=n - snf.rank,
        components=tuple(tuple(c) for c in comps),
        fixed_lattice_basis=tuple(tuple(int(x) for x in v) for v in kern),
        _matrix=m,
        _snf=snf,
    )


def full_fixed_points(rd: RootDatum) -> FixedSetReport:
    """Fixed points of the full Weyl-group action on the torus of `rd`.

    Solves the stacked system {(s - 1)x in Gamma for all simple s}.  For a
    semisimple datum the simultaneous fixed space is zero, so the fixed
    set is a finite list of points; a nonzero joint kernel propagates
    :class:`InfiniteSolutionSetError`.
    """
    from .weyl import simple_reflection_matrices

    mats = simple_reflection_matrices(rd)
    n = rd.rank
    stacked = np.array(
        [
            [s[i][j] - int(i == j) for j in range(n)]
            for s in mats
            for i in range(n)
        ],
        dtype=object,
    )
    points = solve_mod_lattice(stacked, modulo_kernel=False)
    snf = smith_normal_form(stacked)
    return FixedSetReport(
        w=None,
        rank=n,
        fixed_dim=0,
        components=tuple(tuple(p) for p in points),
        fixed_lattice_basis=(),
        _matrix=stacked,
        _snf=snf,
    )


def centralizer_action(w, z, report: FixedSetReport | None = None):
    """Action of a centralizer element z on the fixed set of w.

    Returns (perm, restriction): perm[i] is the index of the component
    containing z . x_i, and restriction is the exact rational matrix of z
    on ker(w - 1) tensor Q in the basis `fixed_lattice_basis`.

    Precondition zw = wz is checked and violated input raises ValueError.
    """
    wm, zm = as_matrix(w), as_matrix(z)
    if mat_mul(zm, wm) != mat_mul(wm, zm):
        raise ValueError("element does not centralize w")
    rep = report if report is not None else fixed_set(wm)
    zarr = np.array(zm, dtype=object)
    perm = tuple(
        rep.component_of(zarr @ np.array(c, dtype=object)) for c in rep.components
    )
    if rep.fixed_dim == 0:
        restriction = np.empty((0, 0), dtype=object)
        restriction.flags.writeable = False
    else:
        basis = np.array(rep.fixed_lattice_basis, dtype=object).T
        restriction = restrict_to_sublattice(zarr, basis)
    return perm, restriction
