"""Exact integer and rational linear algebra over lattices.

All matrices are carried as 2-D numpy arrays of ``dtype=object`` holding
Python ints (or :class:`fractions.Fraction` for rational data), so every
computation in this module is exact.  Smith normal form is the workhorse:
kernels, cokernel torsion and solution sets of ``M x in lattice`` are all
read off from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

import numpy as np

__all__ = [
    "InfiniteSolutionSetError",
    "FiniteAbelianGroup",
    "SmithDecomposition",
    "intmat",
    "identity",
    "zeros",
    "smith_normal_form",
    "rank",
    "kernel_basis",
    "cokernel",
    "solve_mod_lattice",
    "in_image_lattice",
    "det",
    "rational_inverse",
    "restrict_to_sublattice",
]


class InfiniteSolutionSetError(ValueError):
    """Raised when a point enumeration is requested but the transverse
    solution set is a positive-dimensional family."""


def intmat(rows) -> np.ndarray:
    """Build an immutable exact integer matrix from nested sequences."""
    try:
        data = [[int(x) for x in row] for row in rows]
    except TypeError as exc:
        raise ValueError("expected a 2-D array of integers") from exc
    arr = np.array(data, dtype=object)
    if arr.ndim != 2:
        raise ValueError("expected a 2-D array of integers")
    arr.flags.writeable = False
    return arr


def identity(n: int) -> np.ndarray:
    return intmat([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def zeros(m: int, n: int) -> np.ndarray:
    return intmat([[0] * n for _ in range(m)])


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Finite abelian group as an invariant-factor chain d1 | d2 | ...

    The empty chain is the trivial group.
    """

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        fs = tuple(int(f) for f in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        for f in fs:
            if f < 2:
                raise ValueError("invariant factors must be >= 2")
        for a, b in zip(fs, fs[1:]):
            if b % a != 0:
                raise ValueError("each invariant factor must divide the next")

    @property
    def order(self) -> int:
        n = 1
        for f in self.invariant_factors:
            n *= f
        return n

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def __str__(self) -> str:
        if self.is_trivial:
            return "trivial"
        return " x ".join(f"Z/{f}" for f in self.invariant_factors)


@dataclass(frozen=True)
class SmithDecomposition:
    """Unimodular U, V and diagonal D with U @ M @ V = D and d1 | d2 | ..."""

    u: np.ndarray
    d: np.ndarray
    v: np.ndarray

    @property
    def diagonal(self) -> tuple[int, ...]:
        m, n = self.d.shape
        return tuple(int(self.d[i, i]) for i in range(min(m, n)))

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


def smith_normal_form(mat) -> SmithDecomposition:
    """Smith normal form with transform matrices.

    Uses smallest-nonzero-absolute-value pivoting, which keeps intermediate
    entries small at the ranks this library works at.  Total function: any
    rectangular integer matrix is accepted.
    """
    a = np.asarray(mat, dtype=object)
    if a.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    m, n = a.shape
    work = [[int(a[i, j]) for j in range(n)] for i in range(m)]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        work[i], work[j] = work[j], work[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in work:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def negate_row(i):
        work[i] = [-x for x in work[i]]
        u[i] = [-x for x in u[i]]

    def add_row(src, dst, q):
        # row_dst += q * row_src
        wsrc, wdst = work[src], work[dst]
        for k in range(n):
            wdst[k] += q * wsrc[k]
        usrc, udst = u[src], u[dst]
        for k in range(m):
            udst[k] += q * usrc[k]

    def add_col(src, dst, q):
        for row in work:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def pivot_position(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = work[i][j]
                if x != 0 and (best is None or abs(x) < abs(work[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(m, n):
        pos = pivot_position(t)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            if work[t][t] < 0:
                negate_row(t)
            p = work[t][t]
            dirty = False
            for i in range(t + 1, m):
                if work[i][t] != 0:
                    add_row(t, i, -(work[i][t] // p))
                    dirty = dirty or work[i][t] != 0
            for j in range(t + 1, n):
                if work[t][j] != 0:
                    add_col(t, j, -(work[t][j] // p))
                    dirty = dirty or work[t][j] != 0
            if dirty:
                pos = pivot_position(t)
                swap_rows(t, pos[0])
                swap_cols(t, pos[1])
                continue
            # cross is clear; enforce divisibility of the remaining block
            culprit = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if work[i][j] % p != 0:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            add_row(culprit, t, 1)
        t += 1

    d = np.array(work, dtype=object)
    return SmithDecomposition(
        _freeze(np.array(u, dtype=object)),
        _freeze(d),
        _freeze(np.array(v, dtype=object)),
    )


def rank(mat) -> int:
    return smith_normal_form(mat).rank


def kernel_basis(mat) -> list[np.ndarray]:
    """Z-basis of the integer kernel {v : M v = 0}.

    The columns of V matching the zero part of the Smith form are such a
    basis; list length is cols - rank(M).
    """
    a = np.asarray(mat, dtype=object)
    snf = smith_normal_form(a)
    m, n = a.shape
    diag = snf.diagonal
    basis = []
    for j in range(n):
        if j >= len(diag) or diag[j] == 0:
            basis.append(_freeze(np.array([int(x) for x in snf.v[:, j]], dtype=object)))
    return basis


def cokernel(mat) -> tuple[int, FiniteAbelianGroup]:
    """Cokernel of M : Z^cols -> Z^rows as (free rank, torsion)."""
    a = np.asarray(mat, dtype=object)
    snf = smith_normal_form(a)
    m, _ = a.shape
    free_rank = m - snf.rank
    torsion = tuple(int(x) for x in snf.diagonal if x not in (0, 1))
    return free_rank, FiniteAbelianGroup(torsion)


def det(mat) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = np.asarray(mat, dtype=object)
    m, n = a.shape
    if m != n:
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    w = [[int(a[i, j]) for j in range(n)] for i in range(n)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if w[k][k] == 0:
            for i in range(k + 1, n):
                if w[i][k] != 0:
                    w[k], w[i] = w[i], w[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) // prev
            w[i][k] = 0
        prev = w[k][k]
    return sign * w[n - 1][n - 1]


def _to_fraction_rows(mat) -> list[list[Fraction]]:
    a = np.asarray(mat, dtype=object)
    return [[Fraction(x) for x in row] for row in a]


def rational_inverse(mat) -> np.ndarray:
    """Exact inverse of a nonsingular matrix, entries as Fractions."""
    w = _to_fraction_rows(mat)
    n = len(w)
    if any(len(row) != n for row in w):
        raise ValueError("inverse requires a square matrix")
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(w)]
    for k in range(n):
        piv = next((i for i in range(k, n) if aug[i][k] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[k], aug[piv] = aug[piv], aug[k]
        pval = aug[k][k]
        aug[k] = [x / pval for x in aug[k]]
        for i in range(n):
            if i != k and aug[i][k] != 0:
                f = aug[i][k]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[k])]
    inv = np.array([row[n:] for row in aug], dtype=object)
    return _freeze(inv)


def restrict_to_sublattice(mat, basis) -> np.ndarray:
    """Exact matrix R with basis @ R = mat @ basis.

    `basis` has full column rank; raises if mat does not preserve the
    spanned subspace.  Entries of R are Fractions.
    """
    b = np.asarray(basis, dtype=object)
    a = np.asarray(mat, dtype=object)
    n, d = b.shape
    if d == 0:
        return _freeze(np.empty((0, 0), dtype=object))
    target = a @ b
    # echelonize b^T over Q; its pivot columns are independent rows of b
    bt = [[Fraction(b[i, j]) for i in range(n)] for j in range(d)]
    chosen: list[int] = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, d) if bt[i][col] != 0), None)
        if piv is None:
            continue
        bt[row], bt[piv] = bt[piv], bt[row]
        for i in range(d):
            if i != row and bt[i][col] != 0:
                f = bt[i][col] / bt[row][col]
                bt[i] = [x - f * y for x, y in zip(bt[i], bt[row])]
        chosen.append(col)
        row += 1
        if row == d:
            break
    if len(chosen) < d:
        raise ValueError("basis does not have full column rank")
    sub = np.array([[Fraction(b[i, j]) for j in range(d)] for i in chosen], dtype=object)
    sub_t = np.array([[Fraction(target[i, j]) for j in range(d)] for i in chosen], dtype=object)
    r = rational_inverse(sub) @ sub_t
    if not np.array_equal(b @ r, target):
        raise ValueError("matrix does not preserve the sublattice span")
    return _freeze(r)


def in_image_lattice(snf: SmithDecomposition, vec) -> bool:
    """Whether an integer vector lies in the image lattice M Z^n, for the
    Smith decomposition of M."""
    b = [Fraction(x) for x in vec]
    if any(x.denominator != 1 for x in b):
        return False
    ub = snf.u @ np.array([int(x) for x in b], dtype=object)
    diag = snf.diagonal
    m = snf.d.shape[0]
    for i in range(m):
        di = diag[i] if i < len(diag) else 0
        if di == 0:
            if ub[i] != 0:
                return False
        elif ub[i] % di != 0:
            return False
    return True


def solve_mod_lattice(mat, target=None, *, modulo_kernel: bool = True) -> list[tuple[Fraction, ...]]:
    """Rational coset representatives of {x : M x in L}.

    L is Z^m when `target` is None, otherwise the lattice spanned by the
    columns of the square nonsingular integer matrix `target`.  With
    ``modulo_kernel=True`` the cosets are taken modulo (Q-kernel of M) + Z^n
    and the list is always finite, one representative per coset, entries
    reduced to [0, 1).  With ``modulo_kernel=False`` genuine points modulo
    Z^n are requested and a nonzero Q-kernel raises
    :class:`InfiniteSolutionSetError`.
    """
    a = np.asarray(mat, dtype=object)
    m, n = a.shape
    q = 1
    work = a
    if target is not None:
        b = np.asarray(target, dtype=object)
        if b.shape != (m, m):
            raise ValueError("target lattice basis must be square of matching size")
        binv = rational_inverse(b)
        frac = binv @ a
        q = lcm(*(Fraction(x).denominator for x in frac.flat), 1)
        work = np.array([[int(Fraction(x) * q) for x in row] for row in frac], dtype=object)

    snf = smith_normal_form(work)
    diag = snf.diagonal
    r = snf.rank
    if not modulo_kernel and r < n:
        raise InfiniteSolutionSetError(
            "solution set is positive-dimensional transverse to Z^n"
        )

    # y = V^{-1} x must satisfy d_i y_i in q Z; enumerate fractional parts.
    axes: list[list[Fraction]] = []
    for i in range(r):
        di = diag[i]
        step = Fraction(q, di)
        order = di // gcd(di, q)
        axes.append(sorted({(k * step) % 1 for k in range(order)}))

    reps: list[tuple[Fraction, ...]] = []
    idx = [0] * len(axes)
    while True:
        y = [axes[i][idx[i]] for i in range(len(axes))] + [Fraction(0)] * (n - r)
        x = snf.v @ np.array(y, dtype=object)
        reps.append(tuple(Fraction(val) % 1 for val in x))
        k = len(axes) - 1
        while k >= 0:
            idx[k] += 1
            if idx[k] < len(axes[k]):
                break
            idx[k] = 0
            k -= 1
        if k < 0:
            break
    reps.sort()
    return reps
