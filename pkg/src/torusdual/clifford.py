"""Exact Clifford algebra Cl(t x t*) over the Gaussian rationals.

Generators e_1..e_n (a basis of t) and eps_1..eps_n (the dual basis of
t*) all square to +1, pairwise anticommute, and are self-adjoint under
the star.  The complexified algebra does not care about the sign of the
quadratic form: the familiar 2x2 matrix model of the 1-dimensional case
uses skew-adjoint generators squaring to -1, which are i times ours, and
the test suite pins that bridge down exactly.  Every identity needed
about the spinor projection and the intertwiner u holds on the nose in
the +1 convention.

Elements are stored as maps from canonical words (sorted generator index
tuples) to Gaussian-rational coefficients, so those identities are
checked as literal equalities, with no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "QI",
    "CliffordElement",
    "generator",
    "clifford_projection",
    "dual_projection",
    "intertwiner_u",
    "conjugation_by_u",
    "orthogonal_action",
    "symmetric_invariance_check",
    "signed_permutations",
]


@dataclass(frozen=True)
class QI:
    """Gaussian rational a + b*i with Fraction components."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def __add__(self, other: "QI") -> "QI":
        return QI(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "QI") -> "QI":
        return QI(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "QI") -> "QI":
        return QI(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "QI":
        return QI(-self.re, -self.im)

    def conjugate(self) -> "QI":
        return QI(self.re, -self.im)

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __str__(self) -> str:
        return f"{self.re}+{self.im}i"


ONE = QI(Fraction(1))
I_UNIT = QI(Fraction(0), Fraction(1))

# generator indices: 0..n-1 are e_1..e_n, n..2n-1 are eps_1..eps_n
Word = tuple[int, ...]


def _mul_words(a: Word, b: Word) -> tuple[int, Word]:
    """Clifford product of canonical words; returns (sign, canonical word).

    Generators square to +1 and distinct ones anticommute, so the product
    is +-(symmetric difference); the sign counts the transpositions needed
    to merge-sort the concatenation.
    """
    sign = 1
    out = list(a)
    for g in b:
        # move g left past the tail of `out` to its sorted position
        pos = len(out)
        while pos > 0 and out[pos - 1] > g:
            pos -= 1
            sign = -sign
        if pos > 0 and out[pos - 1] == g:
            # g^2 = +1: cancel the pair; crossing count already applied
            del out[pos - 1]
        else:
            out.insert(pos, g)
    return sign, tuple(out)


@dataclass(frozen=True)
class CliffordElement:
    """Element of Cl(t x t*), dimension n, with exact coefficients."""

    dimension: int
    coefficients: tuple[tuple[Word, QI], ...]

    @staticmethod
    def from_dict(n: int, coeffs: dict[Word, QI]) -> "CliffordElement":
        items = tuple(sorted((w, c) for w, c in coeffs.items() if c))
        return CliffordElement(n, items)

    def as_dict(self) -> dict[Word, QI]:
        return dict(self.coefficients)

    def _check(self, other: "CliffordElement"):
        if self.dimension != other.dimension:
            raise ValueError("dimension mismatch")

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        self._check(other)
        out = self.as_dict()
        for w, c in other.coefficients:
            out[w] = out.get(w, QI()) + c
        return CliffordElement.from_dict(self.dimension, out)

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        return self + (-other)

    def __neg__(self) -> "CliffordElement":
        return CliffordElement.from_dict(
            self.dimension, {w: -c for w, c in self.coefficients}
        )

    def __mul__(self, other: "CliffordElement") -> "CliffordElement":
        self._check(other)
        out: dict[Word, QI] = {}
        for wa, ca in self.coefficients:
            for wb, cb in other.coefficients:
                sign, w = _mul_words(wa, wb)
                coeff = ca * cb
                if sign < 0:
                    coeff = -coeff
                out[w] = out.get(w, QI()) + coeff
        return CliffordElement.from_dict(self.dimension, out)

    def scale(self, c: QI) -> "CliffordElement":
        return CliffordElement.from_dict(
            self.dimension, {w: v * c for w, v in self.coefficients}
        )

    def star(self) -> "CliffordElement":
        """Adjoint: reverse each word, conjugate each coefficient."""
        out: dict[Word, QI] = {}
        for w, c in self.coefficients:
            k = len(w)
            sign = -1 if (k * (k - 1) // 2) % 2 else 1
            cc = c.conjugate()
            out[w] = (-cc) if sign < 0 else cc
        return CliffordElement.from_dict(self.dimension, out)

    def grading_parity(self) -> int | None:
        """0 for even, 1 for odd, None for mixed elements."""
        parities = {len(w) % 2 for w, _ in self.coefficients}
        if len(parities) == 1:
            return parities.pop()
        return None if parities else 0

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"

        def wname(w):
            if not w:
                return "1"
            n = self.dimension
            return "".join(
                f"e{g + 1}" if g < n else f"eps{g - n + 1}" for g in w
            )

        return " + ".join(f"({c})*{wname(w)}" for w, c in self.coefficients)


def scalar(n: int, c: QI) -> CliffordElement:
    return CliffordElement.from_dict(n, {(): c})


def one(n: int) -> CliffordElement:
    return scalar(n, ONE)


def generator(n: int, kind: str, j: int) -> CliffordElement:
    """e_j or eps_j (1-based j) inside Cl of dimension n."""
    if not 1 <= j <= n:
        raise ValueError("generator index out of range")
    idx = j - 1 if kind == "e" else n + j - 1
    if kind not in ("e", "eps"):
        raise ValueError("kind must be 'e' or 'eps'")
    return CliffordElement.from_dict(n, {(idx,): ONE})


def clifford_projection(n: int) -> CliffordElement:
    """The spinor projection P = prod_j (1 - i e_j eps_j)/2.

    Exact arithmetic bounds the sensible range to n <= 4 (the coefficient
    space has dimension 4^n).
    """
    if not 1 <= n <= 4:
        raise ValueError("projection is supported for 1 <= n <= 4")
    p = one(n)
    half = QI(Fraction(1, 2))
    for j in range(1, n + 1):
        factor = (one(n) - (generator(n, "e", j) * generator(n, "eps", j)).scale(I_UNIT)).scale(half)
        p = p * factor
    return p


def dual_projection(n: int) -> CliffordElement:
    """P_dual = prod_j (1 - i eps_j e_j)/2, the projection of the dual picture."""
    if not 1 <= n <= 4:
        raise ValueError("projection is supported for 1 <= n <= 4")
    p = one(n)
    half = QI(Fraction(1, 2))
    for j in range(1, n + 1):
        factor = (one(n) - (generator(n, "eps", j) * generator(n, "e", j)).scale(I_UNIT)).scale(half)
        p = p * factor
    return p


def intertwiner_u(n: int) -> CliffordElement:
    """u = eps_1...eps_n for even n, e_1...e_n for odd n."""
    kind = "e" if n % 2 else "eps"
    u = one(n)
    for j in range(1, n + 1):
        u = u * generator(n, kind, j)
    return u


def conjugation_by_u(n: int, a: CliffordElement) -> CliffordElement:
    """u a u*; maps the spinor picture to the dual one."""
    if a.dimension != n:
        raise ValueError("dimension mismatch")
    u = intertwiner_u(n)
    return u * a * u.star()


def _generator_images(n: int, g) -> list[CliffordElement]:
    """Images of the 2n generators under g acting diagonally on t x t*.

    g acts on the e-basis by its matrix and on the dual basis by the
    inverse transpose; for exactly orthogonal g those coincide.
    """
    garr = np.array([[Fraction(x) for x in row] for row in np.asarray(g)], dtype=object)
    m = garr.shape[0]
    if garr.shape != (m, m) or m != n:
        raise ValueError("matrix size must match the Clifford dimension")
    gtg = garr.T @ garr
    for i in range(m):
        for j in range(m):
            if gtg[i, j] != (1 if i == j else 0):
                raise ValueError("matrix is not exactly orthogonal")
    images = []
    for j in range(n):  # e_j -> sum_k g[k][j] e_k
        acc: dict[Word, QI] = {}
        for k in range(n):
            if garr[k, j]:
                acc[(k,)] = QI(garr[k, j])
        images.append(CliffordElement.from_dict(n, acc))
    for j in range(n):  # eps_j -> sum_k g[k][j] eps_k (orthogonal: g^{-T} = g)
        acc = {}
        for k in range(n):
            if garr[k, j]:
                acc[(n + k,)] = QI(garr[k, j])
        images.append(CliffordElement.from_dict(n, acc))
    return images


def orthogonal_action(g, a: CliffordElement) -> CliffordElement:
    """Apply an exact orthogonal matrix to a Clifford element, diagonally."""
    n = a.dimension
    images = _generator_images(n, g)
    out = CliffordElement.from_dict(n, {})
    for w, c in a.coefficients:
        term = scalar(n, c)
        for gidx in w:
            term = term * images[gidx]
        out = out + term
    return out


def symmetric_invariance_check(n: int, g, a: CliffordElement) -> bool:
    """Whether the diagonal action of the orthogonal matrix g fixes a.

    Intended for elements built as symmetric polynomials in the
    commuting family e_1 eps_1, ..., e_n eps_n, which the theory says are
    always fixed; a non-orthogonal g is rejected.
    """
    return orthogonal_action(g, a) == a


def signed_permutations(n: int):
    """All 2^n n! signed permutation matrices, exact ints."""
    from itertools import permutations, product

    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            yield [
                [signs[i] if perm[i] == j else 0 for j in range(n)]
                for i in range(n)
            ]
