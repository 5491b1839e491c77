"""Lie algebras given by exact structure constants, and their basic invariants.

A ``LieAlgebra`` stores c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k as
Fractions.  The four-dimensional catalog used throughout (cases 1-4, plus the
abelian case 0) is exposed through :func:`catalog`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import exactlinalg as xl
from .errors import DimensionMismatch
from .exactlinalg import Matrix, Vector

AlgebraVector = Vector

CATALOG_LABELS = ("X", "Y", "Z", "W")

# bracket tables for the four non-abelian cases, as {(i, j): coefficient vector}
_CATALOG_BRACKETS: dict[int, dict[tuple[int, int], tuple[Fraction, ...]]] = {
    0: {},
    # [Y,Z]=W, [Z,W]=Y, [W,Y]=Z, X central
    1: {
        (1, 2): xl.vec([0, 0, 0, 1]),
        (2, 3): xl.vec([0, 1, 0, 0]),
        (3, 1): xl.vec([0, 0, 1, 0]),
    },
    # [X,Z]=X, [Y,Z]=Y, [X,W]=Y, [Y,W]=-X
    2: {
        (0, 2): xl.vec([1, 0, 0, 0]),
        (1, 2): xl.vec([0, 1, 0, 0]),
        (0, 3): xl.vec([0, 1, 0, 0]),
        (1, 3): xl.vec([-1, 0, 0, 0]),
    },
    # [X,Y]=Y, [X,Z]=Z, [X,W]=W
    3: {
        (0, 1): xl.vec([0, 1, 0, 0]),
        (0, 2): xl.vec([0, 0, 1, 0]),
        (0, 3): xl.vec([0, 0, 0, 1]),
    },
    # [X,Y]=Y, [X,Z]=Z/2, [X,W]=W/2, [Z,W]=Y/2
    4: {
        (0, 1): xl.vec([0, 1, 0, 0]),
        (0, 2): xl.vec(["0", "0", "1/2", "0"]),
        (0, 3): xl.vec(["0", "0", "0", "1/2"]),
        (2, 3): xl.vec(["0", "1/2", "0", "0"]),
    },
}


@dataclass(frozen=True)
class Subspace:
    """Linear subspace in canonical form: rref basis, rows sorted by pivot."""

    ambient_dim: int
    basis: tuple[AlgebraVector, ...]

    @classmethod
    def span(cls, vectors, ambient_dim: int) -> "Subspace":
        rows = [tuple(v) for v in vectors if not xl.vec_is_zero(tuple(v))]
        reduced, _ = xl.rref(rows)
        return cls(ambient_dim=ambient_dim, basis=reduced)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim=ambient_dim, basis=())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: AlgebraVector) -> bool:
        if xl.vec_is_zero(v):
            return True
        return xl.rank(list(self.basis) + [v]) == self.dim

    def describe(self, labels) -> str:
        if not self.basis:
            return "{0}"
        return "span{" + ", ".join(format_combination(v, labels) for v in self.basis) + "}"


@dataclass(frozen=True)
class LieAlgebra:
    """Finite-dimensional real Lie algebra with exact structure constants."""

    dim: int
    labels: tuple[str, ...]
    structure: tuple[tuple[AlgebraVector, ...], ...]

    def __post_init__(self):
        n = self.dim
        if len(self.labels) != n:
            raise DimensionMismatch("need one label per basis vector")
        if len(self.structure) != n or any(
            len(ci) != n or any(len(cij) != n for cij in ci) for ci in self.structure
        ):
            raise DimensionMismatch("structure constants must be dim x dim x dim")
        for i in range(n):
            for j in range(n):
                if self.structure[i][j] != xl.vec_scale(-1, self.structure[j][i]):
                    raise ValueError(
                        f"structure constants not antisymmetric at ({i},{j})"
                    )

    @classmethod
    def from_brackets(cls, dim, labels, brackets) -> "LieAlgebra":
        """Build from a {(i, j): coefficient vector} table; missing pairs are zero."""
        c = [[list(xl.zero_vector(dim)) for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in brackets.items():
            v = xl.vec(coeffs)
            if len(v) != dim:
                raise DimensionMismatch(f"bracket ({i},{j}) has {len(v)} coefficients")
            if i == j and not xl.vec_is_zero(v):
                raise ValueError(f"[e_{i}, e_{i}] must vanish")
            for k in range(dim):
                c[i][j][k] = v[k]
                c[j][i][k] = -v[k]
        structure = tuple(tuple(tuple(cij) for cij in ci) for ci in c)
        return cls(dim=dim, labels=tuple(labels), structure=structure)

    def basis_vector(self, i: int) -> AlgebraVector:
        return xl.basis_vector(self.dim, i)

    def basis(self) -> tuple[AlgebraVector, ...]:
        return tuple(self.basis_vector(i) for i in range(self.dim))

    @cached_property
    def _structure_nonzeros(self) -> tuple[tuple[int, int, int, Fraction], ...]:
        # sparse (i, j, k, c) view of the structure tensor; brackets are hot
        return tuple(
            (i, j, k, c)
            for i in range(self.dim)
            for j in range(self.dim)
            for k, c in enumerate(self.structure[i][j])
            if c
        )

    def bracket(self, u: AlgebraVector, v: AlgebraVector) -> AlgebraVector:
        """Bilinear extension of the structure constants; exact on exact input."""
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatch("bracket operands must match the algebra dimension")
        out = [Fraction(0)] * self.dim
        for i, j, k, c in self._structure_nonzeros:
            if u[i] and v[j]:
                out[k] += u[i] * v[j] * c
        return tuple(out)

    def ad(self, v: AlgebraVector) -> Matrix:
        """Matrix of ad_v : s -> [v, s] on the basis."""
        cols = [self.bracket(v, self.basis_vector(j)) for j in range(self.dim)]
        return tuple(tuple(col[k] for col in cols) for k in range(self.dim))

    def jacobi_check(self) -> list[tuple[int, int, int, AlgebraVector]]:
        """All basis triples violating the Jacobi identity, with their defects.

        Empty result means the structure constants define a Lie algebra.
        """
        violations = []
        for i, j, k in itertools.combinations(range(self.dim), 3):
            total = xl.zero_vector(self.dim)
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                inner = self.bracket(self.basis_vector(a), self.basis_vector(b))
                total = xl.vec_add(total, self.bracket(inner, self.basis_vector(c)))
            if not xl.vec_is_zero(total):
                violations.append((i, j, k, total))
        return violations

    def derived_algebra(self) -> Subspace:
        """[g, g]: span of all pairwise basis brackets, canonical form."""
        images = [
            self.structure[i][j]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        ]
        return Subspace.span(images, self.dim)

    def describe_brackets(self) -> list[str]:
        """Nonzero basis brackets as human-readable equations."""
        out = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                v = self.structure[i][j]
                if not xl.vec_is_zero(v):
                    out.append(
                        f"[{self.labels[i]},{self.labels[j]}] = "
                        f"{format_combination(v, self.labels)}"
                    )
        return out


def format_combination(v: AlgebraVector, labels) -> str:
    """Render a coefficient vector as a signed combination of basis labels."""
    terms = []
    for coeff, label in zip(v, labels):
        if coeff == 0:
            continue
        if coeff == 1:
            terms.append(("+", label))
        elif coeff == -1:
            terms.append(("-", label))
        else:
            terms.append(("+" if coeff > 0 else "-", f"{abs(coeff)}*{label}"))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, term in terms[1:]:
        text += f" {sign} {term}"
    return text


def catalog(case_id: int) -> LieAlgebra:
    """The four-dimensional catalog: 0 abelian, 1-4 the hypercomplex cases."""
    if case_id not in _CATALOG_BRACKETS:
        raise ValueError(f"unknown catalog case {case_id!r}; expected 0..4")
    return LieAlgebra.from_brackets(4, CATALOG_LABELS, _CATALOG_BRACKETS[case_id])
