"""Douglas/Berwald classification of left-invariant Randers metrics.

Two exact linear criteria drive everything:

* Douglas type: Q is g-orthogonal to the derived algebra [g, g].
* Berwald type: Q is parallel, nabla_{e_i} Q = 0 for every basis direction.

Both are decided in rational arithmetic, so verdicts carry no tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import exactlinalg as xl
from .algebra import AlgebraVector, LieAlgebra, Subspace, catalog, format_combination
from .randers import RandersStructure
from .riemann import MetricTensor, identity_metric, levi_civita, orthogonal_complement


class RandersClass(Enum):
    NOT_DOUGLAS = "NotDouglas"
    BERWALD_DOUGLAS = "BerwaldDouglas"
    NON_BERWALD_DOUGLAS = "NonBerwaldDouglas"


@dataclass
class Classification:
    kind: RandersClass
    evidence: list[str]


def is_douglas(
    algebra: LieAlgebra, metric: MetricTensor, q: AlgebraVector
) -> tuple[bool, list[str]]:
    """Exact orthogonality test of q against every derived-algebra basis vector."""
    evidence = []
    for b in algebra.derived_algebra().basis:
        val = metric.inner(q, b)
        if val != 0:
            evidence.append(
                f"g(Q, {format_combination(b, algebra.labels)}) = {val}"
            )
    return (not evidence, evidence)


def douglas_subspace(algebra: LieAlgebra, metric: MetricTensor) -> Subspace:
    """Directions of Q giving a Douglas metric: the g-complement of [g, g]."""
    return orthogonal_complement(metric, algebra.derived_algebra())


def is_berwald(
    algebra: LieAlgebra, metric: MetricTensor, q: AlgebraVector
) -> tuple[bool, list[str]]:
    """Exact parallelism test: nabla_{e_i} q = 0 for all i."""
    conn = levi_civita(algebra, metric)
    evidence = []
    for i in range(algebra.dim):
        deriv = conn.nabla(algebra.basis_vector(i), q)
        if not xl.vec_is_zero(deriv):
            evidence.append(
                f"nabla_{algebra.labels[i]} Q = "
                f"{format_combination(deriv, algebra.labels)}"
            )
    return (not evidence, evidence)


def classify_randers(r: RandersStructure) -> Classification:
    """NotDouglas / BerwaldDouglas / NonBerwaldDouglas with exact evidence.

    Q = 0 comes out BerwaldDouglas: the metric is Riemannian and both linear
    criteria hold trivially.
    """
    douglas, evidence = is_douglas(r.algebra, r.metric, r.q_field)
    if not douglas:
        return Classification(kind=RandersClass.NOT_DOUGLAS, evidence=evidence)
    berwald, evidence = is_berwald(r.algebra, r.metric, r.q_field)
    if berwald:
        return Classification(kind=RandersClass.BERWALD_DOUGLAS, evidence=[])
    return Classification(kind=RandersClass.NON_BERWALD_DOUGLAS, evidence=evidence)


def berwald_subset(
    algebra: LieAlgebra, metric: MetricTensor, within: Subspace
) -> Subspace:
    """Solution set of nabla Q = 0 restricted to a subspace, canonical form.

    Solves the exact linear system in the coordinates of ``within``'s basis
    and maps the nullspace back to algebra vectors.
    """
    if not within.basis:
        return Subspace.zero(algebra.dim)
    conn = levi_civita(algebra, metric)
    rows = []
    for i in range(algebra.dim):
        derivs = [conn.nabla(algebra.basis_vector(i), b) for b in within.basis]
        for k in range(algebra.dim):
            rows.append(tuple(d[k] for d in derivs))
    coeff_basis = xl.nullspace(tuple(rows))
    vectors = []
    for coeffs in coeff_basis:
        v = xl.zero_vector(algebra.dim)
        for c, b in zip(coeffs, within.basis):
            v = xl.vec_add(v, xl.vec_scale(c, b))
        vectors.append(v)
    return Subspace.span(vectors, algebra.dim)


@dataclass
class CaseReport:
    case_id: int
    douglas: Subspace
    berwald: Subspace


def reproduce_theorem(metric: MetricTensor | None = None) -> list[CaseReport]:
    """Douglas subspace and its Berwald subset for catalog cases 1-4."""
    reports = []
    for case_id in (1, 2, 3, 4):
        algebra = catalog(case_id)
        m = metric if metric is not None else identity_metric(algebra.dim)
        douglas = douglas_subspace(algebra, m)
        berwald = berwald_subset(algebra, m, douglas)
        reports.append(CaseReport(case_id=case_id, douglas=douglas, berwald=berwald))
    return reports


def expected_theorem_reports() -> list[CaseReport]:
    """Reference classification tables that `reproduce_theorem` must match.

    Case 1: Douglas = Berwald = span{X};
    case 2: Douglas = span{Z,W}, Berwald = span{W} (the p = 0 line);
    cases 3, 4: Douglas = span{X}, Berwald = {0}.
    """
    one = Fraction(1)
    x = (one, Fraction(0), Fraction(0), Fraction(0))
    z = (Fraction(0), Fraction(0), one, Fraction(0))
    w = (Fraction(0), Fraction(0), Fraction(0), one)
    return [
        CaseReport(1, Subspace.span([x], 4), Subspace.span([x], 4)),
        CaseReport(2, Subspace.span([z, w], 4), Subspace.span([w], 4)),
        CaseReport(3, Subspace.span([x], 4), Subspace.zero(4)),
        CaseReport(4, Subspace.span([x], 4), Subspace.zero(4)),
    ]
