"""Batch flag-curvature sweeps over seeded random flags.

Exact tables (structure constants, Gram matrix, curvature tensor) are
flattened once into float arrays; per-sample work then runs through the
kernels in :mod:`lieranders.kernels`, on whichever backend is active.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .algebra import LieAlgebra
from .errors import NotDouglas
from .classify import is_douglas
from .randers import RandersStructure
from .riemann import MetricTensor, curvature_tensor, levi_civita


def dense_structure(algebra: LieAlgebra) -> np.ndarray:
    n = algebra.dim
    out = np.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                out[i, j, k] = float(algebra.structure[i][j][k])
    return out


def dense_gram(metric: MetricTensor) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in metric.gram])


def dense_curvature(algebra: LieAlgebra, metric: MetricTensor) -> np.ndarray:
    """rm4[i,j,k,l] = g(R(e_i,e_j)e_k, e_l) as floats."""
    table = curvature_tensor(algebra, levi_civita(algebra, metric))
    n = algebra.dim
    out = np.zeros((n, n, n, n))
    gram = dense_gram(metric)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                vec = np.array([float(x) for x in table.r[i][j][k]])
                out[i, j, k] = gram @ vec
    return out


@dataclass
class SweepResult:
    """Columns of one sweep; rows are flags (V = aX+bY+cZ+dW, U discarded)."""

    v: np.ndarray            # (n, dim) flag poles
    k_g: np.ndarray
    k_f: np.ndarray
    correction: np.ndarray
    sign_match: np.ndarray   # bool; zero curvature counts as matching zero

    def __len__(self) -> int:
        return len(self.k_g)


def run_sweep(
    r: RandersStructure, n_samples: int, seed: int, sign_tol: float = 1e-12
) -> SweepResult:
    """Evaluate K^g, K^F and the correction on seeded random flags.

    Flags are drawn from the counter-based Philox stream keyed by ``seed``,
    so results do not depend on evaluation order or batch size.
    """
    ok, evidence = is_douglas(r.algebra, r.metric, r.q_field)
    if not ok:
        raise NotDouglas("; ".join(evidence))
    dim = r.dim
    struct = dense_structure(r.algebra)
    gram = dense_gram(r.metric)
    gram_inv = np.linalg.inv(gram)
    rm4 = dense_curvature(r.algebra, r.metric)
    q = np.array([float(x) for x in r.q_field])

    rng = np.random.Generator(np.random.Philox(key=[seed, 3]))
    V = np.empty((n_samples, dim))
    U = np.empty((n_samples, dim))
    filled = 0
    while filled < n_samples:
        want = n_samples - filled
        cand_v = rng.uniform(-1.0, 1.0, size=(want, dim))
        cand_u = rng.uniform(-1.0, 1.0, size=(want, dim))
        # keep flags comfortably nondegenerate
        gv = np.einsum("ni,ij,nj->n", cand_v, gram, cand_v)
        gu = np.einsum("ni,ij,nj->n", cand_u, gram, cand_u)
        guv = np.einsum("ni,ij,nj->n", cand_v, gram, cand_u)
        good = (gv > 1e-6) & (gu * gv - guv**2 > 1e-8)
        took = int(good.sum())
        V[filled : filled + took] = cand_v[good]
        U[filled : filled + took] = cand_u[good]
        filled += took

    f = kernels.eval_f_batch(gram, q, V)
    k_g = kernels.sectional_batch(rm4, gram, U, V)
    correction = kernels.correction_batch(struct, gram, gram_inv, q, V, f)
    gvv = np.einsum("ni,ij,nj->n", V, gram, V)
    k_f = gvv / f**2 * k_g + correction
    scale = np.maximum(1.0, np.maximum(np.abs(k_f), np.abs(k_g)))
    both_zero = (np.abs(k_f) <= sign_tol * scale) & (np.abs(k_g) <= sign_tol * scale)
    sign_match = (np.sign(k_f) == np.sign(k_g)) | both_zero
    return SweepResult(v=V, k_g=k_g, k_f=k_f, correction=correction, sign_match=sign_match)
