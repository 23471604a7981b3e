"""Brute-force dense reference implementations used for cross-checking.

Everything here is deliberately independent of the tridiagonal Sturm
machinery: the eigensolver is a cyclic Jacobi rotation scheme (two-sided
rotations annihilating off-diagonal mass), the norm estimator is power
iteration, and the distance matrices come from all-pairs BFS. Agreement
with the main code paths is therefore evidence, not tautology. Dense
paths are desk-scale only and refuse graphs beyond 2000 vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, _bfs
from .intersection import IntersectionSequence, degree_sequence

MAX_DENSE_VERTICES = 2000


class OracleError(Exception):
    pass


class DenseSizeError(OracleError):
    def __init__(self, n: int):
        super().__init__(
            f"dense oracle paths support at most {MAX_DENSE_VERTICES} vertices, got {n}"
        )


class NoConvergenceError(OracleError):
    pass


class BasisMismatchError(OracleError):
    def __init__(self, k: int, i: int, j: int, got: float, expected: float):
        self.k, self.i, self.j = k, i, j
        super().__init__(
            f"P_{k}(A) * sqrt(deg_{k}) entry ({i}, {j}) is {got!r}, expected {expected!r}"
        )


def _check_size(n: int):
    if n > MAX_DENSE_VERTICES:
        raise DenseSizeError(n)


def dense_adjacency(g: Graph) -> np.ndarray:
    _check_size(g.vertex_count)
    n = g.vertex_count
    m = np.zeros((n, n), dtype=np.int64)
    for i, nbrs in enumerate(g.adjacency):
        for j in nbrs:
            m[i, j] = 1
    return m


def dense_distance_matrices(g: Graph) -> list[np.ndarray]:
    """A_0 .. A_diam as dense integer matrices from all-pairs BFS."""
    _check_size(g.vertex_count)
    n = g.vertex_count
    dist = np.array([_bfs(g.adjacency, v) for v in range(n)], dtype=np.int64)
    diam = int(dist.max())
    return [(dist == k).astype(np.int64) for k in range(diam + 1)]


@dataclass(frozen=True)
class EigenDecomposition:
    """Sorted eigenvalues, clustered multiplicities, orthonormal basis."""

    eigenvalues: np.ndarray
    clusters: tuple[tuple[float, int], ...]
    basis: np.ndarray


def dense_symmetric_eigen(M: np.ndarray, tol: float = 1e-9) -> EigenDecomposition:
    """Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps of two-sided plane rotations annihilate the off-diagonal mass
    until it is negligible; NoConvergenceError after a fixed sweep
    budget. The reconstruction residual max|M - Q L Q^T| must come out
    below tol. Multiplicities are assigned by clustering the sorted
    eigenvalues with gap 1e-6 * max|eigenvalue|.
    """
    a = np.array(M, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise OracleError("matrix must be square")
    if not np.allclose(a, a.T, atol=0.0):
        raise OracleError("matrix must be symmetric")
    _check_size(n)
    q = np.eye(n)
    scale = max(1.0, float(np.abs(a).max()))
    target = 1e-15 * scale
    for _ in range(60):
        off = math.sqrt(float(np.sum(np.square(a - np.diag(np.diag(a))))))
        if off <= target:
            break
        for p in range(n - 1):
            for r in range(p + 1, n):
                apr = a[p, r]
                if abs(apr) <= target / max(n, 2):
                    continue
                theta = (a[r, r] - a[p, p]) / (2.0 * apr)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_r = a[:, p].copy(), a[:, r].copy()
                a[:, p] = c * col_p - s * col_r
                a[:, r] = s * col_p + c * col_r
                row_p, row_r = a[p, :].copy(), a[r, :].copy()
                a[p, :] = c * row_p - s * row_r
                a[r, :] = s * row_p + c * row_r
                a[p, r] = a[r, p] = 0.0
                qp, qr = q[:, p].copy(), q[:, r].copy()
                q[:, p] = c * qp - s * qr
                q[:, r] = s * qp + c * qr
    else:
        raise NoConvergenceError("rotation sweeps did not reduce off-diagonal mass")

    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    values = values[order]
    q = q[:, order]
    residual = float(np.abs(np.asarray(M, dtype=float) - (q * values) @ q.T).max())
    if residual >= tol:
        raise NoConvergenceError(f"reconstruction residual {residual:.3e} >= {tol:.3e}")

    gap = 1e-6 * max(1.0, float(np.abs(values).max()))
    clusters = []
    start = 0
    for i in range(1, n + 1):
        if i == n or values[i] - values[i - 1] > gap:
            block = values[start:i]
            clusters.append((float(block.mean()), len(block)))
            start = i
    return EigenDecomposition(values, tuple(clusters), q)


def matrix_poly_firstkind(g: Graph, seq: IntersectionSequence, tau: float) -> np.ndarray:
    """Evaluate P_{n+1}^(tau) at the dense adjacency matrix.

    En route asserts P_k(A) * sqrt(deg_k) = A_k entrywise (within 1e-10,
    BasisMismatchError otherwise). The result is the zero matrix exactly
    when tau = degree - a_d; otherwise it is (degree - a_d - tau) times
    the normalized top distance matrix.
    """
    mats = dense_distance_matrices(g)
    if len(mats) != seq.d + 1:
        raise OracleError(
            f"sequence diameter {seq.d} does not match graph diameter {len(mats) - 1}"
        )
    adj = mats[1].astype(float)
    off = [math.sqrt(a * b) for a, b in zip(seq.a, seq.b)]
    degrees = degree_sequence(seq)
    alphas = seq.alphas

    def check_basis(k: int, poly_of_a: np.ndarray):
        rescaled = poly_of_a * math.sqrt(degrees[k])
        delta = np.abs(rescaled - mats[k])
        if delta.max() > 1e-10:
            i, j = map(int, np.unravel_index(int(delta.argmax()), delta.shape))
            raise BasisMismatchError(k, i, j, float(rescaled[i, j]), float(mats[k][i, j]))

    identity = np.eye(g.vertex_count)
    p_prev = identity
    check_basis(0, p_prev)
    p_cur = adj / off[0]
    check_basis(1, p_cur)
    for k in range(1, seq.d):
        p_next = (adj @ p_cur - alphas[k] * p_cur - off[k - 1] * p_prev) / off[k]
        p_prev, p_cur = p_cur, p_next
        check_basis(k + 1, p_cur)
    return adj @ p_cur - tau * p_cur - off[seq.d - 1] * p_prev


def operator_norm(M: np.ndarray, tol: float = 1e-10, max_iter: int = 20000) -> float:
    """Spectral radius of a symmetric matrix by power iteration on M^2.

    Squaring removes sign flip-flop between +r and -r eigenvalues. The
    start vector is all-ones with a small deterministic tilt so it is
    not orthogonal to the leading eigenspace in the intended uses.
    """
    a = np.asarray(M, dtype=float)
    n = a.shape[0]
    _check_size(n)
    v = np.ones(n) + np.arange(n) / (10.0 * n)
    v /= np.linalg.norm(v)
    previous = -1.0
    stable = 0
    for _ in range(max_iter):
        y = a @ v
        estimate = float(np.linalg.norm(y))
        if estimate == 0.0:
            return 0.0
        z = a @ y
        norm_z = float(np.linalg.norm(z))
        if norm_z == 0.0:
            return estimate
        v = z / norm_z
        if abs(estimate - previous) <= tol * max(1.0, estimate):
            stable += 1
            if stable >= 3:
                return estimate
        else:
            stable = 0
        previous = estimate
    raise NoConvergenceError("power iteration did not stabilize")
