"""Small dense eigensolvers used by the SCF and the exact reference."""

from __future__ import annotations

import logging
import math

import numpy as np

from vqe.core.errors import NumericalError

logger = logging.getLogger(__name__)


class EigensolverError(NumericalError):
    """Raised when an eigendecomposition fails its convergence or residual checks."""


def symmetric_eigh_2x2(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form eigendecomposition of a real symmetric 2x2 matrix.

    Returns ascending eigenvalues and the matching orthonormal eigenvectors as
    columns.
    """
    m = np.asarray(matrix, dtype=float)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    a, b, d = m[0, 0], 0.5 * (m[0, 1] + m[1, 0]), m[1, 1]
    theta = 0.5 * math.atan2(2.0 * b, a - d)
    c, s = math.cos(theta), math.sin(theta)
    # Rotation by theta diagonalizes m; (c, s) carries the larger root.
    lam_hi = a * c * c + 2.0 * b * c * s + d * s * s
    lam_lo = a * s * s - 2.0 * b * c * s + d * c * c
    vectors = np.array([[-s, c], [c, s]])
    return np.array([lam_lo, lam_hi]), vectors


def jacobi_eigh(
    matrix: np.ndarray,
    *,
    tol: float = 1e-14,
    max_sweeps: int = 100,
) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi eigensolver for real symmetric matrices.

    Sweeps over all (p, q) pairs, annihilating each off-diagonal entry with a
    plane rotation, until the off-diagonal Frobenius norm drops below
    ``tol`` times the matrix norm or stalls at rounding level. Returns
    ascending eigenvalues and the eigenvectors as columns.
    """
    a = np.array(matrix, dtype=float, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    v = np.eye(n)
    scale = max(float(np.sqrt(np.sum(a * a))), 1.0)

    previous_off = math.inf
    for sweep in range(max_sweeps):
        off = float(np.sqrt(np.sum(np.tril(a, -1) ** 2)))
        # Rounding floors the off-diagonal norm; stop once it stalls there.
        if off <= tol * scale or (off >= previous_off and off <= 1e-12 * scale):
            break
        previous_off = off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta == 0.0:
                    t = 1.0
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    else:
        raise EigensolverError(
            f"Jacobi eigensolver did not converge within {max_sweeps} sweeps"
        )

    logger.debug("Jacobi converged: dimension %d after %d sweeps", n, sweep)
    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    return values[order], v[:, order]


def hermitian_eigh(
    matrix: np.ndarray,
    *,
    max_jacobi_dimension: int = 64,
) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Real matrices go straight to :func:`jacobi_eigh`. Complex matrices are
    embedded as the real symmetric block matrix ``[[Re, -Im], [Im, Re]]``,
    whose spectrum is the original one with every eigenvalue doubled; the
    complex eigenvectors are recovered as ``u + i v`` and re-orthonormalized.
    Matrices larger than ``max_jacobi_dimension`` use ``numpy.linalg.eigh``.
    """
    m = np.asarray(matrix)
    n = m.shape[0]
    if n > max_jacobi_dimension:
        values, vectors = np.linalg.eigh(m)
        return values, vectors

    if not np.iscomplexobj(m) or np.max(np.abs(m.imag), initial=0.0) == 0.0:
        return jacobi_eigh(np.real(m))

    embedded = np.block([[m.real, -m.imag], [m.imag, m.real]])
    doubled_values, doubled_vectors = jacobi_eigh(embedded)

    values = np.empty(n)
    vectors = np.zeros((n, n), dtype=complex)
    accepted = 0
    for k in range(2 * n):
        if accepted == n:
            break
        candidate = doubled_vectors[:n, k] + 1j * doubled_vectors[n:, k]
        for j in range(accepted):
            candidate = candidate - np.vdot(vectors[:, j], candidate) * vectors[:, j]
        norm = np.linalg.norm(candidate)
        if norm < 0.5:
            continue
        candidate = candidate / norm
        vectors[:, accepted] = candidate
        values[accepted] = float(np.real(np.vdot(candidate, m @ candidate)))
        accepted += 1
    if accepted != n:
        raise EigensolverError("failed to recover a complete complex eigenbasis")
    order = np.argsort(values, kind="stable")
    return values[order], vectors[:, order]


__all__ = ["EigensolverError", "hermitian_eigh", "jacobi_eigh", "symmetric_eigh_2x2"]
