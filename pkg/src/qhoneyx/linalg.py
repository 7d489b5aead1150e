"""Dense complex matrix primitives used throughout the package.

Everything here works on plain ``numpy`` arrays.  Hermitian operators are
produced by :func:`hermitian`, which symmetrizes its input, so round-off
asymmetry from earlier arithmetic never leaks into eigen computations.
"""

import math

import numpy as np

__all__ = [
    "EigenConvergenceError",
    "hermitian",
    "kron",
    "partial_trace_a",
    "partial_trace_b",
    "eig_hermitian",
    "expm_hermitian",
    "induced_one_norm",
    "frobenius_norm",
    "project_psd",
    "rel_tol",
]

ABS_FLOOR = 1e-12


class EigenConvergenceError(ArithmeticError):
    """Raised when the Jacobi iteration hits its sweep limit."""


def rel_tol(M, rtol):
    """Tolerance ``rtol * ||M||_F`` with an absolute floor."""
    return max(rtol * frobenius_norm(M), ABS_FLOOR)


def hermitian(M):
    """Return ``(M + M^H) / 2`` as a complex array."""
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    return _sym(M)


def _sym(M):
    # no validation; for operators built internally from Hermitian pieces
    H = 0.5 * (M + M.conj().T)
    idx = np.arange(H.shape[0])
    # exact zero imaginary part on the diagonal
    H[idx, idx] = H[idx, idx].real
    return H


def kron(A, B):
    """Kronecker product, entry ``(i*rB + k, j*cB + l) = A[i, j] * B[k, l]``."""
    A = np.atleast_2d(np.asarray(A, dtype=complex))
    B = np.atleast_2d(np.asarray(B, dtype=complex))
    ra, ca = A.shape
    rb, cb = B.shape
    return (A[:, None, :, None] * B[None, :, None, :]).reshape(ra * rb, ca * cb)


def _check_bipartite(M, n_a, n_b):
    M = np.asarray(M, dtype=complex)
    if M.shape != (n_a * n_b, n_a * n_b):
        raise ValueError(
            f"operator of shape {M.shape} does not act on a {n_a}x{n_b} bipartite space"
        )
    return M.reshape(n_a, n_b, n_a, n_b)


def partial_trace_a(M, n_a, n_b):
    """Trace out the first factor: ``out[k, l] = sum_i M[i*n_b + k, i*n_b + l]``."""
    T = _check_bipartite(M, n_a, n_b)
    return hermitian(np.einsum("ikil->kl", T))


def partial_trace_b(M, n_a, n_b):
    """Trace out the second factor: ``out[i, j] = sum_k M[i*n_b + k, j*n_b + k]``."""
    T = _check_bipartite(M, n_a, n_b)
    return hermitian(np.einsum("ikjk->ij", T))


def _jacobi_2x2(a, b, d):
    """Single complex Jacobi rotation diagonalizing ``[[a, b], [conj(b), d]]``."""
    r = abs(b)
    if r == 0.0:
        return a, d, np.eye(2, dtype=complex)
    phase = b / r
    theta = 0.5 * math.atan2(2.0 * r, d - a)
    c, s = math.cos(theta), math.sin(theta)
    # G = diag(1, conj(phase)) @ [[c, s], [-s, c]]
    G = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
    l0 = a * c * c - 2.0 * r * c * s + d * s * s
    l1 = a * s * s + 2.0 * r * c * s + d * c * c
    return l0, l1, G


def eig_hermitian(M, tol=1e-14, max_sweeps=50):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(w, V)`` with ``w`` ascending and ``V`` unitary, columns are
    eigenvectors.  Ties keep the order in which the rotations left them
    (stable sort), so results are deterministic.
    """
    return _eig_jacobi(hermitian(M), tol, max_sweeps)


def _eig_jacobi(A, tol=1e-14, max_sweeps=50):
    # A must already be Hermitian; it is overwritten for n > 2
    n = A.shape[0]
    if n == 1:
        return A.real.diagonal().copy(), np.ones((1, 1), dtype=complex)
    if n == 2:
        l0, l1, G = _jacobi_2x2(A[0, 0].real, A[0, 1], A[1, 1].real)
        if l1 < l0:
            return np.array([l1, l0]), G[:, ::-1].copy()
        return np.array([l0, l1]), G

    V = np.eye(n, dtype=complex)
    scale = max(np.linalg.norm(A), ABS_FLOOR)
    iu = np.triu_indices(n, 1)
    for _ in range(max_sweeps):
        off = math.sqrt(2.0 * float(np.sum(np.abs(A[iu]) ** 2)))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = A[p, q]
                if abs(b) <= 1e-300:
                    continue
                _, _, G = _jacobi_2x2(A[p, p].real, b, A[q, q].real)
                idx = [p, q]
                A[:, idx] = A[:, idx] @ G
                A[idx, :] = G.conj().T @ A[idx, :]
                V[:, idx] = V[:, idx] @ G
                A[p, q] = A[q, p] = 0.0
                A[p, p] = A[p, p].real
                A[q, q] = A[q, q].real
    else:
        off = math.sqrt(2.0 * float(np.sum(np.abs(A[iu]) ** 2)))
        if off > tol * scale:
            raise EigenConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps (off-norm {off:.3e})"
            )
    w = A.diagonal().real
    order = np.argsort(w, kind="stable")
    return w[order].copy(), V[:, order]


def expm_hermitian(M):
    """``exp(M)`` for Hermitian ``M`` via its eigendecomposition."""
    w, V = eig_hermitian(M)
    return (V * np.exp(w)) @ V.conj().T


def induced_one_norm(M):
    """Operator norm induced by the vector 1-norm: max absolute column sum."""
    M = np.atleast_2d(np.asarray(M))
    return float(np.abs(M).sum(axis=0).max()) if M.size else 0.0


def frobenius_norm(M):
    M = np.asarray(M)
    return float(np.sqrt(np.sum(np.abs(M) ** 2)))


def project_psd(M):
    """Clamp negative eigenvalues of a Hermitian matrix to zero."""
    w, V = eig_hermitian(M)
    return hermitian((V * np.clip(w, 0.0, None)) @ V.conj().T)
