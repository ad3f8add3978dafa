"""Small dense complex linear algebra.

Matrices are plain 2-D ``numpy`` arrays of dtype ``complex128``. The default
eigenvalue path is LAPACK through ``numpy.linalg``; the hand-written cyclic
Jacobi and Hessenberg/shifted-QR kernels below can be selected with
``method="jacobi"`` / ``method="qr"`` and serve as independent cross-checks.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .errors import NegativeEntry, NotHermitian, NotSquare, ZeroDimension

TOL_HERM = 1e-10
TOL_REL = 1e-9
TOL_ABS = 1e-9

_EPS = np.finfo(float).eps


def as_cmatrix(M) -> np.ndarray:
    """Coerce to a finite 2-D complex128 array with positive dimensions."""
    arr = np.array(M, dtype=np.complex128)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={arr.ndim}")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise ZeroDimension(f"matrix has a zero dimension: {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix has non-finite entries")
    return arr


def _require_square(M: np.ndarray) -> None:
    if M.shape[0] != M.shape[1]:
        raise NotSquare(f"expected a square matrix, got {M.shape}")


def adjoint(M) -> np.ndarray:
    M = as_cmatrix(M)
    return np.ascontiguousarray(M.conj().T)


# ---------------------------------------------------------------------------
# Hermitian eigenvalues


def jacobi_eigvalsh(H, tol: float = 1e-15, max_sweeps: int = 60) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations (ascending)."""
    A = as_cmatrix(H).copy()
    _require_square(A)
    n = A.shape[0]
    A = 0.5 * (A + A.conj().T)
    if n == 1:
        return np.array([A[0, 0].real])
    scale = np.linalg.norm(A)
    if scale == 0.0:
        return np.zeros(n)
    for _ in range(max_sweeps):
        off = np.linalg.norm(A - np.diag(np.diag(A)))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                mag = abs(apq)
                if mag <= _EPS * 1e-3 * scale:
                    continue
                # Phase so the (p, q) entry becomes real, then a real rotation.
                phase = apq / mag
                tau = (A[q, q].real - A[p, p].real) / (2.0 * mag)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # J acts on columns p, q: col_p' = c col_p - s conj(phase) col_q,
                # col_q' = s phase col_p + c col_q.
                cp = A[:, p].copy()
                cq = A[:, q].copy()
                A[:, p] = c * cp - s * np.conj(phase) * cq
                A[:, q] = s * phase * cp + c * cq
                rp = A[p, :].copy()
                rq = A[q, :].copy()
                A[p, :] = c * rp - s * phase * rq
                A[q, :] = s * np.conj(phase) * rp + c * rq
                A[p, q] = 0.0
                A[q, p] = 0.0
    return np.sort(np.diag(A).real)


def _hermitian_residual(M: np.ndarray) -> float:
    return float(np.linalg.norm(M - M.conj().T, 2))


def hermitian_eigvals(M, method: str = "lapack", tol_herm: float = TOL_HERM) -> np.ndarray:
    M = as_cmatrix(M)
    _require_square(M)
    norm = float(np.linalg.norm(M, 2))
    if _hermitian_residual(M) > tol_herm * (1.0 + norm):
        raise NotHermitian("matrix is not Hermitian within tolerance")
    if method == "jacobi":
        return jacobi_eigvalsh(M)
    if method == "lapack":
        return np.linalg.eigvalsh(M)
    raise ValueError(f"unknown method {method!r}")


def hermitian_max_eigenvalue(M, method: str = "lapack", tol_herm: float = TOL_HERM) -> float:
    return float(hermitian_eigvals(M, method=method, tol_herm=tol_herm)[-1])


def operator_norm(M, method: str = "lapack") -> float:
    """Largest singular value, via the top eigenvalue of the smaller Gram matrix."""
    M = as_cmatrix(M)
    rows, cols = M.shape
    gram = M.conj().T @ M if cols <= rows else M @ M.conj().T
    gram = 0.5 * (gram + gram.conj().T)
    lam = hermitian_max_eigenvalue(gram, method=method)
    return math.sqrt(max(lam, 0.0))


# ---------------------------------------------------------------------------
# General spectrum


def hessenberg(M) -> np.ndarray:
    """Householder reduction to upper Hessenberg form (unitarily similar)."""
    H = as_cmatrix(M).copy()
    _require_square(H)
    n = H.shape[0]
    for k in range(n - 2):
        x = H[k + 1 :, k].copy()
        alpha = np.linalg.norm(x)
        if alpha == 0.0:
            continue
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x
        v[0] += phase * alpha
        v /= np.linalg.norm(v)
        H[k + 1 :, :] -= 2.0 * np.outer(v, v.conj() @ H[k + 1 :, :])
        H[:, k + 1 :] -= 2.0 * np.outer(H[:, k + 1 :] @ v, v.conj())
        H[k + 2 :, k] = 0.0
    return H


def _wilkinson_shift(a, b, c, d) -> complex:
    tr = a + d
    det = a * d - b * c
    disc = np.sqrt(tr * tr / 4.0 - det)
    l1 = tr / 2.0 + disc
    l2 = tr / 2.0 - disc
    return l1 if abs(l1 - d) <= abs(l2 - d) else l2


def qr_eigvals(M, max_iter_per_eig: int = 100) -> np.ndarray:
    """All eigenvalues of a general complex matrix by shifted QR on Hessenberg form."""
    H = hessenberg(M)
    n = H.shape[0]
    eigs = np.zeros(n, dtype=np.complex128)
    hi = n - 1
    stall = 0
    while hi >= 0:
        if hi == 0:
            eigs[0] = H[0, 0]
            break
        lo = hi
        while lo > 0:
            if abs(H[lo, lo - 1]) <= _EPS * (abs(H[lo - 1, lo - 1]) + abs(H[lo, lo])):
                H[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            eigs[hi] = H[hi, hi]
            hi -= 1
            stall = 0
            continue
        stall += 1
        if stall > max_iter_per_eig:
            raise ArithmeticError("shifted QR failed to converge")
        if stall % 11 == 0:
            mu = H[hi, hi] + abs(H[hi, hi - 1])  # exceptional shift
        else:
            mu = _wilkinson_shift(H[hi - 1, hi - 1], H[hi - 1, hi], H[hi, hi - 1], H[hi, hi])
        W = H[lo : hi + 1, lo : hi + 1] - mu * np.eye(hi - lo + 1)
        rots = []
        for k in range(hi - lo):
            a, b = W[k, k], W[k + 1, k]
            r = math.hypot(abs(a), abs(b))
            if r == 0.0:
                G = np.eye(2, dtype=np.complex128)
            else:
                G = np.array([[np.conj(a), np.conj(b)], [-b, a]]) / r
            W[k : k + 2, :] = G @ W[k : k + 2, :]
            rots.append(G)
        for k, G in enumerate(rots):
            W[:, k : k + 2] = W[:, k : k + 2] @ G.conj().T
        H[lo : hi + 1, lo : hi + 1] = W + mu * np.eye(hi - lo + 1)
    return eigs


def spectral_radius(M, method: str = "lapack") -> float:
    M = as_cmatrix(M)
    _require_square(M)
    if method == "qr":
        return float(np.max(np.abs(qr_eigvals(M))))
    if method == "lapack":
        if np.array_equal(M, M.conj().T):
            return float(np.max(np.abs(np.linalg.eigvalsh(M))))
        return float(np.max(np.abs(np.linalg.eigvals(M))))
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# 2x2 nonnegative symmetric matrices


@dataclass(frozen=True)
class Sym2x2:
    """The real symmetric matrix [[p, s], [s, q]] with nonnegative entries."""

    p: float
    s: float
    q: float

    def __post_init__(self):
        for name in ("p", "s", "q"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite")
            if value < 0:
                raise NegativeEntry(f"{name}={value} is negative")

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.p, self.s], [self.s, self.q]], dtype=np.complex128)


def sym2x2_norm(B: Sym2x2) -> float:
    p, s, q = B.p, B.s, B.q
    return 0.5 * (p + q + math.sqrt((p - q) ** 2 + 4.0 * s * s))


# ---------------------------------------------------------------------------
# Deterministic random instances


def derive_seed(seed: int, tag: str) -> int:
    """64-bit child seed from (seed, tag) via BLAKE2b; platform independent."""
    digest = hashlib.blake2b(f"{int(seed)}/{tag}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def rng_for(seed: int) -> np.random.Generator:
    """Philox4x64-10 counter-based generator keyed by a 64-bit seed."""
    return np.random.Generator(np.random.Philox(key=int(seed) & 0xFFFFFFFFFFFFFFFF))


def random_ginibre(rows: int, cols: int, seed: int) -> np.ndarray:
    """Matrix with i.i.d. complex normal entries, E|z|^2 = 1."""
    if rows < 1 or cols < 1:
        raise ZeroDimension(f"rows and cols must be positive, got ({rows}, {cols})")
    gen = rng_for(seed)
    parts = gen.standard_normal((2, rows, cols))
    return math.sqrt(0.5) * (parts[0] + 1j * parts[1])
