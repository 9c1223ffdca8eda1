"""Dense complex linear algebra helpers used throughout the synthesis pipeline.

All matrices are plain ``numpy.ndarray`` with ``complex128`` entries.  The
routines here wrap LAPACK (via numpy/scipy) and add the determinism and
error-reporting guarantees the rest of the pipeline relies on.
"""
from __future__ import annotations

import json

import numpy as np
import scipy.linalg

UNITARY_TOL = 1e-10  # per-dimension unitarity tolerance for flagged checks
RECONSTRUCTION_TOL = 1e-9  # per-dimension factorization residual tolerance


class NumericalError(RuntimeError):
    """A dense linear-algebra routine failed to converge or lost precision."""


class PreconditionError(ValueError):
    """An input matrix violates a documented precondition."""


def _as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise PreconditionError(f"expected a square matrix, got shape {a.shape}")
    return a


def unitarity_defect(m) -> float:
    """Frobenius norm of m @ m.conj().T - I."""
    a = _as_matrix(m)
    eye = np.eye(a.shape[0])
    return float(np.linalg.norm(a @ a.conj().T - eye))


def is_unitary(m, tol: float | None = None) -> bool:
    a = _as_matrix(m)
    if tol is None:
        tol = UNITARY_TOL * a.shape[0]
    return unitarity_defect(a) <= tol


def svd(m):
    """Singular value decomposition ``m = left @ diag(s) @ right.conj().T``.

    Returns (left, s, right) with ``left`` and ``right`` unitary and ``s``
    real non-negative in descending order.
    """
    a = _as_matrix(m)
    try:
        u, s, vh = np.linalg.svd(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - hardware specific
        raise NumericalError(f"svd failed to converge: {exc}") from exc
    return u, s, vh.conj().T


def eig_unitary(m):
    """Eigendecomposition of a unitary matrix with orthonormal eigenvectors.

    Returns (w, v) with ``m = v @ diag(w) @ v.conj().T``.  Uses a complex
    Schur decomposition, which is exact for normal matrices and keeps the
    eigenvector basis orthonormal even for degenerate eigenvalues.
    """
    a = _as_matrix(m)
    dim = a.shape[0]
    if unitarity_defect(a) > 1e-8 * dim:
        raise PreconditionError("eig_unitary: input is not unitary within 1e-8")
    try:
        t, z = scipy.linalg.schur(a, output="complex")
    except scipy.linalg.LinAlgError as exc:  # pragma: no cover
        raise NumericalError(f"eig_unitary: schur failed: {exc}") from exc
    w = np.diag(t).copy()
    resid = np.linalg.norm(z @ np.diag(w) @ z.conj().T - a)
    if resid > RECONSTRUCTION_TOL * dim:
        raise NumericalError(
            f"eig_unitary: reconstruction residual {resid:.3e} exceeds tolerance"
        )
    return w, z


def polar_left(m):
    """Left polar decomposition ``m = p @ u`` with p PSD Hermitian, u unitary."""
    a = _as_matrix(m)
    left, s, right = svd(a)
    p = left @ np.diag(s) @ left.conj().T
    u = left @ right.conj().T
    return p, u


def haar_random_unitary(n_qubits: int, seed: int) -> np.ndarray:
    """Seeded Haar-random unitary on ``n_qubits`` qubits.

    Complex Ginibre matrix, QR factorization, then the R diagonal phases are
    normalized away so the distribution is exactly Haar.
    """
    if not 1 <= n_qubits <= 14:
        raise ValueError(f"n_qubits must be in 1..14, got {n_qubits}")
    dim = 2**n_qubits
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim)))
    z /= np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def save_unitary(path, matrix) -> None:
    """Write a unitary to a JSON file with explicit real/imag entry pairs."""
    a = _as_matrix(matrix)
    dim = a.shape[0]
    n = dim.bit_length() - 1
    if 2**n != dim:
        raise ValueError(f"matrix dimension {dim} is not a power of two")
    payload = {
        "n_qubits": n,
        "matrix": [[[float(x.real), float(x.imag)] for x in row] for row in a],
    }
    with open(path, "w") as fh:
        json.dump(payload, fh)


def load_unitary(path):
    """Read a unitary saved by :func:`save_unitary`.  Returns (n_qubits, matrix)."""
    with open(path) as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(payload, dict) or "n_qubits" not in payload or "matrix" not in payload:
        raise ValueError(f"{path}: expected keys 'n_qubits' and 'matrix'")
    n = payload["n_qubits"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"{path}: bad n_qubits {n!r}")
    dim = 2**n
    rows = payload["matrix"]
    if len(rows) != dim or any(len(row) != dim for row in rows):
        raise ValueError(f"{path}: matrix shape does not match n_qubits={n}")
    a = np.empty((dim, dim), dtype=complex)
    for i, row in enumerate(rows):
        for j, pair in enumerate(row):
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise ValueError(f"{path}: entry ({i},{j}) is not a [re, im] pair")
            a[i, j] = complex(pair[0], pair[1])
    if not is_unitary(a, tol=1e-8 * dim):
        raise PreconditionError(f"{path}: matrix is not unitary within 1e-8")
    return n, a
