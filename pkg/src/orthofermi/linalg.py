"""Dense complex-matrix substrate.

All operators in this package are plain ``numpy.ndarray`` values of dtype
complex128. Matrices stay small (dimension well below 10^3), so everything
defers to LAPACK through numpy. Identity checks throughout the package are
residual based: compute the defect matrix, take :func:`max_abs`, compare
against an explicit tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, NotHermitianError

#: Default tolerance on residuals of algebraic identities.
DEFAULT_TOL = 1e-10

#: Default relative threshold for numerical rank decisions.
DEFAULT_RANK_TOL = 1e-8


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a 2-d complex128 array with finite entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise DimensionError(f"expected a matrix, got array of shape {m.shape}")
    if m.size and not np.isfinite(m).all():
        raise ValueError("matrix contains non-finite entries")
    return m


def max_abs(a) -> float:
    """Maximum entrywise modulus; 0 exactly for empty or zero matrices."""
    a = np.asarray(a)
    if a.size == 0:
        return 0.0
    return float(np.abs(a).max())


def matmul(a, b) -> np.ndarray:
    """Matrix product with an explicit shape check."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def adjoint(a) -> np.ndarray:
    """Conjugate transpose. An exact involution: adjoint(adjoint(a)) == a."""
    return as_matrix(a).conj().T


@dataclass(frozen=True)
class HermEig:
    """Eigendecomposition of a Hermitian matrix.

    ``values`` are real and ascending; the columns of ``vectors`` are the
    matching orthonormal eigenvectors, so that
    ``vectors @ diag(values) @ vectors^dagger`` reconstructs the input.
    """

    values: np.ndarray
    vectors: np.ndarray


def herm_eig(a, tol: float = DEFAULT_TOL) -> HermEig:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Raises :class:`NotHermitianError` if ``max_abs(a - adjoint(a)) > tol``.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"eigendecomposition needs a square matrix, got {a.shape}")
    defect = max_abs(a - a.conj().T)
    if defect > tol:
        raise NotHermitianError(f"hermiticity defect {defect:.3e} exceeds tol {tol:.3e}")
    values, vectors = np.linalg.eigh(a)
    return HermEig(values=values, vectors=vectors)


def orthonormal_range(a, rank_tol: float = DEFAULT_RANK_TOL) -> np.ndarray:
    """Orthonormal basis of the column space of ``a``.

    The number of columns returned is the numerical rank: singular values
    strictly above ``rank_tol`` times the largest one count. A zero matrix
    yields a matrix with zero columns.
    """
    a = as_matrix(a)
    if a.size == 0:
        return np.zeros((a.shape[0], 0), dtype=complex)
    u, s, _ = np.linalg.svd(a, full_matrices=False)
    rank = int(np.count_nonzero(s > rank_tol * s[0])) if s.size else 0
    return u[:, :rank]


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed random unitary (QR of a complex Ginibre matrix)."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    phases = d / np.where(np.abs(d) > 0, np.abs(d), 1.0)
    return q * phases
