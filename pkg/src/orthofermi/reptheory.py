"""Verification and decomposition of orthofermion representations.

Any family of matrices satisfying the orthofermion relations on an
inner-product space splits, after a unitary change of basis, into copies of
the canonical (p+1)-dimensional representation plus a block on which every
generator acts as zero. :func:`decompose` makes that split constructive:

  1. infer the representative R of the algebra unit from the relations,
  2. take the vacuum projector P = R - sum c^dag c; its range fixes one
     vacuum vector e_i per canonical copy,
  3. grow each copy as (e_i, c_1^dag e_i, .., c_p^dag e_i); the relations
     force these m(p+1) vectors to be orthonormal,
  4. everything orthogonal to them is annihilated by all generators,
  5. stack the vectors into the block-diagonalizing unitary U.

All decisions are residual based; nothing here assumes exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .canonical import canonical
from .errors import DimensionError, NotARepresentationError, NumericalDegeneracyError
from .linalg import DEFAULT_RANK_TOL, DEFAULT_TOL, as_matrix, haar_unitary, max_abs, orthonormal_range


@dataclass(frozen=True)
class OrthoRep:
    """Candidate representation: order p and p square matrices of equal size."""

    p: int
    dim: int
    c: list[np.ndarray]

    def __post_init__(self):
        if len(self.c) != self.p:
            raise DimensionError(f"expected {self.p} matrices, got {len(self.c)}")
        mats = [as_matrix(m) for m in self.c]
        for m in mats:
            if m.shape != (self.dim, self.dim):
                raise DimensionError(f"matrix shape {m.shape} does not match dim {self.dim}")
        object.__setattr__(self, "c", mats)


@dataclass(frozen=True)
class Decomposition:
    """Result of splitting a representation into canonical copies.

    ``basis`` is the dim x dim unitary U with
    U^dag c_a U = blockdiag(canonical c_a, repeated ``multiplicity`` times,
    then a zero block of size ``trivial_dim``).
    """

    multiplicity: int
    trivial_dim: int
    basis: np.ndarray
    residuals: dict[str, float]


def _occupied(rep: OrthoRep) -> np.ndarray:
    return sum(m.conj().T @ m for m in rep.c)


def infer_unit(rep: OrthoRep, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Representative of the algebra unit, solved from the relations.

    R := c_1 c_1^dag + sum_g c_g^dag c_g. The same R must arise from every
    annihilator index, and R must act as a two-sided unit on the generators;
    both are checked within ``tol``. A representation with all generators
    zero legitimately yields R = 0.
    """
    occ = _occupied(rep)
    unit = rep.c[0] @ rep.c[0].conj().T + occ
    for a in range(1, rep.p):
        other = rep.c[a] @ rep.c[a].conj().T + occ
        defect = max_abs(other - unit)
        if defect > tol:
            raise NotARepresentationError(
                f"unit candidates from indices 1 and {a + 1} disagree by {defect:.3e}")
    for a, m in enumerate(rep.c):
        defect = max(max_abs(unit @ m - m), max_abs(m @ unit - m))
        if defect > tol:
            raise NotARepresentationError(
                f"inferred unit fails the unit law on c_{a + 1} by {defect:.3e}")
    return unit


def verify(rep: OrthoRep, unit: np.ndarray | None = None, tol: float = DEFAULT_TOL) -> dict[str, float]:
    """Residuals of the orthofermion relations for the given matrices.

    ``unit`` is the matrix representing 1; when omitted it is inferred via
    :func:`infer_unit`. Keys cover the two defining relations plus the
    derived vacuum-projector properties; each value is the worst
    max_abs defect over all index combinations.
    """
    if unit is None:
        unit = infer_unit(rep, tol)
    unit = as_matrix(unit)
    if unit.shape != (rep.dim, rep.dim):
        raise DimensionError(f"unit shape {unit.shape} does not match dim {rep.dim}")

    occ = _occupied(rep)
    pi = unit - occ
    c = rep.c
    res: dict[str, float] = {}
    res["c_a c_b = 0"] = max(
        max_abs(c[a] @ c[b]) for a in range(rep.p) for b in range(rep.p))
    res["c_a c_b^dag + d_ab sum c^dag c = d_ab 1"] = max(
        max_abs(c[a] @ c[b].conj().T + (occ - unit if a == b else 0))
        for a in range(rep.p) for b in range(rep.p))
    res["Pi^2 = Pi"] = max_abs(pi @ pi - pi)
    res["Pi^dag = Pi"] = max_abs(pi.conj().T - pi)
    res["Pi c_a = c_a"] = max(max_abs(pi @ m - m) for m in c)
    res["c_a^dag Pi = c_a^dag"] = max(max_abs(m.conj().T @ pi - m.conj().T) for m in c)
    res["c_a Pi = 0"] = max(max_abs(m @ pi) for m in c)
    res["Pi c_a^dag = 0"] = max(max_abs(pi @ m.conj().T) for m in c)
    return res


def _expected_blocks(p: int, multiplicity: int, trivial_dim: int) -> list[np.ndarray]:
    """Target block-diagonal annihilators for a decomposed representation."""
    n = multiplicity * (p + 1) + trivial_dim
    model = canonical(p)
    out = []
    for a in range(p):
        m = np.zeros((n, n), dtype=complex)
        for i in range(multiplicity):
            lo = i * (p + 1)
            m[lo:lo + p + 1, lo:lo + p + 1] = model.c[a]
        out.append(m)
    return out


def decompose(rep: OrthoRep, tol: float = DEFAULT_TOL,
              rank_tol: float = DEFAULT_RANK_TOL) -> Decomposition:
    """Split ``rep`` into canonical copies plus a trivial block.

    Requires :func:`verify` to pass within ``tol`` for the inferred unit.
    Numerical rank decisions use ``rank_tol`` (relative). Raises
    :class:`NumericalDegeneracyError` when the grown family of copy vectors
    is not orthonormal within ``tol``, which signals an input sitting too
    close to the rank threshold to classify.
    """
    unit = infer_unit(rep, tol)
    relations = verify(rep, unit, tol)
    worst = max(relations.values())
    if worst > tol:
        raise NotARepresentationError(f"relations fail with residual {worst:.3e} > tol {tol:.3e}")

    n = rep.dim
    pi = unit - _occupied(rep)
    # a projector that is zero within tol has no range; the relative rank
    # threshold alone would otherwise promote roundoff noise to basis vectors
    vacua = orthonormal_range(pi, rank_tol) if max_abs(pi) > tol \
        else np.zeros((n, 0), dtype=complex)
    m = vacua.shape[1]

    if m == 0:
        stray = max(max_abs(mat) for mat in rep.c)
        if stray > tol:
            raise NotARepresentationError(
                f"vacuum projector vanishes but generators have norm {stray:.3e}")
        residuals = {"unitarity": 0.0, "block": stray, "gram": 0.0,
                     "complement annihilation": stray}
        return Decomposition(0, n, np.eye(n, dtype=complex), residuals)

    columns = []
    for i in range(m):
        e = vacua[:, i]
        columns.append(e)
        for mat in rep.c:
            columns.append(mat.conj().T @ e)
    family = np.column_stack(columns)

    gram_defect = max_abs(family.conj().T @ family - np.eye(m * (rep.p + 1)))
    if gram_defect > tol:
        raise NumericalDegeneracyError(
            f"copy vectors fail orthonormality with Gram defect {gram_defect:.3e}")

    residual_proj = np.eye(n) - family @ family.conj().T
    complement = orthonormal_range(residual_proj, rank_tol) if max_abs(residual_proj) > tol \
        else np.zeros((n, 0), dtype=complex)
    t = complement.shape[1]
    if m * (rep.p + 1) + t != n:
        raise NumericalDegeneracyError(
            f"dimension bookkeeping failed: {m} copies of {rep.p + 1} plus {t} != {n}")
    annihilation = 0.0
    if t:
        annihilation = max(
            max(max_abs(mat @ complement), max_abs(mat.conj().T @ complement))
            for mat in rep.c)
        if annihilation > tol:
            raise NotARepresentationError(
                f"complement of the copies is not annihilated, residual {annihilation:.3e}")

    basis = np.hstack([family, complement])
    expected = _expected_blocks(rep.p, m, t)
    residuals = {
        "unitarity": max_abs(basis.conj().T @ basis - np.eye(n)),
        "block": max(max_abs(basis.conj().T @ rep.c[a] @ basis - expected[a])
                     for a in range(rep.p)),
        "gram": gram_defect,
        "complement annihilation": annihilation,
    }
    return Decomposition(m, t, basis, residuals)


def random_rep(p: int, copies: int, trivial: int, seed: int) -> OrthoRep:
    """Scrambled direct sum of canonical copies and a zero block.

    The block-diagonal model is conjugated by a Haar random unitary drawn
    deterministically from ``seed``, so the result passes :func:`verify`
    up to roundoff while hiding the block structure from plain inspection.
    """
    if copies < 0 or trivial < 0 or copies + trivial < 1:
        raise ValueError("need copies >= 0, trivial >= 0 and copies + trivial >= 1")
    blocks = _expected_blocks(p, copies, trivial)
    n = copies * (p + 1) + trivial
    u = haar_unitary(n, np.random.default_rng(seed))
    return OrthoRep(p=p, dim=n, c=[u @ b @ u.conj().T for b in blocks])
