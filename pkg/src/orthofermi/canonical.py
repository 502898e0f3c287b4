"""Canonical irreducible representation and its ladder operators.

On the (p+1)-dimensional Fock space with kets |0>, |1>, .., |p> (ket n is
matrix row/column n+1), the annihilators act as the matrix units

    c_a = E_{1, a+1}

so c_a |a> = |0> and c_a kills every other ket. The lowering operator

    L = c_1 + sum_{a=2..p} c_{a-1}^dag c_a

steps |n> -> |n-1> and kills |0>; adding the wrap-around creator gives the
cyclic lowering operator F = L + c_p^dag with F^{p+1} = 1. Every identity
in :func:`ladder_identity_residuals` holds exactly because all matrices
involved have 0/1 integer entries.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, OrderError
from .linalg import max_abs


@dataclass(frozen=True)
class CanonicalRep:
    """Order p plus the p canonical annihilator matrices, each (p+1)x(p+1)."""

    p: int
    c: list[np.ndarray]

    @property
    def dim(self) -> int:
        return self.p + 1


def canonical(p: int) -> CanonicalRep:
    """The canonical representation: c_a is the matrix unit E_{1,a+1}."""
    if int(p) != p or p < 1:
        raise OrderError(f"order p must be a positive integer, got {p!r}")
    p = int(p)
    cs = []
    for a in range(1, p + 1):
        m = np.zeros((p + 1, p + 1), dtype=complex)
        m[0, a] = 1.0
        cs.append(m)
    return CanonicalRep(p=p, c=cs)


def pi_of(rep, unit: np.ndarray) -> np.ndarray:
    """Vacuum projector unit - sum_a c_a^dag c_a of a representation.

    ``rep`` is anything with a ``c`` attribute holding the annihilator
    matrices; ``unit`` must represent 1 on the same space (the identity for
    the canonical representation).
    """
    unit = np.asarray(unit, dtype=complex)
    for m in rep.c:
        if m.shape != unit.shape:
            raise DimensionError(f"annihilator shape {m.shape} does not match unit {unit.shape}")
    occupied = sum(m.conj().T @ m for m in rep.c)
    return unit - occupied


def lowering_from(c: list[np.ndarray]) -> np.ndarray:
    """L = c_1 + sum_{a=2..p} c_{a-1}^dag c_a built from given annihilators."""
    out = c[0].copy()
    for a in range(1, len(c)):
        out = out + c[a - 1].conj().T @ c[a]
    return out


def cyclic_from(c: list[np.ndarray]) -> np.ndarray:
    """F = L + c_p^dag built from given annihilators."""
    return lowering_from(c) + c[-1].conj().T


def ladder_L(p: int) -> np.ndarray:
    """Lowering operator of the canonical representation (kills |0>)."""
    return lowering_from(canonical(p).c)


def ladder_F(p: int) -> np.ndarray:
    """Cyclic lowering operator; a (p+1)-cycle permutation matrix."""
    return cyclic_from(canonical(p).c)


def ladder_identity_residuals(p: int) -> dict[str, float]:
    """Residuals of the ladder-operator identity catalog on the canonical rep.

    Every entry is max_abs(LHS - RHS) and equals 0.0 exactly. Conventions
    that make the catalog uniform down to p = 1: c_0 means Pi and L^0 means
    the identity. The sandwich identity L^{p-k} L^dag L^k = L^{p-1} is listed
    for k in 1..p-1; at k = p the product instead equals L^{p-1} - c_{p-1},
    which is covered by its own entry.
    """
    rep = canonical(p)
    p = rep.p
    n = p + 1
    eye = np.eye(n, dtype=complex)
    c = rep.c
    pi = pi_of(rep, eye)
    L = lowering_from(c)
    F = cyclic_from(c)
    Ld = L.conj().T

    def c_or_pi(k: int) -> np.ndarray:
        # c_0 denotes the vacuum projector; closes the identities at p = 1
        return pi if k == 0 else c[k - 1]

    def power(m: np.ndarray, k: int) -> np.ndarray:
        return np.linalg.matrix_power(m, k)

    res: dict[str, float] = {}
    res["Ldag L = 1 - Pi"] = max_abs(Ld @ L - (eye - pi))
    res["L Ldag = 1 - c_p^dag c_p"] = max_abs(L @ Ld - (eye - c[p - 1].conj().T @ c[p - 1]))

    for k in range(1, p + 3):
        if k < p:
            closed = c[k - 1] + sum(c[a - 1].conj().T @ c[a + k - 1] for a in range(1, p - k + 1))
        elif k == p:
            closed = c[p - 1]
        else:
            closed = np.zeros((n, n), dtype=complex)
        res[f"L^{k} closed form"] = max_abs(power(L, k) - closed)

    res["L^p Ldag = c_{p-1}"] = max_abs(power(L, p) @ Ld - c_or_pi(p - 1))
    res["Ldag L^p = L^{p-1} - c_{p-1}"] = max_abs(Ld @ power(L, p) - (power(L, p - 1) - c_or_pi(p - 1)))

    for k in range(1, p + 1):
        res[f"L^{k} Pi = 0"] = max_abs(power(L, k) @ pi)
        res[f"Pi L^{k} = c_{k}"] = max_abs(pi @ power(L, k) - c[k - 1])

    for k in range(1, p):
        res[f"L^{p - k} Ldag L^{k} = L^{p-1}"] = max_abs(
            power(L, p - k) @ Ld @ power(L, k) - power(L, p - 1))

    res["L^{p+1} = 0"] = max_abs(power(L, p + 1))
    ssum = sum(power(L, p - k) @ Ld @ power(L, k) for k in range(p + 1))
    res["sum_k L^{p-k} Ldag L^k = p L^{p-1}"] = max_abs(ssum - p * power(L, p - 1))
    res["F^{p+1} = 1"] = max_abs(power(F, p + 1) - eye)
    return res
