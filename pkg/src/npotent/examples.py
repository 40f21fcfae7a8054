"""Constructors for the standard worked operators and seeded random fixtures."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import UnsatisfiableConditioning
from .linalg import identity
from .roots import exponent_of, unity_power

MAX_CONDITIONING_TRIES = 32


def gen_tripotent_family(p: int) -> np.ndarray:
    """``[[1, -2p], [0, -1]]``: tri-potent, with ``||P_1||_inf = 1 + p``."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    return np.array([[1, -2 * p], [0, -1]], dtype=np.complex128)


def gen_nonhermitian() -> np.ndarray:
    """An oblique projection whose kernel projection is not Hermitian."""
    return np.array([[1, 1], [0, 0]], dtype=np.complex128)


def gen_diag_full(n: int) -> np.ndarray:
    """``diag(0, 1, w, ..., w**(n-2))``: n-potent with every candidate eigenvalue."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return np.diag([0j] + [unity_power(j, n - 1) for j in range(n - 1)])


@dataclass(frozen=True)
class ReflectionGrid:
    """Midpoint grid ``t_i = (i + 1/2)/m`` on [0, 1]; ``t -> 1 - t`` maps node i to m-1-i."""

    k: int
    m: int

    @property
    def nodes(self) -> np.ndarray:
        return (np.arange(self.m) + 0.5) / self.m

    @property
    def scale(self) -> complex:
        """``a = (1/2) e^{i pi / k}``."""
        return 0.5 * cmath.exp(1j * math.pi / self.k)

    def reflection(self) -> np.ndarray:
        return np.fliplr(identity(self.m))

    def operator(self) -> np.ndarray:
        return self.scale * (self.reflection() - identity(self.m))


def gen_reflection(k: int, m: int) -> np.ndarray:
    """Discretised ``Tf(t) = a (f(1-t) - f(t))`` on an ``m``-point midpoint grid.

    ``T`` is ``(2k+1)``-potent and its non-zero eigenvalue is ``-e^{i pi/k}``.
    For odd ``k`` that eigenvalue is also a ``k``-th root of unity, so the
    smallest order can be lower than ``2k+1``.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if m < 4:
        raise ValueError("grid needs at least 4 points")
    return ReflectionGrid(k, m).operator()


def reflection_order(k: int) -> int:
    return 2 * k + 1


def _snap_ranks(n: int, ranks) -> list[tuple[complex, int]]:
    snapped = {}
    for value, mult in ranks.items():
        j = exponent_of(value, n)
        if mult < 0:
            raise ValueError("multiplicities must be non-negative")
        key = -1 if j is None else j
        snapped[key] = snapped.get(key, 0) + int(mult)
    out = []
    for key in sorted(snapped):
        lam = 0j if key == -1 else unity_power(key, n - 1)
        out.append((lam, snapped[key]))
    return out


def gen_random_npotent(n: int, ranks, cond_bound: float = 100.0, seed: int = 0) -> np.ndarray:
    """``S D S^{-1}`` with ``D`` listing each eigenvalue with its multiplicity.

    ``ranks`` maps eigenvalues (0 or ``(n-1)``-th roots of unity, matched to
    1e-9) to multiplicities. ``S`` is a complex Gaussian matrix resampled
    until ``cond(S) <= cond_bound``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    items = _snap_ranks(n, ranks)
    diag = np.array([lam for lam, mult in items for _ in range(mult)], dtype=np.complex128)
    dim = diag.size
    if dim < 1:
        raise ValueError("total multiplicity must be at least 1")
    rng = np.random.default_rng(seed)
    for _ in range(MAX_CONDITIONING_TRIES):
        s = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        if np.linalg.cond(s) <= cond_bound:
            # T = (S D) S^{-1}, via a solve against S^T
            return np.linalg.solve(s.T, (s * diag).T).T
    raise UnsatisfiableConditioning(f"no similarity with cond <= {cond_bound} after {MAX_CONDITIONING_TRIES} draws")


def parse_slot_ranks(n: int, text: str) -> dict:
    """Parse ``"0:2,1:1,2:2"`` where slot 0 is the eigenvalue 0 and slot s >= 1 is ``w**(s-1)``."""
    ranks = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        slot, _, mult = part.partition(":")
        slot, mult = int(slot), int(mult)
        if not 0 <= slot <= n - 1:
            raise ValueError(f"slot {slot} outside [0, {n - 1}]")
        lam = 0j if slot == 0 else unity_power(slot - 1, n - 1)
        ranks[lam] = ranks.get(lam, 0) + mult
    return ranks
