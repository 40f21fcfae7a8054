"""Projections inside ``comb(T) = span{T, T**2, ..., T**(n-1)}``.

A projection in comb(T) is determined by the subset ``S`` of non-zero
eigenvalues on which it acts as the identity. Subsets are stored as sets
of exponents ``j`` (standing for ``w**j``), which makes the Boolean
operations plain set algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import OrderMismatch, TooManyEigenvalues, VerificationFailed
from .linalg import DEFAULT_TOL, Tolerances, norm
from .potency import NPotentOperator
from .riesz import combine, spectrum
from .roots import eigenvalue_name, unity_power

MAX_ENUMERATION_EIGENVALUES = 20


@dataclass(frozen=True, eq=False)
class CombCoefficients:
    """``a_1, ..., a_{n-1}`` for the element ``sum_i a_i T**i``."""

    order: int
    a: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=np.complex128).reshape(-1)
        if self.order < 2:
            raise ValueError("order must be at least 2")
        if a.size > self.order - 1:
            raise ValueError(f"expected at most {self.order - 1} coefficients, got {a.size}")
        if a.size < self.order - 1:
            a = np.concatenate([a, np.zeros(self.order - 1 - a.size, dtype=np.complex128)])
        object.__setattr__(self, "a", a)

    def __eq__(self, other):
        if not isinstance(other, CombCoefficients):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.a, other.a)


@dataclass(frozen=True)
class SpectrumSubset:
    order: int
    exponents: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        exps = frozenset(int(j) for j in self.exponents)
        if any(not 0 <= j <= self.order - 2 for j in exps):
            raise ValueError(f"exponents must lie in [0, {self.order - 2}]")
        object.__setattr__(self, "exponents", exps)

    def sorted(self) -> list[int]:
        return sorted(self.exponents)

    def names(self) -> list[str]:
        return [eigenvalue_name(j, self.order) for j in self.sorted()]

    def __str__(self):
        return "{" + ", ".join(self.names()) + "}"


@dataclass(frozen=True)
class BetaVector:
    """Scalar ``beta_lambda = sum_i a_i lambda**i`` for each candidate eigenvalue."""

    beta: dict
    beta_zero: complex = 0j


class ProjectionEntry(NamedTuple):
    subset: SpectrumSubset
    coeffs: CombCoefficients
    matrix: np.ndarray


def _check_order(op: NPotentOperator, c: CombCoefficients):
    if c.order != op.order:
        raise OrderMismatch(f"coefficients are for order {c.order}, operator has order {op.order}")


def eval_comb(op: NPotentOperator, c: CombCoefficients) -> np.ndarray:
    _check_order(op, c)
    return combine(op, c.a)


def betas(c: CombCoefficients) -> BetaVector:
    m = c.order - 1
    beta = {}
    for j in range(m):
        acc = 0j
        for i, a in enumerate(c.a, start=1):
            acc += a * unity_power(i * j, m)
        beta[j] = acc
    return BetaVector(beta=beta)


def classify_projection(op: NPotentOperator, c: CombCoefficients, tol: Tolerances = DEFAULT_TOL):
    """Subset ``S`` with ``eval_comb(op, c) == P_S``, or ``None`` if it is not a projection.

    Only exponents in the spectrum of ``op`` are inspected; beta values at
    absent eigenvalues multiply zero projections and are ignored.
    """
    _check_order(op, c)
    present = spectrum(op, tol).unity_exponents
    beta = betas(c).beta
    chosen = set()
    for j in present:
        b = beta[j]
        if abs(b - 1) <= tol.proj_tol:
            chosen.add(j)
        elif abs(b) > tol.proj_tol:
            return None
    p = eval_comb(op, c)
    if norm(p @ p - p) > tol.proj_tol:
        return None
    return SpectrumSubset(op.order, frozenset(chosen))


def subset_to_coeffs(s: SpectrumSubset) -> CombCoefficients:
    """``a_k = (1/(n-1)) sum_{j in S} w**(-jk)``, i.e. the sum of the filter polynomials."""
    m = s.order - 1
    a = np.zeros(m, dtype=np.complex128)
    for k in range(1, m + 1):
        acc = 0j
        for j in s.sorted():
            acc += unity_power(-j * k, m)
        a[k - 1] = acc / m
    return CombCoefficients(s.order, a)


def projection_for(op: NPotentOperator, s: SpectrumSubset) -> np.ndarray:
    """``P_S`` as a matrix."""
    return eval_comb(op, subset_to_coeffs(s))


def enumerate_projections(op: NPotentOperator, tol: Tolerances = DEFAULT_TOL) -> list[ProjectionEntry]:
    """All ``2**|sigma_0|`` projections in comb(T), in binary counting order.

    Bit ``b`` of the subset index selects the ``b``-th smallest exponent of
    the non-zero spectrum.
    """
    exps = sorted(spectrum(op, tol).unity_exponents)
    if len(exps) > MAX_ENUMERATION_EIGENVALUES:
        raise TooManyEigenvalues(f"{len(exps)} non-zero eigenvalues; limit is {MAX_ENUMERATION_EIGENVALUES}")
    out = []
    for index in range(1 << len(exps)):
        s = SpectrumSubset(op.order, frozenset(e for b, e in enumerate(exps) if index >> b & 1))
        c = subset_to_coeffs(s)
        p = eval_comb(op, c)
        r = norm(p @ p - p)
        if r > tol.proj_tol:
            raise VerificationFailed(f"idempotency of P_{s}", r, tol.proj_tol)
        out.append(ProjectionEntry(s, c, p))
    return out


def _same_order(*subsets: SpectrumSubset):
    if len({s.order for s in subsets}) != 1:
        raise OrderMismatch("subsets belong to operators of different order")


def boolean_meet(s: SpectrumSubset, r: SpectrumSubset) -> SpectrumSubset:
    _same_order(s, r)
    return SpectrumSubset(s.order, s.exponents & r.exponents)


def boolean_join(s: SpectrumSubset, r: SpectrumSubset) -> SpectrumSubset:
    _same_order(s, r)
    return SpectrumSubset(s.order, s.exponents | r.exponents)


def boolean_complement(s: SpectrumSubset, full: SpectrumSubset) -> SpectrumSubset:
    _same_order(s, full)
    if not s.exponents <= full.exponents:
        raise ValueError(f"{s} is not contained in {full}")
    return SpectrumSubset(s.order, full.exponents - s.exponents)


def full_subset(op: NPotentOperator, tol: Tolerances = DEFAULT_TOL) -> SpectrumSubset:
    """The whole non-zero spectrum as a subset."""
    return SpectrumSubset(op.order, spectrum(op, tol).unity_exponents)
