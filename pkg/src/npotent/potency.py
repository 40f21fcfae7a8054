"""Detection and certification of n-potent matrices (T**n == T)."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotNPotent
from .linalg import (
    DEFAULT_TOL,
    Tolerances,
    as_cmatrix,
    identity,
    norm,
    numerical_rank,
    powers,
    projection_rank,
)

DEFAULT_N_MAX = 64


def _potency_bound(a: np.ndarray, tol: Tolerances) -> float:
    return tol.potency_tol * max(1.0, norm(a))


@dataclass(frozen=True, eq=False)
class NPotentOperator:
    """A matrix together with a verified order ``n`` such that ``T**n == T``.

    ``pows[k]`` holds ``T**k`` for ``k = 0 .. n-1``; everything downstream
    (Riesz projections, comb(T) elements, the resolvent expansion) is a
    linear combination of these.
    """

    matrix: np.ndarray
    order: int
    residual: float
    pows: list = field(repr=False)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def power(self, k: int) -> np.ndarray:
        """``T**k`` for any ``k >= 0``, reduced with ``T**n == T``."""
        if k < 0:
            raise ValueError("exponent must be non-negative")
        if k >= self.order:
            k = 1 + (k - 1) % (self.order - 1)
        return self.pows[k]


def detect_order(a, n_max: int = DEFAULT_N_MAX, tol: Tolerances = DEFAULT_TOL):
    """Smallest ``n`` in ``[2, n_max]`` with ``||A**n - A||_F`` within tolerance.

    Returns ``None`` when no such ``n`` exists.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    a = as_cmatrix(a)
    bound = _potency_bound(a, tol)
    p = a
    for n in range(2, n_max + 1):
        with np.errstate(over="ignore", invalid="ignore"):
            p = p @ a
        if not np.all(np.isfinite(p)):
            return None
        if norm(p - a) <= bound:
            return n
    return None


def certify(a, n=None, n_max: int = DEFAULT_N_MAX, tol: Tolerances = DEFAULT_TOL) -> NPotentOperator:
    """Build an ``NPotentOperator``.

    With ``n`` omitted the smallest order is detected. An explicit ``n`` is
    checked as given: a 7-potent matrix that is also 4-potent can be
    certified at either order, and every formula in the package holds for
    any valid order.
    """
    a = as_cmatrix(a)
    if n is None:
        n = detect_order(a, n_max, tol)
        if n is None:
            raise NotNPotent(f"no order n <= {n_max} satisfies T^n = T")
    elif n < 2:
        raise ValueError("order n must be at least 2")
    pows = powers(a, n)
    residual = norm(pows[n] - a)
    if residual > _potency_bound(a, tol):
        raise NotNPotent(f"||T^{n} - T||_F = {residual:.3e} exceeds tolerance")
    return NPotentOperator(matrix=a, order=n, residual=residual, pows=pows[:n])


def nonzero_part_projection(op: NPotentOperator) -> np.ndarray:
    """``T**(n-1)``, the projection onto the span of the non-zero eigenspaces."""
    return op.pows[op.order - 1]


def kernel_projection(op: NPotentOperator) -> np.ndarray:
    """``I - T**(n-1)``, the projection onto ``Ker(T)`` (zero when T is periodic)."""
    return identity(op.dim) - op.pows[op.order - 1]


def is_periodic(op: NPotentOperator, tol: Tolerances = DEFAULT_TOL) -> bool:
    return norm(op.pows[op.order - 1] - identity(op.dim)) <= tol.proj_tol


def periodic_inverse(op: NPotentOperator) -> np.ndarray:
    """``T**(n-2)``, which is ``T**-1`` whenever ``T`` is periodic."""
    return op.power(op.order - 2) if op.order > 2 else identity(op.dim)


def kernel_rank_consistent(op: NPotentOperator, tol: Tolerances = DEFAULT_TOL) -> bool:
    """``rank(I - T**(n-1)) == dim - rank(T)``."""
    return projection_rank(kernel_projection(op), tol) == op.dim - numerical_rank(op.matrix, tol)
