"""Spectrum and Riesz projections of n-potent operators.

Every eigenprojection can be computed in three ways: the closed-form
filter polynomial ``(1/(n-1)) sum_k w**(-jk) T**k`` (``I - T**(n-1)`` for
the eigenvalue 0), and trapezoidal quadrature of the Cauchy integral
``(1/(2 pi i)) \\oint (zI - T)^{-1} dz`` on a small circle with the
resolvent taken either from its finite expansion in powers of ``T`` or
from a direct linear solve at every node.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IndexOutOfRange, NearSpectrum, SingularMatrix
from .linalg import DEFAULT_TOL, Tolerances, identity, norm, numerical_rank, solve
from .potency import NPotentOperator, kernel_projection
from .roots import candidates, min_separation, omega, separation, unity_power

__all__ = [
    "ContourSpec",
    "Spectrum",
    "omega",
    "riesz_coefficients",
    "riesz_polynomial",
    "riesz_zero",
    "resolvent_expansion",
    "resolvent_direct",
    "riesz_contour",
    "spectrum",
    "semisimplicity_check",
]


@dataclass(frozen=True)
class Spectrum:
    order: int
    contains_zero: bool
    unity_exponents: frozenset

    @property
    def omega(self) -> complex:
        return omega(self.order)

    def eigenvalue(self, j) -> complex:
        return 0j if j is None else unity_power(j, self.order - 1)

    def keys(self) -> list:
        """Eigenvalue keys in canonical order: ``None`` (for 0) first, then exponents."""
        head = [None] if self.contains_zero else []
        return head + sorted(self.unity_exponents)

    def values(self) -> list[complex]:
        return [self.eigenvalue(j) for j in self.keys()]


def default_radius(n: int, tol: Tolerances = DEFAULT_TOL) -> float:
    return min(tol.contour_radius, 0.9 * min_separation(n))


@dataclass(frozen=True)
class ContourSpec:
    """Circle ``|z - center| = radius`` sampled at ``nodes`` equispaced points."""

    center: complex
    radius: float
    nodes: int

    @classmethod
    def around(cls, n: int, j=None, tol: Tolerances = DEFAULT_TOL, radius=None, nodes=None):
        """Contour around ``w**j`` (or 0 when ``j`` is None) for order ``n``.

        The default radius is ``contour_radius`` capped at 0.9 times half the
        smallest gap between candidate eigenvalues.
        """
        center = 0j if j is None else unity_power(j, n - 1)
        if radius is None:
            radius = default_radius(n, tol)
        return cls(center=center, radius=float(radius), nodes=int(nodes or tol.contour_nodes))

    def points(self) -> np.ndarray:
        theta = 2 * np.pi * np.arange(self.nodes) / self.nodes
        return self.center + self.radius * np.exp(1j * theta)


def riesz_coefficients(n: int, j: int) -> np.ndarray:
    """Coefficients of ``T, T**2, ..., T**(n-1)`` in the projection onto ``w**j``."""
    if not 0 <= j <= n - 2:
        raise IndexOutOfRange(f"exponent {j} outside [0, {n - 2}]")
    m = n - 1
    return np.array([unity_power(-j * k, m) / m for k in range(1, n)], dtype=np.complex128)


def combine(op: NPotentOperator, coeffs) -> np.ndarray:
    """``sum_k coeffs[k-1] T**k`` accumulated in index order."""
    out = np.zeros((op.dim, op.dim), dtype=np.complex128)
    for k, c in enumerate(coeffs, start=1):
        if c != 0:
            out += c * op.pows[k]
    return out


def riesz_polynomial(op: NPotentOperator, j: int) -> np.ndarray:
    """Riesz projection for the eigenvalue ``w**j`` via the filter polynomial."""
    return combine(op, riesz_coefficients(op.order, j))


def riesz_zero(op: NPotentOperator) -> np.ndarray:
    """Riesz projection for the eigenvalue 0, ``I - T**(n-1)``."""
    return kernel_projection(op)


def _check_resolvent_point(z: complex, n: int, tol: Tolerances):
    if abs(z) <= tol.rank_tol or abs(z ** (n - 1) - 1) <= tol.rank_tol:
        raise NearSpectrum(f"z = {z} is too close to 0 or a {n - 1}-th root of unity")


def resolvent_weights(z: complex, n: int) -> tuple[complex, np.ndarray]:
    """Scalars ``(c0, c)`` with ``(zI - T)^{-1} = c0*I + sum_k c[k-1] T**k``."""
    d = z ** (n - 1) - 1
    c = np.array([z ** (n - k - 2) / d for k in range(1, n - 1)] + [1 / (z * d)], dtype=np.complex128)
    return 1 / z, c


def resolvent_expansion(op: NPotentOperator, z: complex, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """``(zI - T)^{-1}`` from the finite expansion in powers of ``T``."""
    z = complex(z)
    _check_resolvent_point(z, op.order, tol)
    c0, c = resolvent_weights(z, op.order)
    return c0 * identity(op.dim) + combine(op, c)


def resolvent_direct(op: NPotentOperator, z: complex, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """``(zI - T)^{-1}`` by a dense linear solve."""
    z = complex(z)
    eye = identity(op.dim)
    try:
        return solve(z * eye - op.matrix, eye, tol)
    except SingularMatrix as exc:
        raise NearSpectrum(f"zI - T is singular at z = {z}") from exc


def riesz_contour(
    op: NPotentOperator,
    spec: ContourSpec,
    resolvent: str = "expansion",
    tol: Tolerances = DEFAULT_TOL,
) -> np.ndarray:
    """Trapezoidal approximation of ``(1/(2 pi i)) \\oint (zI - T)^{-1} dz``.

    With ``z_m = c + r e^{i theta_m}`` we have ``dz = i (z_m - c) dtheta``, so
    the rule reduces to ``(1/M) sum_m (z_m - c) R(z_m)``. Nodes are reduced
    in index order.
    """
    n = op.order
    if spec.nodes < 16:
        raise ValueError("contour needs at least 16 nodes")
    if not any(abs(spec.center - p) <= 1e-12 for p in candidates(n)):
        raise ValueError(f"center {spec.center} is not 0 or a {n - 1}-th root of unity")
    gap = separation(spec.center, n)
    if not 0 < spec.radius < gap:
        raise NearSpectrum(f"radius {spec.radius} must lie in (0, {gap:.6g}) to isolate {spec.center}")
    zs = spec.points()
    if resolvent == "expansion":
        # the expansion is linear in the powers of T, so integrate its scalar weights
        w0 = 0j
        w = np.zeros(n - 1, dtype=np.complex128)
        for z in zs:
            _check_resolvent_point(complex(z), n, tol)
            c0, c = resolvent_weights(complex(z), n)
            h = z - spec.center
            w0 += h * c0
            w += h * c
        w0 /= spec.nodes
        w /= spec.nodes
        return w0 * identity(op.dim) + combine(op, w)
    if resolvent == "direct":
        acc = np.zeros((op.dim, op.dim), dtype=np.complex128)
        for z in zs:
            acc += (z - spec.center) * resolvent_direct(op, complex(z), tol)
        return acc / spec.nodes
    raise ValueError(f"unknown resolvent backend {resolvent!r}")


def spectrum(op: NPotentOperator, tol: Tolerances = DEFAULT_TOL) -> Spectrum:
    unity = frozenset(j for j in range(op.order - 1) if norm(riesz_polynomial(op, j)) > tol.proj_tol)
    return Spectrum(
        order=op.order,
        contains_zero=norm(kernel_projection(op)) > tol.proj_tol,
        unity_exponents=unity,
    )


def semisimplicity_check(op: NPotentOperator, lam: complex, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True iff ``rank(T - lam I) == rank((T - lam I)**2)``."""
    shifted = op.matrix - complex(lam) * identity(op.dim)
    return numerical_rank(shifted, tol) == numerical_rank(shifted @ shifted, tol)
