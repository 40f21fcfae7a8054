"""Spectral decomposition ``T = sum_j lambda_j P_j`` and its verification."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateRange, NotApplicable, UnknownEigenvalue, VerificationFailed
from .linalg import DEFAULT_TOL, Tolerances, identity, norm, projection_rank
from .potency import NPotentOperator, nonzero_part_projection
from .riesz import riesz_polynomial, riesz_zero, spectrum
from .roots import unity_power


@dataclass(frozen=True, eq=False)
class Term:
    exponent: object  # None for the eigenvalue 0, else j with lambda = w**j
    eigenvalue: complex
    projection: np.ndarray
    rank: int


@dataclass(frozen=True)
class Residuals:
    idempotency: float
    disjointness: float
    completeness: float
    reconstruction: float

    def as_dict(self) -> dict:
        return dict(
            idempotency=self.idempotency,
            disjointness=self.disjointness,
            completeness=self.completeness,
            reconstruction=self.reconstruction,
        )


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    operator: NPotentOperator
    terms: tuple
    residuals: Residuals

    @property
    def order(self) -> int:
        return self.operator.order

    def term(self, lam) -> Term:
        lam = complex(lam)
        for t in self.terms:
            if abs(t.eigenvalue - lam) <= 1e-9:
                return t
        raise UnknownEigenvalue(f"{lam} is not an eigenvalue of this decomposition")

    def projection_for_exponent(self, j) -> np.ndarray:
        """``P_{w**j}``, or the zero matrix when ``w**j`` is not in the spectrum."""
        for t in self.terms:
            if t.exponent == j:
                return t.projection
        return np.zeros_like(self.operator.matrix)


def _residuals(op: NPotentOperator, terms) -> Residuals:
    eye = identity(op.dim)
    idem = max((norm(t.projection @ t.projection - t.projection) for t in terms), default=0.0)
    disjoint = 0.0
    for a in terms:
        for b in terms:
            if a is not b:
                disjoint = max(disjoint, norm(a.projection @ b.projection))
    total = np.zeros_like(eye)
    recon = np.zeros_like(eye)
    for t in terms:
        total += t.projection
        recon += t.eigenvalue * t.projection
    return Residuals(
        idempotency=idem,
        disjointness=disjoint,
        completeness=norm(total - eye),
        reconstruction=norm(recon - op.matrix),
    )


def spectral_decomposition(op: NPotentOperator, tol: Tolerances = DEFAULT_TOL, check: bool = True):
    """Terms ordered 0 first (if present), then ``w**j`` by ascending ``j``.

    With ``check`` set, raises ``VerificationFailed`` for the first residual
    above ``proj_tol`` or when the ranks do not add up to the dimension.
    """
    spec = spectrum(op, tol)
    terms = []
    if spec.contains_zero:
        p0 = riesz_zero(op)
        terms.append(Term(None, 0j, p0, projection_rank(p0, tol)))
    for j in sorted(spec.unity_exponents):
        p = riesz_polynomial(op, j)
        terms.append(Term(j, unity_power(j, op.order - 1), p, projection_rank(p, tol)))
    dec = SpectralDecomposition(operator=op, terms=tuple(terms), residuals=_residuals(op, terms))
    if check:
        for name, value in dec.residuals.as_dict().items():
            if value > tol.proj_tol:
                raise VerificationFailed(name, value, tol.proj_tol)
        total_rank = sum(t.rank for t in terms)
        if total_rank != op.dim:
            raise VerificationFailed("rank additivity", abs(total_rank - op.dim), 0)
    return dec


def reconstruct(dec: SpectralDecomposition) -> np.ndarray:
    out = np.zeros_like(dec.operator.matrix)
    for t in dec.terms:
        out += t.eigenvalue * t.projection
    return out


def eigenspace_basis(dec: SpectralDecomposition, lam, tol: Tolerances = DEFAULT_TOL) -> list[np.ndarray]:
    """Orthonormal basis of ``Ran(P_lam)`` from the leading left singular vectors."""
    t = dec.term(lam)
    u, _, _ = np.linalg.svd(t.projection)
    basis = [u[:, i].copy() for i in range(t.rank)]
    T = dec.operator.matrix
    for v in basis:
        r = norm(T @ v - t.eigenvalue * v)
        if r > tol.proj_tol:
            raise VerificationFailed("eigen-equation", r, tol.proj_tol)
    return basis


def verify_alternate_form(dec: SpectralDecomposition) -> float:
    """``||T - (1/(n-1)) sum_j w**j ((n-1) P_j + I)||_F``; needs ``n >= 3``."""
    n = dec.order
    if n < 3:
        raise NotApplicable("the alternate form needs n >= 3 (the roots of unity must sum to 0)")
    eye = identity(dec.operator.dim)
    acc = np.zeros_like(eye)
    for j in range(n - 1):
        acc += unity_power(j, n - 1) * ((n - 1) * dec.projection_for_exponent(j) + eye)
    return norm(dec.operator.matrix - acc / (n - 1))


def renorm_isometry_check(op: NPotentOperator, samples: int = 100, seed: int = 0,
                          tol: Tolerances = DEFAULT_TOL) -> float:
    """Worst relative change of ``||y||_Y = max_{0<=k<=n-2} ||T^k y||`` under ``y -> Ty``.

    Samples ``y = T**(n-1) x`` for Gaussian ``x``; on ``Ran(T**(n-1))`` the
    map ``T`` only permutes the orbit ``{T^k y}``, so the result should be at
    rounding level.
    """
    q = nonzero_part_projection(op)
    if norm(q) <= tol.proj_tol:
        raise DegenerateRange("T^(n-1) vanishes; the non-zero spectral subspace is trivial")
    rng = np.random.default_rng(seed)
    orbit = op.pows[: op.order - 1]

    def y_norm(y):
        return max(np.linalg.norm(p @ y) for p in orbit)

    worst = 0.0
    for _ in range(samples):
        x = rng.standard_normal(op.dim) + 1j * rng.standard_normal(op.dim)
        y = q @ x
        base = y_norm(y)
        if base == 0:
            continue
        worst = max(worst, abs(y_norm(op.matrix @ y) - base) / base)
    return worst
