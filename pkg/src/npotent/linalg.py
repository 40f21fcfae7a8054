"""Dense complex matrix helpers shared by every other module.

Matrices are plain ``numpy`` arrays of dtype ``complex128``; ``as_cmatrix``
is the single entry point that validates shape and finiteness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, SingularMatrix

NORM_KINDS = ("frobenius", "inf_induced", "one_induced")


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds used for certification and classification."""

    potency_tol: float = 1e-10
    proj_tol: float = 1e-8
    rank_tol: float = 1e-10
    contour_nodes: int = 256
    contour_radius: float = 0.3

    def __post_init__(self):
        for name in ("potency_tol", "proj_tol", "rank_tol", "contour_radius"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.contour_nodes < 16:
            raise ValueError("contour_nodes must be at least 16")


DEFAULT_TOL = Tolerances()


def as_cmatrix(a) -> np.ndarray:
    """Return ``a`` as a square, finite ``complex128`` array."""
    m = np.array(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise DimensionMismatch(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=np.complex128)


def _check_same_dim(a: np.ndarray, b: np.ndarray):
    if a.shape != b.shape:
        raise DimensionMismatch(f"dimension mismatch: {a.shape} vs {b.shape}")


def mat_mul(a, b) -> np.ndarray:
    a, b = as_cmatrix(a), as_cmatrix(b)
    _check_same_dim(a, b)
    return a @ b


def mat_pow(a, k: int) -> np.ndarray:
    """``a**k`` by repeated squaring; ``a**0`` is the identity."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    a = as_cmatrix(a)
    result = identity(a.shape[0])
    base = a
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def powers(a: np.ndarray, top: int) -> list[np.ndarray]:
    """``[a**0, a**1, ..., a**top]`` by successive multiplication."""
    out = [identity(a.shape[0])]
    if top >= 1:
        out.append(a.copy())
    for _ in range(2, top + 1):
        out.append(out[-1] @ a)
    return out


def singular_values(a) -> np.ndarray:
    return np.linalg.svd(as_cmatrix(a), compute_uv=False)


def solve(a, b, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Solve ``a @ x = b``; refuses numerically singular ``a``."""
    a, b = as_cmatrix(a), as_cmatrix(b)
    _check_same_dim(a, b)
    s = singular_values(a)
    if s[0] == 0 or s[-1] <= tol.rank_tol * s[0]:
        raise SingularMatrix(f"smallest singular value {s[-1]:.3e} vs largest {s[0]:.3e}")
    return np.linalg.solve(a, b)


def norm(a, kind: str = "frobenius") -> float:
    a = np.asarray(a, dtype=np.complex128)
    mag = np.abs(a)
    if kind == "frobenius":
        # scale by the largest entry so huge matrices do not overflow when squared
        top = float(mag.max()) if mag.size else 0.0
        if top == 0.0 or not np.isfinite(top):
            return top
        return top * float(np.sqrt(np.sum((mag / top) ** 2)))
    if kind == "inf_induced":
        return float(mag.sum(axis=1).max())
    if kind == "one_induced":
        return float(mag.sum(axis=0).max())
    raise ValueError(f"unknown norm kind {kind!r}; expected one of {NORM_KINDS}")


def numerical_rank(a, tol: Tolerances = DEFAULT_TOL) -> int:
    s = singular_values(a)
    if s[0] == 0:
        return 0
    return int(np.count_nonzero(s > tol.rank_tol * s[0]))


def projection_rank(p, tol: Tolerances = DEFAULT_TOL) -> int:
    """Rank of a (near-)projection; a matrix below ``proj_tol`` counts as zero.

    A nonzero projection has largest singular value at least 1, so the
    absolute cut only removes rounding noise such as ``I - T**(n-1)`` for
    periodic ``T``.
    """
    if norm(p) <= tol.proj_tol:
        return 0
    return numerical_rank(p, tol)
