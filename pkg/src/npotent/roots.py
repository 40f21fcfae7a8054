"""Roots of unity and the candidate eigenvalues of an n-potent operator."""

from __future__ import annotations

import cmath
import math

_QUARTER_TURNS = (1 + 0j, 1j, -1 + 0j, -1j)


def unity_power(j: int, m: int) -> complex:
    """``exp(2*pi*i*j/m)``, exact when the angle is a multiple of pi/2."""
    if m < 1:
        raise ValueError("m must be positive")
    j %= m
    if (4 * j) % m == 0:
        return _QUARTER_TURNS[4 * j // m]
    return cmath.exp(2j * math.pi * j / m)


def omega(n: int) -> complex:
    """Primitive ``(n-1)``-th root of unity for an ``n``-potent operator."""
    if n < 2:
        raise ValueError("order n must be at least 2")
    return unity_power(1, n - 1)


def candidates(n: int) -> list[complex]:
    """``[0, 1, w, ..., w**(n-2)]``: every point an n-potent spectrum can contain."""
    return [0j] + [unity_power(j, n - 1) for j in range(n - 1)]


def separation(center: complex, n: int) -> float:
    """Half the distance from ``center`` to the nearest other candidate point."""
    others = [abs(p - center) for p in candidates(n) if abs(p - center) > 1e-12]
    return min(others) / 2


def min_separation(n: int) -> float:
    return min(separation(p, n) for p in candidates(n))


def exponent_of(value: complex, n: int, atol: float = 1e-9):
    """Map an eigenvalue to ``None`` (for 0) or its exponent ``j`` with value ``w**j``.

    Raises ``ValueError`` if ``value`` is not within ``atol`` of a candidate.
    """
    value = complex(value)
    if abs(value) <= atol:
        return None
    for j in range(n - 1):
        if abs(value - unity_power(j, n - 1)) <= atol:
            return j
    raise ValueError(f"{value} is not 0 or a {n - 1}-th root of unity")


def format_complex(z: complex, digits: int = 6) -> str:
    z = complex(z)
    re = 0.0 if abs(z.real) < 10 ** -(digits + 2) else z.real
    im = 0.0 if abs(z.imag) < 10 ** -(digits + 2) else z.imag
    if im == 0:
        return f"{re:.{digits}g}"
    unit = "i" if abs(im) == 1 else f"{abs(im):.{digits}g}i"
    if re == 0:
        return unit if im > 0 else f"-{unit}"
    return f"{re:.{digits}g}{'+' if im > 0 else '-'}{unit}"


def eigenvalue_symbol(j, n: int) -> str:
    """Symbolic name such as ``w^2`` (rendered with omega) or ``0``."""
    if j is None:
        return "0"
    if j == 0:
        return "1"
    return "ω" if j == 1 else f"ω^{j}"


def eigenvalue_label(j, n: int) -> str:
    """``ω^2 = -1`` style label combining the symbol and the numeric value."""
    symbol = eigenvalue_symbol(j, n)
    if j is None or j == 0:
        return symbol
    return f"{symbol} = {format_complex(unity_power(j, n - 1), 4)}"


def eigenvalue_name(j, n: int) -> str:
    """Short numeric name (``i``, ``-1``, ``0.5+0.866i``) used in subset tables."""
    if j is None:
        return "0"
    return format_complex(unity_power(j, n - 1), 4)
