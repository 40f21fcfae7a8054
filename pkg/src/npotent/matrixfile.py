"""JSON matrix files: ``{"dim": d, "entries": [[re, im], ...]}`` in row-major order."""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import ParseError


def encode_complex(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def decode_complex(pair) -> complex:
    if isinstance(pair, (int, float)) and not isinstance(pair, bool):
        return complex(pair)
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise ParseError(f"expected a [re, im] pair, got {pair!r}")
    re, im = pair
    if not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in (re, im)):
        raise ParseError(f"non-numeric complex component in {pair!r}")
    if not (math.isfinite(re) and math.isfinite(im)):
        raise ParseError(f"non-finite complex component in {pair!r}")
    return complex(re, im)


def matrix_to_dict(a) -> dict:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return {"dim": int(a.shape[0]), "entries": [encode_complex(z) for z in a.reshape(-1)]}


def matrix_from_dict(data) -> np.ndarray:
    if not isinstance(data, dict) or "dim" not in data or "entries" not in data:
        raise ParseError("matrix file needs 'dim' and 'entries' fields")
    dim = data["dim"]
    entries = data["entries"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError(f"'dim' must be a positive integer, got {dim!r}")
    if not isinstance(entries, list) or len(entries) != dim * dim:
        got = len(entries) if isinstance(entries, list) else type(entries).__name__
        raise ParseError(f"'entries' must hold dim^2 = {dim * dim} pairs, got {got}")
    values = [decode_complex(e) for e in entries]
    return np.array(values, dtype=np.complex128).reshape(dim, dim)


def dumps_matrix(a) -> str:
    return json.dumps(matrix_to_dict(a))


def loads_matrix(text: str) -> np.ndarray:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return matrix_from_dict(data)


def read_matrix(path) -> np.ndarray:
    return loads_matrix(Path(path).read_text())


def write_matrix(path, a):
    Path(path).write_text(dumps_matrix(a) + "\n")
