"""Full analysis pipeline and its serialisable report."""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from typing import Optional

import numpy as np

from .comb import SpectrumSubset, enumerate_projections, projection_for
from .decomposition import renorm_isometry_check, spectral_decomposition, verify_alternate_form
from .errors import DegenerateRange
from .linalg import DEFAULT_TOL, Tolerances, identity, norm, projection_rank
from .matrixfile import decode_complex, encode_complex
from .potency import NPotentOperator, is_periodic, kernel_projection
from .riesz import ContourSpec, resolvent_expansion, riesz_contour, riesz_polynomial, riesz_zero, spectrum
from .roots import eigenvalue_label, format_complex, unity_power


def _key_to_json(j):
    return "zero" if j is None else j


def _key_from_json(v):
    return None if v == "zero" else int(v)


@dataclass
class EigenvalueEntry:
    exponent: Optional[int]
    label: str
    value: complex


@dataclass
class ProjectionSummary:
    exponent: Optional[int]
    label: str
    eigenvalue: complex
    rank: int
    frobenius_norm: float
    inf_norm: float
    idempotency: float
    commutation: float
    eigen_equation: float
    hermitian: bool


@dataclass
class EnumerationRow:
    exponents: list
    names: list
    coefficients: list
    rank: int


@dataclass
class Verification:
    contour_agreement: float
    resolvent_expansion: float
    alternate_form: Optional[float]
    complement_literal: float
    complement_corrected: float
    renorm_deviation: Optional[float]


@dataclass
class AnalysisReport:
    dim: int
    frobenius_norm: float
    order: int
    potency_residual: float
    periodic: bool
    contains_zero: bool
    eigenvalues: list
    projections: list
    decomposition: dict
    comb_projection_count: int
    verification: Verification
    enumeration: Optional[list] = None

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "frobenius_norm": self.frobenius_norm,
            "order": self.order,
            "potency_residual": self.potency_residual,
            "periodic": self.periodic,
            "contains_zero": self.contains_zero,
            "eigenvalues": [
                {"exponent": _key_to_json(e.exponent), "label": e.label, "value": encode_complex(e.value)}
                for e in self.eigenvalues
            ],
            "projections": [
                {
                    **{f.name: getattr(p, f.name) for f in fields(p)},
                    "exponent": _key_to_json(p.exponent),
                    "eigenvalue": encode_complex(p.eigenvalue),
                }
                for p in self.projections
            ],
            "decomposition": dict(self.decomposition),
            "comb_projection_count": self.comb_projection_count,
            "verification": {f.name: getattr(self.verification, f.name) for f in fields(Verification)},
            "enumeration": None if self.enumeration is None else [
                {
                    "exponents": list(r.exponents),
                    "names": list(r.names),
                    "coefficients": [encode_complex(c) for c in r.coefficients],
                    "rank": r.rank,
                }
                for r in self.enumeration
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "AnalysisReport":
        return cls(
            dim=d["dim"],
            frobenius_norm=d["frobenius_norm"],
            order=d["order"],
            potency_residual=d["potency_residual"],
            periodic=d["periodic"],
            contains_zero=d["contains_zero"],
            eigenvalues=[
                EigenvalueEntry(_key_from_json(e["exponent"]), e["label"], decode_complex(e["value"]))
                for e in d["eigenvalues"]
            ],
            projections=[
                ProjectionSummary(**{
                    **p,
                    "exponent": _key_from_json(p["exponent"]),
                    "eigenvalue": decode_complex(p["eigenvalue"]),
                })
                for p in d["projections"]
            ],
            decomposition=dict(d["decomposition"]),
            comb_projection_count=d["comb_projection_count"],
            verification=Verification(**d["verification"]),
            enumeration=None if d.get("enumeration") is None else [
                EnumerationRow(
                    exponents=list(r["exponents"]),
                    names=list(r["names"]),
                    coefficients=[decode_complex(c) for c in r["coefficients"]],
                    rank=r["rank"],
                )
                for r in d["enumeration"]
            ],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))


def _summary(op: NPotentOperator, j, p: np.ndarray, tol: Tolerances) -> ProjectionSummary:
    T = op.matrix
    lam = 0j if j is None else unity_power(j, op.order - 1)
    return ProjectionSummary(
        exponent=j,
        label=eigenvalue_label(j, op.order),
        eigenvalue=lam,
        rank=projection_rank(p, tol),
        frobenius_norm=norm(p),
        inf_norm=norm(p, "inf_induced"),
        idempotency=norm(p @ p - p),
        commutation=norm(T @ p - p @ T),
        eigen_equation=norm(T @ p - lam * p),
        hermitian=bool(norm(p - p.conj().T) <= tol.proj_tol),
    )


def sample_resolvent_points(n: int, count: int, seed: int, min_gap: float = 0.2) -> list[complex]:
    """Seeded points with ``|z| >= min_gap`` and ``|z**(n-1) - 1| >= min_gap``."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        if abs(z) >= min_gap and abs(z ** (n - 1) - 1) >= min_gap:
            out.append(z)
    return out


def contour_residuals(op: NPotentOperator, tol: Tolerances = DEFAULT_TOL, nodes=None, radius=None,
                      resolvent: str = "expansion") -> dict:
    """``||P_contour - P_formula||_F`` for every eigenvalue, keyed by exponent (None for 0)."""
    spec = spectrum(op, tol)
    out = {}
    for j in spec.keys():
        contour = ContourSpec.around(op.order, j, tol, radius=radius, nodes=nodes)
        exact = riesz_zero(op) if j is None else riesz_polynomial(op, j)
        out[j] = norm(riesz_contour(op, contour, resolvent, tol) - exact)
    return out


def complement_residuals(op: NPotentOperator, tol: Tolerances = DEFAULT_TOL) -> tuple[float, float]:
    """Largest ``||(I - P_S) - P_{sigma0 \\ S}||`` and the same with ``I - T**(n-1)`` added.

    Evaluated on the empty set, every singleton and the full non-zero
    spectrum. The first value equals ``||I - T**(n-1)||`` whenever 0 is an
    eigenvalue.
    """
    full = sorted(spectrum(op, tol).unity_exponents)
    eye = identity(op.dim)
    p0 = kernel_projection(op)
    literal = corrected = 0.0
    for chosen in [[]] + [[j] for j in full] + [full]:
        s = SpectrumSubset(op.order, frozenset(chosen))
        rest = SpectrumSubset(op.order, frozenset(full) - s.exponents)
        diff = (eye - projection_for(op, s)) - projection_for(op, rest)
        literal = max(literal, norm(diff))
        corrected = max(corrected, norm(diff - p0))
    return literal, corrected


def analyze(op: NPotentOperator, tol: Tolerances = DEFAULT_TOL, nodes=None, radius=None,
            seed: int = 0, with_enumeration: bool = False) -> AnalysisReport:
    """Run the whole pipeline; raises ``VerificationFailed`` if the decomposition is off."""
    spec = spectrum(op, tol)
    dec = spectral_decomposition(op, tol)
    projections = [_summary(op, t.exponent, t.projection, tol) for t in dec.terms]

    resolvent_res = 0.0
    eye = identity(op.dim)
    for z in sample_resolvent_points(op.order, 10, seed):
        r = resolvent_expansion(op, z, tol)
        resolvent_res = max(resolvent_res, norm((z * eye - op.matrix) @ r - eye))

    contour = contour_residuals(op, tol, nodes=nodes, radius=radius)
    try:
        renorm = renorm_isometry_check(op, samples=100, seed=seed, tol=tol)
    except DegenerateRange:
        renorm = None
    literal, corrected = complement_residuals(op, tol)

    enumeration = None
    if with_enumeration:
        enumeration = enumeration_rows(op, tol)

    return AnalysisReport(
        dim=op.dim,
        frobenius_norm=norm(op.matrix),
        order=op.order,
        potency_residual=op.residual,
        periodic=is_periodic(op, tol),
        contains_zero=spec.contains_zero,
        eigenvalues=[EigenvalueEntry(j, eigenvalue_label(j, op.order), spec.eigenvalue(j)) for j in spec.keys()],
        projections=projections,
        decomposition=dec.residuals.as_dict(),
        comb_projection_count=2 ** len(spec.unity_exponents),
        verification=Verification(
            contour_agreement=max(contour.values()),
            resolvent_expansion=resolvent_res,
            alternate_form=verify_alternate_form(dec) if op.order >= 3 else None,
            complement_literal=literal,
            complement_corrected=corrected,
            renorm_deviation=renorm,
        ),
        enumeration=enumeration,
    )


def enumeration_rows(op: NPotentOperator, tol: Tolerances = DEFAULT_TOL) -> list[EnumerationRow]:
    return [
        EnumerationRow(
            exponents=e.subset.sorted(),
            names=e.subset.names(),
            coefficients=[complex(a) for a in e.coeffs.a],
            rank=projection_rank(e.matrix, tol),
        )
        for e in enumerate_projections(op, tol)
    ]


def _fmt(x: Optional[float]) -> str:
    return "n/a" if x is None else f"{x:.3e}"


def format_coefficients(coeffs) -> str:
    return "(" + ", ".join(format_complex(c, 6) for c in coeffs) + ")"


def format_enumeration(rows: list[EnumerationRow]) -> str:
    lines = [f"{'S':<28} {'rank':>4}  coefficients of (T, T^2, ...)"]
    for r in rows:
        subset = "{" + ", ".join(r.names) + "}" if r.names else "∅"
        lines.append(f"{subset:<28} {r.rank:>4}  {format_coefficients(r.coefficients)}")
    return "\n".join(lines)


def format_report(rep: AnalysisReport) -> str:
    lines = [
        f"dimension            {rep.dim}",
        f"||T||_F              {rep.frobenius_norm:.6g}",
        f"order n              {rep.order}   (||T^n - T||_F = {rep.potency_residual:.3e})",
        f"periodic             {'yes' if rep.periodic else 'no'}",
        "spectrum             {" + ", ".join(e.label for e in rep.eigenvalues) + "}",
        "",
        "eigenprojections",
        f"  {'eigenvalue':<22} {'rank':>4} {'||P||_F':>10} {'||P||_inf':>10} {'P^2-P':>10} "
        f"{'TP-PT':>10} {'TP-λP':>10}  hermitian",
    ]
    for p in rep.projections:
        lines.append(
            f"  {p.label:<22} {p.rank:>4} {p.frobenius_norm:>10.4g} {p.inf_norm:>10.4g} "
            f"{p.idempotency:>10.2e} {p.commutation:>10.2e} {p.eigen_equation:>10.2e}  "
            f"{'yes' if p.hermitian else 'no'}"
        )
    d = rep.decomposition
    v = rep.verification
    lines += [
        "",
        "decomposition residuals",
        f"  idempotency        {_fmt(d['idempotency'])}",
        f"  disjointness       {_fmt(d['disjointness'])}",
        f"  completeness       {_fmt(d['completeness'])}",
        f"  reconstruction     {_fmt(d['reconstruction'])}",
        "",
        f"projections in comb(T): {rep.comb_projection_count}",
        "",
        "verification",
        f"  contour vs formula         {_fmt(v.contour_agreement)}",
        f"  resolvent expansion        {_fmt(v.resolvent_expansion)}",
        f"  alternate form             {_fmt(v.alternate_form)}",
        f"  complement (I-P_S literal) {_fmt(v.complement_literal)}",
        f"  complement (with P_0)      {_fmt(v.complement_corrected)}",
        f"  renorm isometry deviation  {_fmt(v.renorm_deviation)}",
    ]
    if rep.enumeration is not None:
        lines += ["", format_enumeration(rep.enumeration)]
    return "\n".join(lines)


__all__ = [
    "AnalysisReport",
    "EigenvalueEntry",
    "EnumerationRow",
    "ProjectionSummary",
    "Verification",
    "analyze",
    "complement_residuals",
    "contour_residuals",
    "enumeration_rows",
    "format_enumeration",
    "format_report",
    "sample_resolvent_points",
]
