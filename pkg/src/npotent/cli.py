"""Command line interface.

Exit codes: 0 for a certified n-potent input, 2 when the input is not
n-potent, 1 for I/O, parse, or verification failures.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .comb import CombCoefficients, betas, classify_projection
from .errors import NearSpectrum, NotNPotent, NPotentError, OrderMismatch, ParseError, VerificationFailed
from .examples import (
    gen_diag_full,
    gen_nonhermitian,
    gen_random_npotent,
    gen_reflection,
    gen_tripotent_family,
    parse_slot_ranks,
    reflection_order,
)
from .linalg import DEFAULT_TOL, Tolerances
from .matrixfile import dumps_matrix, encode_complex, read_matrix, write_matrix
from .potency import DEFAULT_N_MAX, certify, detect_order
from .report import analyze, contour_residuals, enumeration_rows, format_enumeration, format_report
from .riesz import default_radius, spectrum
from .roots import eigenvalue_label, format_complex

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_NOT_NPOTENT = 2

SEED_ENV = "NPOTENT_SEED"


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    return int(os.environ.get(SEED_ENV, "0"))


def _tolerances(args) -> Tolerances:
    return Tolerances(
        potency_tol=args.potency_tol,
        proj_tol=args.proj_tol,
        rank_tol=DEFAULT_TOL.rank_tol,
        contour_nodes=args.nodes,
        contour_radius=args.radius if args.radius is not None else DEFAULT_TOL.contour_radius,
    )


def _emit(args, text: str):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_operator(args, tol):
    return certify(read_matrix(args.input), n=args.order, n_max=args.n_max, tol=tol)


def parse_coefficients(text: str) -> list[complex]:
    """``"-0.25-0.25i, 0, -0.25+0.25i, 0.5"``; ``i`` and ``j`` both mark the imaginary unit."""
    out = []
    for part in text.split(","):
        part = re.sub(r"(?<![0-9.])j", "1j", part.strip().replace(" ", "").replace("i", "j"))
        if not part:
            continue
        try:
            out.append(complex(part))
        except ValueError as exc:
            raise ParseError(f"cannot parse coefficient {part!r}") from exc
    return out


def cmd_analyze(args) -> int:
    tol = _tolerances(args)
    op = _load_operator(args, tol)
    rep = analyze(op, tol, nodes=args.nodes, radius=args.radius, seed=_seed(args),
                  with_enumeration=args.enumerate)
    _emit(args, rep.to_json() if args.format == "structured" else format_report(rep))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    tol = _tolerances(args)
    op = _load_operator(args, tol)
    rows = enumeration_rows(op, tol)
    if args.format == "structured":
        payload = [
            {"exponents": r.exponents, "names": r.names,
             "coefficients": [encode_complex(c) for c in r.coefficients], "rank": r.rank}
            for r in rows
        ]
        _emit(args, json.dumps({"order": op.order, "projections": payload}, indent=2))
    else:
        _emit(args, f"order n = {op.order}, {len(rows)} projections in comb(T)\n" + format_enumeration(rows))
    return EXIT_OK


def cmd_contour_check(args) -> int:
    tol = _tolerances(args)
    op = _load_operator(args, tol)
    radius = args.radius if args.radius is not None else default_radius(op.order, tol)
    headline = {
        backend: contour_residuals(op, tol, nodes=args.nodes, radius=radius, resolvent=backend)
        for backend in ("expansion", "direct")
    }
    ladder = []
    m = 16
    while m <= args.nodes:
        ladder.append(m)
        m *= 2
    by_m = {m: contour_residuals(op, tol, nodes=m, radius=radius) for m in ladder}
    keys = list(headline["expansion"])
    pairs = [(m, 2 * m) for m in ladder if 2 * m in by_m]
    if args.format == "structured":
        payload = {
            "order": op.order,
            "nodes": args.nodes,
            "radius": radius,
            "eigenvalues": [
                {
                    "exponent": "zero" if j is None else j,
                    "label": eigenvalue_label(j, op.order),
                    "expansion": headline["expansion"][j],
                    "direct": headline["direct"][j],
                    "convergence": [
                        {"m": a, "two_m": b, "residual_m": by_m[a][j], "residual_two_m": by_m[b][j]}
                        for a, b in pairs
                    ],
                }
                for j in keys
            ],
        }
        _emit(args, json.dumps(payload, indent=2))
        return EXIT_OK
    lines = [f"order n = {op.order}, M = {args.nodes}, radius = {radius:.6g}",
             f"  {'eigenvalue':<22} {'expansion':>11} {'direct':>11}"]
    for j in keys:
        lines.append(f"  {eigenvalue_label(j, op.order):<22} {headline['expansion'][j]:>11.3e} {headline['direct'][j]:>11.3e}")
    if pairs:
        lines.append("")
        lines.append("convergence (residual at M -> residual at 2M)")
        for j in keys:
            steps = ", ".join(f"{a}:{by_m[a][j]:.2e}->{b}:{by_m[b][j]:.2e}" for a, b in pairs)
            lines.append(f"  {eigenvalue_label(j, op.order):<22} {steps}")
    _emit(args, "\n".join(lines))
    return EXIT_OK


def _generate_matrix(args):
    kind = args.kind
    if kind == "tripotent":
        return gen_tripotent_family(args.p), 3
    if kind == "nonhermitian":
        return gen_nonhermitian(), 2
    if kind == "diag":
        return gen_diag_full(args.n), args.n
    if kind == "reflection":
        return gen_reflection(args.k, args.m), reflection_order(args.k)
    if kind == "random":
        if args.ranks is None:
            raise ParseError("random generation needs --ranks")
        ranks = parse_slot_ranks(args.n, args.ranks)
        return gen_random_npotent(args.n, ranks, cond_bound=args.cond_bound, seed=_seed(args)), args.n
    raise ParseError(f"unknown generator {kind!r}")


def cmd_generate(args) -> int:
    tol = _tolerances(args)
    matrix, documented = _generate_matrix(args)
    minimal = detect_order(matrix, max(args.n_max, documented), tol)
    op = certify(matrix, n=documented, tol=tol)
    summary = (f"{args.kind}: dim {op.dim}, certified {documented}-potent "
               f"(residual {op.residual:.2e}), smallest order {minimal}")
    if args.output:
        write_matrix(args.output, matrix)
        print(summary)
    else:
        print(dumps_matrix(matrix))
        print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_classify(args) -> int:
    tol = _tolerances(args)
    op = _load_operator(args, tol)
    coeffs = parse_coefficients(args.coeffs)
    if len(coeffs) != op.order - 1:
        raise OrderMismatch(f"expected {op.order - 1} coefficients for order {op.order}, got {len(coeffs)}")
    c = CombCoefficients(op.order, coeffs)
    beta = betas(c).beta
    present = spectrum(op, tol).unity_exponents
    subset = classify_projection(op, c, tol)
    if args.format == "structured":
        payload = {
            "order": op.order,
            "betas": [
                {"exponent": j, "label": eigenvalue_label(j, op.order), "beta": encode_complex(b),
                 "in_spectrum": j in present}
                for j, b in beta.items()
            ],
            "projection": subset is not None,
            "subset": None if subset is None else {"exponents": subset.sorted(), "names": subset.names()},
        }
        _emit(args, json.dumps(payload, indent=2))
        return EXIT_OK
    lines = [f"order n = {op.order}", f"  {'eigenvalue':<22} {'beta':>16}  in spectrum", f"  {'0':<22} {'0':>16}  -"]
    for j, b in beta.items():
        lines.append(f"  {eigenvalue_label(j, op.order):<22} {format_complex(b, 6):>16}  {'yes' if j in present else 'no'}")
    lines.append("")
    lines.append("NotAProjection" if subset is None else f"projection P_S with S = {subset if subset.exponents else '∅'}")
    _emit(args, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n-max", type=int, default=DEFAULT_N_MAX, help="largest order tried by detection")
    common.add_argument("--potency-tol", type=float, default=DEFAULT_TOL.potency_tol)
    common.add_argument("--proj-tol", type=float, default=DEFAULT_TOL.proj_tol)
    common.add_argument("--nodes", type=int, default=DEFAULT_TOL.contour_nodes, help="contour quadrature nodes")
    common.add_argument("--radius", type=float, default=None, help="contour radius (default: safe separation)")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--seed", type=int, default=None, help=f"random seed (default: ${SEED_ENV} or 0)")
    common.add_argument("--output", "-o", default=None, help="write output here instead of stdout")

    with_input = argparse.ArgumentParser(add_help=False)
    with_input.add_argument("input", help="matrix file ({'dim': d, 'entries': [[re, im], ...]})")
    with_input.add_argument("--order", type=int, default=None,
                            help="certify at this order instead of detecting the smallest one")

    parser = argparse.ArgumentParser(prog="npotent", description="Analyse n-potent matrices (T^n = T).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common, with_input], help="full spectral analysis report")
    p.add_argument("--enumerate", action="store_true", help="include the comb(T) projection table")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", parents=[common, with_input], help="list every projection in comb(T)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("contour-check", parents=[common, with_input],
                       help="compare contour-integral and closed-form projections")
    p.set_defaults(func=cmd_contour_check)

    p = sub.add_parser("classify", parents=[common, with_input], help="decide whether sum a_i T^i is a projection")
    p.add_argument("--coeffs", required=True, help="comma-separated a_1..a_{n-1}, e.g. '-0.25-0.25i,0,-0.25+0.25i,0.5'")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generate", parents=[common], help="write one of the standard example matrices")
    p.add_argument("kind", choices=("tripotent", "nonhermitian", "diag", "reflection", "random"))
    p.add_argument("--p", type=int, default=1, help="tripotent family parameter")
    p.add_argument("--n", type=int, default=5, help="order for diag and random")
    p.add_argument("--k", type=int, default=1, help="reflection parameter (order 2k+1)")
    p.add_argument("--m", type=int, default=64, help="reflection grid size")
    p.add_argument("--ranks", default=None,
                   help="random multiplicities 'slot:count,...'; slot 0 is eigenvalue 0, slot s is w^(s-1)")
    p.add_argument("--cond-bound", type=float, default=100.0)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotNPotent as exc:
        print(f"not n-potent: {exc}", file=sys.stderr)
        return EXIT_NOT_NPOTENT
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except NearSpectrum as exc:
        print(f"contour error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (NPotentError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
