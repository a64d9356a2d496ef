"""Command-line front end.

Subcommands: synth, run, search, qkd, bellcat.  Complex flags are
"re,im" pairs; lists of complexes are semicolon-separated (use
--flag=value for values starting with a minus sign).  Circuit files
keep the 0-based internal mode indices; printed port labels and CSV
port columns are 1-based.  Exit codes: 0 success, 1 parse/IO error,
2 domain error.
"""

from __future__ import annotations

import argparse
import csv
import sys

import numpy as np

from . import linalg, protocols
from .engine import apply_circuit, mean_photon_number
from .errors import ContractionError, DimensionError, NotPSDError, SynthesisError
from .formats import (
    ParseError,
    read_amplitudes,
    read_circuit,
    read_matrix,
    write_circuit,
)
from .synthesis import compile_circuit, dilate, reck_decompose

DOMAIN_ERRORS = (DimensionError, ContractionError, SynthesisError, NotPSDError)


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; remap to the parse-error code.
    def error(self, message):
        raise ParseError(message)


def parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"expected 're,im', got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise ParseError(f"cannot parse complex value {text!r}") from None


def parse_complex_list(text: str) -> tuple[complex, ...]:
    items = [tok for tok in text.split(";") if tok.strip()]
    if not items:
        raise ParseError("expected a semicolon-separated list of 're,im' pairs")
    return tuple(parse_complex(tok) for tok in items)


def parse_complex_pair(text: str) -> tuple[complex, complex]:
    parts = text.split(",")
    if len(parts) != 4:
        raise ParseError(f"expected 're,im,re,im', got {text!r}")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise ParseError(f"cannot parse complex pair {text!r}") from None
    return complex(values[0], values[1]), complex(values[2], values[3])


def _print_amplitudes(out, starred: np.ndarray) -> None:
    print("port  starred(re im)                    physical(re im)", file=out)
    for index, z in enumerate(starred):
        p = np.conj(z)
        print(
            f"{index + 1:>4}  {z.real:+.12e} {z.imag:+.12e}  "
            f"{p.real:+.12e} {p.imag:+.12e}",
            file=out,
        )


def cmd_synth(args) -> int:
    matrix = read_matrix(args.matrix)
    tol = args.tol
    square = matrix.shape[0] == matrix.shape[1]
    if square and linalg.is_unitary(matrix, tol):
        target = matrix
        route = "unitary"
    else:
        sigma = linalg.spectral_norm(matrix)
        if sigma > 1 + tol:
            raise ContractionError(
                f"input is neither unitary nor a contraction "
                f"(largest singular value {sigma:.12g})"
            )
        target, ports = dilate(matrix, tol)
        route = "dilation"
        print(
            f"dilated {matrix.shape[0]}x{matrix.shape[1]} contraction into a "
            f"{ports.width}-mode unitary; signal outputs on ports "
            f"{ports.output_ports[0] + 1}..{ports.output_ports[-1] + 1}"
        )
    circuit = reck_decompose(target, tol)
    residual = linalg.max_abs(compile_circuit(circuit) - target)
    write_circuit(args.out, circuit)
    print(
        f"route={route} modes={circuit.width} "
        f"beamsplitters={circuit.beamsplitter_count} "
        f"phase_shifters={circuit.phase_shifter_count} "
        f"residual={residual:.3e}"
    )
    return 0


def cmd_run(args) -> int:
    circuit = read_circuit(args.circuit)
    amplitudes = read_amplitudes(args.amplitudes)
    out = apply_circuit(circuit, amplitudes)
    before = mean_photon_number(amplitudes)
    after = mean_photon_number(out)
    _print_amplitudes(sys.stdout, out)
    print(f"photon number: in={before:.12g} out={after:.12g}")
    return 0


def cmd_search(args) -> int:
    references = parse_complex_list(args.refs)
    if args.n is not None and args.n != len(references):
        raise ParseError(f"--n {args.n} does not match {len(references)} references")
    spec = protocols.SearchSpec(references, parse_complex(args.data), c=args.c)
    analytic = protocols.analytic_success_probability(spec)
    matches = [j for j, r in enumerate(spec.references, start=1) if r == spec.data]
    true_index = matches[0] if len(matches) == 1 else None

    out = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    clicks_out = (
        open(args.clicks_out, "w", newline="", encoding="utf-8")
        if args.clicks_out
        else None
    )
    try:
        writer = csv.writer(out)
        writer.writerow(["trial", "identified", "clicked_ports", "p_succ_analytic"])
        click_writer = None
        if clicks_out is not None:
            click_writer = csv.writer(clicks_out)
            click_writer.writerow(["trial", "port", "clicked"])
        successes = 0
        for trial in range(args.trials):
            outcome = protocols.run_search(spec, args.seed + trial, mode=args.mode)
            clicked = [str(r.port + 1) for r in outcome.clicks if r.clicked]
            writer.writerow(
                [
                    trial,
                    outcome.identified if outcome.identified is not None else "",
                    ";".join(clicked),
                    f"{analytic:.12g}",
                ]
            )
            if click_writer is not None:
                for record in outcome.clicks:
                    click_writer.writerow([trial, record.port + 1, int(record.clicked)])
            if true_index is not None:
                successes += outcome.identified == true_index
            else:
                successes += outcome.identified is not None
    finally:
        if args.out:
            out.close()
        if clicks_out is not None:
            clicks_out.close()
    empirical = successes / args.trials if args.trials else float("nan")
    print(
        f"trials={args.trials} empirical_success={empirical:.6f} "
        f"analytic_success={analytic:.6f}",
        file=sys.stderr if not args.out else sys.stdout,
    )
    return 0


def cmd_qkd(args) -> int:
    starred = protocols.generate_phase_states(args.n, parse_complex(args.alpha))
    _print_amplitudes(sys.stdout, starred)
    return 0


def cmd_bellcat(args) -> int:
    query = protocols.BellcatQuery(
        parse_complex_pair(args.v1), parse_complex_pair(args.v2), parse_complex(args.alpha)
    )
    result = protocols.bellcat_feasibility(query, bell_state=args.target)
    if result.feasible:
        print("feasible")
        k = result.contraction
        for row in k:
            print("  " + "  ".join(f"{z.real:+.12g}{z.imag:+.12g}j" for z in row))
        print(f"max_alpha={result.max_alpha:.12g}")
        print(f"kernel_residual={result.kernel_residual:.3e}")
        return 0
    alpha = parse_complex(args.alpha)
    if result.max_alpha > 0:
        sigma = abs(alpha) / result.max_alpha
        print(f"infeasible (largest singular value {sigma:.12g} exceeds 1)")
    else:
        print("infeasible (no contraction maps these inputs onto the targets)")
    print(f"max_alpha={result.max_alpha:.12g}")
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="cohcirc",
        description="Synthesize linear-optical circuits and propagate coherent amplitudes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="decompose a matrix file into a circuit file")
    p.add_argument("matrix", help="input matrix file")
    p.add_argument("out", help="output circuit file")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("run", help="apply a circuit file to an amplitudes file")
    p.add_argument("circuit", help="circuit file")
    p.add_argument("amplitudes", help="starred amplitudes file")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("search", help="run seeded database-search trials")
    p.add_argument("--refs", required=True, help="references as 're,im;re,im;...'")
    p.add_argument("--data", required=True, help="unknown datum as 're,im'")
    p.add_argument("--n", type=int, default=None, help="expected reference count")
    p.add_argument("--c", type=float, default=None, help="comparison scale")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--mode", choices=protocols.SEARCH_MODES, default=protocols.DILATION
    )
    p.add_argument("--out", default=None, help="write result CSV here (default stdout)")
    p.add_argument("--clicks-out", default=None, help="also write per-click CSV here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("qkd", help="generate the n phase-encoded key states")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", required=True, help="base amplitude as 're,im'")
    p.set_defaults(func=cmd_qkd)

    p = sub.add_parser("bellcat", help="check Bell-cat distillation feasibility")
    p.add_argument("--v1", required=True, help="first component pair 're,im,re,im'")
    p.add_argument("--v2", required=True, help="second component pair 're,im,re,im'")
    p.add_argument("--alpha", required=True, help="target cat amplitude 're,im'")
    p.add_argument("--target", choices=sorted(protocols.BELL_TARGETS), default="B00")
    p.set_defaults(func=cmd_bellcat)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
