"""Command-line interface.

Subcommands: spectrum, limiting, mix, gap-scan, oracle-check.  All vertex
and sector indices on the command line and in output files are 0-based.
Numeric CSV fields carry 15 significant digits; footer lines starting with
'#' report fitted slopes, mixing times and deviations.  Exit codes:
0 success, 1 configuration error, 2 I/O error, 3 oracle-check failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import comb_analytics, dynamics, mixing, oracle
from .bloch import full_spectrum
from .errors import NecklaceError
from .graphs import (
    NecklaceSpec,
    assemble_hamiltonian,
    load_pearl_file,
    make_comb_pearl,
    make_cycle_pearl,
)
from .parallel import THREADS_ENV_VAR

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_IO = 2
EXIT_ORACLE = 3


class _ConfigError(Exception):
    """User-facing configuration problem; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        raise _ConfigError(message)


def _format(value: float) -> str:
    return f"{value:.15g}"


def _write_lines(lines: list[str], path: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _pearl_from_args(args) -> tuple:
    """Resolve the pearl source flags; returns (pearl, source_label)."""
    chosen = [
        name
        for name, present in (
            ("--cycle", args.cycle),
            ("--comb-d", args.comb_d is not None),
            ("--pearl-file", args.pearl_file is not None),
        )
        if present
    ]
    if len(chosen) != 1:
        raise _ConfigError(
            "exactly one pearl source required: --cycle, --comb-d D or --pearl-file PATH"
        )
    if args.cycle:
        return make_cycle_pearl(), "cycle"
    if args.comb_d is not None:
        return make_comb_pearl(args.comb_d), f"comb-d{args.comb_d}"
    return load_pearl_file(args.pearl_file), args.pearl_file


def _parse_int_list(text: str, log_spaced: bool) -> list[int]:
    """Parse '4,7,10' or 'a..b'; ranges expand log- or linearly spaced."""
    values: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo_s, hi_s = part.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if hi < lo:
                raise _ConfigError(f"empty range {part!r}")
            if log_spaced and lo >= 1:
                count = max(2, int(round(2 * math.log2(hi / lo))) + 1)
                grid = np.unique(
                    np.round(np.logspace(math.log10(lo), math.log10(hi), count))
                )
                values.extend(int(v) for v in grid)
            else:
                values.extend(range(lo, hi + 1))
        else:
            values.append(int(part))
    seen = set()
    out = []
    for v in values:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


def _parse_start(text: str, necklace: NecklaceSpec) -> tuple[int, int]:
    """Parse --start 'J', 'J,base', 'J,tooth' or 'J,M' (0-based) to 1-based (j, m)."""
    pearl = necklace.pearl
    pieces = text.split(",")
    try:
        j0 = int(pieces[0])
    except ValueError as exc:
        raise _ConfigError(f"bad start pearl index in {text!r}") from exc
    if not (0 <= j0 < necklace.K):
        raise _ConfigError(f"start pearl {j0} outside 0..{necklace.K - 1}")
    if len(pieces) == 1:
        return j0 + 1, 1
    if len(pieces) != 2:
        raise _ConfigError(f"bad start argument {text!r}; expected J, J,base, J,tooth or J,M")
    kind = pieces[1].strip()
    if kind == "base":
        return j0 + 1, 1
    if kind == "tooth":
        if pearl.comb_spacing is None or pearl.m < 2:
            raise _ConfigError("this pearl has no tooth vertex")
        return j0 + 1, pearl.m
    try:
        m0 = int(kind)
    except ValueError as exc:
        raise _ConfigError(f"bad start vertex {kind!r}") from exc
    if not (0 <= m0 < pearl.m):
        raise _ConfigError(f"start vertex {m0} outside 0..{pearl.m - 1}")
    return j0 + 1, m0 + 1


def _single_k(args) -> int:
    ks = _parse_int_list(args.K, log_spaced=False)
    if len(ks) != 1:
        raise _ConfigError("this command takes a single --K value")
    return ks[0]


def _add_common(parser: argparse.ArgumentParser, start: bool = False) -> None:
    parser.add_argument("--cycle", action="store_true", help="single-vertex pearl (plain cycle)")
    parser.add_argument("--comb-d", type=int, default=None, metavar="D",
                        help="comb pearl with tooth spacing D")
    parser.add_argument("--pearl-file", default=None, metavar="PATH",
                        help="JSON pearl description (0-based indices)")
    parser.add_argument("--K", required=True, help="pearl count")
    parser.add_argument("--output", default=None, metavar="PATH",
                        help="output file (default: stdout)")
    parser.add_argument("--threads", type=int, default=None,
                        help=f"worker threads (default: ${THREADS_ENV_VAR} or 1)")
    parser.add_argument("--tau-deg", type=float, default=None,
                        help="degeneracy tolerance (default: 1e-8 * max |lambda|)")
    if start:
        parser.add_argument("--start", required=True,
                            help="start vertex: J | J,base | J,tooth | J,M (0-based)")


def cmd_spectrum(args) -> int:
    pearl, _ = _pearl_from_args(args)
    necklace = NecklaceSpec(pearl, _single_k(args))
    spec = full_spectrum(necklace, threads=args.threads)
    lines = ["k,n,lambda"]
    for a in range(spec.size):
        lines.append(
            f"{spec.k_index[a]},{spec.n_index[a]},{_format(spec.eigenvalues[a])}"
        )
    _write_lines(lines, args.output)
    if args.vectors_out is not None:
        records = []
        for a in range(spec.size):
            records.append({
                "k": int(spec.k_index[a]),
                "n": int(spec.n_index[a]),
                "lambda": float(spec.eigenvalues[a]),
                "vector_re": [float(v) for v in spec.vectors[:, a].real],
                "vector_im": [float(v) for v in spec.vectors[:, a].imag],
            })
        with open(args.vectors_out, "w", encoding="utf-8", newline="") as handle:
            json.dump(records, handle, indent=1)
            handle.write("\n")
    return EXIT_OK


def cmd_limiting(args) -> int:
    pearl, _ = _pearl_from_args(args)
    necklace = NecklaceSpec(pearl, _single_k(args))
    j_start, m_start = _parse_start(args.start, necklace)
    spec = full_spectrum(necklace, threads=args.threads)
    phi0 = dynamics.vertex_state(necklace, j_start, m_start)
    pi = dynamics.limiting_distribution(spec, phi0, tau_deg=args.tau_deg)

    closed = None
    if args.closed_form:
        if pearl.comb_spacing != 1:
            raise _ConfigError("--closed-form is only available for --comb-d 1")
        start_kind = pearl.vertex_kind(m_start)
        closed = np.empty(necklace.n_vertices)
        for j in range(1, necklace.K + 1):
            for m in (1, 2):
                closed[necklace.flat_index(j, m)] = comb_analytics.comb1_limiting(
                    necklace.K, start_kind, pearl.vertex_kind(m), j, j_start
                )

    header = "j,m,vertex_type,pi" + (",pi_analytic" if closed is not None else "")
    lines = [header]
    for j in range(1, necklace.K + 1):
        for m in range(1, pearl.m + 1):
            idx = necklace.flat_index(j, m)
            row = f"{j - 1},{m - 1},{pearl.vertex_kind(m)},{_format(pi[idx])}"
            if closed is not None:
                row += f",{_format(closed[idx])}"
            lines.append(row)
    if closed is not None:
        lines.append(f"# max_abs_deviation = {_format(float(np.abs(pi - closed).max()))}")
    _write_lines(lines, args.output)
    return EXIT_OK


def cmd_mix(args) -> int:
    pearl, _ = _pearl_from_args(args)
    K = _single_k(args)
    necklace = NecklaceSpec(pearl, K)
    j_start, m_start = _parse_start(args.start, necklace)
    spec = full_spectrum(necklace, threads=args.threads)
    phi0 = dynamics.vertex_state(necklace, j_start, m_start)

    result = dynamics.mixing_time(
        spec, phi0, args.eps, args.T_hi, t_lo=args.T_lo, tau_deg=args.tau_deg
    )
    # The bound scales exactly as 1/T; evaluate once and rescale.
    bound_at_unit = dynamics.tv_convergence_bound(spec, phi0, 1.0, tau_deg=args.tau_deg)
    bounds = [bound_at_unit / t for t in result.grid]
    with_curve = args.cos_bound_c is not None
    header = "T,tv_distance,tv_bound" + (",mixing_bound" if with_curve else "")
    lines = [header]
    for i, t in enumerate(result.grid):
        row = f"{_format(t)},{_format(result.tv_values[i])},{_format(bounds[i])}"
        if with_curve:
            row += f",{_format(mixing.mixing_bound_curve(args.cos_bound_c, K, t))}"
        lines.append(row)
    if result.found:
        lines.append(f"# T_mix(eps={_format(args.eps)}) = {_format(result.t_mix)}")
    else:
        lines.append(
            f"# T_mix(eps={_format(args.eps)}) not found up to T_hi={_format(args.T_hi)}; "
            f"tv at T_hi = {_format(result.tv_at_hi)}"
        )
    _write_lines(lines, args.output)
    return EXIT_OK


def cmd_gap_scan(args) -> int:
    if args.linear and args.log:
        raise _ConfigError("--linear and --log are mutually exclusive")
    log_spaced = not args.linear  # log-spaced K ranges by default for scans
    d_list = _parse_int_list(args.d, log_spaced=False)
    k_list = _parse_int_list(args.K, log_spaced=log_spaced)
    records, slopes = mixing.gap_scan(d_list, k_list, threads=args.threads)
    lines = ["d,K,min_gap"]
    for rec in records:
        lines.append(f"{rec.d},{rec.K},{_format(rec.min_gap)}")
    for d in d_list:
        slope = slopes[d]
        rendered = _format(slope) if not math.isnan(slope) else "nan"
        lines.append(f"# slope d={d} {rendered}")
    _write_lines(lines, args.output)
    return EXIT_OK


def _oracle_checks(necklace: NecklaceSpec, threads: int | None) -> dict:
    """Run every brute-force comparison for one necklace; returns the report."""
    h = assemble_hamiltonian(necklace)
    spec = full_spectrum(necklace, threads=threads)
    checks: dict[str, dict] = {}

    def record(name: str, deviation: float, tolerance: float) -> None:
        checks[name] = {
            "max_deviation": float(deviation),
            "tolerance": tolerance,
            "pass": bool(deviation <= tolerance),
        }

    brute = oracle.brute_spectrum(h)
    record(
        "spectrum_match",
        np.abs(spec.sorted_eigenvalues() - brute.eigenvalues).max(),
        1e-9,
    )
    residual = h @ spec.vectors - spec.vectors * spec.eigenvalues[None, :]
    record("eigenvector_residual", np.abs(residual).max(), 1e-9)
    gram = spec.vectors.conj().T @ spec.vectors - np.eye(spec.size)
    record("basis_gram", np.abs(gram).max(), 1e-9)

    phi0 = dynamics.vertex_state(necklace, 1, 1)
    dev = 0.0
    for t in (0.7, math.pi / 2, 3.3):
        p_fast = dynamics.probability_at_time(spec, phi0, t)
        p_ref = oracle.evolve_matrix_exponential(h, phi0, t)
        dev = max(dev, float(np.abs(p_fast - p_ref).max()))
    record("evolution_match", dev, 1e-9)

    T, steps = 10.0, 8000
    averaged = dynamics.time_averaged(spec, phi0, T)
    quadrature = oracle.quadrature_time_average(h, phi0, T, steps)
    record("time_average_match", np.abs(averaged - quadrature).max(), 1e-5)

    pi = dynamics.limiting_distribution(spec, phi0)
    record("limiting_unit_sum", abs(pi.sum() - 1.0), 1e-9)
    if necklace.pearl.comb_spacing == 0:
        closed = np.array(
            [comb_analytics.cycle_limiting(necklace.K, x, 1) for x in range(1, necklace.K + 1)]
        )
        record("limiting_closed_form", np.abs(pi - closed).max(), 1e-9)
    elif necklace.pearl.comb_spacing == 1:
        closed = np.empty(necklace.n_vertices)
        for j in range(1, necklace.K + 1):
            for m in (1, 2):
                closed[necklace.flat_index(j, m)] = comb_analytics.comb1_limiting(
                    necklace.K, "base", necklace.pearl.vertex_kind(m), j, 1
                )
        record("limiting_closed_form", np.abs(pi - closed).max(), 1e-9)

    return {
        "necklace": {"K": necklace.K, "M": necklace.pearl.m, "N": necklace.n_vertices},
        "checks": checks,
        "pass": all(c["pass"] for c in checks.values()),
    }


def cmd_oracle_check(args) -> int:
    pearl, _ = _pearl_from_args(args)
    necklace = NecklaceSpec(pearl, _single_k(args))
    if necklace.n_vertices > 2000:
        raise _ConfigError(f"oracle-check caps at 2000 vertices, got {necklace.n_vertices}")
    report = _oracle_checks(necklace, args.threads)
    text = json.dumps(report, indent=1, sort_keys=True) + "\n"
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    return EXIT_OK if report["pass"] else EXIT_ORACLE


def build_parser() -> _Parser:
    parser = _Parser(prog="necklace-walk", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_spec = sub.add_parser("spectrum", help="sector-labeled eigenvalues as CSV")
    _add_common(p_spec)
    p_spec.add_argument("--vectors-out", default=None, metavar="PATH",
                        help="also dump lifted eigenvectors as JSON")
    p_spec.set_defaults(func=cmd_spectrum)

    p_lim = sub.add_parser("limiting", help="limiting distribution from a vertex start")
    _add_common(p_lim, start=True)
    p_lim.add_argument("--closed-form", action="store_true",
                       help="also emit analytic values (comb-d 1 only)")
    p_lim.set_defaults(func=cmd_limiting)

    p_mix = sub.add_parser("mix", help="total variation curve, bound and mixing time")
    _add_common(p_mix, start=True)
    p_mix.add_argument("--eps", type=float, required=True, help="precision parameter in (0, 2]")
    p_mix.add_argument("--T-hi", type=float, default=1e5, dest="T_hi",
                       help="top of the geometric time grid (default 1e5)")
    p_mix.add_argument("--T-lo", type=float, default=1.0, dest="T_lo",
                       help="bottom of the geometric time grid (default 1)")
    p_mix.add_argument("--cos-bound-c", type=float, default=None, metavar="C",
                       help="also emit the closed-form bound column for constant C")
    p_mix.set_defaults(func=cmd_mix)

    p_gap = sub.add_parser("gap-scan", help="minimum nonzero gap over (d, K) combs")
    p_gap.add_argument("--d", required=True, help="tooth spacings, e.g. 1,2,3 (0 = cycle)")
    p_gap.add_argument("--K", required=True, help="pearl counts, e.g. 16,32 or 16..256")
    p_gap.add_argument("--linear", action="store_true", help="expand K ranges linearly")
    p_gap.add_argument("--log", action="store_true", help="expand K ranges log-spaced (default)")
    p_gap.add_argument("--output", default=None, metavar="PATH")
    p_gap.add_argument("--threads", type=int, default=None)
    p_gap.set_defaults(func=cmd_gap_scan)

    p_orc = sub.add_parser("oracle-check", help="run all brute-force comparisons")
    _add_common(p_orc)
    p_orc.set_defaults(func=cmd_oracle_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NecklaceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
