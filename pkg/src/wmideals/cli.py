"""Command-line front end.

Exit status: 0 on success, 1 on invalid input, 2 when the supplied Hodge data
is insufficient for the requested number.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import bounds as bnd
from .dual_complex import betti_numbers, build_dual_complex, euler_characteristic
from .errors import InsufficientHodgeData, InvalidInput, WmiError
from .invariants import c_dimensions, transversal_rank, with_classification
from .mhs import GradedPieceQuery, SncConfiguration, graded_piece_bounds, hodge_0q_profile
from .monomial import colength
from .saito import is_log_canonical, parse_weights, weighted_ideal
from .snc_ideals import local_wmi_generators

EXIT_OK, EXIT_INVALID, EXIT_INSUFFICIENT = 0, 1, 2
FIXTURES_ENV = "WMIDEALS_FIXTURES"
CLASSICAL_NAMES = ("x", "y", "z", "w")


@dataclass
class CliResult:
    code: int
    out: str
    err: str = ""


class _UsageError(Exception):
    def __init__(self, message, status=EXIT_INVALID):
        super().__init__(message)
        self.status = status


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would collide with the
    # insufficient-data status.
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        raise _UsageError(message or "", EXIT_INVALID if status else EXIT_OK)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_json(path) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: JSON parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def load_config(path) -> SncConfiguration:
    config = SncConfiguration.from_json(load_json(path))
    config.require_valid()
    return config


def _parser() -> _Parser:
    p = _Parser(prog="wmideals", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp, default):
        sp.set_defaults(format=default)
        sp.add_argument("--json", dest="format", action="store_const", const="json")
        sp.add_argument("--text", dest="format", action="store_const", const="text")

    sp = sub.add_parser("snc-ideal", help="weighted multiplier ideal of x1...xr = 0")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--vars", type=int, required=True)
    fmt(sp, "text")

    sp = sub.add_parser("saito", help="I0 or adj at a weighted-homogeneous isolated singularity")
    sp.add_argument("--weights", required=True, help="comma-separated fractions, e.g. 1/2,1/3")
    sp.add_argument("--strict", action="store_true", help="adjoint ideal instead of I0")
    sp.add_argument("--colength", action="store_true")
    fmt(sp, "text")

    sp = sub.add_parser("mhs", help="h^{0,q} of the weight-graded pieces of H^t(G)")
    sp.add_argument("--config", required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--weight", type=int)
    fmt(sp, "json")

    sp = sub.add_parser("dual-complex", help="dual complex of an SNC configuration")
    sp.add_argument("--config", required=True)
    sp.add_argument("--betti", action="store_true")
    sp.add_argument("--euler", action="store_true")
    sp.add_argument("--dot", action="store_true", help="print the 1-skeleton in DOT format")
    fmt(sp, "json")

    sp = sub.add_parser("c-dims", help="dimensions of the C_l at an isolated singularity")
    sp.add_argument("--config", required=True)
    sp.add_argument("--ambient", type=int, required=True)
    sp.add_argument("--assume-lc", action="store_true")
    sp.add_argument("--slice-codim", type=int)
    fmt(sp, "json")

    sp = sub.add_parser("bounds", help="bounds for a degree-d hypersurface in P^n")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--points", help="JSON list of {p_g, type} records")
    fmt(sp, "json")

    sp = sub.add_parser("verify-fixtures", help="run the committed fixture corpus")
    sp.add_argument("--dir", help=f"fixture directory (default: ${FIXTURES_ENV} or the bundled corpus)")
    fmt(sp, "text")
    return p


# ---- subcommands -----------------------------------------------------------


def _snc_ideal(a) -> CliResult:
    I = local_wmi_generators(a.r, a.l, a.vars)
    if a.format == "json":
        return CliResult(0, dumps({"r": a.r, "l": a.l, "ideal": I.to_json(), "text": I.render()}))
    return CliResult(0, I.render() + "\n")


def _saito(a) -> CliResult:
    w = parse_weights(a.weights)
    I = weighted_ideal(w, strict=a.strict)
    name = "adj" if a.strict else "I0"
    names = CLASSICAL_NAMES if len(w) <= len(CLASSICAL_NAMES) else None
    text = I.render(names)
    c = colength(I) if a.colength else None
    if a.format == "json":
        out = {
            "weights": [str(x) for x in w],
            "ideal_name": name,
            "ideal": I.to_json(),
            "text": text,
            "log_canonical": is_log_canonical(w),
        }
        if a.colength:
            out["colength"] = c
        return CliResult(0, dumps(out))
    lines = [f"{name} = {text}"]
    if a.colength:
        lines.append(f"colength = {c}")
    return CliResult(0, "\n".join(lines) + "\n")


def _mhs(a) -> CliResult:
    config = load_config(a.config)
    t = a.degree
    if a.weight is not None:
        lo, hi, exact = graded_piece_bounds(config, GradedPieceQuery(a.weight, t))
        out = {"degree": t, "weight": a.weight, "dim": lo if exact else None}
        if not exact:
            out["bounds"] = {"lower": lo, "upper": hi}
        code = 0 if exact else EXIT_INSUFFICIENT
        if a.format == "text":
            shown = lo if exact else f"unavailable (between {lo} and {hi})"
            return CliResult(code, f"h^{{0,{a.weight}}}(Gr^W_{a.weight} H^{t}(G)) = {shown}\n")
        return CliResult(code, dumps(out))
    profile = hodge_0q_profile(config, t)
    entries = []
    for e in profile:
        item = {"q": e.q, "dim": e.dim}
        if not e.available:
            item["bounds"] = {"lower": e.lower, "upper": e.upper}
        entries.append(item)
    code = 0 if all(e.available for e in profile) else EXIT_INSUFFICIENT
    if a.format == "text":
        lines = [
            f"h^{{0,{e.q}}}(H^{t}(G)) = " + (str(e.dim) if e.available else f"unavailable (between {e.lower} and {e.upper})")
            for e in profile
        ]
        return CliResult(code, "\n".join(lines) + "\n")
    return CliResult(code, dumps({"degree": t, "profile": entries}))


def _dual_complex(a) -> CliResult:
    dc = build_dual_complex(load_config(a.config))
    if a.dot:
        return CliResult(0, dc.to_dot())
    everything = not (a.betti or a.euler)
    out: dict = {"cells": [len(c) for c in dc.cells]}
    if a.betti or everything:
        out["betti"] = betti_numbers(dc)
    if a.euler or everything:
        out["euler"] = euler_characteristic(dc)
    if a.format == "text":
        return CliResult(0, "".join(f"{k}: {v}\n" for k, v in out.items()))
    return CliResult(0, dumps(out))


def _c_dims(a) -> CliResult:
    config = load_config(a.config)
    n = a.ambient
    if a.slice_codim is not None:
        s = a.slice_codim
        ranks: dict[str, int | None] = {}
        for l in range(2, n + 1):
            try:
                ranks[str(l)] = transversal_rank(config, n, s, l)
            except InsufficientHodgeData:
                ranks[str(l)] = None
        code = EXIT_INSUFFICIENT if None in ranks.values() else 0
        return CliResult(code, dumps({"n": n, "s": s, "ranks": ranks}))
    report = c_dimensions(config, n)
    if not report.complete:
        return CliResult(EXIT_INSUFFICIENT, dumps(report.to_json()), "some dim C_l need pullback matrices\n")
    report = with_classification(report, a.assume_lc)
    if a.format == "text":
        lines = [f"dim C_{l} = {d}" for l, d in sorted(report.dims.items())]
        lines.append(f"total = {report.total}")
        lines.append(str(report.lc_type))
        return CliResult(0, "\n".join(lines) + "\n")
    return CliResult(0, dumps(report.to_json()))


def _bounds(a) -> CliResult:
    d, n = a.degree, a.dim
    out = {
        "degree": d,
        "dim": n,
        "lc_special_point_bound": bnd.lc_special_point_bound(d, n),
        "nonrational_point_bound": bnd.nonrational_point_bound(d, n),
        "surjectivity_threshold": {
            "adjoint": bnd.surjectivity_threshold(1, d, n),
            "higher": bnd.surjectivity_threshold(2, d, n),
        },
        "deductions": bnd.low_degree_deductions(d, n).to_json(),
    }
    if a.points:
        points = load_json(a.points)
        if not isinstance(points, list):
            raise InvalidInput(f"{a.points}: expected a JSON list of points")
        out["budget"] = bnd.budget_check(d, n, points).to_json()
    if a.format == "text":
        return CliResult(0, "".join(f"{k}: {json.dumps(v, sort_keys=True)}\n" for k, v in out.items()))
    return CliResult(0, dumps(out))


def _verify_fixtures(a) -> CliResult:
    from .corpus import verify

    root = Path(a.dir or os.environ.get(FIXTURES_ENV) or bundled_fixture_dir())
    report = verify(root)
    return CliResult(0 if report.ok else EXIT_INVALID, report.render())


def bundled_fixture_dir() -> Path:
    return Path(str(resources.files("wmideals") / "fixtures"))


HANDLERS = {
    "snc-ideal": _snc_ideal,
    "saito": _saito,
    "mhs": _mhs,
    "dual-complex": _dual_complex,
    "c-dims": _c_dims,
    "bounds": _bounds,
    "verify-fixtures": _verify_fixtures,
}


def run(argv) -> CliResult:
    try:
        args = _parser().parse_args(list(argv))
    except _UsageError as exc:
        msg = str(exc)
        return CliResult(exc.status, "", msg if not msg or msg.endswith("\n") else msg + "\n")
    try:
        return HANDLERS[args.command](args)
    except InsufficientHodgeData as exc:
        return CliResult(EXIT_INSUFFICIENT, "", f"insufficient Hodge data: {exc}\n")
    except WmiError as exc:
        return CliResult(EXIT_INVALID, "", f"error: {exc}\n")


def main(argv=None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.out)
    sys.stderr.write(result.err)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
