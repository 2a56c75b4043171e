"""Batch command-line front end.

Subcommands::

    toricaps caps DOMAIN [--k-max N] [--quantities lk,uk,gh,slope,width] [--format table|csv|json]
    toricaps interval DOMAIN CONSTRAINT
    toricaps fan DOMAIN [--resolve]
    toricaps plot DOMAIN [--k-max N]
    toricaps verify [--golden] [DOMAIN]

``DOMAIN`` and ``CONSTRAINT`` are paths to JSON files, inline JSON, or ``-``
for stdin.  Exit codes: 0 success, 1 parse or domain error, 2 domain not
strongly convex for the requested quantity, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from . import domains
from .capacities import (
    asymptotic_slope,
    gh_capacity,
    gromov_width,
    l_k,
    l_k_bruteforce,
    rsft_interval,
    u_k,
)
from .errors import ToricapsError, UnsupportedDomainError
from .exactgeom import RationalPolytope, format_rational, is_strongly_convex, parse_rational, support_value
from .fan import inserted_rays, normal_fan, refine_smooth
from .tangency import TangencyConstraint, codim

log = logging.getLogger("toricaps")

EXIT_OK, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_VERIFY = 0, 1, 2, 3

QUANTITIES = ("lk", "uk", "gh", "slope", "width")
FORMATS = ("table", "csv", "json")
ORACLE_K_MAX = 5


class DomainParseError(ToricapsError):
    pass


class VerificationError(ToricapsError):
    pass


# --- domain specs ---------------------------------------------------------------------

_KIND_FIELDS = {
    "polytope": ("vertices",),
    "example_r": ("r",),
    "ball": ("capacity",),
    "ellipsoid": ("a", "b"),
    "polydisk": ("a", "b"),
}


@dataclass(frozen=True)
class DomainSpec:
    kind: str
    params: tuple  # sorted (name, value) pairs; values are Fractions or vertex tuples

    def param(self, name):
        return dict(self.params)[name]

    def to_polytope(self) -> RationalPolytope:
        p = dict(self.params)
        if self.kind == "polytope":
            return RationalPolytope.from_points(p["vertices"])
        if self.kind == "example_r":
            return domains.example_region(p["r"])
        if self.kind == "ball":
            return domains.ball(p["capacity"])
        if self.kind == "ellipsoid":
            return domains.ellipsoid(p["a"], p["b"])
        return domains.polydisk(p["a"], p["b"])

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        for name, value in self.params:
            if name == "vertices":
                out[name] = [[format_rational(c) for c in v] for v in value]
            else:
                out[name] = format_rational(value)
        return out


def _load_text(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if arg.lstrip().startswith("{"):
        return arg
    try:
        return Path(arg).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainParseError(f"cannot read {arg}: {exc}") from exc


def _load_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainParseError(f"{what}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def parse_domain(text: str) -> DomainSpec:
    """Parse and validate a domain description such as ``{"kind": "ball", "capacity": "1"}``."""
    data = _load_json(text, "domain")
    if not isinstance(data, dict):
        raise DomainParseError("domain: top-level value must be an object")
    kind = data.get("kind")
    if kind not in _KIND_FIELDS:
        raise DomainParseError(f"domain: field 'kind': unknown kind {kind!r} (expected one of {sorted(_KIND_FIELDS)})")
    params = []
    for name in _KIND_FIELDS[kind]:
        if name not in data:
            raise DomainParseError(f"domain: field '{name}' is required for kind {kind!r}")
        try:
            if name == "vertices":
                verts = data[name]
                if not isinstance(verts, list) or not verts:
                    raise DomainParseError("domain: field 'vertices' must be a nonempty list")
                value = []
                for i, v in enumerate(verts):
                    if not isinstance(v, list) or len(v) != 2:
                        raise DomainParseError(f"domain: field 'vertices[{i}]' must be a pair")
                    value.append(tuple(parse_rational(c) for c in v))
                value = tuple(value)
            else:
                value = parse_rational(data[name])
                if value <= 0:
                    raise DomainParseError(f"domain: field '{name}' must be positive, got {format_rational(value)}")
        except ToricapsError as exc:
            if isinstance(exc, DomainParseError):
                raise
            raise DomainParseError(f"domain: field '{name}': {exc}") from exc
        params.append((name, value))
    spec = DomainSpec(kind, tuple(sorted(params)))
    try:
        spec.to_polytope()
    except ToricapsError as exc:
        raise DomainParseError(f"domain: {exc}") from exc
    return spec


def parse_constraint(text: str) -> TangencyConstraint:
    data = _load_json(text, "constraint")
    try:
        return TangencyConstraint.from_json(data)
    except ToricapsError as exc:
        raise DomainParseError(f"constraint: {exc}") from exc


# --- run configuration ------------------------------------------------------------------

@dataclass
class RunConfig:
    k_max: int = 5
    quantities: tuple = ("lk", "uk", "gh")
    format: str = "table"
    oracle_check: bool = False
    oracle_only: bool = False
    out: Optional[str] = None

    def __post_init__(self):
        if isinstance(self.quantities, str):
            self.quantities = tuple(q.strip() for q in self.quantities.split(",") if q.strip())
        self.quantities = tuple(self.quantities)
        bad = [q for q in self.quantities if q not in QUANTITIES]
        if bad:
            raise DomainParseError(f"unknown quantities {bad}; choose from {QUANTITIES}")
        if isinstance(self.k_max, bool) or not isinstance(self.k_max, int) or self.k_max < 1:
            raise DomainParseError(f"k_max must be a positive integer, got {self.k_max!r}")
        if self.format not in FORMATS:
            raise DomainParseError(f"format must be one of {FORMATS}")


def _build_config(args) -> RunConfig:
    values = {}
    if getattr(args, "config", None):
        data = _load_json(_load_text(args.config), "config")
        if not isinstance(data, dict):
            raise DomainParseError("config: top-level value must be an object")
        values.update({k: v for k, v in data.items() if k in RunConfig.__dataclass_fields__})
    for name in RunConfig.__dataclass_fields__:
        v = getattr(args, name, None)
        if v is not None and v is not False:
            values[name] = v
    return RunConfig(**values)


# --- rendering ----------------------------------------------------------------------------

def _render(header, rows, fmt, extra=None) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "json":
        doc = dict(extra or {})
        doc["rows"] = [dict(zip(header, r)) for r in rows]
        return json.dumps(doc, indent=2) + "\n"
    widths_ = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(str(x).rjust(w) for x, w in zip(r, widths_)) for r in [header, *rows]]
    return "\n".join(lines) + "\n"


def _need_strongly_convex(omega, what):
    if not is_strongly_convex(omega):
        raise UnsupportedDomainError(
            f"{what} needs a strongly convex domain; rerun `caps` with --oracle-only "
            f"to get the lattice lower bound by brute force"
        )


def cmd_caps(spec: DomainSpec, config: RunConfig) -> str:
    omega = spec.to_polytope()
    if config.oracle_only:
        header = ["k", "lk"]
        rows = [[k, format_rational(l_k_bruteforce(omega, k))] for k in range(1, config.k_max + 1)]
        return _render(header, rows, config.format, {"domain": spec.to_json(), "oracle_only": True})
    _need_strongly_convex(omega, "caps")
    quantities = [q for q in QUANTITIES if q in config.quantities]
    slope = asymptotic_slope(omega)[0] if "slope" in quantities else None
    width = gromov_width(omega) if "width" in quantities else None
    rows = []
    for k in range(1, config.k_max + 1):
        row = [k]
        values = {}
        for q in quantities:
            if q == "lk":
                values[q] = l_k(omega, k)[0]
            elif q == "uk":
                values[q] = u_k(omega, k)[0]
            elif q == "gh":
                values[q] = gh_capacity(omega, k)
            elif q == "slope":
                values[q] = slope * k
            else:
                values[q] = width
            row.append(format_rational(values[q]))
        if config.oracle_check and k <= ORACLE_K_MAX:
            _oracle_row(omega, k, values)
        rows.append(row)
    header = ["k"] + ["slope_k" if q == "slope" else q for q in quantities]
    return _render(header, rows, config.format, {"domain": spec.to_json(), "k_max": config.k_max})


def _oracle_row(omega, k, values):
    lk = values.get("lk", l_k(omega, k)[0])
    uk = values.get("uk", u_k(omega, k)[0])
    lb, ub = l_k_bruteforce(omega, k), l_k_bruteforce(omega, k, restrict_to_U=True)
    if lk != lb or uk != ub:
        raise VerificationError(
            f"oracle mismatch at k={k}: DP gives ({lk}, {uk}), brute force gives ({lb}, {ub})"
        )


def cmd_interval(spec: DomainSpec, constraint: TangencyConstraint, fmt: str = "table") -> str:
    omega = spec.to_polytope()
    _need_strongly_convex(omega, "interval")
    iv = rsft_interval(omega, constraint)
    if fmt == "json":
        doc = iv.to_json()
        doc["codim"] = codim(constraint)
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"codim = {codim(constraint)}, k = {iv.k}"]
    if iv.upper is None:
        lines.append(f"lower bound: {format_rational(iv.lower)}")
        lines.append(f"warning: {iv.warning}")
    else:
        lines.append(f"interval: [{format_rational(iv.lower)}, {format_rational(iv.upper)}]")
        lines.append("exact: yes" if iv.exact else "exact: no")
    if iv.stable_upper is not None:
        lines.append(f"stable upper bound: {format_rational(iv.stable_upper)}")
    return "\n".join(lines) + "\n"


def cmd_plot(spec: DomainSpec, config: RunConfig) -> str:
    omega = spec.to_polytope()
    _need_strongly_convex(omega, "plot")
    slope = asymptotic_slope(omega)[0]
    rows = [
        [k, *(format_rational(x) for x in (l_k(omega, k)[0], u_k(omega, k)[0], gh_capacity(omega, k), slope * k))]
        for k in range(1, config.k_max + 1)
    ]
    return _render(["k", "lk", "uk", "gh", "slope_k"], rows, "csv")


def cmd_fan(spec: DomainSpec, resolve: bool = False, fmt: str = "table") -> str:
    omega = spec.to_polytope()
    base = normal_fan(omega)
    fan = refine_smooth(base) if resolve else base
    added = set(inserted_rays(base, fan))
    rows = []
    for r in fan.rays:
        weight = str(1 + r[0] + r[1]) if r[0] >= 0 and r[1] >= 0 else "-"
        rows.append([f"({r[0]},{r[1]})" + ("*" if r in added else ""), format_rational(support_value(omega, r)), weight])
    return _render(["ray", "support", "weight"], rows, fmt, {"domain": spec.to_json(), "resolved": resolve})


# --- verification -----------------------------------------------------------------------------

def _golden(name):
    return json.loads(resources.files("toricaps").joinpath("data", name).read_text(encoding="utf-8"))


def run_golden() -> list:
    """Run the shipped golden fixtures; returns ``(name, passed, detail)`` triples."""
    results = []
    table = _golden("region_r4.json")
    omega = parse_domain(json.dumps(table["domain"])).to_polytope()
    for col, fn in (("lk", lambda k: l_k(omega, k)[0]), ("gh", lambda k: gh_capacity(omega, k))):
        got = [format_rational(fn(k)) for k in range(1, len(table[col]) + 1)]
        results.append((f"r=4 region {col}", got == table[col], " ".join(got)))
    family = _golden("closed_form.json")
    for r, expected in family["lk"].items():
        omega = domains.example_region(parse_rational(r))
        got = [format_rational(l_k(omega, k)[0]) for k in range(1, len(expected) + 1)]
        results.append((f"closed form r={r}", got == expected, f"k=1..{len(expected)}"))
    return results


def cmd_verify(spec: Optional[DomainSpec], golden: bool, k_max: int = ORACLE_K_MAX) -> str:
    lines = []
    failed = False
    if golden:
        for name, ok, detail in run_golden():
            lines.append(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
            failed |= not ok
    if spec is not None:
        omega = spec.to_polytope()
        _need_strongly_convex(omega, "verify")
        for k in range(1, k_max + 1):
            try:
                _oracle_row(omega, k, {})
                lines.append(f"PASS  oracle k={k}")
            except VerificationError as exc:
                lines.append(f"FAIL  {exc}")
                failed = True
    text = "\n".join(lines) + "\n"
    if failed:
        raise VerificationError(text)
    return text


# --- entry point ---------------------------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toricaps", description="Exact lattice bounds for toric domains.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def run_opts(sp, quantities=True):
        sp.add_argument("domain")
        sp.add_argument("--k-max", dest="k_max", type=int)
        if quantities:
            sp.add_argument("--quantities", help="comma separated subset of " + ",".join(QUANTITIES))
            sp.add_argument("--format", choices=FORMATS)
            sp.add_argument("--oracle-check", dest="oracle_check", action="store_true")
            sp.add_argument("--oracle-only", dest="oracle_only", action="store_true")
        sp.add_argument("--config")
        sp.add_argument("--out")

    run_opts(sub.add_parser("caps", help="table of l_k, u_k, GH capacities"))
    run_opts(sub.add_parser("plot", help="CSV of (k, lk, uk, gh, slope*k)"), quantities=False)

    sp = sub.add_parser("interval", help="bounds for a tangency constraint")
    sp.add_argument("domain")
    sp.add_argument("constraint")
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.add_argument("--out")

    sp = sub.add_parser("fan", help="normal fan and its resolution")
    sp.add_argument("domain")
    sp.add_argument("--resolve", action="store_true")
    sp.add_argument("--format", choices=FORMATS, default="table")
    sp.add_argument("--out")

    sp = sub.add_parser("verify", help="golden fixtures and oracle checks")
    sp.add_argument("domain", nargs="?")
    sp.add_argument("--golden", action="store_true")
    sp.add_argument("--k-max", dest="k_max", type=int, default=ORACLE_K_MAX)
    sp.add_argument("--out")
    return p


def _dispatch(args) -> str:
    if args.command == "caps":
        return cmd_caps(parse_domain(_load_text(args.domain)), _build_config(args))
    if args.command == "plot":
        return cmd_plot(parse_domain(_load_text(args.domain)), _build_config(args))
    if args.command == "interval":
        spec = parse_domain(_load_text(args.domain))
        return cmd_interval(spec, parse_constraint(_load_text(args.constraint)), args.format)
    if args.command == "fan":
        return cmd_fan(parse_domain(_load_text(args.domain)), args.resolve, args.format)
    spec = parse_domain(_load_text(args.domain)) if args.domain else None
    if spec is None and not args.golden:
        raise DomainParseError("verify needs a DOMAIN, --golden, or both")
    return cmd_verify(spec, args.golden, args.k_max)


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        text = _dispatch(args)
        code = EXIT_OK
    except VerificationError as exc:
        text, code = str(exc), EXIT_VERIFY
        sys.stderr.write("verification failed\n")
    except UnsupportedDomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_UNSUPPORTED
    except ToricapsError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
