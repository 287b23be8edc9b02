"""The ``syzrank`` command line.

A job parses one polynomial, an ambient space and a list of points, then
classifies each point. Output is a human-readable text report or, with
``--format machine``, one JSON document whose layout is fixed by
:data:`SCHEMA_VERSION` (documented in the README).

Exit codes: ``0`` success, ``2`` input error (including a point off the
hypersurface), ``3`` internal inconsistency between independent methods.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import __version__
from .errors import InconsistencyError, InvalidPointError
from .fields import GF, QQ, Field
from .incidence import global_seh_check
from .parsing import ParseError, load_fan_file, parse_point, parse_polynomial, serialize_polynomial
from .polynomial import Point, Ring
from .projective import PointStatus, ProjectiveHypersurface, classify, classify_isolated, point_status
from .singular_points import find_rational_singular_points
from .syzygy import syzygy_oracle_with_default_cap
from .toric import Fan, FanError, ToricHypersurface, builtin_fan, classify_toric, toric_point_status, validate_fan

__all__ = ["SCHEMA_VERSION", "EXIT_OK", "EXIT_INPUT", "EXIT_INCONSISTENT", "JobConfig", "Report", "run", "main"]

SCHEMA_VERSION = 1
EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INCONSISTENT = 3

ORACLE_CHARTS = 2


class InputError(ValueError):
    """A job that cannot be run as written."""


@dataclass(frozen=True)
class JobConfig:
    """Everything needed to run one job.

    ``ambient`` is ``"pn:<n>"`` or ``"toric:<fan file or built-in name>"``;
    ``field`` is ``"q"`` or ``"fp:<prime>"``. ``degree_cap`` overrides the
    degree bound of the bounded-degree syzygy oracle.
    """

    ambient: str
    poly: str
    variables: tuple | None = None
    points: tuple = ()
    field: str = "q"
    refine_isolated: bool = False
    run_oracles: bool = False
    global_check: bool = False
    find_singular: bool = False
    degree_cap: int | None = None


@dataclass
class Report:
    """Result of :func:`run`; ``to_dict`` is the machine-format document."""

    input: dict
    exit_code: int = EXIT_OK
    reducedness: dict | None = None
    singular_search: dict | None = None
    points: list = field(default_factory=list)
    oracle_summary: dict | None = None
    global_check: bool | None = None
    error: dict | None = None
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "tool_version": __version__,
            "input": self.input,
            "exit_code": self.exit_code,
            "reducedness": self.reducedness,
            "singular_search": self.singular_search,
            "points": self.points,
            "oracle_summary": self.oracle_summary,
            "global_check": self.global_check,
            "error": self.error,
            "timing": {"seconds": round(self.seconds, 6)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"syzrank {__version__}"]
        inp = self.input
        lines.append(f"ambient: {inp.get('ambient')}  field: {inp.get('field')}")
        if "polynomial" in inp:
            lines.append(f"f = {inp['polynomial']}  (variables {', '.join(inp.get('variables', []))})")
        if self.reducedness and not self.reducedness["ok"]:
            lines.append(f"warning: {self.reducedness['message']}")
        if self.singular_search is not None:
            s = self.singular_search
            if s["positive_dimensional"]:
                lines.append("singular locus: POSITIVE_DIMENSIONAL")
            else:
                pts = ", ".join(s["points"]) or "none"
                tail = "" if s["complete"] else " (incomplete: non-rational singular points exist)"
                lines.append(f"rational singular points: {pts}{tail}")
        for rec in self.points:
            lines.append(_point_text(rec))
        if self.oracle_summary is not None:
            o = self.oracle_summary
            lines.append(f"oracles: {o['checked']} checks, {'all agree' if o['agree'] else 'DISAGREEMENT'}")
        if self.global_check is not None:
            verdict = "every point" if self.global_check else "NOT every point"
            lines.append(f"global check: strongly Euler homogeneous at {verdict}")
        if self.error is not None:
            lines.append(f"error ({self.error['kind']}): {self.error['message']}")
        return "\n".join(lines)


def _point_text(rec: dict) -> str:
    head = f"{rec['point']}: {rec['status']}  rk M' = {rec['rk_Mprime']}  rk M = {rec['rk_M']}"
    if "defect" in rec:
        head += f"  defect = {rec['defect']}"
    head += f"  seh = {str(rec['seh']).lower()}"
    iso = rec.get("isolated")
    if iso is not None:
        head += f"  mu = {iso['mu']}  tau = {iso['tau']}  quasi-homogeneous = {str(iso['quasi_homogeneous']).lower()}"
    for note in rec.get("notes", []):
        head += f"\n    note: {note}"
    return head


# configuration parsing ---------------------------------------------------------------------


def parse_field(text: str) -> Field:
    t = text.strip().lower()
    if t == "q":
        return QQ
    if t.startswith("fp:"):
        try:
            p = int(t[3:])
        except ValueError:
            raise InputError(f"bad prime in --field {text!r}") from None
        try:
            return GF(p)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    raise InputError(f"--field must be 'q' or 'fp:<prime>', got {text!r}")


def default_variables(count: int) -> tuple:
    """``x, y, z, w`` for up to four variables, ``x0, x1, ...`` beyond."""
    if count <= 4:
        return tuple("xyzw"[:count])
    return tuple(f"x{i}" for i in range(count))


def _split_vars(text: str | None) -> tuple | None:
    if text is None:
        return None
    names = tuple(v.strip() for v in text.split(",") if v.strip())
    if not names:
        raise InputError("--vars is empty")
    return names


def _load_fan(ref: str) -> Fan:
    path = Path(ref)
    if path.is_file():
        try:
            return Fan.from_dict(load_fan_file(path))
        except FanError as exc:
            raise InputError(f"invalid fan in {ref}: {exc}") from None
    try:
        return builtin_fan(ref)
    except KeyError:
        raise InputError(f"{ref!r} is neither a fan file nor a built-in fan (P<n>, P<a>xP<b>, F<a>)") from None


@dataclass
class _Job:
    config: JobConfig
    field: Field
    ring: Ring
    kind: str
    n: int
    fan: Fan | None = None


def _prepare(config: JobConfig) -> tuple[_Job, object]:
    fld = parse_field(config.field)
    ambient = config.ambient.strip()
    kind, _, arg = ambient.partition(":")
    if kind == "pn":
        try:
            n = int(arg)
        except ValueError:
            raise InputError(f"bad dimension in --ambient {ambient!r}") from None
        if n < 1:
            raise InputError("projective dimension must be at least 1")
        names = config.variables or default_variables(n + 1)
        if len(names) != n + 1:
            raise InputError(f"P^{n} needs {n + 1} variables, got {len(names)}")
        fan = None
    elif kind == "toric":
        fan = _load_fan(arg)
        names = config.variables or fan.names or default_variables(fan.nrays)
        if len(names) != fan.nrays:
            raise InputError(f"the fan has {fan.nrays} rays but {len(names)} variables were given")
        n = fan.dim
    else:
        raise InputError(f"--ambient must be 'pn:<n>' or 'toric:<file>', got {ambient!r}")
    if len(set(names)) != len(names):
        raise InputError("variables must be distinct")
    try:
        ring = Ring(list(names), fld)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    f = parse_polynomial(config.poly, ring, fld)
    job = _Job(config, fld, ring, kind, n, fan)
    if kind == "pn":
        try:
            hyp = ProjectiveHypersurface(f)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        try:
            hyp = ToricHypersurface(validate_fan(fan), f)
        except FanError as exc:
            raise InputError(f"invalid fan: {exc}") from None
        except ValueError as exc:
            raise InputError(str(exc)) from None
    return job, hyp


def _parse_points(job: _Job, hyp) -> list[Point]:
    points = []
    for text in job.config.points:
        p = parse_point(text)
        if job.kind == "pn":
            if p.kind != "projective":
                raise InputError(f"{text!r}: projective points are written [p0:...:pn]")
            if len(p) != job.n + 1:
                raise InputError(f"{text!r} has {len(p)} coordinates, expected {job.n + 1}")
            status = point_status(hyp, p)
        else:
            if p.kind == "projective":
                raise InputError(f"{text!r}: Cox points are written (p0, ..., ps)")
            if len(p) != hyp.pic.s:
                raise InputError(f"{text!r} has {len(p)} coordinates, expected {hyp.pic.s}")
            status = toric_point_status(hyp, p)
        if status is PointStatus.NOT_ON_D:
            raise InputError(f"{text!r} does not lie on the hypersurface")
        points.append(p)
    return points


def _classify_projective(job: _Job, hyp: ProjectiveHypersurface, p: Point) -> dict:
    charts = ORACLE_CHARTS if job.config.run_oracles else 0
    status = point_status(hyp, p)
    if job.config.refine_isolated and status is PointStatus.SINGULAR:
        report = classify_isolated(hyp, p, oracle_charts=charts)
    else:
        report = classify(hyp, p, oracle_charts=charts)
    rec = report.to_dict()
    if job.config.run_oracles:
        gens = list(hyp.jacobian)
        res = syzygy_oracle_with_default_cap(gens, p.coords, hyp.d, job.config.degree_cap)
        if res.stable and res.rank != report.rk_Mprime:
            raise InconsistencyError(
                f"bounded-degree syzygy oracle gives rank {res.rank}, rk M'_f = {report.rk_Mprime} at {p}"
            )
        rec["syzygy_oracle"] = {"rank": res.rank, "stable": res.stable, "cap": res.cap}
    return rec


def _classify_toric(job: _Job, hyp: ToricHypersurface, p: Point) -> dict:
    charts = ORACLE_CHARTS if job.config.run_oracles else 0
    report = classify_toric(hyp, p, oracle_charts=charts, refine_isolated=job.config.refine_isolated)
    return report.to_dict()


def _thread_count() -> int:
    raw = os.environ.get("SYZRANK_THREADS")
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _normalized_input(config: JobConfig, job: _Job | None, f=None) -> dict:
    out = {
        "ambient": config.ambient,
        "field": config.field,
        "points": list(config.points),
        "options": {
            "refine_isolated": config.refine_isolated,
            "oracles": config.run_oracles,
            "global_check": config.global_check,
            "find_singular": config.find_singular,
            "degree_cap": config.degree_cap,
        },
    }
    if job is not None:
        out["variables"] = list(job.ring.names)
        out["field"] = str(job.field)
    if f is not None:
        out["polynomial"] = serialize_polynomial(f)
    else:
        out["polynomial_text"] = config.poly
    return out


def _oracle_summary(records: list) -> dict:
    checked = 0
    agree = True
    for rec in records:
        for o in rec.get("oracles", []):
            checked += 1
            agree = agree and o.get("agrees", o.get("seh") == rec["seh"])
        so = rec.get("syzygy_oracle")
        if so is not None and so["stable"]:
            checked += 1
            agree = agree and so["rank"] == rec["rk_Mprime"]
    return {"checked": checked, "agree": agree}


def run(config: JobConfig) -> Report:
    """Run one job; the exit code is stored on the returned report."""
    start = time.perf_counter()
    report = Report(_normalized_input(config, None))
    try:
        job, hyp = _prepare(config)
        report.input = _normalized_input(config, job, hyp.f)
        if job.kind == "pn":
            report.reducedness = _reducedness_dict(hyp)
        if config.find_singular:
            if job.kind != "pn":
                raise InputError("--find-singular needs a projective ambient")
            report.singular_search = find_rational_singular_points(hyp.f).to_dict()
        points = _parse_points(job, hyp)
        if config.find_singular and report.singular_search is not None:
            known = {str(p) for p in points}
            for text in report.singular_search["points"]:
                if text not in known:
                    points.append(parse_point(text))
        work = _classify_projective if job.kind == "pn" else _classify_toric
        hyp.matrices  # build once before any worker threads start
        threads = min(_thread_count(), max(1, len(points)))
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                report.points = list(pool.map(lambda p: work(job, hyp, p), points))
        else:
            report.points = [work(job, hyp, p) for p in points]
        if config.run_oracles:
            report.oracle_summary = _oracle_summary(report.points)
        if config.global_check:
            if job.kind != "pn":
                raise InputError("--global-check needs a projective ambient")
            report.global_check = global_seh_check(hyp)
    except InconsistencyError as exc:
        report.exit_code = EXIT_INCONSISTENT
        report.error = {"kind": "inconsistency", "message": str(exc)}
    except ParseError as exc:
        report.exit_code = EXIT_INPUT
        report.error = {"kind": "parse", "message": str(exc), "offset": exc.offset}
    except (InputError, InvalidPointError, FanError, ValueError) as exc:
        report.exit_code = EXIT_INPUT
        report.error = {"kind": "input", "message": str(exc)}
    report.seconds = time.perf_counter() - start
    return report


def _reducedness_dict(hyp: ProjectiveHypersurface) -> dict:
    check = hyp.reducedness
    return {"ok": check.ok, "dimension": check.dimension, "message": check.message}


# argument parsing --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="syzrank",
        description="Decide strong Euler homogeneity of points on a hypersurface via Jacobian syzygy ranks.",
    )
    ap.add_argument("--ambient", required=True, help="pn:<n> or toric:<fan file | P<n> | P<a>xP<b> | F<a>>")
    ap.add_argument("--poly", required=True, help="the defining polynomial, e.g. 'x^3 - y^2*z'")
    ap.add_argument("--vars", default=None, help="comma-separated variable names")
    ap.add_argument("--point", action="append", default=[], help="[p0:...:pn] or (p0, ..., ps); repeatable")
    ap.add_argument("--find-singular", action="store_true", help="also classify the rational singular points")
    ap.add_argument("--refine-isolated", action="store_true", help="add mu, tau at isolated singular points")
    ap.add_argument("--oracles", action="store_true", help="cross-check every rank with independent oracles")
    ap.add_argument("--global-check", action="store_true", help="decide strong Euler homogeneity at all points")
    ap.add_argument("--field", default="q", help="q (rationals) or fp:<prime>")
    ap.add_argument("--format", choices=("text", "machine"), default="text")
    ap.add_argument("--degree-cap", type=int, default=None, help="degree bound for the syzygy oracle")
    ap.add_argument("--version", action="version", version=f"syzrank {__version__}")
    return ap


def config_from_args(args: argparse.Namespace) -> JobConfig:
    return JobConfig(
        ambient=args.ambient,
        poly=args.poly,
        variables=_split_vars(args.vars),
        points=tuple(args.point),
        field=args.field,
        refine_isolated=args.refine_isolated,
        run_oracles=args.oracles,
        global_check=args.global_check,
        find_singular=args.find_singular,
        degree_cap=args.degree_cap,
    )


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except InputError as exc:
        print(f"syzrank: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = run(config)
    if args.format == "machine":
        print(report.to_json())
    else:
        print(report.to_text())
    if report.error is not None:
        print(f"syzrank: {report.error['kind']} error: {report.error['message']}", file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
