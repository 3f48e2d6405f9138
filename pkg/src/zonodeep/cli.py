"""Command line interface: ``zonodeep <command> [options]``.

Every command prints one record ``{"command", "inputs", "results"}``.
Rationals are rendered exactly as ``p/q`` strings; ``--approx`` adds
decimal values that are for reading only.  Exit codes: 2 for unparsable
arguments, 3 for domain errors, 4 when an instance exceeds a size guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import lonelyrunner as lr
from . import parallelepiped as pep
from . import rabbit
from . import zonotope as zon
from .asymmetry import SymmetricZonotopeBody, ca_parallelepiped, ca_symmetric
from .errors import DomainError, InstanceTooLarge, NoInteriorPoint, ZonodeepError
from .numtheory import akn_bound, euler_phi, extremal_dimension, rabbit_constants, totient_summatory, w_of

EXIT_PARSE, EXIT_DOMAIN, EXIT_TOO_LARGE = 2, 3, 4
MAX_COMPARE_D = 10


# -- parsing ------------------------------------------------------------------


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def parse_vector(text: str) -> tuple:
    """``"1,2/3,4"`` -> ``(1, 2/3, 4)``; integral entries come back as ints."""
    if not text.strip():
        raise argparse.ArgumentTypeError("empty vector")
    out = []
    for part in text.split(","):
        q = parse_rational(part)
        out.append(int(q) if q.denominator == 1 else q)
    return tuple(out)


def parse_int_vector(text: str) -> tuple:
    v = parse_vector(text)
    if any(isinstance(x, Fraction) for x in v):
        raise argparse.ArgumentTypeError(f"expected integers: {text!r}")
    return v


def parse_vector_list(text: str) -> list[tuple]:
    """Semicolon-separated integer vectors ``"1,0;0,1;1,1"``."""
    vectors = [parse_int_vector(p) for p in text.split(";") if p.strip()]
    if not vectors:
        raise argparse.ArgumentTypeError("no vectors given")
    if len({len(v) for v in vectors}) != 1:
        raise argparse.ArgumentTypeError(f"vectors of mixed length: {text!r}")
    return vectors


# -- rendering ----------------------------------------------------------------


def render(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, dict):
        return {k: render(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    return str(value)


def _is_flat_vector(value) -> bool:
    return isinstance(value, list) and all(isinstance(x, str) for x in value) and bool(value)


def flatten(rendered, prefix: str = "") -> list[tuple[str, str]]:
    """Leaves of a rendered record as ``(dotted.path, text)`` pairs.

    Lists of scalars become one comma-joined leaf so vectors stay parseable.
    """
    if isinstance(rendered, dict):
        out = []
        for k, v in rendered.items():
            out += flatten(v, f"{prefix}.{k}" if prefix else k)
        return out
    if _is_flat_vector(rendered):
        return [(prefix, ",".join(rendered))]
    if isinstance(rendered, list):
        out = []
        for i, v in enumerate(rendered):
            out += flatten(v, f"{prefix}.{i}")
        return out
    if isinstance(rendered, bool):
        return [(prefix, "true" if rendered else "false")]
    return [(prefix, "" if rendered is None else str(rendered))]


def _approx(text: str) -> str:
    try:
        parts = [Fraction(p) for p in text.split(",")]
    except (ValueError, ZeroDivisionError):
        return ""
    if all(p.denominator == 1 for p in parts):
        return ""
    return ",".join(f"{float(p):.6g}" for p in parts)


def format_record(record: dict, fmt: str, approx: bool = False) -> str:
    rendered = render(record)
    leaves = flatten({"inputs": rendered["inputs"], "results": rendered["results"]})
    if fmt == "json":
        if approx:
            rendered["approx"] = {k: a for k, v in leaves if k.startswith("results") and (a := _approx(v))}
        return json.dumps(rendered, indent=2)
    rows = [("command", rendered["command"], "")] + [(k, v, _approx(v) if approx else "") for k, v in leaves]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["field", "value"] + (["approx (non-authoritative)"] if approx else []))
        for k, v, a in rows:
            writer.writerow([k, v] + ([a] if approx else []))
        return buf.getvalue().rstrip("\n")
    width = max(len(k) for k, _, _ in rows)
    lines = []
    for k, v, a in rows:
        line = f"{k.ljust(width)}  {v}"
        if approx and a:
            line += f"  (~{a})"
        lines.append(line)
    return "\n".join(lines)


# -- commands -----------------------------------------------------------------


def _pep_from(args) -> pep.LatticeParallelepiped:
    vectors = args.pep
    if len(vectors) != len(vectors[0]) + 1:
        raise DomainError("--pep needs a base point followed by d generators in dimension d")
    return pep.LatticeParallelepiped(vectors[0], tuple(vectors[1:]))


def cmd_constants(args):
    rows = []
    for d in range(1, args.d_max + 1):
        rc = rabbit_constants(d)
        rows.append({"d": d, "w": rc.w, "rab": rc.rab, "delta": rc.delta})
    return {"rows": rows}


def cmd_summatory(args):
    return {"rows": [{"d": d, "Phi": totient_summatory(d)} for d in range(1, args.d_max + 1)]}


def cmd_compare(args):
    if args.d_max > MAX_COMPARE_D:
        raise InstanceTooLarge(f"the general bound is double exponential; use --d-max <= {MAX_COMPARE_D}")
    rows = []
    for d in range(1, args.d_max + 1):
        rows.append({"d": d, "zonotope_bound": w_of(d) - 1, "general_polytope_bound": akn_bound(d)})
    return {"rows": rows}


def cmd_extremal_alpha(args):
    alpha = rabbit.extremal_alpha(args.z)
    value, q = rabbit.psi_with_witness(alpha)
    return {"alpha": tuple(alpha), "dim": len(alpha), "psi": value, "argmax_Q": q, "expected": Fraction(1, args.z)}


def _pep_summary(P):
    points = pep.interior_lattice_points(P)
    cas = sorted({ca_parallelepiped(pep.coefficients_of(P, w)) for w in points})
    return {"generators": P.generators, "dim": P.dim, "det": P.determinant, "interior_count": len(points), "ca_values": cas}


def cmd_extremal_pep(args):
    out = _pep_summary(pep.extremal_parallelepiped(args.z))
    out.update(phi=euler_phi(args.z), expected_ca=args.z - 1)
    return out


def cmd_lifted_pep(args):
    out = _pep_summary(pep.lifted_extremal(args.d))
    out.update(w=w_of(args.d), core_dim=extremal_dimension(w_of(args.d)), expected_ca=w_of(args.d) - 1)
    return out


def cmd_psi(args):
    value, q = rabbit.psi_with_witness(args.alpha)
    return {"psi": value, "argmax_Q": q}


def cmd_ca(args):
    if (args.pep is None) == (args.zonotope is None):
        raise DomainError("give exactly one of --pep or --zonotope")
    if args.pep is not None:
        P = _pep_from(args)
        report = ca_symmetric(SymmetricZonotopeBody(P.generators), P.center, args.point)
        alphas = pep.coefficients_of(P, args.point)
        return {
            "point": report.point,
            "norm_value": report.norm_value,
            "ca": report.ca,
            "coefficients": alphas,
            "ca_closed_form": ca_parallelepiped(alphas),
        }
    Z = zon.LatticeZonotope(args.zonotope)
    report = zon.ca(Z, args.point)
    return {"point": report.point, "norm_value": report.norm_value, "ca": report.ca, "center": Z.center}


def cmd_deep(args):
    if (args.pep is None) == (args.zonotope is None):
        raise DomainError("give exactly one of --pep or --zonotope")
    if args.pep is not None:
        P = _pep_from(args)
        if args.point is not None:
            start = args.point
        else:
            points = pep.interior_lattice_points(P)
            if not points:
                raise NoInteriorPoint("parallelepiped has no interior lattice point")
            start = points[0]
        alphas = pep.coefficients_of(P, start)
        q, _ = pep.best_multiplier(alphas) if all(0 < a < 1 for a in alphas) else (None, None)
        w, ca = pep.deep_point(P, start)
        return {"start": start, "multiplier_Q": q, "point": w, "ca": ca, "bound": pep.theorem_bound(P.dim)}
    r = zon.deep_point_details(zon.LatticeZonotope(args.zonotope))
    return {
        "start": r.start,
        "parallelepiped_base": r.parallelepiped.base,
        "parallelepiped_generators": r.parallelepiped.generators,
        "point": r.point,
        "ca_in_parallelepiped": r.ca_in_parallelepiped,
        "ca": r.ca,
        "bound": r.bound,
    }


def cmd_gap(args):
    value, beta = lr.gap_with_witness(args.n)
    return {"gap": value, "beta": beta, "min_ca": 1 / value - 1}


def cmd_lrc(args):
    holds, beta = lr.lrc_holds(args.n)
    return {"holds": holds, "beta": beta, "gap": lr.gap(args.n), "threshold": Fraction(1, len(args.n) + 1)}


def cmd_sweep(args):
    report = lr.sweep(args.d, args.max_speed, budget=args.budget, jobs=args.jobs)
    return {
        "visited": report.visited,
        "min_gap": report.min_gap,
        "argmin": report.argmin,
        "tight_count": len(report.tight),
        "tight": report.tight,
        "violation_count": len(report.violations),
        "violations": [{"n": n, "gap": g} for n, g in report.violations],
    }


def cmd_count(args):
    n = lr.VelocityVector(args.n)
    Z = lr.lonely_runner_zonotope(n)
    formula = {mode: lr.count_Zn(n, mode) for mode in ("volume", "interior", "closed")}
    oracle = {
        "volume": zon.ehrhart_coefficients(Z)[-1],
        "interior": len(zon.interior_lattice_points(Z)),
        "closed": len(zon.lattice_points(Z)),
    }
    return {**formula, "oracle": oracle, "agree": formula == oracle}


def cmd_ehrhart(args):
    Z = zon.LatticeZonotope(args.zonotope)
    g = zon.ehrhart_coefficients(Z)
    return {"coefficients": g, "closed": sum(g), "interior": zon.count_lattice_points(Z, "interior")}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zonodeep", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "csv", "table"), default="json")
    parser.add_argument("--approx", action="store_true", help="add non-authoritative decimals")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    add("constants", cmd_constants, "w(d), rab(d), delta_d").add_argument("--d-max", type=int, required=True)
    add("summatory", cmd_summatory, "totient summatory function").add_argument("--d-max", type=int, required=True)
    add("compare", cmd_compare, "zonotope bound vs general lattice-polytope bound").add_argument(
        "--d-max", type=int, required=True
    )
    add("extremal-alpha", cmd_extremal_alpha, "extremal alpha vector for z").add_argument("--z", type=int, required=True)
    add("extremal-pep", cmd_extremal_pep, "extremal parallelepiped P^z").add_argument("--z", type=int, required=True)
    add("lifted-pep", cmd_lifted_pep, "extremal parallelepiped P(d)").add_argument("--d", type=int, required=True)
    add("psi", cmd_psi, "discrete loneliness of an alpha vector").add_argument(
        "--alpha", type=parse_vector, required=True
    )
    for name, func, help_text in (("ca", cmd_ca, "coefficient of asymmetry"), ("deep", cmd_deep, "deep interior point")):
        p = add(name, func, help_text)
        p.add_argument("--pep", type=parse_vector_list, help="base;v1;...;vd")
        p.add_argument("--zonotope", type=parse_vector_list, help="g1;...;gm")
        p.add_argument("--point", type=parse_vector, required=(name == "ca"))
    add("gap", cmd_gap, "gap of loneliness").add_argument("--n", type=parse_int_vector, required=True)
    add("lrc", cmd_lrc, "check the lonely runner bound").add_argument("--n", type=parse_int_vector, required=True)
    p = add("sweep", cmd_sweep, "exhaustive check over bounded speeds")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-speed", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=lr.DEFAULT_SWEEP_BUDGET)
    add("count", cmd_count, "lattice point counts of Z_n").add_argument("--n", type=parse_int_vector, required=True)
    add("ehrhart", cmd_ehrhart, "Ehrhart coefficients").add_argument(
        "--zonotope", type=parse_vector_list, required=True
    )
    return parser


def _inputs(args) -> dict:
    skip = {"func", "command", "format", "approx"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        results = args.func(args)
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (ZonodeepError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    record = {"command": args.command, "inputs": _inputs(args), "results": results}
    print(format_record(record, args.format, approx=args.approx))
    return 0


if __name__ == "__main__":
    sys.exit(main())
