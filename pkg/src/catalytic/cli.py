"""Command-line front end.

    catalytic count perms --m 2 --n 0..6
    catalytic count involutions --m 3 --n 4 --by-fixed-points --format csv
    catalytic count tableaux --shape 4,3,3
    catalytic crosscheck --max-m 4 --max-n 9
    catalytic verify-equations --m 2..4 --order 8

Exit codes: 0 success, 1 routes disagree or a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Callable, Iterable, Optional

from . import besseldet, gentree, lambdacalc, laurent, oracle, tableaux

KINDS = ("perms", "involutions", "restricted", "tableaux")
ROUTES = ("oracle", "gentree", "bessel", "explicit", "constterm", "orbit", "gg",
          "dp", "macmahon", "det", "all")
FORMATS = ("json", "csv", "bfile")

# default oracle bounds; larger cells need --max-oracle
DEFAULT_ORACLE = {"perms": 10, "involutions": 12, "restricted": 10, "tableaux": 14}


class UsageError(Exception):
    pass


class RouteUnavailable(Exception):
    """The route does not apply to this cell (outside its bound or range of validity)."""


def parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            r = range(int(lo), int(hi) + 1)
        else:
            r = range(int(text), int(text) + 1)
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}; use N or A..B") from exc
    if not r or r.start < 0:
        raise UsageError(f"range {text!r} is empty or negative")
    return r


@dataclass
class RunSpec:
    kind: str
    m: range = range(0)
    n: range = range(0)
    route: Optional[str] = None
    by_fixed_points: bool = False
    p: Optional[int] = None
    fmt: str = "json"
    out: Optional[str] = None
    max_oracle: Optional[int] = None
    shape: Optional[str] = None
    warnings: list[str] = field(default_factory=list)

    @property
    def oracle_bound(self) -> int:
        return self.max_oracle if self.max_oracle is not None else DEFAULT_ORACLE[self.kind]


# -- route tables ----------------------------------------------------------------
# Each function takes (m, n) and returns the count, or for split involution
# counts (m, n, p).  RouteUnavailable marks cells a route does not cover.

def _oracle_perms(bound):
    def f(m, n):
        if n > bound:
            raise RouteUnavailable(f"n={n} above oracle bound {bound}")
        return oracle.brute_count_perms(m, n, max_n=bound)[0].count
    return f


def _constterm_perms(m, n):
    if m != 2:
        raise RouteUnavailable("the constant-term route for permutations covers m=2")
    return laurent.catalan_ct(n)


def _oracle_inv(bound):
    def f(m, n):
        if n > bound:
            raise RouteUnavailable(f"n={n} above oracle bound {bound}")
        return oracle.brute_count_involutions(m, n, max_n=bound)[0].count
    return f


def _oracle_inv_fixed(bound):
    def f(m, n, p):
        if n > bound:
            raise RouteUnavailable(f"n={n} above oracle bound {bound}")
        split = oracle.brute_count_involutions(m, n, by_fixed_points=True, max_n=bound)
        return next((r.count for r in split if r.fixed_points == p), 0)
    return f


def _gentree_inv_fixed(m, n, p):
    split = gentree.count_involutions(m, n, by_fixed_points=True)
    return next((r.count for r in split if r.fixed_points == p), 0)


def _oracle_restricted(bound):
    def f(m, n):
        if n > bound:
            raise RouteUnavailable(f"n={n} above oracle bound {bound}")
        return oracle.brute_count_restricted(m, n, max_n=bound).count
    return f


def _gg(m, n):
    if not m <= n <= 2 * m:
        raise RouteUnavailable("the closed sum needs m <= n <= 2m")
    return besseldet.garsia_goupil(m, n)


def route_table(spec: RunSpec) -> dict[str, Callable]:
    bound = spec.oracle_bound
    if spec.kind == "perms":
        return {"oracle": _oracle_perms(bound), "gentree": gentree.count_perms,
                "bessel": besseldet.perm_count_bessel, "explicit": besseldet.perm_count_explicit,
                "orbit": lambdacalc.perm_count_orbit, "constterm": _constterm_perms}
    if spec.kind == "involutions":
        if spec.by_fixed_points or spec.p is not None:
            return {"oracle": _oracle_inv_fixed(bound), "gentree": _gentree_inv_fixed,
                    "bessel": besseldet.inv_count_fixed, "constterm": laurent.inv_count_fixed_ct}
        return {"oracle": _oracle_inv(bound),
                "gentree": lambda m, n: gentree.count_involutions(m, n)[0].count,
                "bessel": besseldet.inv_count_det, "constterm": laurent.inv_count_ct}
    if spec.kind == "restricted":
        return {"oracle": _oracle_restricted(bound), "gentree": gentree.count_restricted, "gg": _gg}
    return {"oracle": lambda lam: oracle.brute_count_tableaux(lam, max_size=bound),
            "dp": tableaux.count_tableaux_dp, "macmahon": tableaux.macmahon,
            "det": tableaux.macmahon_determinant}


CHEAPEST = {"perms": "gentree", "involutions": "constterm", "restricted": "gentree",
            "tableaux": "macmahon"}


def resolve_routes(spec: RunSpec) -> list[str]:
    table = route_table(spec)
    if spec.route is None:
        small = spec.kind == "tableaux" or max(spec.n) <= spec.oracle_bound
        if small:
            return sorted(table)
        spec.warnings.append(f"large range: using the {CHEAPEST[spec.kind]} route only, "
                             "cross-checking is off (pass --route all to force it)")
        return [CHEAPEST[spec.kind]]
    if spec.route == "all":
        return sorted(table)
    if spec.route not in table:
        raise UsageError(f"route {spec.route!r} does not apply to {spec.kind}; "
                         f"choose from {', '.join(sorted(table))}")
    return [spec.route]


def _cells(spec: RunSpec) -> list[tuple]:
    if spec.kind == "tableaux":
        return [(tableaux.PartitionShape.parse(spec.shape),)]
    cells = []
    for m in spec.m:
        for n in spec.n:
            if spec.kind == "restricted" and n < m:
                continue
            if spec.kind == "involutions" and spec.p is not None:
                if spec.p <= n and (n - spec.p) % 2 == 0:
                    cells.append((m, n, spec.p))
            elif spec.kind == "involutions" and spec.by_fixed_points:
                cells.extend((m, n, p) for p in range(n % 2, n + 1, 2))
            else:
                cells.append((m, n))
    return cells


def _row(spec: RunSpec, cell: tuple, route: str, count: int) -> dict:
    if spec.kind == "tableaux":
        return {"kind": spec.kind, "shape": str(cell[0]), "route": route, "count": count}
    row = {"kind": spec.kind, "m": cell[0], "n": cell[1]}
    if len(cell) == 3:
        row["p"] = cell[2]
    row["route"] = route
    row["count"] = count
    return row


def compute(spec: RunSpec) -> tuple[list[dict], list[str]]:
    """Return ``(rows, disagreements)`` for a count request."""
    routes = resolve_routes(spec)
    table = route_table(spec)
    explicit = spec.route not in (None, "all")
    rows, diffs = [], []
    for cell in _cells(spec):
        values = {}
        for route in routes:
            try:
                values[route] = table[route](*cell)
            except RouteUnavailable as exc:
                if explicit:
                    raise UsageError(f"{route} cannot compute {cell}: {exc}") from exc
            except oracle.OracleBoundError as exc:
                raise UsageError(str(exc)) from exc
            except besseldet.FormulaError as exc:
                diffs.append(f"{cell}: {route} failed: {exc}")
        rows.extend(_row(spec, cell, r, v) for r, v in sorted(values.items()))
        if len(set(values.values())) > 1:
            detail = ", ".join(f"{r}={v}" for r, v in sorted(values.items()))
            diffs.append(f"{spec.kind} {cell}: {detail}")
    return rows, diffs


def render(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        fields: list[str] = []
        for row in rows:
            fields.extend(k for k in row if k not in fields)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    # b-file: "n count", one line per n; needs a single-parameter sweep
    seen: dict[int, int] = {}
    for row in rows:
        if "n" not in row or "p" in row:
            raise UsageError("bfile output needs a sweep over n only")
        seen.setdefault(row["n"], row["count"])
    if len({row["m"] for row in rows}) > 1:
        raise UsageError("bfile output needs a single m")
    return "".join(f"{n} {c}\n" for n, c in sorted(seen.items()))


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_count(spec: RunSpec) -> int:
    rows, diffs = compute(spec)
    for w in spec.warnings:
        print(f"warning: {w}", file=sys.stderr)
    _emit(render(rows, spec.fmt), spec.out)
    if diffs:
        print("routes disagree:", file=sys.stderr)
        for d in diffs:
            print(f"  {d}", file=sys.stderr)
        return 1
    return 0


# -- cross-check suites ------------------------------------------------------------

@dataclass
class SuiteResult:
    name: str
    checked: int
    failures: list[tuple[tuple, str]]

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        if self.ok:
            return f"PASS {self.name} ({self.checked} checks)"
        key, detail = min(self.failures)
        return (f"FAIL {self.name} ({len(self.failures)}/{self.checked} failed; "
                f"smallest: {key}: {detail})")


def _compare(name: str, cells: Iterable[tuple], routes: dict[str, Callable]) -> SuiteResult:
    failures, checked = [], 0
    for cell in cells:
        values = {}
        for r, f in routes.items():
            try:
                values[r] = f(*cell)
            except RouteUnavailable:
                continue
            except Exception as exc:  # a crashing route is a failure of that route
                values[r] = f"error: {exc}"
        checked += 1
        if len(set(map(str, values.values()))) > 1:
            failures.append((cell, ", ".join(f"{r}={v}" for r, v in sorted(values.items()))))
    return SuiteResult(name, checked, failures)


def _bool_suite(name: str, cells: Iterable[tuple], check: Callable[..., bool]) -> SuiteResult:
    failures, checked = [], 0
    for cell in cells:
        checked += 1
        try:
            ok = check(*cell)
        except Exception as exc:
            failures.append((cell, f"error: {exc}"))
            continue
        if not ok:
            failures.append((cell, "identity fails"))
    return SuiteResult(name, checked, failures)


def run_crosscheck(max_m: int = 4, max_n: int = 9, perm_grow: Callable | None = None) -> list[SuiteResult]:
    """Every route against every other on ``m <= max_m``, ``n <= max_n``, plus the identity suites.

    ``perm_grow`` replaces the permutation succession step of the generating
    tree; the mutation test uses it to inject a wrong rule.
    """
    ms = range(1, max_m + 1)
    ns = range(0, max_n + 1)

    def tree_perms(m, n):
        *_, last = gentree.perm_levels(m, n, grow=perm_grow)
        return last.total()

    def tree_restricted(m, n):
        *_, last = gentree.perm_levels(m, n, root=gentree.restricted_root(m), grow=perm_grow)
        return last.total()

    perm_routes = {"oracle": _oracle_perms(oracle.MAX_PERM_N), "gentree": tree_perms,
                   "bessel": besseldet.perm_count_bessel, "explicit": besseldet.perm_count_explicit,
                   "orbit": lambdacalc.perm_count_orbit, "constterm": _constterm_perms}
    inv_routes = {"oracle": _oracle_inv(oracle.MAX_INVOLUTION_N),
                  "gentree": lambda m, n: gentree.count_involutions(m, n)[0].count,
                  "bessel": besseldet.inv_count_det, "constterm": laurent.inv_count_ct}

    def series_fixed(m, n, p):
        if m % 2 == 0:
            raise RouteUnavailable("exponential series is the odd-m form")
        return besseldet.inv_fixed_point_series(m, n).get(p, 0)

    fixed_routes = {"oracle": _oracle_inv_fixed(oracle.MAX_INVOLUTION_N),
                    "gentree": _gentree_inv_fixed, "bessel": besseldet.inv_count_fixed,
                    "constterm": laurent.inv_count_fixed_ct, "series": series_fixed}
    restricted_routes = {"oracle": _oracle_restricted(oracle.MAX_PERM_N),
                         "gentree": tree_restricted, "gg": _gg}
    tableau_routes = {"oracle": oracle.brute_count_tableaux, "dp": tableaux.count_tableaux_dp,
                      "macmahon": tableaux.macmahon, "det": tableaux.macmahon_determinant}

    order_f = min(max_n, 8)
    order_g = min(max_n, 10)
    small = min(max_m, 4)
    suites = [
        _compare("permutations", [(m, n) for m in ms for n in ns], perm_routes),
        _compare("involutions", [(m, n) for m in ms for n in ns], inv_routes),
        _compare("fixed points", [(m, n, p) for m in ms for n in ns
                                  for p in range(n % 2, n + 1, 2)], fixed_routes),
        _compare("restricted", [(m, n) for m in ms for n in ns if n >= m], restricted_routes),
        _compare("tableaux", [(lam,) for s in ns for lam in tableaux.partitions(s)], tableau_routes),
        _compare("tableaux by height", [(m, n) for m in ms for n in ns],
                 {"tableaux": lambda m, n: tableaux.sum_by_height(n, m),
                  "involutions": _oracle_inv(oracle.MAX_INVOLUTION_N)}),
        _bool_suite("permutation equation", [(m, order_f) for m in ms],
                    gentree.verify_perm_equation),
        _bool_suite("involution equation", [(m, order_g, s) for m in ms for s in (False, True)],
                    gentree.verify_inv_equation),
        _compare("negative part", [(f,) for k in range(1, small) for f in product(range(-2, 5), repeat=k)],
                 {"closed": lambdacalc.negative_part, "expansion": lambdacalc.negative_part_expansion}),
        _compare("group sum", [(b,) for m in range(1, small + 1) for b in product(range(4), repeat=m)],
                 {"lambda": lambdacalc.group_sum_lambda, "closed": lambdacalc.group_sum_closed}),
        _bool_suite("signed partial fractions", [(k, 20) for k in range(1, min(max_m + 1, 5) + 1)],
                    lambdacalc.check_partial_fraction_identity),
        _bool_suite("non-identity terms vanish",
                    [(s, g) for m in range(2, min(max_m, 3) + 1)
                     for s in permutations(range(1, m + 1)) for g in product(range(3), repeat=m)],
                    lambdacalc.verify_vanishing),
    ]
    return suites


def cmd_crosscheck(max_m: int, max_n: int) -> int:
    if max_m < 0 or max_n < 0:
        raise UsageError("bounds must be non-negative")
    if max_n > oracle.MAX_PERM_N:
        raise UsageError(f"max-n above the oracle bound {oracle.MAX_PERM_N}")
    suites = run_crosscheck(max_m, max_n)
    for s in suites:
        print(s.line())
    return 0 if all(s.ok for s in suites) else 1


def cmd_verify_equations(ms: range, order: int) -> int:
    status = 0
    for m in ms:
        if m < 1:
            raise UsageError("m must be >= 1")
        checks = [("F", None, gentree.verify_perm_equation(m, order))]
        checks += [("G", s, gentree.verify_inv_equation(m, order, s)) for s in (False, True)]
        for name, s, ok in checks:
            suffix = "" if s is None else (" with s" if s else " without s")
            print(f"{'PASS' if ok else 'FAIL'} {name} m={m} order={order}{suffix}")
            status |= 0 if ok else 1
    return status


# -- argument parsing ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="catalytic", description=__doc__.split("\n")[0]
                                     or "pattern-avoidance counting")
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count objects by one or all routes")
    count.add_argument("kind", choices=KINDS)
    count.add_argument("--m", help="pattern size, N or A..B")
    count.add_argument("--n", help="length, N or A..B")
    count.add_argument("--p", type=int, help="fixed points (involutions)")
    count.add_argument("--by-fixed-points", action="store_true", help="split involutions by fixed points")
    count.add_argument("--route", choices=ROUTES)
    count.add_argument("--format", dest="fmt", choices=FORMATS, default="json")
    count.add_argument("--out", help="write to PATH instead of standard output")
    count.add_argument("--max-oracle", type=int, help="override the brute-force size bound")
    count.add_argument("--shape", help="partition for tableaux, e.g. 4,3,3")

    cross = sub.add_parser("crosscheck", help="run every route and identity suite")
    cross.add_argument("--max-m", type=int, default=4)
    cross.add_argument("--max-n", type=int, default=9)

    eq = sub.add_parser("verify-equations", help="check the functional equations coefficientwise")
    eq.add_argument("--m", default="2..4")
    eq.add_argument("--order", type=int, default=8)
    return parser


def spec_from_args(args: argparse.Namespace) -> RunSpec:
    spec = RunSpec(kind=args.kind, route=args.route, by_fixed_points=args.by_fixed_points,
                   p=args.p, fmt=args.fmt, out=args.out, max_oracle=args.max_oracle,
                   shape=args.shape)
    if args.kind == "tableaux":
        if not args.shape:
            raise UsageError("count tableaux needs --shape")
        tableaux.PartitionShape.parse(args.shape)
        if args.fmt == "bfile":
            raise UsageError("bfile output needs a sweep over n")
        return spec
    if args.m is None or args.n is None:
        raise UsageError(f"count {args.kind} needs --m and --n")
    spec.m = parse_range(args.m)
    spec.n = parse_range(args.n)
    if spec.m.start < 1:
        raise UsageError("m must be >= 1")
    if (args.p is not None or args.by_fixed_points) and args.kind != "involutions":
        raise UsageError("fixed points apply to involutions only")
    if args.p is not None and args.p < 0:
        raise UsageError("p must be non-negative")
    if args.max_oracle is not None and args.max_oracle < 0:
        raise UsageError("--max-oracle must be non-negative")
    return spec


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "count":
            return cmd_count(spec_from_args(args))
        if args.command == "crosscheck":
            return cmd_crosscheck(args.max_m, args.max_n)
        return cmd_verify_equations(parse_range(args.m), args.order)
    except (UsageError, tableaux.ShapeError) as exc:
        print(f"catalytic: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
