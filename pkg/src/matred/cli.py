"""``matred`` command line: matroid description files in, canonical text out.

File format, one ``key=value`` per line, ``#`` starts a comment, element
labels are 1-based and whitespace is ignored::

    kind=explicit            kind=gf2        kind=graphic     kind=partition
    n=3                      n=3             vertices=3       n=3
    indep={};{1};{2};{3}     row=101         edge=1-2         block={1,2}:1
    indep={1,2};{2,3}        row=011         edge=2-3         block={3}:1

    kind=uniform
    n=4
    k=2

Exit codes: 0 success, 1 a cross-check or theorem failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import dependence as dep
from .errors import MatredError, ParseError, UniverseTooLarge
from .hyperplanes import FLAT_CAP, closed_sets, closure_via_hyperplanes, flat_lattice, hyperplanes
from .matroid import (
    ExplicitMatroid,
    Gf2Matroid,
    GraphicMatroid,
    Matroid,
    PartitionMatroid,
    UniformMatroid,
    best_base_weight,
    check_weights,
    greedy_max_weight_base,
    matroid_from_family,
)
from .subsets import SetFamily, format_family, format_set, parse_family, parse_set

OK, FAILED, BAD_INPUT = 0, 1, 2
GREEDY_CHECK_CAP = 8
KINDS = ("explicit", "uniform", "gf2", "graphic", "partition")
REDUCT_METHODS = ("all", "def", "minclosure", "restriction", "transversal")


@dataclass(frozen=True)
class CommandResult:
    code: int
    text: str


def _int(value: str, line: int, col: int) -> int:
    if not value.isdigit():
        raise ParseError(f"expected a natural number, got {value!r}", line, col)
    return int(value)


def parse_matroid_text(text: str) -> Matroid:
    """Parse a matroid description; see the module docstring for the grammar."""
    single: dict[str, tuple[str, int, int]] = {}
    multi: dict[str, list[tuple[str, int, int]]] = {"indep": [], "row": [], "edge": [], "block": []}
    for lineno, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        if "=" not in content:
            raise ParseError("expected key=value", lineno, len(raw) - len(raw.lstrip()) + 1)
        key_part, value_part = content.split("=", 1)
        key = "".join(key_part.split())
        value = "".join(value_part.split())
        col = len(key_part) + 2
        if key in multi:
            multi[key].append((value, lineno, col))
        elif key in ("kind", "n", "k", "vertices"):
            if key in single:
                raise ParseError(f"duplicate key {key!r}", lineno, 1)
            single[key] = (value, lineno, col)
        else:
            raise ParseError(f"unknown key {key!r}", lineno, 1)

    if "kind" not in single:
        raise ParseError("missing kind=...")
    kind, kline, kcol = single["kind"]
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", kline, kcol)

    def wrap(fn, line, col):
        try:
            return fn()
        except ParseError as exc:
            raise ParseError(str(exc), line, col) from None
        except ValueError as exc:
            raise ParseError(str(exc), line, col) from None

    n = None
    if "n" in single:
        n = _int(*single["n"])
        if n > 24:
            raise UniverseTooLarge(n, 24)

    if kind == "graphic":
        if "vertices" not in single:
            raise ParseError("graphic matroid needs vertices=...")
        nv = _int(*single["vertices"])
        edges = []
        for value, line, col in multi["edge"]:
            ends = value.split("-")
            if len(ends) != 2:
                raise ParseError(f"expected an edge like 1-2, got {value!r}", line, col)
            u, v = (_int(x, line, col) for x in ends)
            if not (1 <= u <= nv and 1 <= v <= nv):
                raise ParseError(f"edge {value} uses a vertex outside 1..{nv}", line, col)
            edges.append((u - 1, v - 1))
        if n is not None and n != len(edges):
            raise ParseError(f"n={n} but {len(edges)} edges given", *single["n"][1:])
        if len(edges) > 24:
            raise UniverseTooLarge(len(edges), 24)
        return GraphicMatroid(nv, edges)

    if n is None:
        raise ParseError(f"{kind} matroid needs n=...")

    if kind == "uniform":
        if "k" not in single:
            raise ParseError("uniform matroid needs k=...")
        k, line, col = single["k"]
        return wrap(lambda: UniformMatroid(n, _int(k, line, col)), line, col)

    if kind == "explicit":
        if not multi["indep"]:
            raise ParseError("explicit matroid needs at least one indep=... line")
        masks = []
        for value, line, col in multi["indep"]:
            masks.extend(wrap(lambda: parse_family(value, n), line, col))
        return matroid_from_family(n, SetFamily.of(n, masks))

    if kind == "gf2":
        rows = []
        for value, line, col in multi["row"]:
            if len(value) != n or set(value) - {"0", "1"}:
                raise ParseError(f"row must be {n} binary digits, got {value!r}", line, col)
            rows.append(sum(1 << j for j, ch in enumerate(value) if ch == "1"))
        return Gf2Matroid(n, rows)

    # partition
    blocks, caps = [], []
    for value, line, col in multi["block"]:
        if ":" not in value:
            raise ParseError(f"expected block={{..}}:capacity, got {value!r}", line, col)
        set_text, cap_text = value.rsplit(":", 1)
        blocks.append(wrap(lambda: parse_set(set_text, n), line, col))
        caps.append(_int(cap_text, line, col))
    try:
        return PartitionMatroid(n, blocks, caps)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_matroid_file(path: str | Path) -> Matroid:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_matroid_text(text)


def render_matroid(M: Matroid) -> str:
    """Inverse of :func:`parse_matroid_text` (up to the independence predicate)."""
    if isinstance(M, UniformMatroid):
        lines = ["kind=uniform", f"n={M.universe_size}", f"k={M.k}"]
    elif isinstance(M, Gf2Matroid):
        lines = ["kind=gf2", f"n={M.universe_size}"]
        lines += ["row=" + "".join(str((r >> j) & 1) for j in range(M.universe_size)) for r in M.rows]
    elif isinstance(M, GraphicMatroid):
        lines = ["kind=graphic", f"vertices={M.num_vertices}"]
        lines += [f"edge={u + 1}-{v + 1}" for u, v in M.edges]
    elif isinstance(M, PartitionMatroid):
        lines = ["kind=partition", f"n={M.universe_size}"]
        lines += [f"block={format_set(b)}:{c}" for b, c in zip(M.blocks, M.capacities)]
    else:
        family = M.independent_sets()
        lines = ["kind=explicit", f"n={M.universe_size}", "indep=" + ";".join(format_set(m) for m in family)]
    return "\n".join(lines) + "\n"


def fmt_num(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))


def cmd_closure(M: Matroid, X: int) -> CommandResult:
    direct = M.closure(X)
    via = closure_via_hyperplanes(M, X)
    text = f"{format_set(direct)}\n{format_set(via)}\n"
    return CommandResult(OK if direct == via else FAILED, text)


def cmd_flats(M: Matroid) -> CommandResult:
    return CommandResult(OK, format_family(closed_sets(M)) + "\n")


def cmd_hyperplanes(M: Matroid) -> CommandResult:
    return CommandResult(OK, format_family(hyperplanes(M)) + "\n")


def cmd_bases(M: Matroid) -> CommandResult:
    return CommandResult(OK, format_family(M.bases()) + "\n")


def reduct_routes(M: Matroid, X: int, method: str = "all") -> dict[str, SetFamily]:
    if M.universe_size > FLAT_CAP:
        raise UniverseTooLarge(M.universe_size, FLAT_CAP)
    S = dep.theta_from_matroid(M)
    routes = {
        "def": lambda: dep.reducts_by_definition(S, X),
        "minclosure": lambda: dep.reducts_by_minimality(S, X),
        "restriction": lambda: M.restriction(X).bases(),
        "transversal": lambda: dep.reducts_via_transversals(flat_lattice(M).hyperplanes, X),
    }
    names = list(routes) if method == "all" else [method]
    return {name: routes[name]() for name in names}


def cmd_reducts(M: Matroid, X: int, method: str = "all") -> CommandResult:
    if method not in REDUCT_METHODS:
        raise MatredError(f"unknown method {method!r}")
    results = reduct_routes(M, X, method)
    families = set(results.values())
    if len(families) == 1:
        return CommandResult(OK, format_family(next(iter(families))) + "\n")
    text = "".join(f"{name} {format_family(f)}\n" for name, f in results.items())
    return CommandResult(FAILED, text)


def cmd_verify(M: Matroid) -> CommandResult:
    reports = dep.verify_paper_theorems(M)
    text = "".join(r.line() + "\n" for r in reports)
    return CommandResult(OK if all(r.holds for r in reports) else FAILED, text)


def cmd_greedy(M: Matroid, weights) -> CommandResult:
    w = check_weights(M, weights)
    base, total = greedy_max_weight_base(M, w)
    line = f"{format_set(base)} weight={fmt_num(total)}"
    code = OK
    if M.universe_size <= GREEDY_CHECK_CAP:
        optimal = total == best_base_weight(M, w)
        line += " optimal=" + ("yes" if optimal else "no")
        code = OK if optimal else FAILED
    return CommandResult(code, line + "\n")


def _parse_weights(text: str) -> list[float]:
    try:
        return [float(tok) for tok in "".join(text.split()).split(",")]
    except ValueError:
        raise ParseError(f"weights must be comma-separated numbers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="matred",
        description="Closure, hyperplanes, bases and reducts of small matroids.",
        epilog="greedy returns a maximum-weight base; negative weights are still placed, so the result is always a base.",
    )
    p.add_argument("command", choices=["closure", "flats", "hyperplanes", "bases", "reducts", "verify", "greedy"])
    p.add_argument("--matroid", required=True, help="matroid description file")
    p.add_argument("--set", dest="set_", metavar="SET", help="subset such as {1,3} (1-based)")
    p.add_argument("--method", default="all", choices=REDUCT_METHODS, help="reduct route (default: all, cross-checked)")
    p.add_argument("--weights", help="comma-separated weights, one per element")
    return p


def run(argv: list[str] | None = None) -> CommandResult:
    args = build_parser().parse_args(argv)
    M = parse_matroid_file(args.matroid)
    X = None
    if args.command in ("closure", "reducts"):
        if args.set_ is None:
            raise MatredError(f"{args.command} needs --set")
        X = parse_set(args.set_, M.universe_size)
        if X & ~M.ground:
            raise MatredError(f"{format_set(X)} is outside the ground set")
    if args.command == "closure":
        return cmd_closure(M, X)
    if args.command == "flats":
        return cmd_flats(M)
    if args.command == "hyperplanes":
        return cmd_hyperplanes(M)
    if args.command == "bases":
        return cmd_bases(M)
    if args.command == "reducts":
        return cmd_reducts(M, X, args.method)
    if args.command == "verify":
        return cmd_verify(M)
    if args.weights is None:
        raise MatredError("greedy needs --weights")
    return cmd_greedy(M, _parse_weights(args.weights))


def main(argv: list[str] | None = None) -> int:
    try:
        result = run(argv)
    except MatredError as exc:
        print(f"matred: error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except ValueError as exc:
        print(f"matred: error: {exc}", file=sys.stderr)
        return BAD_INPUT
    sys.stdout.write(result.text)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
