"""Command-line front end: ``wpi <subcommand> --graph FILE --r R [--f max]``.

Exit status is 0 on success, 1 on domain errors and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cm import NoCharacterizationError, cm_auto
from .covers import cover_sort_key, minimal_covers
from .graph import enumerate_r_paths
from .io import GraphFormatError, cover_to_json, cover_to_text, load_graph
from .monomial import (
    Monomial,
    UnitIdealError,
    colon,
    krull_dimension_of_quotient,
    m_irreducible_decompose,
    polarize,
)
from .path_ideal import Combiner, build_path_ideal
from .reisner import SizeGuardError, is_cm_rational

SUBCOMMANDS = ("paths", "gens", "decompose", "covers", "unmixed", "dim", "cm", "polarize", "colon")


class DomainError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wpi", description="Weighted r-path ideals of weighted graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", required=True, help="graph file (JSON or text format)")
    common.add_argument("--r", type=int, required=True, help="path length r >= 1")
    common.add_argument("--f", default="max", choices=[c.value for c in Combiner],
                        help="interior-weight combiner (default: max)")
    common.add_argument("--format", default="text", choices=["text", "json"])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "cm":
            p.add_argument("--oracle", action="store_true",
                           help="decide with the homological (Reisner) oracle over Q")
        if name == "colon":
            p.add_argument("--by", required=True, help='monomial such as "X1^2*X3"')
    return parser


def _report(command, g, r, f, args):
    """Return ``(json_payload, text_lines)`` for one subcommand."""
    if command == "paths":
        paths = enumerate_r_paths(g, r)
        return {"paths": [list(p) for p in paths]}, ["-".join(map(str, p)) for p in paths]

    ideal = build_path_ideal(g, f, r)
    if command == "gens":
        return {"generators": [m.to_json() for m in ideal.gens]}, ideal.to_text()
    if command == "decompose":
        comps = m_irreducible_decompose(ideal)
        irredundant = not any(a != b and a.contains_component(b) for a in comps for b in comps)
        payload = {"components": [c.to_text() for c in comps], "irredundant": irredundant}
        return payload, [str(c) for c in comps]
    if command == "covers":
        covers = sorted(minimal_covers(g, f, r), key=cover_sort_key)
        return {"covers": [cover_to_json(c) for c in covers]}, [cover_to_text(c) for c in covers]
    if command == "unmixed":
        flag = len({len(c) for c in m_irreducible_decompose(ideal)}) == 1
        return {"unmixed": flag}, [str(flag).lower()]
    if command == "dim":
        d = krull_dimension_of_quotient(ideal)
        return {"dim": d}, [str(d)]
    if command == "polarize":
        pol = polarize(ideal)
        names = pol.names()
        gens = [m.to_text(names) for m in pol.ideal.gens]
        return {"generators": gens, "variables": names,
                "varmap": [list(p) for p in pol.varmap]}, gens
    if command == "colon":
        try:
            h = Monomial.parse(args.by, g.n)
        except ValueError as exc:
            raise DomainError(f"bad --by monomial: {exc}") from None
        q = colon(ideal, h)
        return {"generators": [m.to_json() for m in q.gens]}, q.to_text()
    if command == "cm":
        if args.oracle:
            flag = is_cm_rational(ideal)
            head = "Cohen-Macaulay" if flag else "not Cohen-Macaulay"
            return ({"cohen_macaulay": flag, "method": "reisner-oracle"},
                    [f"{head} (Reisner criterion over Q)"])
        if f is not Combiner.MAX:
            raise DomainError("combinatorial CM criteria exist only for f=max; use --oracle")
        verdict = cm_auto(g, r)
        return verdict.to_json(), [verdict.describe(), json.dumps(verdict.to_json()["witness"], sort_keys=True)]
    raise AssertionError(command)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.r < 1:
        parser.error("--r must be at least 1")
    try:
        g = load_graph(args.graph)
    except (OSError, GraphFormatError) as exc:
        print(f"wpi: cannot read graph: {exc}", file=sys.stderr)
        return 2
    try:
        payload, lines = _report(args.command, g, args.r, Combiner(args.f), args)
    except (DomainError, NoCharacterizationError, SizeGuardError, UnitIdealError, ValueError) as exc:
        print(f"wpi: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
