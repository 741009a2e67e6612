"""Batch command-line front end.

Every command reads the text formats defined in ideals / graphs, prints a
deterministic report on stdout, and exits 0 on success, 1 on a failed
verification verdict, 2 on input errors.  ``--json`` switches from the
human-readable rendering to the serialized forms.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .betti import (
    CapacityError,
    betti_diagram,
    betti_table,
    betti_table_taylor,
    char_scan,
    format_betti_table,
)
from .graphs import (
    BipartiteLabeledGraph,
    GraphFormatError,
    SimpleGraph,
    cm_bipartite_random,
    cm_pd_reg_check,
    cover_betti_recursive,
    cover_ideal,
    edge_ideal,
    format_graph,
    herzog_hibi_validate,
    parse_graph,
    relabel_to_canonical,
)
from .homology import FieldSpec
from .ideals import (
    IdealFormatError,
    MonomialIdeal,
    borel_closure,
    format_ideal,
    format_monomial,
    intersect,
    parse_ideal,
)
from .splitting import (
    DegeneratePartitionError,
    Partition,
    find_splitting_function,
    partition_report,
    scan_variable_splittings,
)

LATTICE_GUARD = 50_000


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _load_ideal(path: str) -> MonomialIdeal:
    try:
        return parse_ideal(_read(path))
    except IdealFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_graph(path: str):
    try:
        return parse_graph(_read(path))
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _field(char: int) -> FieldSpec:
    try:
        return FieldSpec(char)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _guard_lattice(I: MonomialIdeal, force: bool):
    # bounded closure: abort as soon as the guard threshold is crossed
    if force:
        return
    found = set(I.gens)
    frontier = list(I.gens)
    while frontier:
        fresh = []
        for m in frontier:
            for g in I.gens:
                l = g.lcm(m)
                if l not in found:
                    found.add(l)
                    fresh.append(l)
                    if len(found) > LATTICE_GUARD:
                        raise InputError(
                            f"lcm lattice exceeds {LATTICE_GUARD} degrees; rerun with --force"
                        )
        frontier = fresh


def _report_entries(t):
    return [[i, format_monomial(b), v] for (i, b), v in t.items_sorted()]


def cmd_betti(args) -> int:
    I = _load_ideal(args.ideal)
    field = _field(args.char)
    _guard_lattice(I, args.force)
    t = betti_table_taylor(I, field) if args.taylor else betti_table(I, field)
    if args.json:
        sys.stdout.write(format_betti_table(t))
    else:
        print(f"field characteristic {field.characteristic}")
        sys.stdout.write(betti_diagram(t))
        print("total:", " ".join(map(str, t.total_betti())) or "(zero ideal)")
    return 0


def cmd_intersect(args) -> int:
    J = _load_ideal(args.ideal_j)
    K = _load_ideal(args.ideal_k)
    if J.n != K.n:
        raise InputError("ideals live in different rings")
    result = intersect(J, K)
    if args.json:
        print(json.dumps({"vars": result.n, "generators": [format_monomial(g) for g in result.gens]}))
    else:
        sys.stdout.write(format_ideal(result))
    return 0


def cmd_split_scan(args) -> int:
    I = _load_ideal(args.ideal)
    field = _field(args.char)
    _guard_lattice(I, args.force)
    reports = scan_variable_splittings(I, field)
    if args.json:
        print(json.dumps([r.to_dict() for r in reports]))
    else:
        for r in reports:
            print(
                f"x{r.variable}: betti_splitting={r.betti_splitting} "
                f"disjoint_support={r.disjoint_support} ek={r.ek}"
            )
        hits = [r.variable for r in reports if r.betti_splitting]
        print("splitting variables:", " ".join(f"x{v}" for v in hits) or "none")
    return 0


def _partition_from_args(I, args) -> Partition:
    if args.var is not None:
        try:
            return Partition.variable_partition(I, args.var)
        except (DegeneratePartitionError, ValueError) as exc:
            raise InputError(str(exc)) from None
    J = _load_ideal(args.part)
    if J.n != I.n:
        raise InputError("partition part lives in a different ring")
    missing = [g for g in J.gens if g not in I.gens]
    if missing:
        raise InputError(
            f"part generator {format_monomial(missing[0])} is not a minimal generator"
        )
    K = MonomialIdeal(I.n, tuple(g for g in I.gens if g not in set(J.gens)))
    try:
        return Partition.from_parts(J, K)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_split_check(args) -> int:
    I = _load_ideal(args.ideal)
    field = _field(args.char)
    _guard_lattice(I, args.force)
    p = _partition_from_args(I, args)
    rep = partition_report(p, field)
    if args.json:
        print(json.dumps(rep.to_dict()))
    else:
        print(f"betti_splitting={rep.betti_splitting}")
        print(f"disjoint_support={rep.disjoint_support}")
        print(f"ek={rep.ek}")
    return 0 if rep.betti_splitting else 1


def cmd_ek_check(args) -> int:
    I = _load_ideal(args.ideal)
    p = _partition_from_args(I, args)
    res = find_splitting_function(p, cap=args.cap)
    payload = {"status": res.status}
    if res.function is not None:
        payload["function"] = {
            format_monomial(w): [format_monomial(phi), format_monomial(psi)]
            for w, (phi, psi) in res.function.assignment
        }
    if res.witness is not None:
        w = dict(res.witness)
        if w.get("kind") == "subset":
            w["subset"] = [format_monomial(m) for m in w["subset"]]
            w["lcm"] = format_monomial(w["lcm"])
            w["assignment"] = {
                format_monomial(k): [format_monomial(a), format_monomial(b)]
                for k, (a, b) in w["assignment"].items()
            }
        elif w.get("kind") == "no_candidates":
            w["w"] = format_monomial(w["w"])
        payload["witness"] = w
    if args.json:
        print(json.dumps(payload))
    else:
        print(res.status)
        if res.status == "found":
            for w, (phi, psi) in res.function.assignment:
                print(f"  {format_monomial(w)} -> ({format_monomial(phi)}, {format_monomial(psi)})")
        elif res.witness is not None:
            print(f"  witness: {json.dumps(payload['witness'])}")
    return 0 if res.status == "found" else 1


def cmd_edge_ideal(args) -> int:
    G = _load_graph(args.graph)
    if isinstance(G, BipartiteLabeledGraph):
        G = G.to_simple_graph()
    I = edge_ideal(G)
    if args.json:
        print(json.dumps({"vars": I.n, "generators": [format_monomial(g) for g in I.gens]}))
    else:
        sys.stdout.write(format_ideal(I))
    return 0


def cmd_cover_ideal(args) -> int:
    G = _load_graph(args.graph)
    if isinstance(G, BipartiteLabeledGraph):
        G = G.to_simple_graph()
    I = cover_ideal(G)
    if args.json:
        print(json.dumps({"vars": I.n, "generators": [format_monomial(g) for g in I.gens]}))
    else:
        sys.stdout.write(format_ideal(I))
    return 0


def cmd_cover_betti(args) -> int:
    G = _load_graph(args.graph)
    if not isinstance(G, BipartiteLabeledGraph):
        raise InputError("cover-betti needs a 'bigraph' input")
    try:
        totals = cover_betti_recursive(G)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.json:
        print(json.dumps(totals))
    else:
        print("total:", " ".join(map(str, totals)))
    return 0


def cmd_cm_gen(args) -> int:
    if not 0.0 <= args.density <= 1.0:
        raise InputError("density must lie in [0, 1]")
    G = cm_bipartite_random(args.n, args.density, args.seed)
    sys.stdout.write(format_graph(G))
    return 0


def cmd_cm_check(args) -> int:
    G = _load_graph(args.graph)
    if not isinstance(G, BipartiteLabeledGraph):
        raise InputError("cm-check needs a 'bigraph' input")
    field = _field(args.char)
    valid = herzog_hibi_validate(G)
    relabeled = False
    if not valid:
        try:
            G, _ = relabel_to_canonical(G)
            relabeled = True
            valid = True
        except ValueError:
            valid = False
    result = {"valid_labeling": valid, "relabeled": relabeled}
    ok = valid
    if valid:
        result["pd_reg_a_match"] = cm_pd_reg_check(G, field)
        ok = result["pd_reg_a_match"]
    if args.json:
        print(json.dumps(result))
    else:
        for k, v in result.items():
            print(f"{k}={v}")
    return 0 if ok else 1


def cmd_char_scan(args) -> int:
    I = _load_ideal(args.ideal)
    primes = args.char or [2]
    for p in primes:
        if p == 0:
            raise InputError("char-scan compares against characteristic 0; pass primes only")
        _field(p)
    _guard_lattice(I, args.force)
    report = char_scan(I, primes)
    if args.json:
        print(
            json.dumps(
                {
                    str(p): [[i, format_monomial(b), r0, rp] for i, b, r0, rp in diffs]
                    for p, diffs in report.items()
                }
            )
        )
    else:
        for p, diffs in sorted(report.items()):
            if not diffs:
                print(f"p={p}: no differences")
            else:
                for i, b, r0, rp in diffs:
                    print(f"p={p}: i={i} degree={format_monomial(b)} rank_char0={r0} rank_modp={rp}")
    return 0


def cmd_borel(args) -> int:
    seeds = _load_ideal(args.ideal)
    if seeds.is_zero():
        raise InputError("borel needs at least one seed monomial")
    closure = borel_closure(seeds.gens)
    if args.json:
        print(json.dumps({"vars": closure.n, "generators": [format_monomial(g) for g in closure.gens]}))
    else:
        sys.stdout.write(format_ideal(closure))
    return 0


def _add_common(sub, *, char=True, force=False, json_flag=True):
    if char:
        sub.add_argument("--char", type=int, default=0, help="field characteristic (0 or a prime)")
    if force:
        sub.add_argument("--force", action="store_true", help="ignore the lcm-lattice size guard")
    if json_flag:
        sub.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bettisplit",
        description="Multigraded Betti numbers and Betti splittings of monomial ideals.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("betti", help="Betti table of an ideal")
    s.add_argument("ideal")
    s.add_argument("--taylor", action="store_true", help="use the Taylor-complex route")
    _add_common(s, force=True)
    s.set_defaults(fn=cmd_betti)

    s = sub.add_parser("intersect", help="intersection of two ideals")
    s.add_argument("ideal_j")
    s.add_argument("ideal_k")
    _add_common(s, char=False)
    s.set_defaults(fn=cmd_intersect)

    s = sub.add_parser("split-scan", help="report every variable-induced splitting")
    s.add_argument("ideal")
    _add_common(s, force=True)
    s.set_defaults(fn=cmd_split_scan)

    s = sub.add_parser("split-check", help="verify one partition (exit 1 when not a splitting)")
    s.add_argument("ideal")
    group = s.add_mutually_exclusive_group(required=True)
    group.add_argument("--var", type=int, help="split by divisibility by this variable")
    group.add_argument("--part", help="ideal file listing the generators of one part")
    _add_common(s, force=True)
    s.set_defaults(fn=cmd_split_check)

    s = sub.add_parser("ek-check", help="search for a splitting function (exit 1 when absent)")
    s.add_argument("ideal")
    group = s.add_mutually_exclusive_group(required=True)
    group.add_argument("--var", type=int)
    group.add_argument("--part")
    s.add_argument("--cap", type=int, default=16, help="intersection-generator cap")
    _add_common(s, char=False)
    s.set_defaults(fn=cmd_ek_check)

    s = sub.add_parser("edge-ideal", help="edge ideal of a graph")
    s.add_argument("graph")
    _add_common(s, char=False)
    s.set_defaults(fn=cmd_edge_ideal)

    s = sub.add_parser("cover-ideal", help="cover ideal of a graph")
    s.add_argument("graph")
    _add_common(s, char=False)
    s.set_defaults(fn=cmd_cover_ideal)

    s = sub.add_parser("cover-betti", help="cover-ideal Betti totals by recursion")
    s.add_argument("graph")
    _add_common(s, char=False)
    s.set_defaults(fn=cmd_cover_betti)

    s = sub.add_parser("cm-gen", help="seeded random Cohen-Macaulay bipartite graph")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--density", type=float, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.set_defaults(fn=cmd_cm_gen)

    s = sub.add_parser("cm-check", help="validate labeling and pd/reg/a agreement")
    s.add_argument("graph")
    _add_common(s)
    s.set_defaults(fn=cmd_cm_check)

    s = sub.add_parser("char-scan", help="compare Betti tables over QQ and F_p")
    s.add_argument("ideal")
    s.add_argument("--char", type=int, action="append", help="prime to compare (repeatable)")
    s.add_argument("--force", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_char_scan)

    s = sub.add_parser("borel", help="smallest strongly stable ideal containing the seeds")
    s.add_argument("ideal")
    _add_common(s, char=False)
    s.set_defaults(fn=cmd_borel)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InputError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
