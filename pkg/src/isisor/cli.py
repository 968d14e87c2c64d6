"""Command line interface.

Every command prints a versioned report to stdout: the line ``v1`` followed
by ``key: value`` lines.  Exit codes are the machine contract: 0 for
yes/valid/success, 1 for no/invalid, 2 for any error (bad input, violated
precondition, resource cap).
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .analysis import (
    components,
    diameter,
    is_bipartite,
    is_even_hole_free,
    is_odd_hole_free,
    is_perfect,
)
from .bruteforce import (
    DEFAULT_MAX_NODES,
    DEFAULT_MAX_STATES,
    build_reconfig_graph,
    parse_word_text,
    solve_bfs,
    word_reachability,
)
from .errors import InvalidInputError, IsisorError, PreconditionError
from .graphs import complete_graph, cycle_graph, parse_graph_text, path_graph
from .reductions import (
    RULE_TOKEN,
    balanced_biclique_gadget,
    induced_subgraph_gadget,
    instance_to_text,
    parse_instance_text,
    word_gadget,
)
from .rules import (
    ReconfigInstance,
    Rule,
    expand_slide_sequence,
    parse_sequence_text,
    sequence_to_text,
    verify_sequence,
)
from .xp import build_compressed, solve_xp

_NAMED_GRAPHS = {
    "k1": lambda: complete_graph(1),
    "k2": lambda: complete_graph(2),
    "k3": lambda: complete_graph(3),
    "p3": lambda: path_graph(3),
    "p4": lambda: path_graph(4),
    "c4": lambda: cycle_graph(4),
    "c5": lambda: cycle_graph(5),
}


def _emit(pairs) -> None:
    print("v1")
    for key, value in pairs:
        print(f"{key}: {value}")


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from None


def _fmt_set(s) -> str:
    return " ".join(str(v + 1) for v in sorted(s))


def _is_word_file(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        return line.split()[0] == "w"
    return False


def cmd_solve(args) -> int:
    text = _read(args.instance)
    start = time.perf_counter()
    if _is_word_file(text):
        winst = parse_word_text(text)
        ok = word_reachability(winst, max_states=args.max_states)
        _emit(
            [
                ("command", "solve"),
                ("input", args.instance),
                ("solver", "word-bfs"),
                ("verdict", _yesno(ok)),
                ("elapsed-ms", int((time.perf_counter() - start) * 1000)),
            ]
        )
        return 0 if ok else 1

    inst = parse_instance_text(text)
    if args.solver == "bfs":
        rg = build_reconfig_graph(inst.host, inst.pattern, inst.rule, args.max_nodes)
        ok, seq = solve_bfs(inst, reconfig_graph=rg)
        nodes, edges = len(rg.nodes), rg.edge_count
    else:
        if inst.rule.kind != "jump":
            raise InvalidInputError("the xp solver needs a jump rule")
        mu = inst.pattern.n - inst.rule.k
        if mu < 1:
            raise InvalidInputError(
                f"budget {inst.rule.k} leaves no anchored vertices "
                f"(pattern has {inst.pattern.n})"
            )
        if args.mu is not None and args.mu != mu:
            raise InvalidInputError(
                f"--mu {args.mu} disagrees with pattern size minus budget ({mu})"
            )
        cg = build_compressed(
            inst.host, inst.pattern, mu, max_nodes=args.max_nodes, workers=args.workers
        )
        ok, seq = solve_xp(inst, compressed=cg)
        nodes, edges = len(cg.nodes), cg.edge_count
    elapsed = int((time.perf_counter() - start) * 1000)
    pairs = [
        ("command", "solve"),
        ("input", args.instance),
        ("solver", args.solver),
        ("rule", f"{RULE_TOKEN[inst.rule.kind]} {inst.rule.k}"),
        ("host-vertices", inst.host.n),
        ("pattern-vertices", inst.pattern.n),
        ("nodes", nodes),
        ("edges", edges),
        ("verdict", _yesno(ok)),
        ("elapsed-ms", elapsed),
    ]
    if ok:
        check = verify_sequence(inst, seq)
        if not check.ok:
            raise IsisorError(
                f"solver produced an invalid sequence at index {check.index}: {check.reason}"
            )
        pairs.append(("sequence-length", seq.moves))
        pairs.extend(("step", _fmt_set(s)) for s in seq.steps)
        if args.sequence_out:
            Path(args.sequence_out).write_text(sequence_to_text(seq))
    _emit(pairs)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    inst = parse_instance_text(_read(args.instance))
    seq = parse_sequence_text(_read(args.sequence))
    res = verify_sequence(inst, seq)
    pairs = [
        ("command", "verify"),
        ("input", args.instance),
        ("sequence", args.sequence),
        ("sets", len(seq.steps)),
        ("verdict", _yesno(res.ok)),
    ]
    if not res.ok:
        pairs.append(("failure-index", res.index))
        pairs.append(("failure-reason", res.reason))
    _emit(pairs)
    return 0 if res.ok else 1


def _reduce_unit(args):
    if bool(args.unit) == bool(args.unit_file):
        raise InvalidInputError("give exactly one of --unit or --unit-file")
    if args.unit:
        name = args.unit.lower()
        if name not in _NAMED_GRAPHS:
            raise InvalidInputError(
                f"unknown unit {args.unit!r}; known: {', '.join(sorted(_NAMED_GRAPHS))}"
            )
        return _NAMED_GRAPHS[name]()
    return parse_graph_text(_read(args.unit_file))


def cmd_reduce(args) -> int:
    if args.kind == "word":
        winst = parse_word_text(_read(args.source))
        unit = _reduce_unit(args)
        budget = args.budget if args.budget is not None else 2 * unit.n
        out = word_gadget(winst, unit, budget, kind="slide" if args.rule == "ts" else "jump")
    elif args.kind == "isiso":
        searched = parse_graph_text(_read(args.source))
        if not args.pattern_file:
            raise InvalidInputError("isiso reduction needs --pattern-file")
        unit = parse_graph_text(_read(args.pattern_file))
        if args.mu is None:
            raise InvalidInputError("isiso reduction needs --mu")
        out = induced_subgraph_gadget(searched, unit, args.mu)
    else:
        g = parse_graph_text(_read(args.source))
        if not args.side_a:
            raise InvalidInputError("mbb reduction needs --side-a")
        if args.biclique_order is None:
            raise InvalidInputError("mbb reduction needs --biclique-order")
        try:
            side_a = frozenset(int(tok) - 1 for tok in args.side_a.replace(",", " ").split())
        except ValueError:
            raise InvalidInputError(f"bad --side-a list {args.side_a!r}") from None
        side_b = frozenset(range(g.n)) - side_a
        out = balanced_biclique_gadget(g, side_a, side_b, args.biclique_order)
    inst = out.instance
    Path(args.output).write_text(
        instance_to_text(inst, out.provenance, comments=(f"reduce {args.kind} {args.source}",))
    )
    pairs = [
        ("command", "reduce"),
        ("kind", args.kind),
        ("input", args.source),
        ("output", args.output),
        ("host-vertices", inst.host.n),
        ("host-edges", inst.host.m),
        ("pattern-vertices", inst.pattern.n),
        ("rule", f"{RULE_TOKEN[inst.rule.kind]} {inst.rule.k}"),
    ]
    pairs.extend(
        (f"param-{k.replace('_', '-')}", v) for k, v in sorted(out.parameters.items())
    )
    _emit(pairs)
    return 0


def cmd_analyze(args) -> int:
    g = parse_graph_text(_read(args.graph))
    comps = components(g)
    bip, _ = is_bipartite(g)
    pairs = [
        ("command", "analyze"),
        ("input", args.graph),
        ("vertices", g.n),
        ("edges", g.m),
        ("components", len(comps)),
        ("bipartite", _yesno(bip)),
        ("even-hole-free", _yesno(is_even_hole_free(g))),
        ("odd-hole-free", _yesno(is_odd_hole_free(g))),
        ("perfect", _yesno(is_perfect(g))),
        ("diameter", diameter(g) if len(comps) == 1 and g.n else "disconnected"),
    ]
    _emit(pairs)
    return 0


def cmd_convert_ts(args) -> int:
    inst = parse_instance_text(_read(args.instance))
    seq = parse_sequence_text(_read(args.sequence))
    if inst.pattern.m != 0:
        raise InvalidInputError("conversion needs an edgeless pattern (independent sets)")
    if inst.rule.kind != "slide":
        raise InvalidInputError("conversion needs a slide rule")
    if not is_even_hole_free(inst.host):
        raise PreconditionError("the host graph has an even hole")
    res = verify_sequence(inst, seq)
    if not res.ok:
        raise PreconditionError(
            f"input sequence invalid at index {res.index}: {res.reason}"
        )
    out = expand_slide_sequence(inst.host, seq)
    single = ReconfigInstance(
        inst.host, inst.pattern, inst.source, inst.target, Rule("slide", 1)
    )
    check = verify_sequence(single, out)
    if not check.ok:
        raise IsisorError(
            f"expansion produced an invalid sequence at index {check.index}: {check.reason}"
        )
    Path(args.output).write_text(sequence_to_text(out))
    _emit(
        [
            ("command", "convert-ts"),
            ("input", args.instance),
            ("sequence", args.sequence),
            ("output", args.output),
            ("input-sets", len(seq.steps)),
            ("output-sets", len(out.steps)),
        ]
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isisor",
        description="Solve, verify, generate and analyze reconfiguration instances.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide reachability for an instance file")
    p.add_argument("instance")
    p.add_argument("--solver", choices=("bfs", "xp"), default="bfs")
    p.add_argument("--mu", type=int, default=None, help="anchor size for the xp solver")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    p.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--sequence-out", default=None, help="write the witness sequence here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a sequence against an instance")
    p.add_argument("instance")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="build a gadget instance from a source problem")
    p.add_argument("kind", choices=("word", "isiso", "mbb"))
    p.add_argument("source")
    p.add_argument("output")
    p.add_argument("--unit", default=None, help="named unit pattern (word), e.g. k1")
    p.add_argument("--unit-file", default=None, help="unit pattern graph file (word)")
    p.add_argument("--budget", type=int, default=None, help="move budget (word)")
    p.add_argument("--rule", choices=("tj", "ts"), default="tj", help="rule kind (word)")
    p.add_argument("--pattern-file", default=None, help="searched pattern file (isiso)")
    p.add_argument("--mu", type=int, default=None, help="anchor size (isiso)")
    p.add_argument("--side-a", default=None, help="1-indexed side-A vertices (mbb)")
    p.add_argument("-b", "--biclique-order", type=int, default=None, help="biclique order (mbb)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("analyze", help="report structural properties of a graph file")
    p.add_argument("graph")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("convert-ts", help="expand multi-token slides into single slides")
    p.add_argument("instance")
    p.add_argument("sequence")
    p.add_argument("output")
    p.set_defaults(func=cmd_convert_ts)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except IsisorError as exc:
        _emit([("command", args.command), ("verdict", "error"), ("error", str(exc))])
        return 2


if __name__ == "__main__":
    sys.exit(main())
