"""Hardness gadgets: reconfiguration instances built from source problems.

Three builders are provided, each returning a ``GadgetOutput`` whose instance
is equivalent to its source problem:

* ``word_gadget``: single-symbol-rewrite reachability between words becomes
  pattern reconfiguration.  One layer per word position, one blob per symbol;
  blobs of one layer are completely joined, blobs of consecutive layers are
  joined exactly when the symbol pair is forbidden.  Each blob is ``t``
  disjoint copies of a connected unit pattern, ``t`` the largest power of two
  with ``2 * t * |unit| > budget >= t * |unit|``, so a move can clear at most
  one layer and valid token sets are exactly the words.

* ``induced_subgraph_gadget``: an induced-copy *search* question becomes a
  reconfiguration question.  Two hubs adjacent to a spare pattern copy and to
  the searched graph, plus two wings; tokens must pass through the searched
  graph to trade hubs, which is possible iff it contains the pattern.

* ``balanced_biclique_gadget``: existence of a balanced biclique of order b
  in a bipartite graph becomes independent-set reconfiguration.  Cross edges
  are flipped, one side is duplicated, and two completely joined blocks are
  attached; the token set can leave the start block only through a former
  biclique.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bruteforce import WordInstance, validate_bipartition
from .errors import FormatError, InvalidInputError
from .graphs import (
    Graph,
    VertexSet,
    component_masks,
    disjoint_union,
    duplicate_set,
    empty_graph,
    join_sets,
    replace_vertex,
    _graph_from_fields,
    _parse_vertex,
)
from .rules import ReconfigInstance, Rule

RULE_TOKEN = {"jump": "tj", "slide": "ts"}
TOKEN_RULE = {v: k for k, v in RULE_TOKEN.items()}


@dataclass(frozen=True, eq=False)
class GadgetOutput:
    """A built instance plus bookkeeping: which construction part each host
    vertex belongs to, and the derived numeric parameters."""

    instance: ReconfigInstance
    provenance: dict[int, str]
    parameters: dict[str, int]


def _replace_all(base: Graph, parts: dict[int, Graph]) -> tuple[Graph, dict[int, list[int]]]:
    # substitute every base vertex in slot order, tracking where each slot's
    # vertices land after the relabelling cascade
    ids: dict[int, list[int]] = {v: [v] for v in range(base.n)}
    cur = base
    for slot in range(base.n):
        cur, carry, inserted = replace_vertex(cur, ids[slot][0], parts[slot])
        for other in ids:
            if other == slot:
                ids[other] = list(inserted)
            else:
                ids[other] = [carry[x] for x in ids[other]]
    return cur, ids


def word_gadget(
    word: WordInstance, unit: Graph, budget: int, kind: str = "jump"
) -> GadgetOutput:
    """Build the layered-blob instance equivalent to ``word`` reachability.

    ``unit`` must be connected and nonempty; ``budget`` at least twice its
    size (so at least two copies fit under the budget).
    """
    if unit.n < 1 or len(component_masks(unit)) != 1:
        raise InvalidInputError("the unit pattern must be connected and nonempty")
    if budget < 2 * unit.n:
        raise InvalidInputError(
            f"budget {budget} is below twice the unit size ({2 * unit.n})"
        )
    layers = len(word.source_word)
    if layers < 1:
        raise InvalidInputError("words must have at least one position")
    symbols = word.symbols
    ns = len(symbols)
    copies = 2 ** ((budget // unit.n).bit_length() - 1)

    def vid(i: int, j: int) -> int:
        return i * ns + j

    base_edges = []
    for i in range(layers):
        base_edges.extend(
            (vid(i, j), vid(i, j2)) for j in range(ns) for j2 in range(j + 1, ns)
        )
    for i in range(layers - 1):
        for j in range(ns):
            for j2 in range(ns):
                if (symbols[j], symbols[j2]) not in word.relation:
                    base_edges.append((vid(i, j), vid(i + 1, j2)))
    base = Graph(layers * ns, base_edges)

    blob = disjoint_union([unit] * copies)[0]
    host, ids = _replace_all(base, {v: blob for v in range(base.n)})

    labels = [""] * host.n
    provenance: dict[int, str] = {}
    for i in range(layers):
        for j in range(ns):
            for pos, v in enumerate(ids[vid(i, j)]):
                tag = f"layer{i + 1}.{symbols[j]}.copy{pos // unit.n}"
                labels[v] = tag
                provenance[v] = tag
    host = host.with_labels(labels)

    sym_index = {s: j for j, s in enumerate(symbols)}

    def token_set(w: tuple[str, ...]) -> VertexSet:
        out: set[int] = set()
        for i, s in enumerate(w):
            out.update(ids[vid(i, sym_index[s])])
        return frozenset(out)

    pattern = disjoint_union([unit] * (layers * copies))[0].with_labels(None)
    inst = ReconfigInstance(
        host=host,
        pattern=pattern,
        source=token_set(word.source_word),
        target=token_set(word.target_word),
        rule=Rule(kind, budget),
    )
    return GadgetOutput(
        instance=inst,
        provenance=provenance,
        parameters={
            "budget": budget,
            "copies": copies,
            "copies_exponent": copies.bit_length() - 1,
            "layers": layers,
            "alphabet_size": ns,
            "unit_vertices": unit.n,
        },
    )


_CORE_SLOTS = ("input", "hub_a", "hub_b", "spare", "wing_x", "wing_y")
_CORE_EDGES = ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (4, 5))


def induced_subgraph_gadget(
    searched: Graph, pattern_unit: Graph, anchor_size: int
) -> GadgetOutput:
    """Build the hub-and-wing instance: reachable iff ``searched`` contains
    an induced copy of ``pattern_unit``.

    The instance pattern is four copies of ``pattern_unit`` under a jump rule
    with budget ``4|unit| - anchor_size``; any ``1 <= anchor_size <=
    2|unit|`` yields an equivalent instance.
    """
    if searched.n < 1:
        raise InvalidInputError("the searched graph must be nonempty")
    if pattern_unit.n < 1:
        raise InvalidInputError("the pattern unit must be nonempty")
    if not 1 <= anchor_size <= 2 * pattern_unit.n:
        raise InvalidInputError(
            f"anchor size must be within 1..{2 * pattern_unit.n}, got {anchor_size}"
        )
    double = disjoint_union([pattern_unit, pattern_unit])[0].with_labels(None)
    base = Graph(6, _CORE_EDGES)
    parts = {
        0: searched.with_labels(None),
        1: double,
        2: double,
        3: pattern_unit.with_labels(None),
        4: double,
        5: double,
    }
    host, ids = _replace_all(base, parts)
    labels = [""] * host.n
    provenance: dict[int, str] = {}
    for slot, name in enumerate(_CORE_SLOTS):
        for pos, v in enumerate(ids[slot]):
            tag = name
            if parts[slot] is double:
                tag = f"{name}.copy{pos // pattern_unit.n}"
            labels[v] = tag
            provenance[v] = tag
    host = host.with_labels(labels)
    budget = 4 * pattern_unit.n - anchor_size
    inst = ReconfigInstance(
        host=host,
        pattern=disjoint_union([pattern_unit] * 4)[0].with_labels(None),
        source=frozenset(ids[1]) | frozenset(ids[5]),
        target=frozenset(ids[2]) | frozenset(ids[4]),
        rule=Rule("jump", budget),
    )
    return GadgetOutput(
        instance=inst,
        provenance=provenance,
        parameters={
            "budget": budget,
            "anchor_size": anchor_size,
            "pattern_unit_vertices": pattern_unit.n,
            "searched_vertices": searched.n,
        },
    )


def balanced_biclique_gadget(
    g: Graph, side_a: VertexSet, side_b: VertexSet, b: int
) -> GadgetOutput:
    """Build the flipped-and-duplicated instance: the start block can be
    traded for the target block iff ``g`` has a balanced biclique of order b
    across the declared sides."""
    side_a, side_b = validate_bipartition(g, side_a, side_b)
    if not 1 <= b <= len(side_a):
        raise InvalidInputError(
            f"biclique order must be within 1..{len(side_a)} (side size), got {b}"
        )
    a_sorted = sorted(side_a)
    b_sorted = sorted(side_b)
    flipped_edges = [
        (u, v) for u in a_sorted for v in b_sorted if not g.masks[u] >> v & 1
    ]
    flipped = Graph(g.n, flipped_edges)
    extra = len(side_a) - b
    grown, dup = duplicate_set(flipped, side_b, extra)
    b_all = list(b_sorted) + [dup[(r, u)] for r in range(extra) for u in b_sorted]
    block = (extra + 2) * b
    host0, maps = disjoint_union([grown, empty_graph(2 * block)])
    start = [maps[1][i] for i in range(block)]
    goal = [maps[1][i] for i in range(block, 2 * block)]
    carry = maps[0]
    a_ids = [carry[u] for u in a_sorted]
    b_ids = [carry[u] for u in b_all]
    host = join_sets(host0, start, goal)
    host = join_sets(host, start, b_ids)
    host = join_sets(host, goal, a_ids)

    labels = [""] * host.n
    provenance: dict[int, str] = {}
    for u in a_sorted:
        provenance[carry[u]] = "side_a"
    for u in b_sorted:
        provenance[carry[u]] = "side_b.copy0"
    for r in range(extra):
        for u in b_sorted:
            provenance[carry[dup[(r, u)]]] = f"side_b.copy{r + 1}"
    for v in start:
        provenance[v] = "start_block"
    for v in goal:
        provenance[v] = "target_block"
    for v, tag in provenance.items():
        labels[v] = tag
    host = host.with_labels(labels)

    budget = (extra + 1) * b
    inst = ReconfigInstance(
        host=host,
        pattern=empty_graph(block),
        source=frozenset(start),
        target=frozenset(goal),
        rule=Rule("jump", budget),
    )
    return GadgetOutput(
        instance=inst,
        provenance=provenance,
        parameters={
            "biclique_order": b,
            "extra_copies": extra,
            "budget": budget,
            "anchor_size": b,
            "block_size": block,
        },
    )


# -- instance file format --------------------------------------------------------
#
#   c <comment / provenance>
#   p graph <n> <m>            host
#   e <u> <v>                  host edges
#   h p graph <n> <m>          pattern, every line prefixed with "h "
#   h e <u> <v>
#   ss <v...>                  source set, 1-indexed
#   tt <v...>                  target set
#   r <tj|ts> <k>              rule
#
# Provenance is written as "c part <v> <tag>" comment lines and ignored by
# the parser; parsing then writing an instance is lossless up to comments.

def instance_to_text(
    inst: ReconfigInstance,
    provenance: dict[int, str] | None = None,
    comments: tuple[str, ...] = (),
) -> str:
    lines = [f"c {c}" for c in comments]
    if provenance:
        lines.extend(f"c part {v + 1} {provenance[v]}" for v in sorted(provenance))
    lines.append(f"p graph {inst.host.n} {inst.host.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in inst.host.edges())
    lines.append(f"h p graph {inst.pattern.n} {inst.pattern.m}")
    lines.extend(f"h e {u + 1} {v + 1}" for u, v in inst.pattern.edges())
    lines.append(" ".join(["ss", *(str(v + 1) for v in sorted(inst.source))]))
    lines.append(" ".join(["tt", *(str(v + 1) for v in sorted(inst.target))]))
    lines.append(f"r {RULE_TOKEN[inst.rule.kind]} {inst.rule.k}")
    return "\n".join(lines) + "\n"


def parse_instance_text(text: str) -> ReconfigInstance:
    host_fields: list[list[str]] = []
    pattern_fields: list[list[str]] = []
    ss: list[str] | None = None
    tt: list[str] | None = None
    rule_row: list[str] | None = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        toks = line.split()
        if toks[0] == "h":
            if len(toks) < 2:
                raise FormatError("bare 'h' line in instance file")
            pattern_fields.append(toks[1:])
        elif toks[0] == "ss":
            if ss is not None:
                raise FormatError("duplicate ss line")
            ss = toks[1:]
        elif toks[0] == "tt":
            if tt is not None:
                raise FormatError("duplicate tt line")
            tt = toks[1:]
        elif toks[0] == "r":
            if rule_row is not None:
                raise FormatError("duplicate r line")
            rule_row = toks[1:]
        else:
            host_fields.append(toks)
    if ss is None or tt is None or rule_row is None:
        raise FormatError("instance file needs ss, tt and r lines")
    host = _graph_from_fields(host_fields)
    pattern = _graph_from_fields(pattern_fields)
    if len(rule_row) != 2 or rule_row[0] not in TOKEN_RULE:
        raise FormatError(f"bad rule line {' '.join(rule_row)!r}")
    try:
        k = int(rule_row[1])
    except ValueError:
        raise FormatError(f"bad budget {rule_row[1]!r}") from None
    source = frozenset(_parse_vertex(tok, host.n) for tok in ss)
    target = frozenset(_parse_vertex(tok, host.n) for tok in tt)
    return ReconfigInstance(host, pattern, source, target, Rule(TOKEN_RULE[rule_row[0]], k))
