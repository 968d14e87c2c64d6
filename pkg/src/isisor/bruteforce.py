"""Exhaustive solvers used as ground truth at desk scale.

``build_reconfig_graph`` materializes every induced copy of the pattern as a
node and connects pairs adjacent under the rule; ``solve_bfs`` answers
reachability with a shortest witness sequence.  Node order is the
deterministic enumeration order of the copy enumerator, and BFS breaks ties
by node index, so results are reproducible.

The module also hosts two source problems that the gadget builders reduce
from: single-symbol-rewrite reachability between words of a constraint
relation, and existence of a balanced biclique of given order in a bipartite
graph with declared sides.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import FormatError, InvalidInputError, ResourceLimitError
from .graphs import Graph, VertexSet, bits, component_labels, mask_of, validate_vertex_set
from .isomorphism import enumerate_induced_copies
from .rules import ReconfigInstance, ReconfigSequence, Rule, _has_perfect_matching

DEFAULT_MAX_NODES = 10**6
DEFAULT_MAX_STATES = 10**6


@dataclass(frozen=True, eq=False)
class ReconfigGraph:
    """All induced copies of a pattern plus the one-move adjacency between them."""

    nodes: tuple[VertexSet, ...]
    index: dict[VertexSet, int]
    adj: tuple[tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def component_ids(self) -> tuple[int, ...]:
        return component_labels(self.adj)


def build_reconfig_graph(
    g: Graph, h: Graph, rule: Rule, max_nodes: int = DEFAULT_MAX_NODES
) -> ReconfigGraph:
    """Materialize the full reconfiguration graph (desk scale only)."""
    nodes: list[VertexSet] = []
    for s in enumerate_induced_copies(g, h):
        nodes.append(s)
        if len(nodes) > max_nodes:
            raise ResourceLimitError(
                f"more than {max_nodes} pattern copies; raise max_nodes to proceed"
            )
    masks = [mask_of(s) for s in nodes]
    adj: list[list[int]] = [[] for _ in nodes]
    slide = rule.kind == "slide"
    k = rule.k
    for i, j in combinations(range(len(nodes)), 2):
        out = masks[i] & ~masks[j]
        if out.bit_count() > k:
            continue
        if slide:
            incoming = masks[j] & ~masks[i]
            if not _has_perfect_matching(g, list(bits(out)), list(bits(incoming))):
                continue
        adj[i].append(j)
        adj[j].append(i)
    return ReconfigGraph(
        nodes=tuple(nodes),
        index={s: i for i, s in enumerate(nodes)},
        adj=tuple(tuple(a) for a in adj),
    )


def solve_bfs(
    inst: ReconfigInstance,
    *,
    reconfig_graph: ReconfigGraph | None = None,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> tuple[bool, ReconfigSequence | None]:
    """Decide reachability by BFS over the explicit reconfiguration graph.

    Returns (verdict, shortest sequence or None).  A prebuilt graph for the
    same host/pattern/rule can be passed to amortize construction.
    """
    rg = reconfig_graph
    if rg is None:
        rg = build_reconfig_graph(inst.host, inst.pattern, inst.rule, max_nodes)
    try:
        src = rg.index[inst.source]
        dst = rg.index[inst.target]
    except KeyError as missing:
        raise InvalidInputError(
            f"endpoint {sorted(missing.args[0])} does not induce the pattern"
        ) from None
    parent = {src: src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = [u]
            while path[-1] != src:
                path.append(parent[path[-1]])
            path.reverse()
            return True, ReconfigSequence(tuple(rg.nodes[i] for i in path))
        for w in rg.adj[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    return False, None


# -- word rewriting ------------------------------------------------------------

@dataclass(frozen=True)
class WordInstance:
    """Words over an alphabet whose consecutive symbol pairs must belong to
    ``relation``; one move rewrites a single position."""

    symbols: tuple[str, ...]
    relation: frozenset[tuple[str, str]]
    source_word: tuple[str, ...]
    target_word: tuple[str, ...]

    def __post_init__(self):
        if not self.symbols or len(set(self.symbols)) != len(self.symbols):
            raise InvalidInputError("alphabet must be nonempty and duplicate-free")
        alphabet = set(self.symbols)
        for pair in self.relation:
            if len(pair) != 2 or not set(pair) <= alphabet:
                raise InvalidInputError(f"relation pair {pair!r} outside the alphabet")
        if len(self.source_word) != len(self.target_word):
            raise InvalidInputError("source and target words differ in length")
        for name in ("source_word", "target_word"):
            w = getattr(self, name)
            if not set(w) <= alphabet:
                raise InvalidInputError(f"{name} uses symbols outside the alphabet")
            if not self.is_word(w):
                raise InvalidInputError(f"{name} has a consecutive pair outside the relation")

    def is_word(self, w: tuple[str, ...]) -> bool:
        return all((a, b) in self.relation for a, b in zip(w, w[1:]))


def word_reachability(inst: WordInstance, max_states: int = DEFAULT_MAX_STATES) -> bool:
    """BFS over words, one symbol rewrite per move."""
    n = len(inst.source_word)
    if len(inst.symbols) ** n > max_states:
        raise ResourceLimitError(
            f"{len(inst.symbols)}^{n} candidate words exceed the cap {max_states}"
        )
    if inst.source_word == inst.target_word:
        return True
    seen = {inst.source_word}
    queue = deque([inst.source_word])
    while queue:
        w = queue.popleft()
        for i in range(n):
            for sym in inst.symbols:
                if sym == w[i]:
                    continue
                nxt = w[:i] + (sym,) + w[i + 1 :]
                if nxt in seen or not inst.is_word(nxt):
                    continue
                if nxt == inst.target_word:
                    return True
                seen.add(nxt)
                queue.append(nxt)
    return False


# -- balanced bicliques ----------------------------------------------------------

def validate_bipartition(g: Graph, side_a: VertexSet, side_b: VertexSet) -> tuple[VertexSet, VertexSet]:
    """Check that the two sides partition V(g) and carry no internal edges."""
    side_a = validate_vertex_set(g, side_a)
    side_b = validate_vertex_set(g, side_b)
    if side_a & side_b or len(side_a) + len(side_b) != g.n:
        raise InvalidInputError("sides must partition the vertex set")
    for side in (side_a, side_b):
        m = mask_of(side)
        for v in side:
            if g.masks[v] & m:
                raise InvalidInputError("declared sides are not independent sets")
    return side_a, side_b


def has_balanced_biclique(
    g: Graph, side_a: VertexSet, side_b: VertexSet, b: int
) -> tuple[bool, tuple[VertexSet, VertexSet] | None]:
    """Is there a complete bipartite subgraph with b vertices on each side?

    Witness sides are returned in (side_a part, side_b part) order.
    """
    side_a, side_b = validate_bipartition(g, side_a, side_b)
    if b < 0:
        raise InvalidInputError(f"biclique order must be >= 0, got {b}")
    if b == 0:
        return True, (frozenset(), frozenset())
    small, large, flipped = side_a, side_b, False
    if len(side_b) < len(side_a):
        small, large, flipped = side_b, side_a, True
    if b > len(small):
        return False, None
    large_mask = mask_of(large)
    for chosen in combinations(sorted(small), b):
        common = large_mask
        for v in chosen:
            common &= g.masks[v]
            if common.bit_count() < b:
                break
        if common.bit_count() >= b:
            left = frozenset(chosen)
            right = frozenset(sorted(bits(common))[:b])
            return True, ((right, left) if flipped else (left, right))
    return False, None


# -- word file format -------------------------------------------------------------
#
#   w <alphabet-size> <word-length>
#   <symbols, space separated>
#   <x> <y>            (one allowed pair per line, any number of lines)
#   <source word, space separated>
#   <target word, space separated>
#
# The two words are always the last two lines.  Comments are only recognized
# before the header, because single letters like "c" are legitimate symbols.

def word_to_text(inst: WordInstance, comments: tuple[str, ...] = ()) -> str:
    if not inst.source_word:
        raise FormatError("the word file format needs words of length >= 1")
    lines = [f"c {c}" for c in comments]
    lines.append(f"w {len(inst.symbols)} {len(inst.source_word)}")
    lines.append(" ".join(inst.symbols))
    lines.extend(f"{x} {y}" for x, y in sorted(inst.relation))
    lines.append(" ".join(inst.source_word))
    lines.append(" ".join(inst.target_word))
    return "\n".join(lines) + "\n"


def parse_word_text(text: str) -> WordInstance:
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or (not rows and line.startswith("c")):
            continue
        rows.append(line.split())
    if len(rows) < 4:
        raise FormatError("word file needs a header, symbols, and two word lines")
    head = rows[0]
    if len(head) != 3 or head[0] != "w":
        raise FormatError(f"bad word header {' '.join(head)!r}")
    try:
        nsym, wlen = int(head[1]), int(head[2])
    except ValueError:
        raise FormatError(f"bad counts in word header {' '.join(head)!r}") from None
    if nsym < 1 or wlen < 1:
        raise FormatError(f"word header needs positive counts, got {nsym} and {wlen}")
    symbols = tuple(rows[1])
    if len(symbols) != nsym:
        raise FormatError(f"header announces {nsym} symbols, found {len(symbols)}")
    source, target = tuple(rows[-2]), tuple(rows[-1])
    if len(source) != wlen or len(target) != wlen:
        raise FormatError(f"words must have {wlen} symbols")
    relation = set()
    for row in rows[2:-2]:
        if len(row) != 2:
            raise FormatError(f"bad relation line {' '.join(row)!r}")
        relation.add((row[0], row[1]))
    try:
        return WordInstance(symbols, frozenset(relation), source, target)
    except InvalidInputError as exc:
        raise FormatError(str(exc)) from None
