"""Reachability via the compressed reconfiguration graph.

Under a jump rule with budget ``k`` on a pattern with ``p`` vertices, every
move keeps at least ``mu = p - k`` tokens in place.  The compressed graph has
one node per ``mu``-subset of host vertices, and an edge between two subsets
A, B exactly when some induced copy of the pattern contains their union.
Two copies are reachable from each other iff any of their anchors (one
``mu``-subset each) are connected here, and a copy sequence can be read back
off the stored edge witnesses: consecutive witnesses share an anchor, hence
at least ``mu`` vertices, so each hop is a legal jump.

``edge_test`` decides an edge by trying, for every vertex of A ∪ B, a
connected candidate set that would be its component in the witness copy;
whatever pattern components the candidate union consumes are removed from the
pattern, the union's closed neighborhood is removed from the host, and an
oracle searches the rest.  Restricting candidates to connected sets loses
nothing: in a real witness, each vertex's component is itself such a set.
"""

from __future__ import annotations

import multiprocessing
from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .errors import InvalidInputError, ResourceLimitError
from .graphs import Graph, VertexSet, bits, component_masks, induced_subgraph, disjoint_union, mask_of, validate_vertex_set, component_labels
from .isomorphism import (
    OracleFn,
    canonical_key,
    component_decomposition,
    connected_vertex_sets_containing,
    find_induced_copy,
    is_induced_copy,
)
from .rules import ReconfigInstance, ReconfigSequence

DEFAULT_MAX_NODES = 10**6


@dataclass(frozen=True, eq=False)
class CompressedGraph:
    """Anchor subsets of the host plus witnessed joint-copy adjacency."""

    nodes: tuple[VertexSet, ...]
    index: dict[VertexSet, int]
    adj: tuple[tuple[int, ...], ...]
    witnesses: dict[tuple[int, int], VertexSet]
    anchor_size: int

    @property
    def edge_count(self) -> int:
        return len(self.witnesses)

    def component_ids(self) -> tuple[int, ...]:
        return component_labels(self.adj)


class _EdgeTester:
    """Shared state for many edge tests on one (host, pattern) pair."""

    def __init__(self, g: Graph, h: Graph, oracle: OracleFn | None):
        self.g = g
        self.h = h
        self.oracle: OracleFn = oracle if oracle is not None else find_induced_copy
        dec = component_decomposition(h)
        self.type_graphs = [tg for tg, _ in dec.parts]
        self.type_counts = [c for _, c in dec.parts]
        self.type_keys = list(dec.keys)
        self.sizes = [tg.n for tg in self.type_graphs]
        self.by_size: dict[int, list[int]] = {}
        for ti, s in enumerate(self.sizes):
            self.by_size.setdefault(s, []).append(ti)
        self.full = (1 << g.n) - 1
        self._cand: dict[tuple[int, int], list[int]] = {}

    def _candidates(self, v: int, size: int) -> list[int]:
        key = (v, size)
        got = self._cand.get(key)
        if got is None:
            got = connected_vertex_sets_containing(self.g, v, size)
            self._cand[key] = got
        return got

    def test(self, cmask: int) -> VertexSet | None:
        """Witness copy containing all vertices of ``cmask``, or None."""
        cverts = list(bits(cmask))
        if len(cverts) > self.h.n:
            return None
        ntypes = len(self.type_graphs)
        # per vertex: the candidate list for each component type it could join
        options = []
        for v in cverts:
            per_type = []
            for ti in range(ntypes):
                cand = self._candidates(v, self.sizes[ti])
                if cand:
                    per_type.append(cand)
            if not per_type:
                return None
            options.append(per_type)
        tried: set[int] = set()
        for choice in product(*options):
            for combo in product(*choice):
                w = 0
                for piece in combo:
                    w |= piece
                if w in tried:
                    continue
                tried.add(w)
                wit = self._check(w)
                if wit is not None:
                    return wit
        return None

    def _check(self, wmask: int) -> VertexSet | None:
        # the components induced by the candidate union must form a
        # sub-multiset of the pattern's components
        used = [0] * len(self.type_graphs)
        for comp in component_masks(self.g, within=wmask):
            tis = self.by_size.get(comp.bit_count())
            if not tis:
                return None
            sub, _ = induced_subgraph(self.g, bits(comp))
            ck = canonical_key(sub)
            for ti in tis:
                if self.type_keys[ti] == ck and used[ti] < self.type_counts[ti]:
                    used[ti] += 1
                    break
            else:
                return None
        closed = wmask
        for v in bits(wmask):
            closed |= self.g.masks[v]
        rest, remap = induced_subgraph(self.g, bits(self.full & ~closed))
        leftover = [
            tg
            for ti, tg in enumerate(self.type_graphs)
            for _ in range(self.type_counts[ti] - used[ti])
        ]
        rest_pattern = disjoint_union(leftover)[0] if leftover else Graph(0)
        wit = self.oracle(rest, rest_pattern)
        if wit is None:
            return None
        if len(wit) != rest_pattern.n or any(not 0 <= x < rest.n for x in wit):
            raise InvalidInputError("oracle returned a malformed witness")
        back = {new: old for old, new in remap.items()}
        return frozenset(bits(wmask)) | frozenset(back[x] for x in wit)


def edge_test(
    g: Graph, h: Graph, a: VertexSet, b: VertexSet, oracle: OracleFn | None = None
) -> VertexSet | None:
    """Vertex set of an induced copy of h containing a ∪ b, or None."""
    a = validate_vertex_set(g, a)
    b = validate_vertex_set(g, b)
    if len(a) != len(b):
        raise InvalidInputError(f"anchor sizes differ: {len(a)} vs {len(b)}")
    if not a:
        raise InvalidInputError("anchor sets need at least one vertex")
    return _EdgeTester(g, h, oracle).test(mask_of(a | b))


# -- parallel workers ----------------------------------------------------------

_WORKER: _EdgeTester | None = None


def _init_worker(g: Graph, h: Graph, oracle: OracleFn | None) -> None:
    global _WORKER
    _WORKER = _EdgeTester(g, h, oracle)


def _test_chunk(chunk: list[tuple[int, int, int]]) -> list[tuple[int, int, VertexSet | None]]:
    assert _WORKER is not None
    memo: dict[int, VertexSet | None] = {}
    out = []
    for i, j, cmask in chunk:
        if cmask in memo:
            res = memo[cmask]
        else:
            res = _WORKER.test(cmask)
            memo[cmask] = res
        out.append((i, j, res))
    return out


def build_compressed(
    g: Graph,
    h: Graph,
    anchor_size: int,
    oracle: OracleFn | None = None,
    max_nodes: int = DEFAULT_MAX_NODES,
    workers: int = 1,
) -> CompressedGraph:
    """Materialize the compressed reconfiguration graph.

    Sequentially, every anchor pair inside a found witness is recorded as an
    edge without retesting, and results are memoized on the pair's union, so
    witnesses for a pair may come from an earlier test.  With ``workers`` > 1
    the pairs are tested independently in a process pool (the oracle must be
    picklable); the edge set is identical either way.
    """
    if not 1 <= anchor_size <= h.n:
        raise InvalidInputError(
            f"anchor size must be within 1..{h.n} (pattern size), got {anchor_size}"
        )
    total = comb(g.n, anchor_size)
    if total > max_nodes:
        raise ResourceLimitError(
            f"{total} anchor sets exceed the node cap {max_nodes}"
        )
    nodes = [frozenset(c) for c in combinations(range(g.n), anchor_size)]
    index = {s: i for i, s in enumerate(nodes)}
    node_masks = [mask_of(s) for s in nodes]
    witnesses: dict[tuple[int, int], VertexSet] = {}

    if workers > 1:
        pairs = [
            (i, j, node_masks[i] | node_masks[j])
            for i, j in combinations(range(len(nodes)), 2)
        ]
        step = max(1, len(pairs) // (workers * 4))
        chunks = [pairs[i : i + step] for i in range(0, len(pairs), step)]
        ctx = multiprocessing.get_context()
        with ctx.Pool(workers, initializer=_init_worker, initargs=(g, h, oracle)) as pool:
            for part in pool.map(_test_chunk, chunks):
                for i, j, res in part:
                    if res is not None:
                        witnesses[(i, j)] = res
    else:
        tester = _EdgeTester(g, h, oracle)
        memo: dict[int, VertexSet | None] = {}
        for i, j in combinations(range(len(nodes)), 2):
            if (i, j) in witnesses:
                continue
            cmask = node_masks[i] | node_masks[j]
            if cmask in memo:
                res = memo[cmask]
            else:
                res = tester.test(cmask)
                memo[cmask] = res
            if res is None:
                continue
            # every anchor pair within the witness is an edge with it too
            subs = sorted(index[frozenset(c)] for c in combinations(sorted(res), anchor_size))
            for p, q in combinations(subs, 2):
                witnesses.setdefault((p, q), res)

    adj: list[list[int]] = [[] for _ in nodes]
    for i, j in sorted(witnesses):
        adj[i].append(j)
        adj[j].append(i)
    return CompressedGraph(
        nodes=tuple(nodes),
        index=index,
        adj=tuple(tuple(sorted(a)) for a in adj),
        witnesses=witnesses,
        anchor_size=anchor_size,
    )


def solve_xp(
    inst: ReconfigInstance,
    anchor_size: int | None = None,
    oracle: OracleFn | None = None,
    *,
    compressed: CompressedGraph | None = None,
    max_nodes: int = DEFAULT_MAX_NODES,
    workers: int = 1,
) -> tuple[bool, ReconfigSequence | None]:
    """Decide reachability through the compressed graph and reconstruct a
    copy sequence from edge witnesses.

    The instance must use a jump rule with budget ``k = |V(pattern)| - mu``
    for some ``mu >= 1``; ``anchor_size``, when given, must equal that ``mu``.
    The verdict does not depend on which anchor inside each endpoint is used.
    """
    h = inst.pattern
    if inst.rule.kind != "jump":
        raise InvalidInputError("the compressed solver handles jump rules only")
    mu = h.n - inst.rule.k
    if mu < 1:
        raise InvalidInputError(
            f"budget {inst.rule.k} leaves no anchored vertices (pattern has {h.n})"
        )
    if anchor_size is not None and anchor_size != mu:
        raise InvalidInputError(
            f"anchor size {anchor_size} does not match pattern size minus budget ({mu})"
        )
    for name, s in (("source", inst.source), ("target", inst.target)):
        if not is_induced_copy(inst.host, h, s):
            raise InvalidInputError(f"{name} does not induce the pattern")
    cg = compressed
    if cg is None:
        cg = build_compressed(inst.host, h, mu, oracle, max_nodes, workers)
    elif cg.anchor_size != mu:
        raise InvalidInputError(
            f"compressed graph has anchor size {cg.anchor_size}, instance needs {mu}"
        )
    src = cg.index[frozenset(sorted(inst.source)[:mu])]
    dst = cg.index[frozenset(sorted(inst.target)[:mu])]
    parent = {src: src}
    queue = deque([src])
    found = False
    while queue:
        u = queue.popleft()
        if u == dst:
            found = True
            break
        for w in cg.adj[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    if not found:
        return False, None
    path = [dst]
    while path[-1] != src:
        path.append(parent[path[-1]])
    path.reverse()
    steps: list[VertexSet] = [inst.source]
    for x, y in zip(path, path[1:]):
        steps.append(cg.witnesses[(min(x, y), max(x, y))])
    steps.append(inst.target)
    collapsed = [steps[0]]
    for s in steps[1:]:
        if s != collapsed[-1]:
            collapsed.append(s)
    return True, ReconfigSequence(tuple(collapsed))
