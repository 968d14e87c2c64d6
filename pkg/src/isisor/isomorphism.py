"""Induced-subgraph isomorphism oracles.

The central objects are *induced copies*: vertex sets S of a host g whose
induced subgraph is isomorphic to a pattern h.  Enumeration works component
by component: the pattern is decomposed into connected component types with
multiplicities, all connected occurrences of each type are collected, and
copies are assembled from pairwise non-adjacent occurrences.  Choosing
occurrences of the same type in a fixed order makes every copy appear exactly
once (the component decomposition of the induced subgraph is unique).

Canonical forms are minimum adjacency bitstrings computed by
individualization-refinement, which keeps regular graphs tractable at desk
scale (components up to ``CANON_MAX`` vertices).
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .errors import InvalidInputError
from .graphs import (
    Graph,
    VertexSet,
    bits,
    component_masks,
    induced_subgraph,
    mask_of,
    validate_vertex_set,
)

IsoMapping = dict[int, int]
OracleFn = Callable[[Graph, Graph], VertexSet | None]

CANON_MAX = 10


# -- canonical forms ----------------------------------------------------------

def _refine(masks: tuple[int, ...], n: int, ranks: list[int]) -> list[int]:
    # iterated neighbor-rank refinement to a stable ordered partition
    while True:
        keys = [
            (ranks[v], tuple(sorted(ranks[u] for u in bits(masks[v]))))
            for v in range(n)
        ]
        lookup = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [lookup[keys[v]] for v in range(n)]
        if new == ranks:
            return ranks
        ranks = new


def _matrix_key(masks: tuple[int, ...], order: list[int]) -> int:
    key = 0
    for i, u in enumerate(order):
        row = masks[u]
        for v in order[i + 1 :]:
            key = (key << 1) | (row >> v & 1)
    return key


def _canon_min(masks: tuple[int, ...], n: int, ranks: list[int]) -> int:
    blocks: dict[int, list[int]] = {}
    for v in range(n):
        blocks.setdefault(ranks[v], []).append(v)
    target = None
    for r in sorted(blocks):
        if len(blocks[r]) > 1:
            target = r
            break
    if target is None:
        order = sorted(range(n), key=ranks.__getitem__)
        return _matrix_key(masks, order)
    best = None
    for v in blocks[target]:
        # individualize v ahead of its block, then re-refine
        nr = [2 * r + 1 for r in ranks]
        nr[v] -= 1
        cand = _canon_min(masks, n, _refine(masks, n, nr))
        if best is None or cand < best:
            best = cand
    return best


@lru_cache(maxsize=None)
def canonical_key(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key: two graphs compare equal iff isomorphic.

    Only intended for small graphs (pattern components); raises on more than
    ``CANON_MAX`` vertices.
    """
    if g.n > CANON_MAX:
        raise InvalidInputError(
            f"canonical form supports at most {CANON_MAX} vertices, got {g.n}"
        )
    return g.n, _canon_min(g.masks, g.n, _refine(g.masks, g.n, [0] * g.n))


# -- full-graph isomorphism ---------------------------------------------------

def is_isomorphic(a: Graph, b: Graph) -> tuple[bool, IsoMapping | None]:
    """Decide isomorphism and, when it holds, return one vertex bijection."""
    if a.n != b.n or a.m != b.m:
        return False, None
    if a.n == 0:
        return True, {}
    ra = _refine(a.masks, a.n, [0] * a.n)
    rb = _refine(b.masks, b.n, [0] * b.n)
    if sorted(ra) != sorted(rb):
        return False, None
    by_rank: dict[int, list[int]] = {}
    for v in range(b.n):
        by_rank.setdefault(rb[v], []).append(v)
    cand = {u: by_rank.get(ra[u], []) for u in range(a.n)}

    # order a's vertices: prefer vertices adjacent to the placed prefix,
    # fewest candidates first
    order: list[int] = []
    placed_adj = [0] * a.n
    remaining = set(range(a.n))
    while remaining:
        u = min(
            remaining,
            key=lambda x: (-placed_adj[x], len(cand[x]), x),
        )
        order.append(u)
        remaining.discard(u)
        for w in a.adj[u]:
            placed_adj[w] += 1

    mapping: IsoMapping = {}
    used = [False] * b.n

    def backtrack(i: int) -> bool:
        if i == len(order):
            return True
        u = order[i]
        row = a.masks[u]
        for v in cand[u]:
            if used[v]:
                continue
            ok = True
            for w, img in mapping.items():
                if (row >> w & 1) != (b.masks[img] >> v & 1):
                    ok = False
                    break
            if ok:
                mapping[u] = v
                used[v] = True
                if backtrack(i + 1):
                    return True
                del mapping[u]
                used[v] = False
        return False

    if backtrack(0):
        return True, dict(mapping)
    return False, None


# -- pattern decomposition ----------------------------------------------------

@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected component types of a pattern, with multiplicities.

    ``parts[i]`` is (type graph relabelled to 0..s-1, multiplicity) and
    ``keys[i]`` its canonical key.  Parts are ordered by decreasing size,
    then key.
    """

    parts: tuple[tuple[Graph, int], ...]
    keys: tuple[tuple[int, int], ...]

    @property
    def total_vertices(self) -> int:
        return sum(t.n * c for t, c in self.parts)


def component_decomposition(h: Graph) -> ComponentDecomposition:
    buckets: dict[tuple[int, int], tuple[Graph, int]] = {}
    for comp in component_masks(h):
        sub, _ = induced_subgraph(h, bits(comp))
        key = canonical_key(sub)
        if key in buckets:
            g0, c = buckets[key]
            buckets[key] = (g0, c + 1)
        else:
            buckets[key] = (sub, 1)
    order = sorted(buckets, key=lambda k: (-k[0], k))
    return ComponentDecomposition(
        parts=tuple(buckets[k] for k in order),
        keys=tuple(order),
    )


# -- connected vertex set enumeration -----------------------------------------

def connected_vertex_sets(g: Graph, size: int) -> Iterator[int]:
    """All vertex sets of ``size`` inducing a connected subgraph, as masks.

    Each set is produced exactly once (grown from its minimum vertex with a
    fixed-exclusion scheme)."""
    if size <= 0:
        return
    for v in range(g.n):
        above = ~((1 << (v + 1)) - 1)
        yield from _grow(g, 1 << v, g.masks[v] & above, above, size)


def connected_vertex_sets_containing(g: Graph, v: int, size: int) -> list[int]:
    """All connected vertex sets of ``size`` that contain ``v``, as masks."""
    if not (0 <= v < g.n):
        raise InvalidInputError(f"vertex {v} out of range for n={g.n}")
    if size <= 0:
        return []
    full = (1 << g.n) - 1
    return list(_grow(g, 1 << v, g.masks[v], full, size))


def _grow(g: Graph, s: int, cand: int, pool: int, size: int) -> Iterator[int]:
    if s.bit_count() == size:
        yield s
        return
    banned = 0
    for u in bits(cand):
        grown = (cand | (g.masks[u] & pool)) & ~s & ~banned & ~(1 << u)
        yield from _grow(g, s | (1 << u), grown, pool, size)
        banned |= 1 << u


# -- induced copies -----------------------------------------------------------

def _occurrences(g: Graph, type_graph: Graph, key: tuple[int, int]) -> list[tuple[int, int]]:
    """(set mask, closed neighborhood mask) of every induced copy of the
    connected graph ``type_graph`` in g, ordered by mask value."""
    size = type_graph.n
    degs = sorted(type_graph.degree(v) for v in range(type_graph.n))
    out = []
    for smask in connected_vertex_sets(g, size):
        if size > 2:
            induced_degs = sorted(
                (g.masks[v] & smask).bit_count() for v in bits(smask)
            )
            if induced_degs != degs:
                continue
            sub, _ = induced_subgraph(g, bits(smask))
            if canonical_key(sub) != key:
                continue
        # size 1 and 2: connected means isomorphic already
        closed = smask
        for v in bits(smask):
            closed |= g.masks[v]
        out.append((smask, closed))
    out.sort()
    return out


def enumerate_induced_copies(g: Graph, h: Graph) -> Iterator[VertexSet]:
    """Yield every vertex set of g inducing a subgraph isomorphic to h.

    Deterministic order; each copy exactly once.  The empty pattern has the
    single copy ``frozenset()``.
    """
    if h.n == 0:
        yield frozenset()
        return
    if h.n > g.n:
        return
    dec = component_decomposition(h)
    occ_lists: list[tuple[list[tuple[int, int]], int]] = []
    for (tg, count), key in zip(dec.parts, dec.keys):
        occs = _occurrences(g, tg, key)
        if len(occs) < count:
            return
        occ_lists.append((occs, count))

    ntypes = len(occ_lists)

    def assemble(ti: int, start: int, need: int, blocked: int, acc: int) -> Iterator[int]:
        if need == 0:
            if ti + 1 == ntypes:
                yield acc
            else:
                yield from assemble(ti + 1, 0, occ_lists[ti + 1][1], blocked, acc)
            return
        occs = occ_lists[ti][0]
        avail = [i for i in range(start, len(occs)) if not occs[i][0] & blocked]
        if len(avail) < need:
            return
        for pos, i in enumerate(avail):
            if len(avail) - pos < need:
                break
            smask, closed = occs[i]
            yield from assemble(ti, i + 1, need - 1, blocked | closed, acc | smask)

    for acc in assemble(0, 0, occ_lists[0][1], 0, 0):
        yield frozenset(bits(acc))


def find_induced_copy(g: Graph, h: Graph) -> VertexSet | None:
    """First induced copy of h in g, or None.  The default solver oracle."""
    return next(enumerate_induced_copies(g, h), None)


def is_induced_copy(g: Graph, h: Graph, s: VertexSet) -> bool:
    """True iff ``s`` induces a subgraph of g isomorphic to h."""
    s = validate_vertex_set(g, s)
    if len(s) != h.n:
        return False
    sub, _ = induced_subgraph(g, s)
    return is_isomorphic(sub, h)[0]


# -- test-friendly brute oracle ------------------------------------------------

def brute_isomorphic(a: Graph, b: Graph) -> bool:
    """Isomorphism by trying every bijection.  Exponential; only for
    cross-checking the real oracles on tiny graphs."""
    if a.n != b.n or a.m != b.m:
        return False
    for perm in permutations(range(b.n)):
        if all(
            (a.masks[u] >> v & 1) == (b.masks[perm[u]] >> perm[v] & 1)
            for u, v in combinations(range(a.n), 2)
        ):
            return True
    return False
