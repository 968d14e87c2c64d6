"""Immutable simple graphs plus the constructions the gadget builders rely on.

Vertices are dense integers ``0..n-1``.  Constructors that relabel vertices
also return a map from old to new identifiers so callers can track where each
vertex of a composite graph came from.  Adjacency is kept both as frozensets
(convenient) and as integer bitmasks (fast set algebra via ``int.bit_count``).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from .errors import FormatError, InvalidInputError

VertexSet = frozenset[int]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A finite simple undirected graph on vertex set ``{0, ..., n-1}``.

    Instances are immutable and hashable.  Equality compares structure only
    (vertex count and adjacency); ``labels`` are provenance annotations and
    never participate in equality or hashing.
    """

    __slots__ = ("n", "adj", "masks", "labels", "_m", "_hash")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[str] | None = None,
    ):
        if n < 0:
            raise InvalidInputError(f"vertex count must be non-negative, got {n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.masks = tuple(masks)
        self.adj = tuple(frozenset(bits(m)) for m in masks)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise InvalidInputError(
                    f"{len(labels)} labels for {n} vertices"
                )
        self.labels = labels
        self._m = sum(m.bit_count() for m in masks) // 2
        self._hash = hash((n, self.masks))

    @property
    def m(self) -> int:
        """Number of edges."""
        return self._m

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return [
            (u, v) for u in range(self.n) for v in bits(self.masks[u]) if u < v
        ]

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise InvalidInputError(f"vertex pair ({u}, {v}) out of range")
        return bool(self.masks[u] >> v & 1)

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def with_labels(self, labels: Sequence[str] | None) -> "Graph":
        """Same structure, different labels."""
        return Graph(self.n, self.edges(), labels)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.masks == other.masks
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def check_invariants(g: Graph) -> None:
    """Assert the structural invariants (symmetry, no loops, dense ids).

    Construction enforces all of these; this exists so property tests can
    re-check every operator output independently.
    """
    assert len(g.masks) == g.n
    for v in range(g.n):
        assert not (g.masks[v] >> v & 1), f"self-loop at {v}"
        assert g.masks[v] < (1 << g.n), f"adjacency of {v} out of range"
        for u in bits(g.masks[v]):
            assert g.masks[u] >> v & 1, f"edge {v}->{u} not symmetric"


def validate_vertex_set(g: Graph, s: Iterable[int]) -> VertexSet:
    s = frozenset(s)
    for v in s:
        if not (0 <= v < g.n):
            raise InvalidInputError(f"vertex {v} out of range for n={g.n}")
    return s


def neighborhood(g: Graph, x: Iterable[int], closed: bool = False) -> VertexSet:
    """Union of neighbors of ``x``; with ``closed=True`` includes ``x`` itself."""
    s = validate_vertex_set(g, x)
    m = 0
    for v in s:
        m |= g.masks[v]
    if closed:
        m |= mask_of(s)
    return frozenset(bits(m))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s``, relabelled densely in ascending vertex order.

    Returns the new graph and the old->new identifier map.
    """
    s = validate_vertex_set(g, s)
    order = sorted(s)
    remap = {old: new for new, old in enumerate(order)}
    smask = mask_of(order)
    edges = []
    for new_u, old_u in enumerate(order):
        row = g.masks[old_u] & smask
        for old_v in bits(row):
            if old_v > old_u:
                edges.append((new_u, remap[old_v]))
    labels = None
    if g.labels is not None:
        labels = [g.labels[old] for old in order]
    return Graph(len(order), edges, labels), remap


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    edges = []
    for u in range(g.n):
        row = ~g.masks[u] & full & ~(1 << u)
        for v in bits(row):
            if v > u:
                edges.append((u, v))
    return Graph(g.n, edges, g.labels)


def disjoint_union(parts: Sequence[Graph]) -> tuple[Graph, list[dict[int, int]]]:
    """Disjoint union of ``parts`` with vertices renumbered part by part.

    The part index is recorded in the labels of the result, and one old->new
    map per part is returned.
    """
    maps: list[dict[int, int]] = []
    edges: list[tuple[int, int]] = []
    labels: list[str] = []
    offset = 0
    for i, part in enumerate(parts):
        remap = {v: offset + v for v in range(part.n)}
        maps.append(remap)
        edges.extend((offset + u, offset + v) for u, v in part.edges())
        for v in range(part.n):
            base = f"p{i}"
            labels.append(base if part.labels is None else f"{base}.{part.labels[v]}")
        offset += part.n
    return Graph(offset, edges, labels), maps


def duplicate_set(
    g: Graph, s: Iterable[int], times: int
) -> tuple[Graph, dict[tuple[int, int], int]]:
    """Append ``times`` rounds of copies of the vertices in ``s``.

    Each copy receives the original's neighborhood, so a duplicate of u and a
    duplicate of v (same round or not) are adjacent exactly when uv was an
    edge of ``g``; duplicates of the same vertex are never adjacent.  Returns
    the grown graph and a map (round, original) -> new vertex id.
    """
    s = validate_vertex_set(g, s)
    if times < 0:
        raise InvalidInputError(f"duplication count must be >= 0, got {times}")
    if times == 0 or not s:
        return g, {}
    order = sorted(s)
    where: dict[tuple[int, int], int] = {}
    nid = g.n
    for r in range(times):
        for u in order:
            where[(r, u)] = nid
            nid += 1
    edges = list(g.edges())
    for (r, u), du in where.items():
        for w in g.adj[u]:
            edges.append((du, w))
        # copy-to-copy edges mirror the original adjacency inside s
        for (r2, v), dv in where.items():
            if dv > du and u != v and g.has_edge(u, v):
                edges.append((du, dv))
    labels = None
    if g.labels is not None:
        labels = list(g.labels) + [
            g.labels[u] for r in range(times) for u in order
        ]
    return Graph(nid, edges, labels), where


def join_sets(g: Graph, a: Iterable[int], b: Iterable[int]) -> Graph:
    """Add every edge between the disjoint vertex sets ``a`` and ``b``."""
    a = validate_vertex_set(g, a)
    b = validate_vertex_set(g, b)
    if a & b:
        raise InvalidInputError(f"join sides overlap on {sorted(a & b)}")
    edges = list(g.edges())
    edges.extend((u, v) for u in a for v in b if not g.has_edge(u, v))
    return Graph(g.n, edges, g.labels)


def replace_vertex(
    g: Graph, v: int, f: Graph
) -> tuple[Graph, dict[int, int], tuple[int, ...]]:
    """Substitute ``f`` for vertex ``v``: every vertex of the inserted copy of
    ``f`` is joined to all former neighbors of ``v``.

    Returns (new graph, carry map for the surviving vertices, ids of the
    inserted copy).  Surviving vertices keep their relative order; the copy
    of ``f`` is appended at the end.
    """
    if not (0 <= v < g.n):
        raise InvalidInputError(f"vertex {v} out of range for n={g.n}")
    carry = {u: (u if u < v else u - 1) for u in range(g.n) if u != v}
    base = g.n - 1
    inserted = tuple(range(base, base + f.n))
    edges = [
        (carry[u], carry[w]) for u, w in g.edges() if u != v and w != v
    ]
    edges.extend((base + a, base + b) for a, b in f.edges())
    for w in g.adj[v]:
        edges.extend((carry[w], x) for x in inserted)
    labels = None
    if g.labels is not None:
        labels = [g.labels[u] for u in range(g.n) if u != v]
        if f.labels is not None:
            labels += [f"{g.labels[v]}.{fl}" for fl in f.labels]
        else:
            labels += [f"{g.labels[v]}.{i}" for i in range(f.n)]
    return Graph(base + f.n, edges, labels), carry, inserted


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components (as bitmasks) of g, or of g restricted to the
    vertices in the mask ``within``.  Ordered by smallest contained vertex."""
    todo = (1 << g.n) - 1 if within is None else within
    out = []
    while todo:
        start = todo & -todo
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.masks[v]
            grow &= todo & ~comp
            comp |= grow
            frontier = grow
        out.append(comp)
        todo &= ~comp
    return out


def component_labels(adj: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Component id per node for an adjacency-list graph (ids are the
    smallest node index in each component)."""
    n = len(adj)
    label = [-1] * n
    for start in range(n):
        if label[start] >= 0:
            continue
        label[start] = start
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if label[w] < 0:
                    label[w] = start
                    stack.append(w)
    return tuple(label)


# -- small named graphs -----------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidInputError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# -- text format --------------------------------------------------------------
#
#   c <free-form comment>
#   p graph <n> <m>
#   e <u> <v>            (1-indexed endpoints, m lines)
#
# Comment lines may appear anywhere and are ignored by the parser.  The writer
# is deterministic: comments, the p line, one label comment per labelled
# vertex, then edges sorted ascending.

def graph_to_text(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p graph {g.n} {g.m}")
    if g.labels is not None:
        lines.extend(f"c label {v + 1} {g.labels[v]}" for v in range(g.n))
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _data_lines(text: str) -> Iterator[list[str]]:
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield line.split()


def _parse_vertex(tok: str, n: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise FormatError(f"expected a vertex number, got {tok!r}") from None
    if not (1 <= v <= n):
        raise FormatError(f"vertex {v} out of range 1..{n}")
    return v - 1


def parse_graph_text(text: str) -> Graph:
    fields = list(_data_lines(text))
    return _graph_from_fields(fields)


def _graph_from_fields(fields: list[list[str]]) -> Graph:
    if not fields:
        raise FormatError("missing 'p graph' header line")
    head = fields[0]
    if len(head) != 4 or head[0] != "p" or head[1] != "graph":
        raise FormatError(f"bad header line {' '.join(head)!r}")
    try:
        n, m = int(head[2]), int(head[3])
    except ValueError:
        raise FormatError(f"bad header counts in {' '.join(head)!r}") from None
    if n < 0 or m < 0:
        raise FormatError(f"negative counts in header ({n}, {m})")
    body = fields[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)} edge lines")
    edges = []
    for line in body:
        if len(line) != 3 or line[0] != "e":
            raise FormatError(f"bad edge line {' '.join(line)!r}")
        u = _parse_vertex(line[1], n)
        v = _parse_vertex(line[2], n)
        if u == v:
            raise FormatError(f"self-loop at vertex {u + 1}")
        edges.append((u, v))
    return Graph(n, edges)
