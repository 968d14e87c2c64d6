"""Deterministic graph corpora shared by the unit and acceptance tests."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

from isisor.analysis import is_even_hole_free
from isisor.graphs import Graph, complete_graph, cycle_graph, empty_graph, path_graph
from isisor.isomorphism import canonical_key


@lru_cache(maxsize=None)
def graphs_upto_iso(n: int) -> tuple[Graph, ...]:
    """All graphs on exactly n vertices, one per isomorphism class."""
    if n == 0:
        return (Graph(0),)
    if n == 1:
        return (Graph(1),)
    out: dict[tuple[int, int], Graph] = {}
    for smaller in graphs_upto_iso(n - 1):
        base_edges = smaller.edges()
        for nbr_bits in range(1 << (n - 1)):
            edges = list(base_edges)
            edges.extend((v, n - 1) for v in range(n - 1) if nbr_bits >> v & 1)
            g = Graph(n, edges)
            out.setdefault(canonical_key(g), g)
    return tuple(out.values())


@lru_cache(maxsize=None)
def connected_graphs_upto_iso(n: int) -> tuple[Graph, ...]:
    from isisor.graphs import component_masks

    return tuple(g for g in graphs_upto_iso(n) if len(component_masks(g)) == 1)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random graph plus a random spanning tree, so it is always connected."""
    edges = {(u, v) for u, v in combinations(range(n), 2) if rng.random() < p}
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[rng.randrange(i)], order[i]
        edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))


def random_chordal_graph(rng: random.Random, n: int, clique_max: int = 3) -> Graph:
    """Grow a chordal graph: each new vertex attaches to a clique."""
    edges: list[tuple[int, int]] = []
    adj = [set() for _ in range(n)]
    for v in range(1, n):
        size = rng.randint(0, min(clique_max, v))
        base = _random_clique(rng, adj, v, size)
        for u in base:
            edges.append((u, v))
            adj[u].add(v)
            adj[v].add(u)
    return Graph(n, edges)


def _random_clique(rng, adj, limit, size):
    for _ in range(40):
        chosen = rng.sample(range(limit), size) if size else []
        if all(b in adj[a] for a, b in combinations(chosen, 2)):
            return chosen
    return []


@lru_cache(maxsize=None)
def even_hole_free_corpus() -> tuple[Graph, ...]:
    """Even-hole-free graphs with up to 8 vertices: every such graph up to
    isomorphism for n <= 5, plus structured and filtered random graphs."""
    out: list[Graph] = []
    for n in range(1, 6):
        out.extend(g for g in graphs_upto_iso(n) if is_even_hole_free(g))
    for n in (6, 7, 8):
        out.append(complete_graph(n))
        out.append(path_graph(n))
    out.append(cycle_graph(5))
    out.append(cycle_graph(7))
    rng = random.Random(20240817)
    for n in (6, 7, 8):
        for _ in range(8):
            g = random_chordal_graph(rng, n)
            if is_even_hole_free(g):
                out.append(g)
        picked = 0
        while picked < 6:
            g = random_graph(rng, n, rng.uniform(0.2, 0.7))
            if is_even_hole_free(g):
                out.append(g)
                picked += 1
    return tuple(out)


def bipartite_side_graphs(max_side: int):
    """Every bipartite graph with declared sides (a, b), a, b <= max_side,
    enumerated over all cross-adjacency matrices."""
    for na in range(1, max_side + 1):
        for nb in range(1, max_side + 1):
            cells = [(i, na + j) for i in range(na) for j in range(nb)]
            for pick in range(1 << len(cells)):
                edges = [cells[c] for c in range(len(cells)) if pick >> c & 1]
                yield (
                    Graph(na + nb, edges),
                    frozenset(range(na)),
                    frozenset(range(na, na + nb)),
                )


def all_relations(symbols: tuple[str, ...]):
    """Every binary relation over the alphabet."""
    pairs = [(x, y) for x in symbols for y in symbols]
    for pick in range(1 << len(pairs)):
        yield frozenset(pairs[c] for c in range(len(pairs)) if pick >> c & 1)


def all_words(symbols: tuple[str, ...], relation, length: int):
    """Every word of the given length whose consecutive pairs lie in the relation."""
    words: list[tuple[str, ...]] = [()]
    for _ in range(length):
        words = [
            w + (s,)
            for w in words
            for s in symbols
            if not w or (w[-1], s) in relation
        ]
    return words
