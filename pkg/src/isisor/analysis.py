"""Structural graph analysis: holes, perfection, bipartiteness, metrics.

A *hole* is an induced (chordless) cycle with at least 4 vertices.  Holes are
enumerated by rooted chordless-path search: each hole is generated exactly
once, rooted at its smallest vertex with the orientation fixed by comparing
the root's two neighbors on the cycle.

``is_perfect`` uses the odd-hole characterization: a graph is perfect iff
neither it nor its complement contains an odd hole.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidInputError, ResourceLimitError
from .graphs import Graph, VertexSet, bits, complement, component_masks

HOLE_VERTEX_CAP = 64


@dataclass(frozen=True)
class HoleReport:
    """Holes found (each a vertex tuple starting at its smallest vertex)
    plus a parity summary of the listed holes."""

    holes: tuple[tuple[int, ...], ...]
    odd_count: int
    even_count: int


def _iter_holes(g: Graph) -> Iterator[tuple[int, ...]]:
    masks = g.masks
    full = (1 << g.n) - 1
    for r in range(g.n):
        allowed = full & ~((1 << (r + 1)) - 1)  # strictly above the root
        root_nbrs = masks[r] & allowed

        # path = r, p1, ..., pj; inner = neighbors of p1..p_{j-1}
        def extend(path: list[int], path_mask: int, inner: int) -> Iterator[tuple[int, ...]]:
            last = path[-1]
            cand = masks[last] & allowed & ~path_mask & ~inner
            if len(path) >= 3:
                for u in bits(cand & root_nbrs):
                    if path[1] < u:  # orientation: fix the traversal direction
                        yield (*path, u)
            # prune: a closing vertex must still be available later
            if not (root_nbrs & allowed & ~path_mask & ~inner):
                return
            if len(path) == 1:
                ext = cand  # the first step walks onto a root neighbor
                new_inner = 0
            else:
                ext = cand & ~root_nbrs
                new_inner = inner | masks[last]
            for u in bits(ext):
                path.append(u)
                yield from extend(path, path_mask | (1 << u), new_inner)
                path.pop()

        yield from extend([r], 1 << r, 0)


def find_holes(
    g: Graph,
    parity: str = "any",
    stop_at_first: bool = False,
    max_vertices: int = HOLE_VERTEX_CAP,
) -> HoleReport:
    """Enumerate holes, optionally filtered to ``parity`` in {any, odd, even}.

    With ``stop_at_first`` the search stops at the first matching hole.
    Graphs above ``max_vertices`` are rejected to keep the search desk-scale.
    """
    if parity not in ("any", "odd", "even"):
        raise InvalidInputError(f"parity must be any/odd/even, got {parity!r}")
    if g.n > max_vertices:
        raise ResourceLimitError(
            f"hole search capped at {max_vertices} vertices, graph has {g.n}"
        )
    holes = []
    odd = even = 0
    for cyc in _iter_holes(g):
        if len(cyc) % 2:
            if parity == "even":
                continue
            odd += 1
        else:
            if parity == "odd":
                continue
            even += 1
        holes.append(cyc)
        if stop_at_first:
            break
    return HoleReport(tuple(holes), odd, even)


def is_even_hole_free(g: Graph) -> bool:
    return not find_holes(g, parity="even", stop_at_first=True).holes


def is_odd_hole_free(g: Graph) -> bool:
    return not find_holes(g, parity="odd", stop_at_first=True).holes


def is_perfect(g: Graph) -> bool:
    """Perfect iff both the graph and its complement are odd-hole-free."""
    return is_odd_hole_free(g) and is_odd_hole_free(complement(g))


def is_bipartite(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Two-colorability; on success also returns one coloring (0/1 per vertex)."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in bits(g.masks[u]):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    return False, None
    return True, tuple(color)


def components(g: Graph) -> tuple[VertexSet, ...]:
    """Connected components as vertex sets, ordered by smallest vertex."""
    return tuple(frozenset(bits(m)) for m in component_masks(g))


def diameter(g: Graph) -> int:
    """Largest shortest-path distance.  Errors on empty or disconnected input."""
    if g.n == 0:
        raise InvalidInputError("diameter of the empty graph is undefined")
    if len(component_masks(g)) != 1:
        raise InvalidInputError("diameter requires a connected graph")
    best = 0
    for start in range(g.n):
        dist = [-1] * g.n
        dist[start] = 0
        frontier = [start]
        while frontier:
            nxt = []
            for u in frontier:
                for v in bits(g.masks[u]):
                    if dist[v] < 0:
                        dist[v] = dist[u] + 1
                        nxt.append(v)
            frontier = nxt
        best = max(best, max(dist))
    return best
