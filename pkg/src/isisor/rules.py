"""Reconfiguration rules on token sets, and slide-step expansion.

A move transforms one vertex set into another of the same size.  Under
``jump`` with budget k, up to k tokens may be picked up and dropped anywhere:
two sets s, t are adjacent iff ``|s - t| <= k``.  Under ``slide`` the moved
tokens must travel along edges simultaneously, formalized as a perfect
matching between the vacated vertices ``s - t`` and the newly occupied
vertices ``t - s`` using edges of the host.  Tokens that stay put never
move, so a cyclic rotation of a set onto itself is a no-op (sets carry no
token identity).

Both relations are symmetric, monotone in k, and slide-adjacency implies
jump-adjacency at the same budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import pairwise

from .errors import FormatError, InvalidInputError, PreconditionError
from .graphs import Graph, VertexSet, validate_vertex_set
from .isomorphism import is_induced_copy

RULE_KINDS = ("jump", "slide")


@dataclass(frozen=True)
class Rule:
    kind: str
    k: int

    def __post_init__(self):
        if self.kind not in RULE_KINDS:
            raise InvalidInputError(f"rule kind must be one of {RULE_KINDS}, got {self.kind!r}")
        if self.k < 1:
            raise InvalidInputError(f"move budget must be >= 1, got {self.k}")


@dataclass(frozen=True)
class ReconfigInstance:
    """Host graph, pattern, two endpoint sets and a rule."""

    host: Graph
    pattern: Graph
    source: VertexSet
    target: VertexSet
    rule: Rule

    def __post_init__(self):
        object.__setattr__(self, "source", validate_vertex_set(self.host, self.source))
        object.__setattr__(self, "target", validate_vertex_set(self.host, self.target))
        for name in ("source", "target"):
            s = getattr(self, name)
            if len(s) != self.pattern.n:
                raise InvalidInputError(
                    f"{name} has {len(s)} vertices, pattern has {self.pattern.n}"
                )


@dataclass(frozen=True)
class ReconfigSequence:
    """A nonempty list of equal-size vertex sets; ``moves`` counts the steps
    between consecutive sets."""

    steps: tuple[VertexSet, ...]

    def __post_init__(self):
        if not self.steps:
            raise InvalidInputError("a sequence needs at least one set")
        size = len(self.steps[0])
        for s in self.steps:
            if len(s) != size:
                raise InvalidInputError("sequence sets differ in size")

    @property
    def moves(self) -> int:
        return len(self.steps) - 1


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    index: int | None = None
    reason: str | None = None


def adjacent(g: Graph, s: VertexSet, t: VertexSet, rule: Rule) -> bool:
    """One-move adjacency of the sets s, t under ``rule``."""
    s = validate_vertex_set(g, s)
    t = validate_vertex_set(g, t)
    if len(s) != len(t):
        raise InvalidInputError(f"set sizes differ: {len(s)} vs {len(t)}")
    moved = s - t
    if len(moved) > rule.k:
        return False
    if rule.kind == "jump":
        return True
    return _has_perfect_matching(g, sorted(moved), sorted(t - s))


def _has_perfect_matching(g: Graph, left: list[int], right: list[int]) -> bool:
    # Kuhn's augmenting paths; the sides are tiny (at most the move budget)
    match: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in right:
            if g.has_edge(u, v) and v not in seen:
                seen.add(v)
                if v not in match or augment(match[v], seen):
                    match[v] = u
                    return True
        return False

    for u in left:
        if not augment(u, set()):
            return False
    return True


def verify_sequence(inst: ReconfigInstance, seq: ReconfigSequence) -> VerificationResult:
    """Check endpoints, pattern membership of every step, and rule adjacency
    of every consecutive pair.  Reports the first violating index."""
    steps = seq.steps
    if steps[0] != inst.source:
        return VerificationResult(False, 0, "first set differs from the source")
    for i, s in enumerate(steps):
        if len(s) != inst.pattern.n or not is_induced_copy(inst.host, inst.pattern, s):
            return VerificationResult(False, i, "set does not induce the pattern")
        if i > 0 and not adjacent(inst.host, steps[i - 1], s, inst.rule):
            return VerificationResult(False, i, "step is not a legal move")
    if steps[-1] != inst.target:
        return VerificationResult(False, len(steps) - 1, "last set differs from the target")
    return VerificationResult(True)


def _independent(g: Graph, s: VertexSet) -> bool:
    return all(not g.masks[u] & (1 << v) for u in s for v in s if v > u)


def expand_slide_step(g: Graph, source: VertexSet, target: VertexSet) -> ReconfigSequence:
    """Expand one multi-token slide between independent sets into single
    slides, one per displaced token.

    Repeatedly moves a token: pick the smallest incoming vertex with exactly
    one neighbor among the still-to-vacate vertices, and slide that neighbor
    onto it.  On even-hole-free hosts this always succeeds for slide-adjacent
    sets; when no such vertex exists (an even hole, or a pair that was never
    slide-adjacent) the expansion fails.
    """
    source = validate_vertex_set(g, source)
    target = validate_vertex_set(g, target)
    if len(source) != len(target):
        raise InvalidInputError(f"set sizes differ: {len(source)} vs {len(target)}")
    for name, s in (("source", source), ("target", target)):
        if not _independent(g, s):
            raise InvalidInputError(f"{name} is not an independent set")
    steps = [source]
    cur = set(source)
    while cur != target:
        vacate = cur - target
        pick = None
        for v in sorted(target - cur):
            nbrs = [u for u in vacate if g.has_edge(u, v)]
            if len(nbrs) == 1:
                pick = (nbrs[0], v)
                break
        if pick is None:
            raise PreconditionError(
                "no incoming vertex has a unique outgoing neighbor "
                "(even hole, or the sets are not slide-adjacent)"
            )
        u, v = pick
        cur.discard(u)
        cur.add(v)
        steps.append(frozenset(cur))
    return ReconfigSequence(tuple(steps))


def expand_slide_sequence(g: Graph, seq: ReconfigSequence) -> ReconfigSequence:
    """Expand every step of a multi-token slide sequence into single slides."""
    out = [seq.steps[0]]
    for prev, nxt in pairwise(seq.steps):
        part = expand_slide_step(g, prev, nxt)
        out.extend(part.steps[1:])
    return ReconfigSequence(tuple(out))


# -- text format ----------------------------------------------------------------
#
#   s reconfig <count> <set-size>
#   <v1> <v2> ... <v_size>        (1-indexed ascending, count lines)
#
# Comment lines starting with "c" are ignored.

def sequence_to_text(seq: ReconfigSequence, comments: tuple[str, ...] = ()) -> str:
    size = len(seq.steps[0])
    lines = [f"c {c}" for c in comments]
    lines.append(f"s reconfig {len(seq.steps)} {size}")
    lines.extend(" ".join(str(v + 1) for v in sorted(s)) for s in seq.steps)
    return "\n".join(lines) + "\n"


def parse_sequence_text(text: str) -> ReconfigSequence:
    rows = []
    header = None
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("c"):
            continue
        if header is None:
            if not line:
                continue
            parts = line.split()
            if len(parts) != 4 or parts[0] != "s" or parts[1] != "reconfig":
                raise FormatError(f"bad sequence header {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise FormatError(f"bad counts in header {line!r}") from None
            continue
        rows.append(line.split())
    if header is None:
        raise FormatError("missing 's reconfig' header line")
    count, size = header
    if count < 1 or size < 0:
        raise FormatError(f"bad sequence shape ({count} sets of size {size})")
    if size == 0:
        # empty sets appear as blank lines, which splitlines collapses away
        rows = [r for r in rows if r]
        if rows:
            raise FormatError("size-0 sequence has non-empty set lines")
        return ReconfigSequence(tuple(frozenset() for _ in range(count)))
    rows = [r for r in rows if r]
    if len(rows) != count:
        raise FormatError(f"header announces {count} sets, found {len(rows)}")
    steps = []
    for row in rows:
        try:
            vs = [int(tok) - 1 for tok in row]
        except ValueError:
            raise FormatError(f"bad set line {' '.join(row)!r}") from None
        s = frozenset(vs)
        if len(s) != size or len(vs) != size:
            raise FormatError(f"set line {' '.join(row)!r} does not have {size} distinct vertices")
        if any(v < 0 for v in vs):
            raise FormatError(f"vertex out of range in {' '.join(row)!r}")
        steps.append(s)
    return ReconfigSequence(tuple(steps))
