"""Simple undirected graphs on dense integer vertices.

Graphs are immutable: vertices are 0..n-1, adjacency is kept as per-vertex
bitmasks, and every edit (adding or removing an edge) returns a new Graph.
The module also provides graph6 serialization (the n <= 62 one-line ASCII
format) and canonical forms for isomorphism testing at small orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

GRAPH6_MAX_N = 62
CANONICAL_MAX_N = 20


class Graph6ParseError(ValueError):
    """Malformed graph6 input."""


class CapabilityError(RuntimeError):
    """Operation requested beyond the supported size limit."""


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_masks")

    def __init__(self, n: int, masks: Sequence[int]):
        # Internal constructor: `masks` must already be a valid symmetric,
        # loop-free adjacency; use from_edges() to build from edge lists.
        self.n = n
        self._masks = tuple(masks)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, masks)

    # -- basic views -------------------------------------------------------

    def mask(self, u: int) -> int:
        self._check_vertex(u)
        return self._masks[u]

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return self._masks[u].bit_count()

    def neighbors(self, u: int) -> tuple[int, ...]:
        """Neighbors of u in increasing order."""
        self._check_vertex(u)
        return tuple(_bits(self._masks[u]))

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(_bits(m)) for m in self._masks)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            rest = self._masks[u] >> (u + 1)
            for v in _bits(rest):
                out.append((u, u + 1 + v))
        return out

    @property
    def m(self) -> int:
        return sum(m.bit_count() for m in self._masks) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in non-increasing order."""
        return tuple(sorted((m.bit_count() for m in self._masks), reverse=True))

    # -- edits (return new graphs) ------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        masks = list(self._masks)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        return Graph(self.n, masks)

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not present")
        masks = list(self._masks)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        return Graph(self.n, masks)

    # -- dunder plumbing -----------------------------------------------------

    def _check_vertex(self, u: int) -> None:
        if not (0 <= u < self.n):
            raise ValueError(f"vertex {u} outside 0..{self.n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse to one."""
    return Graph.from_edges(n, edges)


def edges_within(g: Graph, vertices: Iterable[int]) -> int:
    """Number of edges of g with both endpoints in the given vertex set."""
    umask = 0
    for u in vertices:
        g._check_vertex(u)
        umask |= 1 << u
    total = 0
    for u in _bits(umask):
        total += (g._masks[u] & umask).bit_count()
    return total // 2


def triangles_at(g: Graph, u: int) -> int:
    """Number of triangles of g containing u (= edges inside N(u))."""
    numask = g.mask(u)
    total = 0
    for v in _bits(numask):
        total += (g._masks[v] & numask).bit_count()
    return total // 2


def is_connected(g: Graph) -> bool:
    """True iff g has a single component (vacuously for n <= 1)."""
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= g._masks[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


# -- graph6 ------------------------------------------------------------------
#
# One line per graph: byte n+63, then the upper-triangle bits in column-major
# order b(0,1), b(0,2), b(1,2), b(0,3), ... packed 6 per byte (first bit is
# the high bit), each byte offset by 63, zero-padded at the end.


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise CapabilityError(f"graph6 supports n <= {GRAPH6_MAX_N}, got {g.n}")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g._masks[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc, nbits = 0, 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    text = line.rstrip("\r\n")
    if not text:
        raise Graph6ParseError("empty graph6 line")
    head = ord(text[0])
    if head == 126:
        raise Graph6ParseError("multi-byte graph6 order (n > 62) is not supported")
    if not (63 <= head <= 125):
        raise Graph6ParseError(f"bad order byte {text[0]!r}")
    n = head - 63
    npairs = n * (n - 1) // 2
    want = (npairs + 5) // 6
    body = text[1:]
    if len(body) != want:
        raise Graph6ParseError(f"expected {want} data bytes for n={n}, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not (0 <= val <= 63):
            raise Graph6ParseError(f"byte {ch!r} outside graph6 range")
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[npairs:]):
        raise Graph6ParseError("nonzero padding bits")
    masks = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            idx += 1
    return Graph(n, masks)


# -- canonical forms -----------------------------------------------------------
#
# The canonical labeling maximizes the upper-triangle bit string among all
# vertex orderings compatible with the stable color-refinement partition
# (classes ordered by an invariant key). Found by depth-first branch and
# bound over positions with twin skipping, so highly symmetric graphs stay
# cheap. Works well through n = 20; enforced by CANONICAL_MAX_N.


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """A canonical graph6 string: equal iff the graphs are isomorphic."""

    g6: str

    def __str__(self) -> str:
        return self.g6


def _refine_classes(masks: Sequence[int], n: int) -> list[list[int]]:
    """Stable color-refinement partition, classes in invariant order."""
    colors = [0] * n
    ncolors = 1
    while True:
        keys = []
        for v in range(n):
            nbr = tuple(sorted(colors[w] for w in _bits(masks[v])))
            keys.append((colors[v], nbr))
        palette = sorted(set(keys))
        index = {k: i for i, k in enumerate(palette)}
        colors = [index[k] for k in keys]
        if len(palette) == ncolors:
            break
        ncolors = len(palette)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    return [classes[c] for c in sorted(classes, key=lambda c: (len(classes[c]), c))]


def _twins(masks: Sequence[int], u: int, v: int) -> bool:
    # Swapping u and v is an automorphism (holds whether or not u ~ v).
    return masks[u] & ~(1 << v) == masks[v] & ~(1 << u)


_COL_SHIFT = 64


def _canonical_perm(masks: Sequence[int], n: int) -> list[int]:
    if n <= 1:
        return list(range(n))
    classes = _refine_classes(masks, n)
    pos_class: list[int] = []
    for ci, cls in enumerate(classes):
        pos_class.extend([ci] * len(cls))
    remaining = [list(cls) for cls in classes]
    # rcol[v]: adjacency bits of v toward already placed positions, stored so
    # that integer order equals left-to-right column order.
    rcol = [0] * n
    cur = [0] * n
    placed: list[int] = []
    best: list[int] | None = None
    best_perm: list[int] | None = None

    def dfs(j: int, tight: bool) -> bool:
        nonlocal best, best_perm
        if j == n:
            if not tight:
                best = cur[:]
                best_perm = placed[:]
                return True
            return False
        cls = remaining[pos_class[j]]
        cands = sorted(cls, key=lambda v: -rcol[v])
        updated = False
        tried: list[int] = []
        for v in cands:
            col = rcol[v]
            if tight and best is not None and col < best[j]:
                break
            if any(_twins(masks, u, v) for u in tried):
                continue
            tried.append(v)
            child_tight = tight and best is not None and col == best[j]
            cur[j] = col
            placed.append(v)
            cls.remove(v)
            bit = 1 << (_COL_SHIFT - j)
            touched = list(_bits(masks[v]))
            for w in touched:
                rcol[w] += bit
            if dfs(j + 1, child_tight):
                updated = True
                tight = True
            for w in touched:
                rcol[w] -= bit
            placed.pop()
            cls.append(v)
        return updated

    dfs(0, False)
    assert best_perm is not None
    return best_perm


def canonical_graph(g: Graph) -> Graph:
    """The canonically labeled copy of g."""
    if g.n > CANONICAL_MAX_N:
        raise CapabilityError(f"canonical form supports n <= {CANONICAL_MAX_N}, got {g.n}")
    perm = _canonical_perm(g._masks, g.n)
    pos = [0] * g.n
    for p, v in enumerate(perm):
        pos[v] = p
    masks = [0] * g.n
    for v in range(g.n):
        mv = 0
        for w in _bits(g._masks[v]):
            mv |= 1 << pos[w]
        masks[pos[v]] = mv
    return Graph(g.n, masks)


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical graph6 string; equal across all relabelings of g."""
    return CanonicalForm(to_graph6(canonical_graph(g)))


def _canon_masks(masks: Sequence[int], n: int) -> tuple[int, ...]:
    # Fast path for the enumerator: canonical adjacency straight from masks.
    perm = _canonical_perm(masks, n)
    pos = [0] * n
    for p, v in enumerate(perm):
        pos[v] = p
    out = [0] * n
    for v in range(n):
        mv = 0
        for w in _bits(masks[v]):
            mv |= 1 << pos[w]
        out[pos[v]] = mv
    return tuple(out)


def _canon_g6(masks: Sequence[int], n: int) -> str:
    return to_graph6(Graph(n, _canon_masks(masks, n)))
