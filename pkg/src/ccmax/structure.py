"""Block structure of connected graphs.

Block decomposition (maximal 2-connected subgraphs and bridges), the
K2/K3/diamond block classification, the graph type t(G) = (d, i2, i3),
the sets S and V_i, and membership tests for the extremal families B0/B.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .graphs import Graph, edges_within, is_connected, triangles_at


class BlockKind(enum.Enum):
    K2 = "K2"
    K3 = "K3"
    DIAMOND = "diamond"
    OTHER = "other"


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks as sorted vertex tuples, plus the cut vertices.

    Every edge lies in exactly one block; two blocks share at most one
    vertex, necessarily a cut vertex.
    """

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]

    def endblocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks containing at most one cut vertex."""
        return tuple(
            b for b in self.blocks if sum(v in self.cut_vertices for v in b) <= 1
        )


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components of a connected graph, by Hopcroft-Tarjan."""
    if not is_connected(g):
        raise ValueError("block decomposition requires a connected graph")
    n = g.n
    num = [0] * n  # DFS preorder index, 1-based; 0 = unvisited
    low = [0] * n
    parent = [-1] * n
    counter = 0
    stack: list[tuple[int, int]] = []  # edge stack
    out: list[tuple[int, ...]] = []
    cuts: set[int] = set()

    def emit(u: int, v: int) -> None:
        verts: set[int] = set()
        while stack:
            e = stack.pop()
            verts.update(e)
            if e == (u, v):
                break
        out.append(tuple(sorted(verts)))

    def dfs(root: int) -> None:
        nonlocal counter
        counter += 1
        num[root] = low[root] = counter
        work = [(root, iter(g.neighbors(root)))]
        root_children = 0
        while work:
            u, it = work[-1]
            advanced = False
            for v in it:
                if num[v] == 0:
                    stack.append((u, v))
                    parent[v] = u
                    counter += 1
                    num[v] = low[v] = counter
                    work.append((v, iter(g.neighbors(v))))
                    if u == root:
                        root_children += 1
                    advanced = True
                    break
                if v != parent[u] and num[v] < num[u]:
                    stack.append((u, v))
                    low[u] = min(low[u], num[v])
            if not advanced:
                work.pop()
                if work:
                    p = work[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] >= num[p]:
                        emit(p, u)
                        if p != root:
                            cuts.add(p)
        if root_children >= 2:
            cuts.add(root)

    if n > 0:
        dfs(0)
    return BlockDecomposition(tuple(out), frozenset(cuts))


def classify_block(g: Graph, block) -> BlockKind:
    """K2/K3/diamond classification of one block of g."""
    verts = tuple(sorted(block))
    if verts not in blocks(g).blocks:
        raise ValueError(f"{verts} is not a block of the graph")
    k = len(verts)
    m = edges_within(g, verts)
    if k == 2:
        return BlockKind.K2
    if k == 3 and m == 3:
        return BlockKind.K3
    if k == 4 and m == 5:
        return BlockKind.DIAMOND
    return BlockKind.OTHER


@dataclass(frozen=True)
class GraphType:
    """t(G) = (d, i2, i3): diamond blocks and inner triangles with exactly
    2 resp. 3 degree-3 vertices. blocks_legal flags whether every block is
    K2/K3/diamond (carried for diagnostics, ignored in comparisons)."""

    d: int
    i2: int
    i3: int
    blocks_legal: bool = field(default=True, compare=False)

    def __iter__(self):
        return iter((self.d, self.i2, self.i3))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.d, self.i2, self.i3)


# the seven extremal types of the family B
LEGAL_TYPES = (
    (0, 0, 0),
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
    (0, 1, 1),
    (0, 2, 0),
    (0, 3, 0),
)


def graph_type(g: Graph) -> GraphType:
    """Type of a connected graph; triangle endblocks (one degree-3 vertex)
    count toward neither i2 nor i3."""
    dec = blocks(g)
    d = i2 = i3 = 0
    legal = True
    for b in dec.blocks:
        kind = classify_block_in(g, dec, b)
        if kind is BlockKind.DIAMOND:
            d += 1
        elif kind is BlockKind.K3:
            deg3 = sum(g.degree(v) == 3 for v in b)
            if deg3 == 2:
                i2 += 1
            elif deg3 == 3:
                i3 += 1
        elif kind is BlockKind.OTHER:
            legal = False
    return GraphType(d, i2, i3, blocks_legal=legal)


def classify_block_in(g: Graph, dec: BlockDecomposition, block) -> BlockKind:
    """classify_block without recomputing the decomposition."""
    verts = tuple(sorted(block))
    if verts not in dec.blocks:
        raise ValueError(f"{verts} is not a block of the graph")
    k = len(verts)
    m = edges_within(g, verts)
    if k == 2:
        return BlockKind.K2
    if k == 3 and m == 3:
        return BlockKind.K3
    if k == 4 and m == 5:
        return BlockKind.DIAMOND
    return BlockKind.OTHER


def s_set(g: Graph) -> frozenset[int]:
    """Vertices of degree at most 2 lying in no triangle."""
    return frozenset(
        u for u in range(g.n) if g.degree(u) <= 2 and triangles_at(g, u) == 0
    )


def v_partition(g: Graph, k: int) -> dict[int, frozenset[int]]:
    """Partition of a k-regular graph's vertices by triangle deficiency:
    V_i = vertices whose neighborhood misses i of the C(k,2) possible edges."""
    if any(g.degree(u) != k for u in range(g.n)):
        raise ValueError(f"graph is not {k}-regular")
    full = k * (k - 1) // 2
    parts: dict[int, set[int]] = {}
    for u in range(g.n):
        i = full - triangles_at(g, u)
        parts.setdefault(i, set()).add(u)
    return {i: frozenset(vs) for i, vs in sorted(parts.items())}


def _check_b_input(g: Graph) -> None:
    if g.n < 6:
        raise ValueError(f"family membership needs order >= 6, got {g.n}")
    if not is_connected(g):
        raise ValueError("family membership needs a connected graph")


def is_in_b0(g: Graph) -> bool:
    """Connected, order >= 6, max degree <= 3, every block K2/K3/diamond,
    and every diamond block an endblock."""
    _check_b_input(g)
    if any(g.degree(u) > 3 for u in range(g.n)):
        return False
    dec = blocks(g)
    ends = set(dec.endblocks())
    for b in dec.blocks:
        kind = classify_block_in(g, dec, b)
        if kind is BlockKind.OTHER:
            return False
        if kind is BlockKind.DIAMOND and b not in ends:
            return False
    return True


def is_in_b(g: Graph) -> bool:
    """B0 membership with type in the seven-tuple list and S empty.

    The S = empty-set requirement goes beyond the literal type condition; it
    rules out subdivided bridges and pendant edges, which keep the type legal
    but fall below the extremal value. is_in_b_literal gives the type-only
    reading for diagnostics.
    """
    return is_in_b_literal(g) and not s_set(g)


def is_in_b_literal(g: Graph) -> bool:
    """B0 membership plus the type list, without the S = empty requirement."""
    if not is_in_b0(g):
        return False
    return graph_type(g).as_tuple() in LEGAL_TYPES


def claim_checks(g: Graph) -> dict[str, bool]:
    """The structural claims satisfied by subcubic extremal graphs:
    blocks all K2/K3/diamond; diamonds are endblocks; at most 2 diamonds;
    S empty; at most 1 inner triangle."""
    dec = blocks(g)
    ends = set(dec.endblocks())
    kinds = {b: classify_block_in(g, dec, b) for b in dec.blocks}
    t = graph_type(g)
    return {
        "diamonds_are_endblocks": all(
            b in ends for b, k in kinds.items() if k is BlockKind.DIAMOND
        ),
        "blocks_are_k2_k3_diamond": t.blocks_legal,
        "at_most_two_diamonds": t.d <= 2,
        "s_empty": not s_set(g),
        "at_most_one_inner_triangle": t.i2 + t.i3 <= 1,
    }
