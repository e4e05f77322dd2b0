"""Constructors for the named graph families.

All labelings are deterministic: copies of a gadget occupy consecutive
labels, and within K_q minus an edge the two degree-(q-2) vertices are
always the last two labels. This makes graph6 output reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping

from .graphs import Graph, from_edges, is_connected

TRIANGLE_MARK = "triangle"
DIAMOND_MARK = "diamond"

_NAME_RE = re.compile(r"^(path|cycle)\((\d+)\)$")


def named(name: str) -> Graph:
    """One of: triangle, diamond, paw, K4, path(n) with n >= 1,
    cycle(n) with n >= 3."""
    if name == "triangle":
        return from_edges(3, [(0, 1), (0, 2), (1, 2)])
    if name == "diamond":
        return complete_minus_edge(4)
    if name == "paw":
        return from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    if name == "K4":
        return from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    m = _NAME_RE.match(name)
    if m:
        n = int(m.group(2))
        if m.group(1) == "path":
            if n < 1:
                raise ValueError("path needs n >= 1")
            return from_edges(n, [(i, i + 1) for i in range(n - 1)])
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    raise ValueError(f"unknown graph name: {name!r}")


def complete_minus_edge(q: int) -> Graph:
    """K_q minus the edge (q-2, q-1): the two degree-(q-2) vertices are the
    last two labels."""
    if q < 2:
        raise ValueError(f"need q >= 2, got {q}")
    edges = [
        (i, j)
        for i in range(q)
        for j in range(i + 1, q)
        if (i, j) != (q - 2, q - 1)
    ]
    return from_edges(q, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the size-a part labeled 0..a-1."""
    if a < 1 or b < 1:
        raise ValueError(f"parts must be non-empty, got {a}, {b}")
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _copies_of_kq_minus_e(k: int, length: int) -> list[tuple[int, int]]:
    # length copies of K_{k+1}-e on consecutive label ranges
    q = k + 1
    edges = []
    for c in range(length):
        base = c * q
        edges.extend(
            (base + i, base + j)
            for i in range(q)
            for j in range(i + 1, q)
            if (i, j) != (q - 2, q - 1)
        )
    return edges


def g_kl(k: int, length: int) -> Graph:
    """The k-regular graph G(k, l): l copies of K_{k+1}-e arranged cyclically,
    joined only at their degree-(k-1) vertices (local labels k-1 and k)."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if length < 2:
        raise ValueError(f"need l >= 2, got {length}")
    q = k + 1
    edges = _copies_of_kq_minus_e(k, length)
    for c in range(length):
        nxt = (c + 1) % length
        edges.append((c * q + k, nxt * q + k - 1))
    return from_edges(length * q, edges)


def caveman(k: int, length: int) -> Graph:
    """Connected caveman graph: l copies of K_{k+1}-e arranged cyclically,
    each linked to the next by an edge from a degree-(k-1) vertex (local
    label k) to a degree-k vertex (local label 0)."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if length < 2:
        raise ValueError(f"need l >= 2, got {length}")
    q = k + 1
    edges = _copies_of_kq_minus_e(k, length)
    for c in range(length):
        nxt = (c + 1) % length
        edges.append((c * q + k, nxt * q))
    return from_edges(length * q, edges)


def caveman_rewired(k: int, length: int) -> Graph:
    """The caveman graph after the rewiring step: drop the edge from copy 0
    to copy 1 and join copy 0's two degree-(k-1) vertices instead, turning
    copy 0 into K_{k+1}."""
    g = caveman(k, length)
    q = k + 1
    return g.without_edge(k, q).with_edge(k - 1, k)


# -- the extremal family ------------------------------------------------------


@dataclass(frozen=True)
class BSkeleton:
    """Recipe for a member of the extremal family.

    tree: a tree with maximum degree 3. Every leaf carries a mark (triangle
    or diamond) and becomes that endblock. Marked internal vertices become
    triangles bridged to each former neighbor; unmarked internal vertices
    must have degree 3 and stay plain. Unmarked degree-2 internal vertices
    are rejected: they would survive as S-vertices and lose extremality.
    """

    tree: Graph
    leaf_marks: Mapping[int, str] = field(default_factory=dict)
    inner_marks: frozenset[int] = frozenset()


def _check_skeleton(sk: BSkeleton) -> None:
    t = sk.tree
    if t.n < 2:
        raise ValueError("skeleton tree needs at least 2 vertices")
    if t.m != t.n - 1:
        raise ValueError("skeleton graph is not a tree")
    if not is_connected(t):
        raise ValueError("skeleton graph is not a tree")
    if any(t.degree(v) > 3 for v in range(t.n)):
        raise ValueError("skeleton tree must have maximum degree 3")
    leaves = {v for v in range(t.n) if t.degree(v) == 1}
    if set(sk.leaf_marks) != leaves:
        raise ValueError("leaf_marks must cover exactly the leaves of the tree")
    bad = [m for m in sk.leaf_marks.values() if m not in (TRIANGLE_MARK, DIAMOND_MARK)]
    if bad:
        raise ValueError(f"unknown leaf mark(s): {bad}")
    inner = set(sk.inner_marks)
    if inner & leaves:
        raise ValueError("inner_marks may only contain internal vertices")
    if not inner <= set(range(t.n)):
        raise ValueError("inner_marks contain out-of-range vertices")
    for v in range(t.n):
        if t.degree(v) == 2 and v not in inner:
            raise ValueError(
                f"internal vertex {v} has degree 2 but is unmarked; "
                "it would be an S-vertex"
            )


def family_b(sk: BSkeleton) -> Graph:
    """Expand a skeleton into its graph.

    Leaves become endblock triangles (bridged at one vertex) or endblock
    diamonds (bridged at a degree-2 diamond vertex); marked internal
    vertices of degree j become triangles with j distinct bridge
    attachments; unmarked internal vertices stay plain. Tree edges become
    bridges between the chosen attachment vertices.
    """
    _check_skeleton(sk)
    t = sk.tree
    edges: list[tuple[int, int]] = []
    # ports[v] = attachment labels for v's incident tree edges, in neighbor order
    ports: dict[int, list[int]] = {}
    base = 0
    for v in range(t.n):
        deg = t.degree(v)
        if deg == 1:
            if sk.leaf_marks[v] == TRIANGLE_MARK:
                edges += [(base, base + 1), (base, base + 2), (base + 1, base + 2)]
                ports[v] = [base]
                base += 3
            else:
                # diamond on base..base+3, degree-2 vertices last; bridge at base+2
                edges += [
                    (base, base + 1),
                    (base, base + 2),
                    (base, base + 3),
                    (base + 1, base + 2),
                    (base + 1, base + 3),
                ]
                ports[v] = [base + 2]
                base += 4
        elif v in sk.inner_marks:
            edges += [(base, base + 1), (base, base + 2), (base + 1, base + 2)]
            ports[v] = [base + i for i in range(deg)]
            base += 3
        else:
            ports[v] = [base] * 3
            base += 1
    for u, v in t.edges():
        pu = ports[u].pop(0)
        pv = ports[v].pop(0)
        edges.append((pu, pv))
    return from_edges(base, edges)


# type -> smallest order (at k = 0)
_BASE_ORDER = {
    (0, 0, 0): 6,
    (1, 0, 0): 7,
    (2, 0, 0): 8,
    (0, 1, 0): 9,
    (0, 0, 1): 12,
    (0, 2, 0): 12,
    (0, 1, 1): 15,
    (0, 3, 0): 15,
}


def family_b_order(t, k: int) -> int:
    """Order of the type-t construction with k plain internal vertices."""
    key = tuple(t)
    if key not in _BASE_ORDER:
        raise ValueError(f"no order formula for type {key}")
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    return _BASE_ORDER[key] + 4 * k


def standard_skeleton(t, k: int) -> BSkeleton:
    """A canonical skeleton of type t with k plain degree-3 internal
    vertices: a caterpillar spine of plain vertices, diamonds and triangles
    on the leaves, degree-2 marked vertices subdividing the first edge, and
    (for i3 = 1) one degree-3 marked vertex joined to the spine."""
    key = tuple(t)
    if key not in _BASE_ORDER:
        raise ValueError(f"no standard skeleton for type {key}")
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    d, i2, i3 = key

    # spine of k plain degree-3 vertices plus i3 marked degree-3 vertices;
    # hang leaves to bring every spine vertex to degree 3
    spine_len = k + i3
    edges: list[tuple[int, int]] = []
    nxt = spine_len
    leaves: list[int] = []
    if spine_len == 0:
        edges.append((0, 1))
        leaves = [0, 1]
        nxt = 2
    else:
        edges += [(i, i + 1) for i in range(spine_len - 1)]
        for i in range(spine_len):
            spine_deg = sum(1 for e in edges if i in e)
            for _ in range(3 - spine_deg):
                edges.append((i, nxt))
                leaves.append(nxt)
                nxt += 1
    inner_marks = set(range(k, spine_len))  # the i3 marked spine vertices last

    # subdivide the first edge with a chain of i2 marked degree-2 vertices
    if i2:
        u, v = edges[0]
        chain = [nxt + i for i in range(i2)]
        nxt += i2
        edges[0:1] = (
            [(u, chain[0])]
            + [(chain[i], chain[i + 1]) for i in range(i2 - 1)]
            + [(chain[-1], v)]
        )
        inner_marks.update(chain)

    marks = {
        leaf: (DIAMOND_MARK if idx < d else TRIANGLE_MARK)
        for idx, leaf in enumerate(sorted(leaves))
    }
    tree = from_edges(nxt, edges)
    return BSkeleton(tree=tree, leaf_marks=marks, inner_marks=frozenset(inner_marks))


def skeleton_from_dict(data: Mapping) -> BSkeleton:
    """Build a BSkeleton from a parsed JSON document with keys
    edges, leaf_marks (vertex -> mark), inner_marks."""
    edges = [(int(u), int(v)) for u, v in data["edges"]]
    if not edges:
        raise ValueError("skeleton needs at least one edge")
    n = max(max(u, v) for u, v in edges) + 1
    tree = from_edges(n, edges)
    marks = {int(v): str(m) for v, m in dict(data.get("leaf_marks", {})).items()}
    inner = frozenset(int(v) for v in data.get("inner_marks", ()))
    return BSkeleton(tree=tree, leaf_marks=marks, inner_marks=inner)
