"""Exact clustering coefficients and the closed-form maximality bounds.

All quantities are exact rationals (fractions.Fraction); floats never enter
the arithmetic. The global coefficient is the mean of the local ones
(vertices of degree below 2 contribute 0), not the transitivity ratio.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable

from .graphs import Graph, triangles_at

Rational = Fraction


def local_cc(g: Graph, u: int) -> Fraction:
    """Local clustering coefficient of u; 0 when deg(u) < 2."""
    d = g.degree(u)
    if d < 2:
        return Fraction(0)
    return Fraction(triangles_at(g, u), d * (d - 1) // 2)


def cc_sum(g: Graph, vertices: Iterable[int]) -> Fraction:
    """sigma(U): sum of local clustering coefficients over a vertex set."""
    return sum((local_cc(g, u) for u in vertices), Fraction(0))


def graph_cc(g: Graph) -> Fraction:
    """Global clustering coefficient: the mean of all local coefficients."""
    if g.n == 0:
        raise ValueError("clustering coefficient of the empty graph is undefined")
    return cc_sum(g, range(g.n)) / g.n


def edge_add_delta(g: Graph, u: int, v: int) -> Fraction:
    """C(G + uv) - C(G) for a non-adjacent pair u, v.

    Only u, v, and their common neighbors change local value, so the sum of
    local changes is computed over those vertices alone and divided by n.
    """
    if u == v:
        raise ValueError(f"cannot add a loop at vertex {u}")
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) already present")
    h = g.with_edge(u, v)
    affected = [u, v]
    common = g.mask(u) & g.mask(v)
    while common:
        low = common & -common
        affected.append(low.bit_length() - 1)
        common ^= low
    change = sum((local_cc(h, w) - local_cc(g, w) for w in affected), Fraction(0))
    return change / g.n


# -- closed-form bounds -------------------------------------------------------


def theorem1_bound(k: int) -> Fraction:
    """Max clustering coefficient of a connected k-regular graph, k >= 3."""
    if k < 3:
        raise ValueError(f"bound requires k >= 3, got {k}")
    return 1 - Fraction(6, k * (k + 1))


_T2_C = {0: 12, 1: 13, 2: 14, 3: 11}


def theorem2_bound(n: int) -> Fraction:
    """Max clustering coefficient of a connected subcubic graph of order n >= 6."""
    if n < 6:
        raise ValueError(f"bound requires n >= 6, got {n}")
    return Fraction(7, 12) + Fraction(_T2_C[n % 4], 12 * n)


def theorem4_bound(n: int) -> Fraction:
    """Max increase of C from one edge addition on a graph of order n >= 3."""
    if n < 3:
        raise ValueError(f"bound requires n >= 3, got {n}")
    return 1 - Fraction(2, n) + Fraction(4, n * (n - 1))


# type -> (numerator constant c in C = (7n + c)/(12n), smallest legal order);
# legal orders step by 4 (one extra plain degree-3 inner vertex per step).
_FAMILY_B_SHAPE = {
    (0, 0, 0): (14, 6),
    (1, 0, 0): (11, 7),
    (2, 0, 0): (8, 8),
    (0, 1, 0): (13, 9),
    (0, 0, 1): (12, 12),
    (0, 2, 0): (12, 12),
    (0, 1, 1): (11, 15),
    (0, 3, 0): (11, 15),
}


def family_b_cc(t, n: int) -> Fraction:
    """Closed-form C of the type-t extremal construction of order n.

    t is a (d, i2, i3) triple (or anything tuple-like, e.g. a GraphType).
    Orders inconsistent with the type's order formula are rejected.
    """
    key = tuple(t)
    if key not in _FAMILY_B_SHAPE:
        raise ValueError(f"no closed form for type {key}")
    c, base = _FAMILY_B_SHAPE[key]
    if n < base or (n - base) % 4 != 0:
        raise ValueError(f"order {n} impossible for type {key}: need {base} + 4k")
    return Fraction(7 * n + c, 12 * n)


def decimal_str(q: Fraction, digits: int = 20) -> str:
    """Render a fraction as a decimal string with `digits` significant digits
    (round-half-even). Presentation only; exact values stay fractions."""
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(q.numerator) / Decimal(q.denominator)
    return str(d)
