"""Isomorph-free enumeration against published counts and brute force."""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccmax import (
    CapabilityError,
    DegreeConstraint,
    canonical_form,
    count,
    enumerate_graphs,
    from_edges,
    is_connected,
    to_graph6,
)

# sequence A000088 resp. A002851-style counts, checked against standard tables
ALL_GRAPHS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_CUBIC = {4: 1, 6: 2, 8: 5}


def brute_count(n, constraint):
    """Count isomorphism classes by canonicalizing all 2^C(n,2) graphs."""
    pairs = list(combinations(range(n), 2))
    seen = set()
    for bits in range(1 << len(pairs)):
        g = from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
        if constraint.satisfied_by(g):
            seen.add(canonical_form(g))
    return len(seen)


class TestCounts:
    @pytest.mark.parametrize("n,expected", sorted(ALL_GRAPHS.items()))
    def test_all_graphs(self, n, expected):
        assert count(n, DegreeConstraint.any_degree()) == expected

    @pytest.mark.parametrize("n,expected", sorted(CONNECTED_CUBIC.items()))
    def test_connected_cubic(self, n, expected):
        assert count(n, DegreeConstraint.regular(3, connected=True)) == expected

    def test_connected_counts(self):
        # connected graphs on 1..6 vertices: 1, 1, 2, 6, 21, 112
        want = [1, 1, 2, 6, 21, 112]
        got = [count(n, DegreeConstraint.any_degree(connected=True)) for n in range(1, 7)]
        assert got == want

    def test_subcubic_connected(self):
        assert count(6, DegreeConstraint.max_degree(3, connected=True)) == 29
        assert count(7, DegreeConstraint.max_degree(3, connected=True)) == 64


class TestAgainstBruteForce:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_all_modes_small(self, n):
        for c in [
            DegreeConstraint.any_degree(),
            DegreeConstraint.any_degree(connected=True),
            DegreeConstraint.max_degree(2),
            DegreeConstraint.max_degree(3, connected=True),
            DegreeConstraint.regular(2, connected=True),
        ]:
            assert count(n, c) == brute_count(n, c)

    def test_cross_mode_filter(self):
        # filtering the unconstrained list must reproduce every other mode
        n = 6
        everything = enumerate_graphs(n, DegreeConstraint.any_degree())
        for c in [
            DegreeConstraint.any_degree(connected=True),
            DegreeConstraint.max_degree(3),
            DegreeConstraint.max_degree(3, connected=True),
            DegreeConstraint.regular(3, connected=True),
        ]:
            want = sorted(
                to_graph6(g) for g in everything if c.satisfied_by(g)
            )
            got = [to_graph6(g) for g in enumerate_graphs(n, c)]
            assert got == want


class TestOutputProperties:
    def test_sorted_and_distinct(self):
        out = [to_graph6(g) for g in enumerate_graphs(6, DegreeConstraint.any_degree())]
        assert out == sorted(out) and len(out) == len(set(out))

    def test_all_canonical(self):
        for g in enumerate_graphs(5, DegreeConstraint.any_degree()):
            assert canonical_form(g).g6 == to_graph6(g)

    def test_constraints_hold(self):
        c = DegreeConstraint.max_degree(3, connected=True)
        for g in enumerate_graphs(7, c):
            assert max(g.degree(u) for u in range(g.n)) <= 3
            assert is_connected(g)

    def test_regular_constraints_hold(self):
        for g in enumerate_graphs(8, DegreeConstraint.regular(3, connected=True)):
            assert all(g.degree(u) == 3 for u in range(8))
            assert is_connected(g)

    def test_workers_deterministic(self):
        c = DegreeConstraint.max_degree(3, connected=True)
        seq = [to_graph6(g) for g in enumerate_graphs(7, c, workers=1)]
        par = [to_graph6(g) for g in enumerate_graphs(7, c, workers=3)]
        assert seq == par

    @settings(max_examples=20, deadline=None)
    @given(st.integers(1, 6), st.booleans())
    def test_count_matches_len(self, n, connected):
        c = DegreeConstraint.any_degree(connected=connected)
        assert count(n, c) == len(enumerate_graphs(n, c))


class TestCapabilityLimits:
    def test_any_mode_limit(self):
        with pytest.raises(CapabilityError):
            enumerate_graphs(9, DegreeConstraint.any_degree())

    def test_subcubic_limit(self):
        with pytest.raises(CapabilityError):
            enumerate_graphs(13, DegreeConstraint.max_degree(3, connected=True))

    def test_max_degree_4_limit(self):
        with pytest.raises(CapabilityError):
            enumerate_graphs(9, DegreeConstraint.max_degree(4))

    def test_cubic_limit(self):
        with pytest.raises(CapabilityError):
            enumerate_graphs(13, DegreeConstraint.regular(3, connected=True))

    def test_4_regular_limit(self):
        with pytest.raises(CapabilityError):
            enumerate_graphs(11, DegreeConstraint.regular(4, connected=True))

    def test_within_limits_ok(self):
        assert count(8, DegreeConstraint.any_degree()) > 0
        assert count(12, DegreeConstraint.regular(3, connected=True)) == 85


class TestValidation:
    def test_bad_n(self):
        with pytest.raises(ValueError):
            enumerate_graphs(0, DegreeConstraint.any_degree())

    def test_bad_constraint_params(self):
        with pytest.raises(ValueError):
            DegreeConstraint.max_degree(-1)
        with pytest.raises(ValueError):
            DegreeConstraint.regular(-1)
        with pytest.raises(ValueError):
            DegreeConstraint("weird")
        with pytest.raises(ValueError):
            DegreeConstraint("any", bound=3)

    def test_bad_workers(self):
        with pytest.raises(ValueError):
            enumerate_graphs(5, DegreeConstraint.any_degree(), workers=0)

    def test_satisfied_by(self):
        c = DegreeConstraint.regular(3, connected=True)
        assert c.satisfied_by(from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))
        assert not c.satisfied_by(from_edges(4, [(0, 1), (1, 2), (2, 3)]))
