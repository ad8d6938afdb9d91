import io

import pytest

from graphsquare import GraphError, diameter, g6_decode, girth, is_connected
from graphsquare import families as fam
from graphsquare.enumeration import (
    all_connected,
    all_trees,
    all_trees_with_diameter,
    all_unicyclic,
    rooted_trees,
    write_g6_lines,
)
from graphsquare.iso import canonical_form

from oracles import connected_by_subsets, trees_by_prufer, unicyclic_by_tree_plus_edge

TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159]
UNICYCLIC_COUNTS = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33, 8: 89, 9: 240, 10: 657, 11: 1806, 12: 5026}
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853, 11117]
ROOTED_COUNTS = [1, 1, 2, 4, 9, 20, 48, 115, 286]


def keys(graphs):
    out = [canonical_form(g) for g in graphs]
    assert len(out) == len(set(out)), "duplicate isomorphism class"
    return set(out)


def test_rooted_counts():
    assert [len(rooted_trees(k)) for k in range(1, 10)] == ROOTED_COUNTS


class TestTrees:
    @pytest.mark.parametrize("n", range(1, 15))
    def test_counts(self, n):
        trees = list(all_trees(n))
        assert len(trees) == TREE_COUNTS[n - 1]
        assert all(t.m == n - 1 and is_connected(t) for t in trees)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_against_prufer(self, n):
        assert keys(all_trees(n)) == trees_by_prufer(n)

    def test_small_cases(self):
        assert keys(all_trees(4)) == {canonical_form(fam.path(4)), canonical_form(fam.star(4))}

    def test_deterministic(self):
        assert list(all_trees(9)) == list(all_trees(9))

    def test_cap(self):
        with pytest.raises(GraphError):
            all_trees(15)


class TestDiameter:
    @pytest.mark.parametrize("n", range(3, 12))
    def test_extremes(self, n):
        assert keys(all_trees_with_diameter(n, n - 1)) == {canonical_form(fam.path(n))}
        assert keys(all_trees_with_diameter(n, 2)) == {canonical_form(fam.star(n))}

    def test_six_three(self):
        assert len(list(all_trees_with_diameter(6, 3))) == 2

    @pytest.mark.parametrize("n", range(3, 13))
    def test_partition(self, n):
        assert sum(len(list(all_trees_with_diameter(n, d))) for d in range(2, n)) == TREE_COUNTS[n - 1]

    def test_filter_correct(self):
        for t in all_trees_with_diameter(10, 5):
            assert diameter(t) == 5

    def test_bad_diameter(self):
        with pytest.raises(GraphError):
            all_trees_with_diameter(6, 6)


class TestUnicyclic:
    @pytest.mark.parametrize("n", range(3, 13))
    def test_counts(self, n):
        graphs = list(all_unicyclic(n))
        assert len(graphs) == UNICYCLIC_COUNTS[n]
        assert all(g.m == n and is_connected(g) for g in graphs)

    @pytest.mark.parametrize("n", range(3, 8))
    def test_against_tree_plus_edge(self, n):
        assert keys(all_unicyclic(n)) == unicyclic_by_tree_plus_edge(n)

    def test_four(self):
        assert keys(all_unicyclic(4)) == {canonical_form(fam.cycle(4)), canonical_form(fam.star_plus(4))}

    def test_girth_n(self):
        assert keys(all_unicyclic(6, 6)) == {canonical_form(fam.cycle(6))}

    @pytest.mark.parametrize("n", range(3, 12))
    def test_partition_and_girth(self, n):
        total = 0
        for g in range(3, n + 1):
            members = list(all_unicyclic(n, g))
            assert all(girth(u) == g for u in members)
            total += len(members)
        assert total == UNICYCLIC_COUNTS[n]

    def test_bad_girth(self):
        with pytest.raises(GraphError):
            all_unicyclic(6, 2)

    def test_cap(self):
        with pytest.raises(GraphError):
            all_unicyclic(13)


class TestConnected:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_counts(self, n):
        graphs = list(all_connected(n))
        assert len(graphs) == CONNECTED_COUNTS[n - 1]
        assert all(is_connected(g) for g in graphs)

    @pytest.mark.slow
    def test_count_eight(self):
        assert len(keys(all_connected(8))) == CONNECTED_COUNTS[7]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_against_subsets(self, n):
        assert keys(all_connected(n)) == connected_by_subsets(n)

    def test_three(self):
        assert keys(all_connected(3)) == {canonical_form(fam.path(3)), canonical_form(fam.complete(3))}

    def test_sorted_by_edges(self):
        ms = [g.m for g in all_connected(6)]
        assert ms == sorted(ms)

    def test_cap(self):
        with pytest.raises(GraphError):
            all_connected(10)


def test_write_g6_lines():
    buf = io.StringIO()
    assert write_g6_lines(all_trees(6), buf) == 6
    lines = buf.getvalue().splitlines()
    assert [g6_decode(s) for s in lines] == list(all_trees(6))


@pytest.mark.parametrize("n", range(1, 8))
def test_reduced_prufer_oracle_matches_full(n):
    from oracles import trees_by_full_prufer

    assert trees_by_prufer(n) == trees_by_full_prufer(n)
