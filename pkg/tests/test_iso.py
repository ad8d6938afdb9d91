import itertools
import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphsquare import Graph, GraphError, from_edges, girth, square
from graphsquare import families as fam
from graphsquare.enumeration import all_connected, all_trees, all_unicyclic
from graphsquare.graph import ACYCLIC, relabel
from graphsquare.iso import (
    automorphism_generators,
    canonical_form,
    canonical_labeling,
    contains_subgraph,
    is_isomorphic,
    minimal_forbidden,
)
from graphsquare.spectral import compare_radius
from graphsquare.verify import random_tree

from oracles import brute_contains, to_nx
from test_graph import graphs


class TestCanonical:
    def test_reversed_path(self):
        assert canonical_form(fam.path(4)) == canonical_form(relabel(fam.path(4), [3, 2, 1, 0]))

    def test_distinguishes(self):
        assert canonical_form(fam.cycle(4)) != canonical_form(fam.path(4))

    def test_random_tree_relabelings(self):
        rng = random.Random(7)
        t = random_tree(10, np.random.default_rng(3))
        key = canonical_form(t)
        for _ in range(100):
            perm = list(range(10))
            rng.shuffle(perm)
            assert canonical_form(relabel(t, perm)) == key

    @given(graphs(11), st.randoms(use_true_random=False))
    @settings(max_examples=200, deadline=None)
    def test_permutation_invariance(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert canonical_form(relabel(g, perm)) == canonical_form(g)

    def test_invariance_over_enumeration(self):
        rng = random.Random(11)
        for g in list(all_connected(6))[::7] + list(all_unicyclic(9))[::13]:
            key = canonical_form(g)
            for _ in range(100):
                perm = list(range(g.n))
                rng.shuffle(perm)
                assert canonical_form(relabel(g, perm)) == key

    def test_hard_regular_graphs(self):
        # vertex-transitive and strongly regular inputs stress the search
        petersen = nx.petersen_graph()
        p = from_edges(10, petersen.edges())
        key = canonical_form(p)
        rng = random.Random(2)
        for _ in range(20):
            perm = list(range(10))
            rng.shuffle(perm)
            assert canonical_form(relabel(p, perm)) == key
        c = from_edges(16, [(i, (i + 1) % 16) for i in range(16)] + [(i, (i + 5) % 16) for i in range(16)])
        d = from_edges(16, [(i, (i + 1) % 16) for i in range(16)] + [(i, (i + 3) % 16) for i in range(16)])
        assert is_isomorphic(c, relabel(c, list(reversed(range(16)))))
        assert is_isomorphic(c, d) == nx.is_isomorphic(to_nx(c), to_nx(d))

    @given(graphs(8), graphs(8))
    @settings(max_examples=200, deadline=None)
    def test_matches_networkx(self, g, h):
        if g.n == h.n:
            assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))

    def test_labeling_is_permutation(self):
        lab = canonical_labeling(fam.broom(9, 5, 3))
        assert sorted(lab) == list(range(9))

    def test_order_cap(self):
        with pytest.raises(GraphError):
            canonical_form(fam.path(17))

    def test_automorphisms_valid(self):
        for g in list(all_connected(6))[::5]:
            for gen in automorphism_generators(g):
                assert relabel(g, list(gen)) == g

    def test_automorphism_group_order(self):
        # the generators must generate the full group for a few small cases
        for g, order in [(fam.cycle(6), 12), (fam.star(5), 24), (fam.path(5), 2), (fam.complete(4), 24)]:
            gens = automorphism_generators(g)
            group = {tuple(range(g.n))}
            frontier = list(group)
            while frontier:
                p = frontier.pop()
                for s in gens:
                    q = tuple(s[p[i]] for i in range(g.n))
                    if q not in group:
                        group.add(q)
                        frontier.append(q)
            assert len(group) == order


class TestContains:
    def test_examples(self):
        assert contains_subgraph(fam.complete(4), fam.cycle(3))
        assert not contains_subgraph(fam.path(5), fam.star(4))
        assert not contains_subgraph(fam.tadpole(6), fam.star(5))
        assert contains_subgraph(fam.cycle_star(6, 3), fam.star(5))

    def test_against_brute_force(self):
        small = [g for n in range(1, 6) for g in all_connected(n)]
        rng = random.Random(5)
        hosts = list(all_connected(6))
        for g in rng.sample(hosts, 25):
            for h in small:
                assert contains_subgraph(g, h) == brute_contains(g, h)

    def test_reflexive_and_transitive(self):
        suite = [g for n in range(1, 6) for g in all_connected(n)] + list(all_trees(7)) + list(all_unicyclic(7))
        for g in suite:
            assert contains_subgraph(g, g)
        contained = {
            (i, j)
            for i, g in enumerate(suite)
            for j, h in enumerate(suite)
            if contains_subgraph(g, h)
        }
        for (i, j) in contained:
            for k in range(len(suite)):
                if (j, k) in contained:
                    assert (i, k) in contained


class TestMinimalForbidden:
    def test_trees_strict(self):
        found = minimal_forbidden("tree", 4, 10)
        keys = {canonical_form(t) for t in found}
        assert canonical_form(fam.star(5)) not in keys
        assert canonical_form(fam.star(6)) in keys
        for t in found:
            assert compare_radius(square(t), 4) == 1
            for v in range(t.n):
                if t.degrees[v] == 1:
                    rest = [u for u in range(t.n) if u != v]
                    idx = {u: i for i, u in enumerate(rest)}
                    smaller = Graph(t.n - 1, frozenset((idx[a], idx[b]) for a, b in t.edges if v not in (a, b)))
                    assert compare_radius(square(smaller), 4) <= 0

    def test_trees_proper_includes_s5(self):
        keys = {canonical_form(t) for t in minimal_forbidden("tree", 4, 8, mode="proper")}
        assert canonical_form(fam.star(5)) in keys

    def test_antichain(self):
        for cls, n_max in (("tree", 10), ("unicyclic", 8)):
            found = minimal_forbidden(cls, 4, n_max)
            for a, b in itertools.permutations(found, 2):
                assert not contains_subgraph(a, b)

    def test_unicyclic(self):
        found = minimal_forbidden("unicyclic", 4, 8)
        assert found
        girths = {girth(u) for u in found}
        assert ACYCLIC not in girths
        # C_g with one pendant is minimal whenever g >= 5: C_g itself sits at exactly 4
        for g in range(5, 8):
            key = canonical_form(fam.cycle_star(g + 1, g))
            assert key in {canonical_form(u) for u in found}

    def test_bad_mode(self):
        with pytest.raises(GraphError):
            minimal_forbidden("tree", 4, 6, mode="weird")

    def test_bad_class(self):
        with pytest.raises(GraphError):
            minimal_forbidden("forest", 4, 6)
