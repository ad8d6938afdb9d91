"""Independent brute-force oracles used by the tests."""

from __future__ import annotations

import itertools

import networkx as nx
from sympy.utilities.iterables import multiset_permutations

from graphsquare import Graph, from_edges, g6_decode, is_connected
from graphsquare.iso import canonical_form


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def prufer_tree(seq: tuple[int, ...], n: int) -> Graph:
    if n == 2:
        return from_edges(2, [(0, 1)])
    return from_edges(n, nx.from_prufer_sequence(list(seq)).edges())


def _partitions(total: int, largest: int):
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest


def trees_by_prufer(n: int) -> set[bytes]:
    """Canonical forms of all trees on ``n`` vertices, via Pruefer decoding.

    Every tree can be relabeled so that degree is non-increasing in the label,
    and a vertex's Pruefer multiplicity is its degree minus one. So it suffices
    to decode the words whose letter counts are non-increasing in the letter:
    all arrangements of ``0^c0 1^c1 ...`` for each partition ``c`` of ``n - 2``.
    """
    if n == 1:
        return {canonical_form(from_edges(1, []))}
    if n == 2:
        return {canonical_form(from_edges(2, [(0, 1)]))}
    out = set()
    for counts in _partitions(n - 2, n - 2):
        word = [letter for letter, c in enumerate(counts) for _ in range(c)]
        for seq in multiset_permutations(word):
            out.add(canonical_form(prufer_tree(tuple(seq), n)))
    return out


def trees_by_full_prufer(n: int) -> set[bytes]:
    """The unreduced oracle over all ``n ** (n - 2)`` sequences (small n only)."""
    if n <= 2:
        return trees_by_prufer(n)
    return {canonical_form(prufer_tree(seq, n)) for seq in itertools.product(range(n), repeat=n - 2)}


def unicyclic_by_tree_plus_edge(n: int) -> set[bytes]:
    out = set()
    for key in trees_by_prufer(n):
        t = g6_decode(key)
        for u, v in itertools.combinations(range(n), 2):
            if not t.has_edge(u, v):
                out.add(canonical_form(Graph(n, t.edges | {(u, v)})))
    return out


def connected_by_subsets(n: int) -> set[bytes]:
    pairs = list(itertools.combinations(range(n), 2))
    out = set()
    for mask in range(1 << len(pairs)):
        g = Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))
        if is_connected(g):
            out.add(canonical_form(g))
    return out


def brute_contains(g: Graph, h: Graph) -> bool:
    for image in itertools.permutations(range(g.n), h.n):
        if all(g.has_edge(image[a], image[b]) for a, b in h.edges):
            return True
    return False
