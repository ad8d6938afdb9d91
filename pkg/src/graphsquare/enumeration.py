"""Isomorphism-class enumeration of trees, unicyclic graphs and connected graphs.

Trees come from rooted trees hung at a centroid (one centroid, or two adjacent
ones joined by an edge), so no deduplication is needed. Unicyclic graphs are
cycles decorated with rooted trees, emitted only when the decoration word is the
least in its dihedral orbit. Connected graphs are grown one vertex at a time and
deduplicated by :func:`~graphsquare.iso.canonical_form`.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, GraphError, diameter, from_edges
from .iso import canonical_pair

__all__ = [
    "TREE_MAX_ORDER",
    "UNICYCLIC_MAX_ORDER",
    "CONNECTED_MAX_ORDER",
    "rooted_trees",
    "all_trees",
    "all_unicyclic",
    "all_trees_with_diameter",
    "all_connected",
    "write_g6_lines",
]

TREE_MAX_ORDER = 14
UNICYCLIC_MAX_ORDER = 12
CONNECTED_MAX_ORDER = 9

# A rooted tree is identified by (size, index into rooted_trees(size)); its
# structure is the non-increasing tuple of its children's identifiers.
RootedId = tuple[int, int]


@lru_cache(maxsize=None)
def rooted_trees(k: int) -> tuple[tuple[RootedId, ...], ...]:
    """All rooted trees on ``k`` vertices, each as a sorted tuple of child ids."""
    if k < 1:
        return ()
    return tuple(_forests(k - 1, (k - 1, len(rooted_trees(k - 1)) - 1) if k > 1 else (0, 0)))


def _forests(total: int, bound: RootedId):
    """Non-increasing tuples of rooted ids with sizes summing to ``total``, each <= bound."""
    if total == 0:
        yield ()
        return
    for size in range(min(total, bound[0]), 0, -1):
        top = bound[1] if size == bound[0] else len(rooted_trees(size)) - 1
        for idx in range(top, -1, -1):
            for rest in _forests(total - size, (size, idx)):
                yield ((size, idx),) + rest


def _forests_capped(total: int, max_size: int):
    if max_size < 1:
        if total == 0:
            yield ()
        return
    yield from _forests(total, (max_size, len(rooted_trees(max_size)) - 1))


def _attach(rid: RootedId, root: int, next_label: int, edges: list) -> int:
    """Lay out rooted tree ``rid`` below ``root``; returns the next free label."""
    for child in rooted_trees(rid[0])[rid[1]]:
        c = next_label
        edges.append((root, c))
        next_label = _attach(child, c, next_label + 1, edges)
    return next_label


def _check_cap(n: int, lo: int, hi: int, what: str) -> None:
    if not lo <= n <= hi:
        raise GraphError(f"{what} enumeration supports {lo} <= n <= {hi}, got {n}")


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    out = []
    # one centroid: every branch has fewer than n/2 vertices
    for children in _forests_capped(n - 1, (n - 1) // 2):
        edges: list = []
        nxt = 1
        for child in children:
            edges.append((0, nxt))
            nxt = _attach(child, nxt, nxt + 1, edges)
        out.append(from_edges(n, edges))
    # two centroids joined by an edge, each side with n/2 vertices
    if n % 2 == 0:
        half = n // 2
        count = len(rooted_trees(half))
        for a in range(count):
            for b in range(a, count):
                edges = []
                nxt = _attach((half, a), 0, 1, edges)
                edges.append((0, nxt))
                _attach((half, b), nxt, nxt + 1, edges)
                out.append(from_edges(n, edges))
    return tuple(out)


def all_trees(n: int) -> Iterator[Graph]:
    _check_cap(n, 1, TREE_MAX_ORDER, "tree")
    return iter(_trees(n))


def _dihedral_min(word: tuple) -> bool:
    g = len(word)
    rev = word[::-1]
    for s in range(g):
        if word[s:] + word[:s] < word or rev[s:] + rev[:s] < word:
            return False
    return True


@lru_cache(maxsize=None)
def _unicyclic(n: int, g: int) -> tuple[Graph, ...]:
    ids = [(size, idx) for size in range(1, n - g + 2) for idx in range(len(rooted_trees(size)))]
    out = []

    def words(prefix: list, remaining_vertices: int, remaining_slots: int):
        if remaining_slots == 0:
            if remaining_vertices == 0:
                yield tuple(prefix)
            return
        for rid in ids:
            if prefix and rid < prefix[0]:
                continue
            # leave at least one vertex for every later slot
            if rid[0] > remaining_vertices - (remaining_slots - 1):
                break
            prefix.append(rid)
            yield from words(prefix, remaining_vertices - rid[0], remaining_slots - 1)
            prefix.pop()

    for word in words([], n, g):
        if not _dihedral_min(word):
            continue
        edges = [(i, (i + 1) % g) for i in range(g)]
        nxt = g
        for pos, rid in enumerate(word):
            nxt = _attach(rid, pos, nxt, edges)
        out.append(from_edges(n, edges))
    return tuple(out)


def all_unicyclic(n: int, girth_filter: int | None = None) -> Iterator[Graph]:
    _check_cap(n, 3, UNICYCLIC_MAX_ORDER, "unicyclic")
    if girth_filter is not None:
        if not 3 <= girth_filter <= n:
            raise GraphError(f"girth filter must satisfy 3 <= g <= n, got g={girth_filter}, n={n}")
        return iter(_unicyclic(n, girth_filter))
    return (u for g in range(3, n + 1) for u in _unicyclic(n, g))


def all_trees_with_diameter(n: int, d: int) -> Iterator[Graph]:
    _check_cap(n, 1, TREE_MAX_ORDER, "tree")
    if not 2 <= d <= n - 1:
        raise GraphError(f"diameter must satisfy 2 <= d <= n-1, got d={d}, n={n}")
    return (t for t in _trees(n) if diameter(t) == d)


def _subset_orbit_reps(k: int, gens: list[tuple[int, ...]]) -> Iterator[int]:
    """One nonempty subset of ``range(k)`` (as a bitmask) per orbit of ``<gens>``."""
    done = bytearray(1 << k)
    for s in range(1, 1 << k):
        if done[s]:
            continue
        yield s
        stack = [s]
        done[s] = 1
        while stack:
            x = stack.pop()
            for gen in gens:
                y = 0
                for v in range(k):
                    if x >> v & 1:
                        y |= 1 << gen[v]
                if not done[y]:
                    done[y] = 1
                    stack.append(y)


@lru_cache(maxsize=None)
def _connected_with_groups(n: int) -> tuple[tuple[Graph, tuple], ...]:
    if n == 1:
        return ((from_edges(1, []), ()),)
    seen: dict[bytes, tuple[Graph, tuple]] = {}
    for parent, gens in _connected_with_groups(n - 1):
        base = list(parent.edges)
        for subset in _subset_orbit_reps(n - 1, list(gens)):
            edges = base + [(v, n - 1) for v in range(n - 1) if subset >> v & 1]
            key, cg, child_gens = canonical_pair(Graph(n, frozenset(edges)))
            if key not in seen:
                seen[key] = (cg, tuple(child_gens))
    return tuple(seen[k] for k in sorted(seen, key=lambda k: (seen[k][0].m, k)))


def _connected(n: int) -> tuple[Graph, ...]:
    return tuple(g for g, _ in _connected_with_groups(n))


def all_connected(n: int) -> Iterator[Graph]:
    _check_cap(n, 1, CONNECTED_MAX_ORDER, "connected")
    return iter(_connected(n))


def write_g6_lines(graphs, stream) -> int:
    from .graph import g6_encode

    count = 0
    for g in graphs:
        stream.write(g6_encode(g).decode("ascii") + "\n")
        count += 1
    return count
