"""Canonical labeling, subgraph containment and minimal forbidden subgraph search."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

from .graph import Graph, GraphError, g6_encode, relabel, square

__all__ = [
    "CANON_MAX_ORDER",
    "canonical_labeling",
    "canonical_form",
    "canonical_graph",
    "canonical_pair",
    "automorphism_generators",
    "is_isomorphic",
    "contains_subgraph",
    "minimal_forbidden",
]

CANON_MAX_ORDER = 16


# ---------------------------------------------------------------------------
# partition refinement
# ---------------------------------------------------------------------------

def _initial_cells(g: Graph) -> list[list[int]]:
    """Cells keyed by distance profile: vertex counts at each distance, unreachable last."""
    adj = g.adj
    keys = {}
    for v in range(g.n):
        seen = frontier = 1 << v
        profile = []
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~seen
            seen |= frontier
            profile.append(frontier.bit_count())
        profile.append(g.n - seen.bit_count())
        keys[v] = tuple(profile)
    return _group(range(g.n), keys)


def _group(vertices, keys) -> list[list[int]]:
    buckets: dict = {}
    for v in vertices:
        buckets.setdefault(keys[v], []).append(v)
    return [buckets[k] for k in sorted(buckets)]


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; cell order depends only on the labeled structure."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in cell}
            out.extend(_group(cell, sig))
        if len(out) == len(cells):
            return out
        cells = out


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.adj = g.adj
        self.best_cert = None
        self.best_lab = None
        self.generators: list[tuple[int, ...]] = []
        n = g.n
        self.twins = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if self.adj[u] & ~(1 << v) == self.adj[v] & ~(1 << u)
        ]

    def certificate(self, lab: list[int]) -> tuple[int, ...]:
        pos = [0] * len(lab)
        for p, v in enumerate(lab):
            pos[v] = p
        rows = []
        for v in lab:
            row = 0
            nb = self.adj[v]
            while nb:
                low = nb & -nb
                row |= 1 << pos[low.bit_length() - 1]
                nb ^= low
            rows.append(row)
        return tuple(rows)

    def classes(self, fixed: set[int]) -> list[int]:
        parent = list(range(self.g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

        for u, v in self.twins:
            if u not in fixed and v not in fixed:
                union(u, v)
        for gen in self.generators:
            if all(gen[x] == x for x in fixed):
                for x, y in enumerate(gen):
                    union(x, y)
        return [find(x) for x in range(self.g.n)]

    def run(self, cells: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(self.adj, cells)
        target_idx = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target_idx is None:
            lab = [c[0] for c in cells]
            cert = self.certificate(lab)
            if self.best_cert is None or cert < self.best_cert:
                self.best_cert, self.best_lab = cert, lab
            elif cert == self.best_cert:
                gen = [0] * self.g.n
                for a, b in zip(self.best_lab, lab):
                    gen[a] = b
                gen = tuple(gen)
                if any(gen[x] != x for x in range(self.g.n)) and gen not in self.generators:
                    self.generators.append(gen)
            return
        target = cells[target_idx]
        fixed = set(prefix)
        explored: list[int] = []
        for v in sorted(target):
            if explored:
                cls = self.classes(fixed)
                if cls[v] in {cls[u] for u in explored}:
                    continue
            rest = [u for u in target if u != v]
            child = cells[:target_idx] + [[v], rest] + cells[target_idx + 1:]
            self.run(child, prefix + [v])
            explored.append(v)


def _search(g: Graph) -> _Search:
    if g.n > CANON_MAX_ORDER:
        raise GraphError(f"canonical labeling is capped at order {CANON_MAX_ORDER}, got {g.n}")
    s = _Search(g)
    s.run(_initial_cells(g), [])
    return s


def canonical_labeling(g: Graph) -> list[int]:
    """``lab[p]`` is the vertex placed at canonical position ``p``."""
    return _search(g).best_lab


def _apply_labeling(g: Graph, lab: list[int]) -> Graph:
    perm = [0] * g.n
    for p, v in enumerate(lab):
        perm[v] = p
    return relabel(g, perm)


def canonical_graph(g: Graph) -> Graph:
    return _apply_labeling(g, canonical_labeling(g))


def canonical_form(g: Graph) -> bytes:
    """graph6 bytes of the canonically relabeled graph; equal iff isomorphic."""
    return g6_encode(canonical_graph(g))


def canonical_pair(g: Graph) -> tuple[bytes, Graph, list[tuple[int, ...]]]:
    """Canonical bytes, canonical graph, and automorphism generators of the canonical graph."""
    s = _search(g)
    lab = s.best_lab
    cg = _apply_labeling(g, lab)
    pos = [0] * g.n
    for p, v in enumerate(lab):
        pos[v] = p
    gens = [tuple(pos[gen[lab[p]]] for p in range(g.n)) for gen in s.generators]
    for u, v in s.twins:
        t = list(range(g.n))
        t[pos[u]], t[pos[v]] = pos[v], pos[u]
        gens.append(tuple(t))
    return g6_encode(cg), cg, gens


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    """A generating set of the automorphism group (twin transpositions included)."""
    s = _search(g)
    gens = list(s.generators)
    for u, v in s.twins:
        t = list(range(g.n))
        t[u], t[v] = v, u
        gens.append(tuple(t))
    return gens


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# subgraph containment
# ---------------------------------------------------------------------------

def _match_order(h: Graph) -> list[int]:
    order: list[int] = []
    seen = [False] * h.n
    for root in sorted(range(h.n), key=lambda v: -h.degrees[v]):
        if seen[root]:
            continue
        seen[root] = True
        frontier = [root]
        while frontier:
            v = frontier.pop(0)
            order.append(v)
            for u in sorted(h.neighbors[v], key=lambda u: -h.degrees[u]):
                if not seen[u]:
                    seen[u] = True
                    frontier.append(u)
    return order


def contains_subgraph(g: Graph, h: Graph) -> bool:
    """True iff ``h`` embeds in ``g`` as a (not necessarily induced) subgraph."""
    if h.n > g.n or h.m > g.m:
        return False
    hs, gs = sorted(h.degrees, reverse=True), sorted(g.degrees, reverse=True)
    if any(a > b for a, b in zip(hs, gs)):
        return False
    order = _match_order(h)
    rank = {v: i for i, v in enumerate(order)}
    placed = {}
    earlier = [[u for u in h.neighbors[v] if rank[u] < i] for i, v in enumerate(order)]
    gadj, gdeg, hdeg = g.adj, g.degrees, h.degrees
    full = (1 << g.n) - 1

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        cand = full & ~used
        for u in earlier[i]:
            cand &= gadj[placed[u]]
        while cand:
            low = cand & -cand
            cand ^= low
            c = low.bit_length() - 1
            if gdeg[c] < hdeg[v]:
                continue
            placed[v] = c
            if extend(i + 1, used | low):
                return True
            del placed[v]
        return False

    return extend(0, 0)


# ---------------------------------------------------------------------------
# minimal forbidden subgraphs
# ---------------------------------------------------------------------------

def _exceeds(g: Graph, threshold: Fraction, strict: bool, float_margin: float = 1e-8) -> bool:
    from .spectral import EXACT_MAX_ORDER, compare_radius, spectral_radius

    sq = square(g)
    if g.n <= EXACT_MAX_ORDER:
        c = compare_radius(sq, threshold)
    else:
        gap = spectral_radius(sq).radius - float(threshold)
        if abs(gap) <= float_margin:
            raise ArithmeticError(
                f"cannot certify rho vs {threshold} for order {g.n} beyond the exact cap"
            )
        c = 1 if gap > 0 else -1
    return c > 0 if strict else c >= 0


def _delete_vertex(g: Graph, v: int) -> Graph:
    keep = [u for u in range(g.n) if u != v]
    idx = {u: i for i, u in enumerate(keep)}
    return Graph(g.n - 1, frozenset((idx[a], idx[b]) for a, b in g.edges if v not in (a, b)))


def _class_stream(cls: str, n: int) -> Iterator[Graph]:
    from . import enumeration

    if cls == "tree":
        return enumeration.all_trees(n)
    if cls == "unicyclic":
        return enumeration.all_unicyclic(n)
    raise GraphError(f"unknown class {cls!r}; expected 'tree' or 'unicyclic'")


def minimal_forbidden(
    cls: str,
    threshold: Fraction | int | str = 4,
    n_max: int = 10,
    mode: str = "strict",
) -> list[Graph]:
    """Minimal members of ``{G in cls : rho(G^2) > threshold}`` (``>=`` in ``proper`` mode).

    Minimality is taken within the class, so a candidate is kept iff no member of
    the class obtained by deleting one of its leaves also exceeds the threshold;
    every proper in-class subgraph lies inside such a one-leaf deletion, so this
    matches minimality under :func:`contains_subgraph`. Exceeding is certified by
    :func:`~graphsquare.spectral.compare_radius` up to order 12.
    """
    if mode not in ("strict", "proper"):
        raise GraphError(f"mode must be 'strict' or 'proper', got {mode!r}")
    threshold = Fraction(str(threshold)) if isinstance(threshold, float) else Fraction(threshold)
    if threshold <= 0:
        raise GraphError("threshold must be positive")
    strict = mode == "strict"
    n_min = 1 if cls == "tree" else 3
    exceeding: dict[int, set[bytes]] = {}
    found: list[Graph] = []
    for n in range(n_min, n_max + 1):
        exceeding[n] = set()
        for g in _class_stream(cls, n):
            if not _exceeds(g, threshold, strict):
                continue
            exceeding[n].add(canonical_form(g))
            smaller = exceeding.get(n - 1, set())
            minimal = True
            for v in range(g.n):
                if g.degrees[v] == 1 and canonical_form(_delete_vertex(g, v)) in smaller:
                    minimal = False
                    break
            if minimal:
                found.append(canonical_graph(g))
    return found
