"""Simple undirected graphs on vertices 0..n-1, metrics, powers, surgery, graph6."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Sentinel",
    "UNREACHABLE",
    "ACYCLIC",
    "GraphError",
    "Graph",
    "DistanceMatrix",
    "from_edges",
    "distances",
    "power",
    "square",
    "diameter",
    "girth",
    "is_connected",
    "coalesce",
    "relocate_branch",
    "degree_stats",
    "relabel",
    "g6_encode",
    "g6_decode",
]


class Sentinel(enum.Enum):
    UNREACHABLE = "unreachable"
    ACYCLIC = "acyclic"

    def __repr__(self) -> str:
        return self.name


UNREACHABLE = Sentinel.UNREACHABLE
ACYCLIC = Sentinel.ACYCLIC


class GraphError(ValueError):
    """Invalid graph construction or malformed serialized input."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``edges`` holds pairs ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks: bit ``u`` of ``adj[v]`` is set iff ``uv`` is an edge."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.n)]
        for u, v in self.edges:
            out[u].append(v)
            out[v].append(u)
        return tuple(tuple(sorted(nb)) for nb in out)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.neighbors)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees, reverse=True))

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self.n, self.n), dtype=float)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    normalized = set()
    for pair in edges:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in {(u, v)} for n={n}")
        if u == v:
            raise GraphError(f"self-loop {(u, v)}")
        normalized.add((u, v) if u < v else (v, u))
    return Graph(n, frozenset(normalized))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabeling must be a permutation of the vertex set")
    return Graph(g.n, frozenset(
        (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u]) for u, v in g.edges
    ))


# ---------------------------------------------------------------------------
# metrics
# ---------------------------------------------------------------------------

def _bfs(g: Graph, source: int, limit: int | None = None) -> list[int]:
    # -1 marks unvisited; never leaves this module
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    nbrs = g.neighbors
    while queue:
        x = queue.popleft()
        if limit is not None and dist[x] >= limit:
            continue
        for y in nbrs[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


class DistanceMatrix:
    """All-pairs hop counts; unreachable pairs read back as ``UNREACHABLE``."""

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, rows: list[list[int]]):
        self.n = n
        self._rows = rows

    def __getitem__(self, uv: tuple[int, int]) -> int | Sentinel:
        d = self._rows[uv[0]][uv[1]]
        return UNREACHABLE if d < 0 else d

    def row(self, u: int) -> list[int | Sentinel]:
        return [UNREACHABLE if d < 0 else d for d in self._rows[u]]

    def connected(self) -> bool:
        return all(d >= 0 for d in self._rows[0]) if self.n else True

    def max_finite(self) -> int:
        return max(max(r) for r in self._rows)


def distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g.n, [_bfs(g, s) for s in range(g.n)])


def is_connected(g: Graph) -> bool:
    return all(d >= 0 for d in _bfs(g, 0))


def diameter(g: Graph) -> int | Sentinel:
    dm = distances(g)
    if not dm.connected():
        return UNREACHABLE
    return dm.max_finite()


def girth(g: Graph) -> int | Sentinel:
    """Shortest cycle length via BFS from every vertex."""
    best = None
    nbrs = g.neighbors
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] + 1 >= best:
                break
            for y in nbrs[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return ACYCLIC if best is None else best


def power(g: Graph, k: int) -> Graph:
    """``g^k``: join every pair of distinct vertices at distance at most ``k``."""
    if k < 1:
        raise GraphError(f"power exponent must be >= 1, got {k}")
    if k == 1:
        return g
    edges = set()
    for s in range(g.n):
        for t, d in enumerate(_bfs(g, s, limit=k)):
            if t > s and 1 <= d <= k:
                edges.add((s, t))
    return Graph(g.n, frozenset(edges))


def square(g: Graph) -> Graph:
    return power(g, 2)


def degree_stats(g: Graph) -> tuple[int, Fraction]:
    """(maximum degree, average degree as an exact rational)."""
    return max(g.degrees), Fraction(2 * g.m, g.n)


# ---------------------------------------------------------------------------
# coalescence / relocation
# ---------------------------------------------------------------------------

def _check_vertex(g: Graph, v: int, name: str) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"{name}={v} is not a vertex of a graph of order {g.n}")


def coalesce(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Identify ``v1`` of ``g1`` with ``v2`` of ``g2``.

    Labels of ``g1`` are kept. ``v2`` maps onto ``v1``; every other vertex ``x`` of
    ``g2`` becomes ``g1.n + x`` if ``x < v2`` and ``g1.n + x - 1`` otherwise.
    """
    _check_vertex(g1, v1, "v1")
    _check_vertex(g2, v2, "v2")

    def image(x: int) -> int:
        if x == v2:
            return v1
        return g1.n + x - (1 if x > v2 else 0)

    edges = list(g1.edges) + [(image(a), image(b)) for a, b in g2.edges]
    return from_edges(g1.n + g2.n - 1, edges)


def relocate_branch(h1: Graph, v_old: int, v_new: int, h2: Graph, w: int) -> tuple[Graph, Graph]:
    """``(H1(v_old) o H2(w), H1(v_new) o H2(w))`` under the labeling of :func:`coalesce`.

    Both graphs share labels: ``H1`` keeps its own, and each non-root vertex of ``H2``
    carries the same label in both results.
    """
    _check_vertex(h1, v_old, "v_old")
    _check_vertex(h1, v_new, "v_new")
    _check_vertex(h2, w, "w")
    if v_old == v_new:
        raise GraphError("relocation needs two distinct attachment vertices")
    return coalesce(h1, v_old, h2, w), coalesce(h1, v_new, h2, w)


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

_G6_MAX = 68719476735


def _encode_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= _G6_MAX:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphError(f"order {n} exceeds the graph6 limit")


def g6_encode(g: Graph) -> bytes:
    """graph6 bytes (no header, no trailing newline)."""
    bits = []
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3
              | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5])
        for k in range(0, len(bits), 6)
    )
    return _encode_size(g.n) + body


def g6_decode(s: bytes | str) -> Graph:
    if isinstance(s, str):
        s = s.encode("ascii")
    s = s.strip()
    if s.startswith(b">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphError("empty graph6 string")
    if any(c < 63 or c > 126 for c in s):
        raise GraphError("graph6 byte outside the printable range 63..126")
    if s[0] != 126:
        n, pos = s[0] - 63, 1
    elif len(s) >= 2 and s[1] == 126:
        if len(s) < 8:
            raise GraphError("truncated graph6 size header")
        n, pos = 0, 8
        for c in s[2:8]:
            n = n << 6 | (c - 63)
    else:
        if len(s) < 4:
            raise GraphError("truncated graph6 size header")
        n, pos = 0, 4
        for c in s[1:4]:
            n = n << 6 | (c - 63)
    if n < 1:
        raise GraphError("graph6 string encodes an empty vertex set")
    nbits = n * (n - 1) // 2
    body = s[pos:]
    if len(body) != (nbits + 5) // 6:
        raise GraphError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            c = body[k // 6] - 63
            if c >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    tail = nbits % 6
    if tail and (body[-1] - 63) & ((1 << (6 - tail)) - 1):
        raise GraphError("nonzero padding bits in graph6 body")
    return Graph(n, frozenset(edges))
