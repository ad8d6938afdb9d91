"""Named graph families with frozen vertex labelings.

Labelings:

* ``path(n)``: ``0-1-...-(n-1)``
* ``cycle(n)``: ``0-1-...-(n-1)-0``
* ``star(n)``: center ``0``, leaves ``1..n-1``
* ``star_plus(n)``: ``star(n)`` plus the edge ``{1, 2}``
* ``tadpole(n)``: triangle on ``{0, 1, 2}``, path ``2-3-...-(n-1)``
* ``cycle_star(n, g)``: cycle ``0..g-1``, leaves ``g..n-1`` on vertex ``0``
* ``broom(n, d, i)``: path ``0..d`` (path vertex ``v_j`` is label ``j-1``),
  leaves ``d+1..n-1`` on label ``i-1``
* ``spider(a, b, c)``: center ``0``, then legs of ``a``, ``b``, ``c`` edges in that order
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import Graph, GraphError, from_edges

__all__ = [
    "path",
    "cycle",
    "star",
    "complete",
    "star_plus",
    "tadpole",
    "cycle_star",
    "broom",
    "spider",
    "FamilySpec",
    "parse_family",
    "build",
]


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise GraphError(message)


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    _require(n >= 1, f"star needs n >= 1, got {n}")
    return from_edges(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_plus(n: int) -> Graph:
    """The star with one extra edge between two leaves (``S_n^*``)."""
    _require(n >= 3, f"star_plus needs n >= 3, got {n}")
    return from_edges(n, [(0, i) for i in range(1, n)] + [(1, 2)])


def tadpole(n: int) -> Graph:
    """Triangle with a pendant path; ``n - 3`` path vertices hang off vertex 2."""
    _require(n >= 4, f"tadpole needs n >= 4, got {n}")
    return from_edges(n, [(0, 1), (1, 2), (0, 2)] + [(i, i + 1) for i in range(2, n - 1)])


def cycle_star(n: int, g: int) -> Graph:
    _require(3 <= g <= n, f"cycle_star needs 3 <= g <= n, got n={n}, g={g}")
    return from_edges(n, [(i, (i + 1) % g) for i in range(g)] + [(0, j) for j in range(g, n)])


def broom(n: int, d: int, i: int) -> Graph:
    _require(d >= 2, f"broom needs d >= 2, got {d}")
    _require(2 <= i <= d, f"broom attachment index must lie in [2, {d}], got {i}")
    _require(n >= d + 1, f"broom needs n >= d + 1, got n={n}, d={d}")
    return from_edges(n, [(j, j + 1) for j in range(d)] + [(i - 1, x) for x in range(d + 1, n)])


def spider(a: int, b: int, c: int) -> Graph:
    _require(min(a, b, c) >= 0, f"leg lengths must be non-negative, got {(a, b, c)}")
    edges = []
    nxt = 1
    for leg in (a, b, c):
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edges(a + b + c + 1, edges)


_BUILDERS = {
    "path": (path, ("n",)),
    "cycle": (cycle, ("n",)),
    "star": (star, ("n",)),
    "complete": (complete, ("n",)),
    "star_plus": (star_plus, ("n",)),
    "tadpole": (tadpole, ("n",)),
    "cycle_star": (cycle_star, ("n", "g")),
    "broom": (broom, ("n", "d", "i")),
    "spider": (spider, ("a", "b", "c")),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[tuple[str, int], ...]

    def __str__(self) -> str:
        return f"{self.family}:" + ",".join(f"{k}={v}" for k, v in self.params)

    def build(self) -> Graph:
        fn, names = _BUILDERS[self.family]
        values = dict(self.params)
        return fn(*(values[k] for k in names))


_SPEC_RE = re.compile(r"^\s*([a-z_]+)\s*:\s*(.*?)\s*$")


def parse_family(text: str) -> FamilySpec:
    """Parse ``"broom:n=9,d=4,i=3"`` into a :class:`FamilySpec`."""
    m = _SPEC_RE.match(text)
    if not m or m.group(1) not in _BUILDERS:
        raise GraphError(f"unknown family spec {text!r}; families: {', '.join(_BUILDERS)}")
    family, body = m.groups()
    names = _BUILDERS[family][1]
    values = {}
    for item in filter(None, (s.strip() for s in body.split(","))):
        key, _, val = item.partition("=")
        key = key.strip()
        if key not in names:
            raise GraphError(f"{family} takes parameters {names}, got {key!r}")
        try:
            values[key] = int(val)
        except ValueError:
            raise GraphError(f"parameter {key} must be an integer, got {val!r}") from None
    missing = [k for k in names if k not in values]
    if missing:
        raise GraphError(f"{family} is missing parameters {missing}")
    return FamilySpec(family, tuple((k, values[k]) for k in names))


def build(text: str) -> Graph:
    return parse_family(text).build()
