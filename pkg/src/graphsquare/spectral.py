"""Dominant eigenvalue of adjacency matrices.

Two independent routes:

* :func:`spectral_radius` -- power iteration on ``A + I`` from the all-ones vector,
  polished by Rayleigh-quotient iteration. A result is only accepted once its
  residual is below ``tol`` and its vector is strictly positive, which pins it to
  the Perron eigenvalue (Collatz-Wielandt bracket reported alongside).
* :func:`exact_radius` / :func:`compare_radius` / :func:`compare_radii` -- exact
  integer arithmetic: Faddeev-LeVerrier characteristic polynomial, Sturm
  sequences, and Sylvester's criterion on ``tI - A``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import Graph, GraphError, _bfs

__all__ = [
    "DEFAULT_TOL",
    "EXACT_MAX_ORDER",
    "ConvergenceError",
    "SpectralResult",
    "ExactRadius",
    "spectral_radius",
    "radius",
    "charpoly",
    "exact_radius",
    "compare_radius",
    "compare_radii",
    "tilde",
    "check_eigen_equation",
]

DEFAULT_TOL = 1e-12
MAX_ITER = 10**6
EXACT_MAX_ORDER = 12
DEFAULT_WIDTH = Fraction(1, 2**40)

_POLISH_EVERY = 25
_POLISH_STEPS = 8


class ConvergenceError(ArithmeticError):
    def __init__(self, message: str, residual: float, iterations: int):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


@dataclass(frozen=True)
class SpectralResult:
    radius: float
    vector: np.ndarray
    residual: float
    iterations: int
    bracket: tuple[float, float]

    @property
    def certified_width(self) -> float:
        return self.bracket[1] - self.bracket[0]


# ---------------------------------------------------------------------------
# iterative route
# ---------------------------------------------------------------------------

def _components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if not seen[s]:
            comp = [v for v, d in enumerate(_bfs(g, s)) if d >= 0]
            for v in comp:
                seen[v] = True
            comps.append(comp)
    return comps


def _residual(a: np.ndarray, x: np.ndarray) -> tuple[float, float, np.ndarray]:
    ax = a @ x
    mu = float(x @ ax) / float(x @ x)
    return mu, float(np.max(np.abs(ax - mu * x))), ax


def _bracket(ax: np.ndarray, x: np.ndarray, mu: float) -> tuple[float, float]:
    if np.all(x > 0):
        ratios = ax / x
        return float(ratios.min()), float(ratios.max())
    return -math.inf, math.inf


def _polish(a: np.ndarray, x: np.ndarray, tol: float):
    """Rayleigh-quotient iteration; returns ``(mu, x, residual, ax)`` or ``None``."""
    n = a.shape[0]
    eye = np.eye(n)
    v = x.copy()
    for _ in range(_POLISH_STEPS):
        mu, res, ax = _residual(a, v)
        if res <= tol and np.all(v > 0):
            return mu, v, res, ax
        try:
            w = np.linalg.solve(a - mu * eye, v)
        except np.linalg.LinAlgError:
            return None
        if not np.all(np.isfinite(w)):
            return None
        w /= w[np.argmax(np.abs(w))]
        v = w
    mu, res, ax = _residual(a, v)
    if res <= tol and np.all(v > 0):
        return mu, v, res, ax
    return None


def _connected_radius(a: np.ndarray, tol: float, max_iter: int, start: np.ndarray | None):
    n = a.shape[0]
    if n == 1:
        return 0.0, np.ones(1), 0.0, 0, (0.0, 0.0)
    shifted = a + np.eye(n)
    x = np.ones(n) if start is None else np.asarray(start, dtype=float).copy()
    if not np.all(x > 0):
        raise ValueError("start vector must be strictly positive")
    x /= x.max()
    res = math.inf
    for it in range(1, max_iter + 1):
        z = shifted @ x
        ax = z - x
        mu = float(x @ ax) / float(x @ x)
        res = float(np.max(np.abs(ax - mu * x)))
        if res <= tol:
            return mu, x, res, it, _bracket(ax, x, mu)
        x = z / z.max()
        if it % _POLISH_EVERY == 0:
            polished = _polish(a, x, tol)
            if polished is not None:
                mu, v, res, ax = polished
                return mu, v, res, it, _bracket(ax, v, mu)
    raise ConvergenceError(
        f"power iteration did not reach residual {tol:g} in {max_iter} steps",
        residual=res,
        iterations=max_iter,
    )


def spectral_radius(
    g: Graph,
    tol: float = DEFAULT_TOL,
    max_iter: int = MAX_ITER,
    start: Sequence[float] | None = None,
) -> SpectralResult:
    """Largest adjacency eigenvalue of ``g`` with a max-norm-one Perron vector.

    For a disconnected graph the radius is the maximum over components and the
    vector is supported on one maximizing component.
    """
    if g.n < 1:
        raise GraphError("spectral radius of the empty graph is undefined")
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = g.adjacency_matrix()
    comps = _components(g)
    start_arr = None if start is None else np.asarray(start, dtype=float)
    if len(comps) == 1:
        mu, x, res, its, br = _connected_radius(a, tol, max_iter, start_arr)
        return SpectralResult(mu, x, res, its, br)

    best = None
    total_its = 0
    for comp in comps:
        sub = a[np.ix_(comp, comp)]
        sub_start = None if start_arr is None else start_arr[comp]
        mu, x, res, its, br = _connected_radius(sub, tol, max_iter, sub_start)
        total_its += its
        if best is None or mu > best[0]:
            best = (mu, comp, x, br)
    mu, comp, xc, br = best
    vec = np.zeros(g.n)
    vec[comp] = xc
    _, res, _ = _residual(a, vec)
    return SpectralResult(mu, vec, res, total_its, br)


def radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    return spectral_radius(g, tol).radius


# ---------------------------------------------------------------------------
# exact route: polynomials with integer coefficients, highest degree first
# ---------------------------------------------------------------------------

def _int_adjacency(g: Graph) -> list[list[int]]:
    rows = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        rows[u][v] = rows[v][u] = 1
    return rows


def charpoly(g: Graph) -> list[int]:
    """Coefficients of ``det(xI - A)``, leading coefficient first (Faddeev-LeVerrier)."""
    n = g.n
    a = np.array(_int_adjacency(g), dtype=object)
    coeffs = [1]
    m = np.zeros((n, n), dtype=object)
    eye = np.eye(n, dtype=int).astype(object)
    c = 1
    for k in range(1, n + 1):
        m = a.dot(m) + c * eye
        am = a.dot(m)
        trace = sum(am[i, i] for i in range(n))
        c, rem = divmod(-trace, k)
        if rem:
            raise ArithmeticError("non-integral Faddeev-LeVerrier coefficient")
        coeffs.append(int(c))
    return coeffs


def _strip(p: list) -> list:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def _primitive(p: list) -> list[int]:
    """Scale a rational polynomial by a positive constant to a primitive integer one."""
    p = _strip([Fraction(c) for c in p])
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints] if g > 1 else ints


def _derivative(p: list[int]) -> list[int]:
    d = len(p) - 1
    return [c * (d - i) for i, c in enumerate(p[:-1])] or [0]


def _rem(a: list, b: list) -> list[Fraction]:
    a = [Fraction(c) for c in a]
    b = _strip(b)
    while len(a) >= len(b) and any(a):
        f = a[0] / b[0]
        for i in range(len(b)):
            a[i] -= f * b[i]
        a.pop(0)
    return _strip(a) if a else [Fraction(0)]


def _gcd(a: list, b: list) -> list[int]:
    a, b = _primitive(a), _primitive(b)
    while any(b):
        a, b = b, _rem(a, b)
        if any(b):
            b = _primitive(b)
    return a if a[0] > 0 else [-c for c in a]


def _is_zero(p: list) -> bool:
    return not any(p)


def _squarefree(p: list[int]) -> list[int]:
    g = _gcd(p, _derivative(p))
    if len(g) == 1:
        return _primitive(p)
    # exact division p / g
    q = []
    r = [Fraction(c) for c in p]
    while len(r) >= len(g):
        f = r[0] / g[0]
        q.append(f)
        for i in range(len(g)):
            r[i] -= f * g[i]
        r.pop(0)
    return _primitive(q)


def _sturm_chain(q: list[int]) -> list[list[int]]:
    chain = [q, _primitive(_derivative(q))]
    while len(chain[-1]) > 1:
        r = _rem(chain[-2], chain[-1])
        if _is_zero(r):
            break
        chain.append(_primitive([-c for c in r]))
    return chain


def _poly_sign(p: list[int], x: Fraction) -> int:
    """Sign of ``p(x)`` for rational ``x`` using integer arithmetic only."""
    num, den = x.numerator, x.denominator
    # homogenized Horner: sum p_i num^(d-i) den^i has the sign of p(x) since den > 0
    acc = 0
    dpow = 1
    for c in p:
        acc = acc * num + c * dpow
        dpow *= den
    return (acc > 0) - (acc < 0)


def _variations(chain: list[list[int]], x: Fraction | None) -> int:
    signs = []
    for p in chain:
        s = (1 if p[0] > 0 else -1) if x is None else _poly_sign(p, x)
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_above(chain: list[list[int]], x: Fraction) -> int:
    """Number of distinct real roots in ``(x, +inf)``."""
    return _variations(chain, x) - _variations(chain, None)


def _count_in(chain: list[list[int]], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in ``(lo, hi]``."""
    return _variations(chain, lo) - _variations(chain, hi)


@dataclass(frozen=True)
class ExactRadius:
    """Isolating interval ``(lo, hi]`` for the largest root of ``charpoly``."""

    charpoly: tuple[int, ...]
    lo: Fraction
    hi: Fraction
    exact: int | None = None

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self.lo, self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        if self.exact is not None:
            return Fraction(self.exact)
        return (self.lo + self.hi) / 2


def _check_order(g: Graph) -> None:
    if g.n > EXACT_MAX_ORDER:
        raise GraphError(f"exact oracle is capped at order {EXACT_MAX_ORDER}, got {g.n}")


def _isolate(chain: list[list[int]], n: int, width: Fraction) -> tuple[Fraction, Fraction] | None:
    """Isolating interval of the largest root, or ``None`` if that root is 0."""
    lo, hi = Fraction(0), Fraction(max(n, 1))
    if _count_above(chain, lo) == 0:
        return None
    while hi - lo > width or _count_in(chain, lo, hi) > 1:
        mid = (lo + hi) / 2
        if _count_above(chain, mid) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


def exact_radius(g: Graph, width: Fraction | float = DEFAULT_WIDTH) -> ExactRadius:
    _check_order(g)
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    p = charpoly(g)
    chain = _sturm_chain(_squarefree(p))
    iv = _isolate(chain, g.n, width)
    if iv is None:
        return ExactRadius(tuple(p), -width, Fraction(0), exact=0)
    lo, hi = iv
    exact = None
    for k in range(math.ceil(lo), math.floor(hi) + 1):
        if lo < k <= hi and _poly_sign(p, Fraction(k)) == 0:
            exact = k
    return ExactRadius(tuple(p), lo, hi, exact)


def _positive_definite(rows: list[list[int]]) -> bool:
    """Sylvester's criterion via fraction-free (Bareiss) elimination."""
    m = [r[:] for r in rows]
    n = len(m)
    prev = 1
    for k in range(n):
        pivot = m[k][k]
        if pivot <= 0:
            return False
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return True


def compare_radius(g: Graph, t: Fraction | int | str) -> int:
    """Exact sign of ``rho(g) - t``: -1, 0 or +1."""
    _check_order(g)
    t = Fraction(t)
    num, den = t.numerator, t.denominator
    rows = [[-den * x for x in row] for row in _int_adjacency(g)]
    for i in range(g.n):
        rows[i][i] += num
    if _positive_definite(rows):
        return -1
    p = charpoly(g)
    if _poly_sign(p, t) != 0:
        return 1
    chain = _sturm_chain(_squarefree(p))
    return 1 if _count_above(chain, t) else 0


def compare_radii(g1: Graph, g2: Graph) -> int:
    """Exact sign of ``rho(g1) - rho(g2)``."""
    _check_order(g1)
    _check_order(g2)
    p1, p2 = charpoly(g1), charpoly(g2)
    q1, q2 = _squarefree(p1), _squarefree(p2)
    c1, c2 = _sturm_chain(q1), _sturm_chain(q2)
    width = Fraction(1, 2**20)
    i1, i2 = _isolate(c1, g1.n, width), _isolate(c2, g2.n, width)
    if i1 is None or i2 is None:
        if i1 is None and i2 is None:
            return 0
        return -1 if i1 is None else 1
    common = _gcd(q1, q2)
    common_chain = _sturm_chain(common) if len(common) > 1 else None
    while True:
        (lo1, hi1), (lo2, hi2) = i1, i2
        if hi1 <= lo2:
            return -1
        if hi2 <= lo1:
            return 1
        a, b = max(lo1, lo2), min(hi1, hi2)
        if common_chain is not None and _count_in(common_chain, a, b) > 0:
            return 0
        width /= 2**10
        i1, i2 = _isolate_from(c1, i1, width), _isolate_from(c2, i2, width)


def _isolate_from(chain, iv, width):
    lo, hi = iv
    while hi - lo > width:
        mid = (lo + hi) / 2
        if _count_above(chain, mid) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


# ---------------------------------------------------------------------------
# Perron-vector quantities
# ---------------------------------------------------------------------------

def tilde(g: Graph, x: Sequence[float], v: int) -> float:
    """``x[v]`` plus the sum of ``x`` over the neighbours of ``v`` in ``g``."""
    if len(x) != g.n:
        raise ValueError(f"vector has {len(x)} entries, graph has {g.n} vertices")
    if not 0 <= v < g.n:
        raise GraphError(f"{v} is not a vertex")
    return float(x[v]) + sum(float(x[u]) for u in g.neighbors[v])


def check_eigen_equation(g: Graph, result: SpectralResult) -> float:
    """Max over ``v`` of ``|rho x_v - sum x_u|`` with ``u != v`` within distance 2 of ``v`` in ``g``."""
    x = result.vector
    worst = 0.0
    for v in range(g.n):
        ball = [u for u, d in enumerate(_bfs(g, v, limit=2)) if 1 <= d <= 2]
        worst = max(worst, abs(result.radius * x[v] - sum(x[u] for u in ball)))
    return float(worst)
