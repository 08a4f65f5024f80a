"""Paths, vertex shapes, the four weightings, and brute-force generating functions.

A path of length L in model p' is a height sequence h_0..h_L with every
h_i in [1, p'-1] and unit steps.  Weights are only defined once the extra
point c = h_{L+1} is fixed, because the L-th vertex then has a shape.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import ParameterError
from .qlaurent import LaurentPoly

STRAIGHT_UP = "straight-up"
STRAIGHT_DOWN = "straight-down"
PEAK_UP = "peak-up"  # local maximum
PEAK_DOWN = "peak-down"  # local minimum

WEIGHT_KINDS = ("alt", "II", "III", "III_normalized")


@dataclass(frozen=True)
class Path:
    p_prime: int
    heights: tuple[int, ...]
    c: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "heights", tuple(self.heights))
        p, h = self.p_prime, self.heights
        if p < 2:
            raise ParameterError(f"p' must be >= 2, got {p}")
        if not h:
            raise ParameterError("a path needs at least the point h_0")
        for i, x in enumerate(h):
            if not 1 <= x <= p - 1:
                raise ParameterError(f"height h_{i}={x} outside [1, {p - 1}]")
        for i in range(len(h) - 1):
            if abs(h[i + 1] - h[i]) != 1:
                raise ParameterError(f"step {i}->{i + 1} is not +-1")
        if self.c is not None:
            if not 1 <= self.c <= p - 1:
                raise ParameterError(f"c={self.c} outside [1, {p - 1}]")
            if abs(self.c - h[-1]) != 1:
                raise ParameterError(f"c={self.c} is not b+-1 for b={h[-1]}")

    @property
    def L(self) -> int:
        return len(self.heights) - 1

    @property
    def a(self) -> int:
        return self.heights[0]

    @property
    def b(self) -> int:
        return self.heights[-1]

    def with_c(self, c: Optional[int]) -> Path:
        return Path(self.p_prime, self.heights, c)

    def _extended(self) -> tuple[int, ...]:
        if self.c is None:
            raise ParameterError("the extra point c = h_{L+1} is required")
        return self.heights + (self.c,)


@dataclass(frozen=True)
class FamilyParams:
    """(p', a, b, c, L) naming one set P^{p'}_{a,b,c}(L); c may be None."""

    p_prime: int
    a: int
    b: int
    L: int
    c: Optional[int] = None

    def validate(self) -> None:
        p, a, b, L, c = self.p_prime, self.a, self.b, self.L, self.c
        _check_endpoints(p, a, b, L)
        if (L + a - b) % 2:
            raise ParameterError(f"L+a-b = {L + a - b} must be even")
        if c is not None:
            if abs(c - b) != 1:
                raise ParameterError(f"c={c} must equal b+-1 = {b - 1} or {b + 1}")
            if not 1 <= c <= p - 1:
                raise ParameterError(f"c={c} outside [1, p'-1] = [1, {p - 1}]")


def _check_endpoints(p: int, a: int, b: int, L: int) -> None:
    if p < 2:
        raise ParameterError(f"p' must be >= 2, got {p}")
    if not 1 <= a <= p - 1:
        raise ParameterError(f"a={a} outside [1, p'-1] = [1, {p - 1}]")
    if not 1 <= b <= p - 1:
        raise ParameterError(f"b={b} outside [1, p'-1] = [1, {p - 1}]")
    if L < 0:
        raise ParameterError(f"L={L} must be >= 0")


def _walk(p: int, a: int, b: int, L: int) -> Iterator[tuple[int, ...]]:
    # depth-first in lexicographic order, pruned by reachability of b
    heights = [a]

    def rec(i: int):
        if i == L:
            yield tuple(heights)
            return
        x = heights[-1]
        for y in (x - 1, x + 1):
            if 1 <= y <= p - 1 and abs(b - y) <= L - i - 1:
                heights.append(y)
                yield from rec(i + 1)
                heights.pop()

    if abs(a - b) <= L:
        yield from rec(0)


def enumerate_paths(p_prime: int, a: int, b: int, L: int, c: Optional[int] = None) -> Iterator[Path]:
    """Every path in P^{p'}_{a,b}(L) (or P^{p'}_{a,b,c}(L)), lexicographically."""
    FamilyParams(p_prime, a, b, L, c).validate()
    for h in _walk(p_prime, a, b, L):
        yield Path(p_prime, h, c)


def vertex_class(h: Path, i: int) -> str:
    if not 1 <= i <= h.L:
        raise ParameterError(f"vertex index {i} outside [1, {h.L}]")
    ext = h._extended() if i == h.L else h.heights
    return _shape(ext[i - 1], ext[i], ext[i + 1])


def _shape(prev: int, cur: int, nxt: int) -> str:
    if prev < cur < nxt:
        return STRAIGHT_UP
    if prev > cur > nxt:
        return STRAIGHT_DOWN
    if prev < cur:
        return PEAK_UP
    return PEAK_DOWN


def xy(h: Path, i: int) -> tuple[int, int]:
    """Coordinates of vertex i in the 45-degree frame anchored at h_0."""
    d = h.heights[i] - h.a
    # i and h_i - a always share parity, so both are integers
    return (i - d) // 2, (i + d) // 2


def _shapes(h: Path):
    ext = h._extended()
    for i in range(1, h.L + 1):
        yield i, _shape(ext[i - 1], ext[i], ext[i + 1])


def weight_alt(h: Path) -> int:
    """Peaks score: a local max contributes x, a local min contributes y."""
    total = 0
    for i, shape in _shapes(h):
        if shape == PEAK_UP:
            total += xy(h, i)[0]
        elif shape == PEAK_DOWN:
            total += xy(h, i)[1]
    return total


def weight_III_normalized(h: Path) -> int:
    """Straight vertices score: straight-up contributes x, straight-down y."""
    total = 0
    for i, shape in _shapes(h):
        if shape == STRAIGHT_UP:
            total += xy(h, i)[0]
        elif shape == STRAIGHT_DOWN:
            total += xy(h, i)[1]
    return total


def weight_III(h: Path) -> int:
    """Regime-III weight in quarter units: each straight vertex i adds i/2."""
    return sum(2 * i for i, s in _shapes(h) if s in (STRAIGHT_UP, STRAIGHT_DOWN))


def weight_II(h: Path) -> int:
    """Regime-II weight in quarter units: each peak vertex i adds i/2."""
    return sum(2 * i for i, s in _shapes(h) if s in (PEAK_UP, PEAK_DOWN))


def weight_quarters(h: Path, kind: str) -> int:
    if kind == "alt":
        return 4 * weight_alt(h)
    if kind == "III_normalized":
        return 4 * weight_III_normalized(h)
    if kind == "III":
        return weight_III(h)
    if kind == "II":
        return weight_II(h)
    raise ParameterError(f"unknown weight kind {kind!r}; expected one of {WEIGHT_KINDS}")


def gf(params: FamilyParams, weight_kind: str = "alt") -> LaurentPoly:
    """Brute-force sum of q^weight over P^{p'}_{a,b,c}(L)."""
    if params.c is None:
        raise ParameterError("gf needs the extra point c")
    if weight_kind not in WEIGHT_KINDS:
        raise ParameterError(f"unknown weight kind {weight_kind!r}; expected one of {WEIGHT_KINDS}")
    counts: dict[int, int] = defaultdict(int)
    for h in enumerate_paths(params.p_prime, params.a, params.b, params.L, params.c):
        counts[weight_quarters(h, weight_kind)] += 1
    return LaurentPoly(counts)


def gf_restricted_table(p_prime: int, a: int, b: int, e: int, f: int, L: int) -> dict[int, LaurentPoly]:
    """{m: chi_{a,b,e,f}(L, m)} from a single enumeration, nonzero entries only."""
    from .striking import m_value, striking_of, weight_ef

    if e not in (0, 1) or f not in (0, 1):
        raise ParameterError(f"e, f must be 0 or 1, got e={e}, f={f}")
    _check_endpoints(p_prime, a, b, L)
    if (L + a - b) % 2:
        return {}
    counts: dict[int, dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for hs in _walk(p_prime, a, b, L):
        s = striking_of(Path(p_prime, hs), e, f)
        counts[m_value(s)][4 * weight_ef(s)] += 1
    return {m: LaurentPoly(c) for m, c in sorted(counts.items())}


def gf_restricted(p_prime: int, a: int, b: int, e: int, f: int, L: int, m: int) -> LaurentPoly:
    """Sum of q^{wt^(e,f)} over paths in P^{p'}_{a,b}(L) with m^(e,f) = m."""
    table = gf_restricted_table(p_prime, a, b, e, f, L)
    return table.get(m, LaurentPoly.zero())


def reflect(h: Path) -> Path:
    p = h.p_prime
    return Path(p, tuple(p - x for x in h.heights), None if h.c is None else p - h.c)
