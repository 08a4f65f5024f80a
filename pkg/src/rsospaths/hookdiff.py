"""Partitions, hook differences, D_{K,i}(N,M; alpha, beta) and the
path -> partition bijections for both weightings.

Cells are 1-indexed (row, column); diagonal k holds the cells with
row - column = k.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator

from .errors import ParameterError
from .paths import PEAK_DOWN, PEAK_UP, STRAIGHT_DOWN, STRAIGHT_UP, Path, _shapes, xy
from .qlaurent import LaurentPoly

MODELS = ("parafermion", "abf")

# which vertex shape prepends a row (x) and which a column (y)
_ROW_COL = {
    "parafermion": (PEAK_UP, PEAK_DOWN),
    "abf": (STRAIGHT_UP, STRAIGHT_DOWN),
}


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(x < 0 for x in parts):
            raise ParameterError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ParameterError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", tuple(x for x in parts if x))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, j: int) -> int:
        return self.parts[j]

    def part(self, j: int) -> int:
        """mu_j (1-indexed), zero beyond the last nonzero part."""
        return self.parts[j - 1] if 1 <= j <= len(self.parts) else 0

    def conjugate(self) -> Partition:
        first = self.parts[0] if self.parts else 0
        return Partition(tuple(sum(1 for x in self.parts if x >= j) for j in range(1, first + 1)))

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, row in enumerate(self.parts, 1):
            for c in range(1, row + 1):
                yield r, c

    def hook_difference(self, i: int, j: int) -> int:
        if not (1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]):
            raise ParameterError(f"cell ({i},{j}) is outside the diagram of {self.parts}")
        return self.parts[i - 1] - self.conjugate().part(j)

    def hook_grid(self) -> list[list[int]]:
        """Row-by-row hook differences, shaped like the Young diagram."""
        conj = self.conjugate()
        return [[row - conj.part(c) for c in range(1, row + 1)] for row in self.parts]

    def diagonal(self, k: int) -> list[int]:
        """Hook differences on diagonal k, top to bottom."""
        grid = self.hook_grid()
        return [grid[r - 1][c - 1] for r, c in self.cells() if r - c == k]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def conjugate(mu) -> Partition:
    return _as_partition(mu).conjugate()


def hook_difference(mu, i: int, j: int) -> int:
    return _as_partition(mu).hook_difference(i, j)


def _as_partition(mu) -> Partition:
    return mu if isinstance(mu, Partition) else Partition(tuple(mu))


def partitions_in_box(max_parts: int, max_part: int) -> Iterator[Partition]:
    """Every partition with at most max_parts parts, none exceeding max_part."""
    buf: list[int] = []

    def rec(k: int, cap: int):
        if k == 0 or cap == 0:
            yield Partition(tuple(buf))
            return
        yield Partition(tuple(buf))
        for x in range(1, cap + 1):
            buf.append(x)
            yield from rec(k - 1, x)
            buf.pop()

    if max_parts < 0 or max_part < 0:
        return
    yield from rec(max_parts, max_part)


def _check_d_premise(K: int, i: int, N: int, M: int, alpha: int, beta: int) -> None:
    if min(K, i, N, M, alpha, beta) < 0:
        raise ParameterError("D arguments must be non-negative")
    # the usual premise asks i <= K/2; the identities hold for all 1 <= i < K
    if not 1 <= i < K:
        raise ParameterError(f"i={i} must satisfy 1 <= i < K={K}")
    if alpha + beta >= K:
        raise ParameterError(f"alpha+beta={alpha + beta} must be < K={K}")
    if not beta - i <= N - M <= K - alpha - i:
        raise ParameterError(f"N-M={N - M} outside [{beta - i}, {K - alpha - i}]")


def d_conditions(mu: Partition, K: int, i: int, N: int, M: int, alpha: int, beta: int) -> bool:
    """True iff mu meets the hook-difference and extra restrictions of D_{K,i}."""
    grid = mu.hook_grid()
    lower_diag, lower = 1 - beta, beta - i + 1
    upper_diag, upper = alpha - 1, K - i - alpha - 1
    for r, c in mu.cells():
        hd = grid[r - 1][c - 1]
        if r - c == lower_diag and hd < lower:
            return False
        if r - c == upper_diag and hd > upper:
            return False
    if alpha == 0:
        # vacuous when the index is not positive
        j = N - K + i + 1
        if j >= 1 and mu.part(j) <= 0:
            return False
    if beta == 0 and mu.part(1) <= M - i:
        return False
    return True


def d_partitions(K: int, i: int, N: int, M: int, alpha: int, beta: int) -> Iterator[Partition]:
    _check_d_premise(K, i, N, M, alpha, beta)
    for mu in partitions_in_box(M, N):
        if d_conditions(mu, K, i, N, M, alpha, beta):
            yield mu


def d_function(K: int, i: int, N: int, M: int, alpha: int, beta: int) -> LaurentPoly:
    """Sum of q^wt(mu) over partitions with at most M parts, each <= N, meeting the D conditions."""
    counts: dict[int, int] = defaultdict(int)
    for mu in d_partitions(K, i, N, M, alpha, beta):
        counts[4 * mu.weight] += 1
    return LaurentPoly(counts)


def d_arguments(p_prime: int, a: int, b: int, c: int, L: int, model: str) -> tuple[int, int, int, int, int, int]:
    """(K, i, N, M, alpha, beta) whose D value equals the family's generating function."""
    if model not in MODELS:
        raise ParameterError(f"unknown model {model!r}; expected one of {MODELS}")
    N, M = (L - a + b) // 2, (L + a - b) // 2
    if model == "parafermion":
        r = 0 if c == b + 1 else 1
        return p_prime, a, N, M, 1 - r, r
    r = min(b, c)
    return p_prime, a, N, M, p_prime - r - 1, r


def path_to_partition(h: Path, model: str) -> Partition:
    """Grow a Young diagram along h: x-scoring vertices add a top row, y-scoring ones a left column."""
    if model not in MODELS:
        raise ParameterError(f"unknown model {model!r}; expected one of {MODELS}")
    row_shape, col_shape = _ROW_COL[model]
    mu: list[int] = []
    for i, shape in _shapes(h):
        if shape == row_shape:
            x = xy(h, i)[0]
            if x:
                assert not mu or x >= mu[0], f"row of length {x} under {mu}"
                mu.insert(0, x)
        elif shape == col_shape:
            y = xy(h, i)[1]
            assert y >= len(mu), f"column of length {y} beside {mu}"
            mu = [v + 1 for v in mu] + [1] * (y - len(mu))
    return Partition(tuple(mu))
