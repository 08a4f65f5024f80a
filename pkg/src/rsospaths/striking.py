"""Striking sequences: run-length encodings of paths augmented by (e, f).

e = 0 puts a SE pre-segment before vertex 0 (e = 1: NE); f = 0 puts a NE
post-segment after vertex L (f = 1: SE).  w_1 counts the leading segments
parallel to the pre-segment and w_l the trailing ones parallel to the
post-segment, so either may be 0.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .paths import Path

NE, SE = 1, -1


def pre_direction(e: int) -> int:
    return NE if e else SE


def post_direction(f: int) -> int:
    return SE if f else NE


@dataclass(frozen=True)
class StrikingSequence:
    w: tuple[int, ...]
    e: int
    f: int
    start_height: int
    p_prime: int

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(self.w))
        w = self.w
        if self.e not in (0, 1) or self.f not in (0, 1):
            raise ParameterError(f"e, f must be 0 or 1, got ({self.e}, {self.f})")
        if not w:
            raise ParameterError("a striking sequence has at least one entry")
        if any(x < 0 for x in w):
            raise ParameterError(f"negative run length in {w}")
        if any(x == 0 for x in w[1:-1]):
            raise ParameterError(f"interior runs must be positive: {w}")
        if (len(w) - self.e - self.f) % 2:
            raise ParameterError(f"l={len(w)} must be congruent to e+f={self.e + self.f} mod 2")

    @property
    def l(self) -> int:
        return len(self.w)

    @property
    def L(self) -> int:
        return sum(self.w)

    def directions(self) -> list[int]:
        """Direction of each real segment 1..L."""
        out = []
        d = pre_direction(self.e)
        for x in self.w:
            out.extend([d] * x)
            d = -d
        return out

    def __str__(self) -> str:
        return f"({','.join(map(str, self.w))})^({self.e},{self.f})"


def striking_of(h: Path, e: int, f: int) -> StrikingSequence:
    runs: list[list[int]] = []  # [direction, length]
    hs = h.heights
    for i in range(h.L):
        d = hs[i + 1] - hs[i]
        if runs and runs[-1][0] == d:
            runs[-1][1] += 1
        else:
            runs.append([d, 1])
    first = pre_direction(e)
    if runs and runs[0][0] == first:
        w = [n for _, n in runs]
        last = runs[-1][0]
    else:
        w = [0] + [n for _, n in runs]
        last = runs[-1][0] if runs else first
    if last != post_direction(f):
        w.append(0)
    return StrikingSequence(tuple(w), e, f, h.a, h.p_prime)


def path_of(s: StrikingSequence) -> Path:
    heights = [s.start_height]
    for d in s.directions():
        heights.append(heights[-1] + d)
    return Path(s.p_prime, tuple(heights))


def m_value(s: StrikingSequence) -> int:
    """Number of non-scoring vertices, counting vertices 0 and L."""
    return s.L - s.l + 2


def weight_ef(s: StrikingSequence) -> int:
    w = s.w
    total = 0
    # 0-based: term i (1-based, 2..l-1) sums w_{i-1}, w_{i-3}, ... down to w_1 or w_2
    for i in range(2, s.l):
        total += sum(w[j - 1] for j in range(i - 1, 0, -2))
    return total


def c_for(b: int, f: int) -> int:
    """The extra point that the post-segment direction f stands for."""
    return b - 1 if f else b + 1
