"""B-transform, particle insertion and moves, the recursion over p', and
particle content (mn-systems).

Moves are done on the augmented direction list D = [pre, d_1..d_L, post];
vertex i (0 <= i <= L) sits between D[i] and D[i+1] and scores iff they
differ.  A particle is an adjacent pair of scoring vertices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .closedforms import u_vector
from .errors import ExcludedCaseError, MoveError, ParameterError, UndefinedTransformError
from .hookdiff import Partition
from .paths import Path, _check_endpoints
from .qlaurent import LaurentPoly, gaussian_binomial
from .striking import (
    StrikingSequence,
    c_for,
    m_value,
    path_of,
    post_direction,
    pre_direction,
    striking_of,
)


def b_transform(s: StrikingSequence) -> StrikingSequence:
    """(w_1, w_2+1, ..., w_{l-1}+1, w_l), start raised by e, model p'+1.

    A single run (w_1) with w_1 > 0 shortens to (w_1 - 1), which keeps the
    length law L^ = L + l - 2; the single run (0) has no image.
    """
    w = s.w
    if s.l == 1:
        if w[0] == 0:
            raise UndefinedTransformError("the B-transform of the length-0 path with e != f is undefined")
        nw = (w[0] - 1,)
    else:
        nw = (w[0],) + tuple(x + 1 for x in w[1:-1]) + (w[-1],)
    return StrikingSequence(nw, s.e, s.f, s.start_height + s.e, s.p_prime + 1)


def insert_particles(s: StrikingSequence, k: int) -> StrikingSequence:
    """Insert k particles: each maps (w_1, ...) to (0, 1, w_1+1, w_2, ...)."""
    if k < 0:
        raise ParameterError(f"k={k} must be >= 0")
    if k == 0:
        return s
    if s.start_height == 1 and s.e != 0:
        raise ParameterError("particles may only be inserted with e=0 when the path starts at 1")
    if s.start_height == s.p_prime - 1 and s.e != 1:
        raise ParameterError("particles may only be inserted with e=1 when the path starts at p'-1")
    w = s.w
    for _ in range(k):
        w = (0, 1, w[0] + 1) + w[1:]
    return StrikingSequence(w, s.e, s.f, s.start_height, s.p_prime)


@dataclass(frozen=True)
class ParticleConfig:
    """k particles inserted into base, then moved according to lam."""

    base: StrikingSequence
    k: int
    lam: Partition = field(default_factory=Partition)

    def __post_init__(self):
        if not isinstance(self.lam, Partition):
            object.__setattr__(self, "lam", Partition(tuple(self.lam)))
        m = m_value(self.base)
        if len(self.lam) > self.k:
            raise MoveError(f"lambda={self.lam} has more than k={self.k} parts")
        if self.lam.part(1) > m:
            raise MoveError(f"lambda={self.lam} has a part larger than m={m}")


def _augmented(h: Path, e: int, f: int) -> list[int]:
    hs = h.heights
    return [pre_direction(e)] + [hs[i + 1] - hs[i] for i in range(h.L)] + [post_direction(f)]


def _path_from(p_prime: int, start: int, D: list[int]) -> Path:
    heights = [start]
    for d in D[1:-1]:
        heights.append(heights[-1] + d)
    return Path(p_prime, tuple(heights))


def apply_moves(cfg: ParticleConfig) -> Path:
    """Insert cfg.k particles and move particle j (rightmost first) lam_j steps right."""
    s = insert_particles(cfg.base, cfg.k)
    D = _augmented(path_of(s), s.e, s.f)
    L = len(D) - 2

    def scoring(i: int) -> bool:
        return D[i] != D[i + 1]

    for j in range(1, cfg.k + 1):
        pos = 2 * (cfg.k - j)  # left vertex of particle j
        for _ in range(cfg.lam.part(j)):
            if pos + 2 <= L and scoring(pos + 2):
                # three in a row: the latter two carry on as the particle
                pos += 1
                if pos + 2 <= L and scoring(pos + 2):
                    raise MoveError(f"particle {j} is blocked at vertex {pos}")
            if pos + 2 > L:
                raise MoveError(f"particle {j} cannot move past vertex {L}")
            D[pos + 1], D[pos + 2] = D[pos + 2], D[pos + 1]
            pos += 1
    return _path_from(s.p_prime, s.start_height, D)


def compose(antecedent: Path, e: int, f: int, k: int, lam=()) -> Path:
    """B-transform, insert k particles, then move them by lam."""
    if antecedent.L == 0 and e != f:
        # all-scoring path of odd length 2k-1; only reachable with lam empty
        if k < 1 or Partition(tuple(lam)).parts:
            raise UndefinedTransformError("the length-0 path with e != f only yields the all-scoring path")
        d = -pre_direction(e)
        D = [pre_direction(e)] + [d * (-1) ** i for i in range(2 * k - 1)] + [post_direction(f)]
        return _path_from(antecedent.p_prime + 1, antecedent.a + e, D)
    base = b_transform(striking_of(antecedent, e, f))
    return apply_moves(ParticleConfig(base, k, Partition(tuple(lam))))


def decompose(h: Path, e: int, f: int) -> tuple[Path, int, Partition]:
    """Invert compose: return (antecedent in model p'-1, k, lam)."""
    p = h.p_prime
    if p <= 2:
        raise ParameterError(f"decompose needs p' > 2, got {p}")
    if e not in (0, 1) or f not in (0, 1):
        raise ParameterError(f"e, f must be 0 or 1, got ({e}, {f})")
    for name, v in (("a-e", h.a - e), ("b-f", h.b - f)):
        if not 1 <= v < p - 1:
            raise ParameterError(f"{name}={v} outside [1, {p - 2}]")
    D = _augmented(h, e, f)
    L = h.L

    def scoring(i: int) -> bool:
        return D[i] != D[i + 1]

    if all(scoring(i) for i in range(L + 1)) and L % 2:
        raise ExcludedCaseError("all vertices score with L odd: the path has no antecedent")

    pos = 0
    moves: list[int] = []
    while True:
        j = next((i for i in range(pos, L) if scoring(i) and scoring(i + 1)), None)
        if j is None:
            break
        count = 0
        while j > pos:
            if scoring(j - 1):
                j -= 1  # re-identify onto the scoring vertex to the left
                continue
            D[j], D[j + 1] = D[j + 1], D[j]
            j -= 1
            count += 1
        moves.append(count)
        pos += 2
    k = pos // 2
    lam = tuple(reversed(moves))
    assert all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1)), lam

    D0 = [D[0]] + D[2 * k + 1 :]
    h0 = _path_from(p, h.a, D0)
    w = striking_of(h0, e, f).w
    if len(w) == 1:
        aw = (w[0] + 1,)
    else:
        assert all(x >= 2 for x in w[1:-1]), w
        aw = (w[0],) + tuple(x - 1 for x in w[1:-1]) + (w[-1],)
    ante = path_of(StrikingSequence(aw, e, f, h.a - e, p - 1))
    return ante, k, Partition(lam)


def _zero_unless(cond: bool) -> LaurentPoly:
    return LaurentPoly.one() if cond else LaurentPoly.zero()


@lru_cache(maxsize=None)
def _chi(p: int, a: int, b: int, e: int, f: int, L: int, m: int) -> LaurentPoly:
    if L < 0 or m < 0 or (m - L - e - f) % 2 or (L + a - b) % 2 or abs(a - b) > L:
        return LaurentPoly.zero()
    if L == 0:
        return _zero_unless(a == b and m == abs(e - f))
    if p == 2:
        return LaurentPoly.zero()
    # boundary switches bring a-e and b-f into [1, p'-2]
    if e == 1 and a == 1:
        return _chi(p, a, b, 0, f, L, m - 1)
    if e == 0 and a == p - 1:
        return _chi(p, a, b, 1, f, L, m - 1)
    if f == 1 and b == 1:
        return _chi(p, a, b, e, 0, L, m - 1).shift(-2 * (L - a + 1))
    if f == 0 and b == p - 1:
        return _chi(p, a, b, e, 1, L, m - 1).shift(-2 * (L - p + a + 1))
    total = LaurentPoly.zero()
    for mm in range(max(0, 2 * m - L), m + 2):
        if (mm - L) % 2:
            continue
        g = gaussian_binomial((L + mm) // 2, m)
        if g:
            sub = _chi(p - 1, a - e, b - f, e, f, m, mm)
            if sub:
                total += g * sub
    return total.shift((L - m) ** 2 - int(e + f == 1))


def chi_by_recursion(p_prime: int, a: int, b: int, e: int, f: int, L: int, m: int) -> LaurentPoly:
    """Restricted generating function built recursively from the p'=2 seed."""
    _check_endpoints(p_prime, a, b, L)
    if e not in (0, 1) or f not in (0, 1):
        raise ParameterError(f"e, f must be 0 or 1, got ({e}, {f})")
    return _chi(p_prime, a, b, e, f, L, m)


def ef_sequence(p_prime: int, a: int, b: int, system: int) -> list[tuple[int, int]]:
    """(e_i, f_i) for i = 1..p'-2 under system 1 or 2."""
    if system == 1:
        es = [int(i < a) for i in range(1, p_prime - 1)]
    elif system == 2:
        es = [int(i >= p_prime - a) for i in range(1, p_prime - 1)]
    else:
        raise ParameterError(f"system must be 1 or 2, got {system}")
    fs = [int(i < b) for i in range(1, p_prime - 1)]
    return list(zip(es, fs))


@dataclass(frozen=True)
class MnSystem:
    system: int
    m: tuple[int, ...]  # m_0..m_{t-1}
    n: tuple[int, ...]  # n_1..n_t
    t: int
    verified: bool
    levels: tuple = ()  # (e_i, f_i, n_i, lambda_i) per level, top down

    def residuals(self, a: int, b: int, p_prime: int) -> list[int]:
        return mn_residuals(self.system, p_prime, a, b, self.m, self.n)


def mn_residuals(system: int, p_prime: int, a: int, b: int, m, n) -> list[int]:
    """-m C + u - 2n per component; all zero iff the mn-system holds."""
    t = p_prime - 2
    u = u_vector(t, a, b) if system == 1 else u_vector(t, p_prime - a, b)
    full = list(m) + [0, 0]  # m_t = m_{t+1} = 0
    out = []
    for j in range(1, t + 1):
        extra = int(system == 2 and j == t)
        out.append(full[j - 1] + full[j + 1] - 2 * full[j] - 2 * n[j - 1] + u[j - 1] + extra)
    return out


def particle_content(h: Path, system: int) -> MnSystem:
    """Decompose h repeatedly down to model 2, recording m_i and n_i."""
    p = h.p_prime
    if p < 3:
        raise ParameterError(f"particle content needs p' >= 3, got {p}")
    efs = ef_sequence(p, h.a, h.b, system)
    if h.c is not None and h.c != c_for(h.b, efs[0][1]):
        raise ParameterError(f"c={h.c} is not the extra point c={c_for(h.b, efs[0][1])} implied by f_1")
    cur = Path(p, h.heights)
    ms, ns, levels = [h.L], [], []
    for e, f in efs:
        try:
            ante, k, lam = decompose(cur, e, f)
        except ExcludedCaseError:
            ante, k, lam = Path(cur.p_prime - 1, (cur.a - e,)), (cur.L + 1) // 2, Partition()
        ns.append(k)
        levels.append((e, f, k, lam))
        ms.append(ante.L)
        cur = ante
    t = p - 2
    m = tuple(ms[:t])
    n = tuple(ns)
    ok = ms[t] == 0 and all(x >= 0 for x in n) and not any(mn_residuals(system, p, h.a, h.b, m, n))
    return MnSystem(system, m, n, t, ok, tuple(levels))


def rebuild(mn: MnSystem, seed: Path = Path(2, (1,))) -> Path:
    """Recompose a path from the model-2 seed through the recorded levels."""
    cur = seed
    for e, f, k, lam in reversed(mn.levels):
        cur = compose(cur, e, f, k, lam)
    return cur
