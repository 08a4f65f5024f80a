"""Closed-form generating polynomials.

* ``bosonic_chi``: the alternating-sign finitized Rocha-Caridi sum for the
  renormalized ABF function chi^{p'-1,p'}_{a,b,c}(L).
* ``fermionic_para``: the two constant-sign sums (and their reflections)
  for the parafermion function chi^{1,p'}_{a,b,c}(L).
* ``fermionic_abf``: the four constant-sign ABF sums.
* ``dual``: q -> 1/q duality between the two renormalized functions.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ParameterError
from .paths import FamilyParams
from .qlaurent import LaurentPoly, gaussian_binomial


def cartan_matrix(t: int) -> list[list[int]]:
    """Cartan matrix of A_t: 2 on the diagonal, -1 on the off-diagonals."""
    return [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(t)] for i in range(t)]


def quadratic_form(v) -> int:
    """v C v^T for the A_len(v) Cartan matrix, without building C."""
    return 2 * sum(x * x for x in v) - 2 * sum(v[i] * v[i + 1] for i in range(len(v) - 1))


@dataclass(frozen=True)
class ParityVectors:
    u: tuple[int, ...]
    Q: tuple[int, ...]
    R: tuple[int, ...]


def u_vector(t: int, a: int, b: int) -> tuple[int, ...]:
    # u_i = delta_{i,a-1} + delta_{i,b-1}, i = 1..t; so u_{a-1} = 2 when a = b
    return tuple(int(i == a - 1) + int(i == b - 1) for i in range(1, t + 1))


def q_vector(u) -> tuple[int, ...]:
    t = len(u)
    return tuple(sum(u[j - 1] for j in range(i + 1, t + 1, 2)) % 2 for i in range(1, t))


def r_vector(u) -> tuple[int, ...]:
    t = len(u)
    return tuple((t - i + sum(u[j - 1] for j in range(i + 1, t + 1, 2))) % 2 for i in range(1, t))


def parity_vectors(t: int, a: int, b: int) -> ParityVectors:
    u = u_vector(t, a, b)
    return ParityVectors(u, q_vector(u), r_vector(u))


def _check_family(p_prime: int, a: int, b: int, c: int, L: int) -> None:
    if c is None:
        raise ParameterError("c is required")
    FamilyParams(p_prime, a, b, L, c).validate()


def bosonic_chi(p_prime: int, a: int, b: int, c: int, L: int) -> LaurentPoly:
    """Alternating-sign sum over lambda of q-powers times Gaussian binomials."""
    _check_family(p_prime, a, b, c, L)
    p = p_prime
    r = min(b, c)
    half = (L + a - b) // 2
    bound = (L + a) // p + 1
    total = LaurentPoly.zero()
    for lam in range(-bound, bound + 1):
        g = gaussian_binomial(L, half - p * lam)
        if g:
            total += g.shift(4 * lam * ((p - 1) * (lam * p - a) + p * r))
        g = gaussian_binomial(L, half - p * lam - a)
        if g:
            total -= g.shift(4 * (lam * p - lam + r) * (lam * p + a))
    return total


def _m_vectors(L: int, n: int, parity, deltas, cap: int) -> Iterator[tuple[int, ...]]:
    """m = (m_1..m_n) in the parity class with every Gaussian top >= m_i.

    The tops are (m_{i-1} + m_{i+1} + deltas[i]) / 2 with m_0 = L and
    m_{n+1} = 0.  A Gaussian [top, m_i] is nonzero iff the slope drops by at
    most deltas[i] across i, which bounds m_i from above given m_{i-1}.
    """
    if n == 0:
        yield ()
        return
    m = [L] + [0] * n + [0]
    tail = [0] * (n + 2)  # tail[i] = sum of deltas[i..n]
    for i in range(n, 0, -1):
        tail[i] = tail[i + 1] + deltas[i]

    def rec(i: int):
        if i > n:
            if 2 * m[n] <= m[n - 1] + m[n + 1] + deltas[n]:
                yield tuple(m[1 : n + 1])
            return
        lo = 0
        if i >= 2:
            lo = max(0, 2 * m[i - 1] - m[i - 2] - deltas[i - 1])
        # m_{n+1} = 0 >= m_i + (n+1-i) * (m_i - m_{i-1} - tail[i])
        k = n + 1 - i
        hi = min(cap, (k * (m[i - 1] + tail[i])) // (k + 1))
        start = lo + ((lo - parity[i - 1]) % 2)
        for v in range(start, hi + 1, 2):
            m[i] = v
            yield from rec(i + 1)
        m[i] = 0

    yield from rec(1)


def _fermionic_sum(L: int, n: int, parity, delta_idx, linear_idx, offset_quarters: int, qf) -> LaurentPoly:
    """Shared kernel: sum over m of q^{qf(m)/4 - linear/2} prod Gaussians.

    ``delta_idx`` are the two i's receiving +1 in the Gaussian tops,
    ``linear_idx`` indexes (m_0..m_{n+1}) for the linear term and ``qf``
    returns the quadratic form in quarter units given (m_0..m_n).
    """
    deltas = [0] * (n + 2)
    for j in delta_idx:
        if 1 <= j <= n:
            deltas[j] += 1
    total = LaurentPoly.zero()
    for mv in _m_vectors(L, n, parity, deltas, L + 2 * (n + 3) ** 2):
        full = (L,) + mv + (0,)
        prod = LaurentPoly.one()
        for i in range(1, n + 1):
            top2 = full[i - 1] + full[i + 1] + deltas[i]
            if top2 % 2:
                raise AssertionError(f"odd Gaussian top at i={i} for m={mv}")
            prod = prod * gaussian_binomial(top2 // 2, full[i])
            if not prod:
                break
        if not prod:
            continue
        lin = full[linear_idx] if 0 <= linear_idx <= n + 1 else 0
        total += prod.shift(offset_quarters + qf(full) - 2 * lin)
    return total


def fermionic_para(p_prime: int, a: int, b: int, c: int, L: int, system: int = 1) -> LaurentPoly:
    """Constant-sign expression for the parafermion function chi^{1,p'}_{a,b,c}(L).

    c = b-1 sums directly; c = b+1 sums the reflected family.
    """
    _check_family(p_prime, a, b, c, L)
    if system not in (1, 2):
        raise ParameterError(f"system must be 1 or 2, got {system}")
    p = p_prime
    t = p - 2
    n = p - 3
    if c == b - 1:
        offset = a - b - L * L
        linear = b - 1
        if system == 1:
            parity = q_vector(u_vector(t, a, b))
            deltas = (a - 1, b - 1)
        else:
            parity = r_vector(u_vector(t, p - a, b))
            deltas = (p - a - 1, b - 1)
    else:
        offset = b - a - L * L
        linear = p - b - 1
        if system == 1:
            parity = q_vector(u_vector(t, p - a, p - b))
            deltas = (p - a - 1, p - b - 1)
        else:
            parity = r_vector(u_vector(t, a, p - b))
            deltas = (a - 1, p - b - 1)

    def qf(full):
        return quadratic_form(full[: n + 1])

    return _fermionic_sum(L, n, parity, deltas, linear, offset, qf)


def fermionic_abf(p_prime: int, a: int, b: int, c: int, L: int, system: int = 1) -> LaurentPoly:
    """Constant-sign expression for the renormalized ABF function chi^{p'-1,p'}_{a,b,c}(L)."""
    _check_family(p_prime, a, b, c, L)
    if system not in (1, 2):
        raise ParameterError(f"system must be 1 or 2, got {system}")
    p = p_prime
    t = p - 2
    n = p - 3
    if c == b - 1:
        if b <= 1:
            raise ParameterError("c = b-1 requires b > 1")
        if system == 1:
            parity = q_vector(u_vector(t, a, b))
            deltas, linear = (a - 1, b - 1), a - 1
        else:
            parity = r_vector(u_vector(t, p - a, b))
            deltas, linear = (p - a - 1, b - 1), p - a - 1
    else:
        if b >= p - 1:
            raise ParameterError("c = b+1 requires b < p'-1")
        if system == 1:
            parity = q_vector(u_vector(t, p - a, p - b))
            deltas, linear = (p - a - 1, p - b - 1), p - a - 1
        else:
            parity = r_vector(u_vector(t, a, p - b))
            deltas, linear = (a - 1, p - b - 1), a - 1
    # m'_0 = 0 in the linear term
    if linear == 0:
        linear = -1
    offset = -(a - b) * (a - c)

    def qf(full):
        return quadratic_form(full[1 : n + 1])

    return _fermionic_sum(L, n, parity, deltas, linear, offset, qf)


def dual(p: LaurentPoly, L: int, a: int, b: int) -> LaurentPoly:
    """q^{(L^2-(a-b)^2)/4} p(1/q); maps chi^{p'-1,p'} to chi^{1,p'} and back."""
    return p.invert_q().shift(L * L - (a - b) ** 2)
