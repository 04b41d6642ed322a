"""Arithmetic on graded free resolution formats of cyclic modules.

A format stores, for each homological degree, the generation degrees of its
free summands: ``[[0], [3, 3, 3, 3, 4], [5] * 6, [7, 7]]`` stands for
``0 -> A^2(-7) -> A^6(-5) -> A(-4) + A^4(-3) -> A``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence


class NotDivisible(ArithmeticError):
    """The K-polynomial is not divisible by the requested power of (1 - t)."""


class NoIntegerSolution(ValueError):
    pass


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial in ``t``; ``coeffs[k]`` is the coefficient of ``t^k``."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> IntPoly:
        acc: Counter = Counter()
        for exp, coef in terms:
            if exp < 0:
                raise ValueError("negative exponent")
            acc[exp] += coef
        top = max(acc, default=-1)
        return cls(tuple(acc.get(k, 0) for k in range(top + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        if not self.coeffs or not other.coeffs:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    def __call__(self, t: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def derivative(self) -> IntPoly:
        return IntPoly(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def divide_one_minus_t(self) -> IntPoly:
        """Exact quotient by ``(1 - t)``; raises :class:`NotDivisible` otherwise."""
        if self(1) != 0:
            raise NotDivisible("polynomial does not vanish at t = 1")
        # p(t) = (1 - t) q(t)  =>  q_k = sum_{j <= k} p_j
        q, run = [], 0
        for c in self.coeffs[:-1]:
            run += c
            q.append(run)
        return IntPoly(tuple(q))

    def is_palindromic(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if a == 1 else f"{a}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def one_minus_t_power(c: int) -> IntPoly:
    out = IntPoly((1,))
    for _ in range(c):
        out = out * IntPoly((1, -1))
    return out


@dataclass(frozen=True)
class GradedFormat:
    twists: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        tw = tuple(tuple(sorted(int(x) for x in deg)) for deg in self.twists)
        if not tw or tw[0] != (0,):
            raise ValueError("homological degree 0 must be the single summand A")
        for i, deg in enumerate(tw[1:], start=1):
            if not deg:
                raise ValueError(f"homological degree {i} is empty")
            if any(x <= 0 for x in deg):
                raise ValueError(f"twists must be positive, got {deg} in degree {i}")
        object.__setattr__(self, "twists", tw)

    @classmethod
    def of(cls, *degrees: Sequence[int]) -> GradedFormat:
        return cls(tuple(tuple(d) for d in degrees))

    @classmethod
    def from_json(cls, text: str) -> GradedFormat:
        return cls(tuple(tuple(d) for d in json.loads(text)))

    def to_json(self) -> str:
        return json.dumps([list(d) for d in self.twists])

    @property
    def length(self) -> int:
        return len(self.twists) - 1

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(len(d) for d in self.twists)

    def __str__(self) -> str:
        pieces = []
        for deg in self.twists:
            terms = []
            for twist, mult in sorted(Counter(deg).items(), reverse=True):
                power = "" if mult == 1 else f"^{mult}"
                terms.append(f"A{power}" if twist == 0 else f"A{power}(-{twist})")
            pieces.append(" + ".join(terms))
        return " -> ".join(["0"] + pieces[::-1])


def koszul_format(degrees: Sequence[int]) -> GradedFormat:
    from itertools import combinations

    degrees = sorted(degrees)
    return GradedFormat(
        tuple(
            tuple(sum(c) for c in combinations(degrees, k)) for k in range(len(degrees) + 1)
        )
    )


def k_polynomial(F: GradedFormat) -> IntPoly:
    return IntPoly.from_terms((d, (-1) ** i) for i, deg in enumerate(F.twists) for d in deg)


def hilbert_numerator(F: GradedFormat, codim: int) -> IntPoly:
    """``K(t) / (1 - t)^codim``, the numerator of the reduced Hilbert series."""
    p = k_polynomial(F)
    for _ in range(codim):
        p = p.divide_one_minus_t()
    return p


def degree_of(F: GradedFormat, codim: int) -> int:
    return hilbert_numerator(F, codim)(1)


def linkage_dual(F: GradedFormat, ci: Sequence[int]) -> GradedFormat:
    """Resolution of the linked ideal ``(alpha) : I`` from the dual mapping cone.

    ``ci`` are the degrees of the complete intersection ``alpha`` contained in ``I``.
    Only the cancellations forced by the twists are made: the comparison map
    ``A -> A`` and the ci generators that are minimal generators of ``I``.
    Further pairs, such as Koszul relations that happen to be minimal syzygies,
    depend on the maps and are left in place.
    """
    if F.length != 3:
        raise ValueError("linkage is implemented for length-3 formats")
    if len(ci) != 3 or any(d <= 0 for d in ci):
        raise ValueError("ci must be three positive degrees")
    s = sum(ci)
    K = koszul_format(ci)
    # the cone of K -> F has C_i = F_i + K_{i-1}; its dual into A(-s),
    # read backwards, has D_j = K_{3-j}^* + F_{4-j}^*
    dual = []
    for j in range(5):
        src = list(K.twists[3 - j]) if j <= 3 else []
        if j >= 1:
            src += list(F.twists[4 - j])
        dual.append([s - d for d in src])
    if any(x < 0 for deg in dual for x in deg):
        raise ValueError(f"complete intersection degrees {tuple(ci)} do not fit this format")
    # split-off pairs: the comparison map A -> A, and each ci generator
    # that is also a minimal generator of I (K_1 -> F_1 is the identity there)
    split = Counter(ci) & Counter(F.twists[1])
    pairs = [(3, Counter([s])), (2, Counter(s - d for d in split.elements()))]
    terms = [Counter(deg) for deg in dual]
    for j, shared in pairs:
        terms[j] -= shared
        terms[j + 1] -= shared
    out = [sorted(t.elements()) for t in terms]
    while out and not out[-1]:
        out.pop()
    return GradedFormat(tuple(tuple(d) for d in out))


def gorenstein_sum(F: GradedFormat, s: int) -> GradedFormat:
    """Cone of ``F^*(-s) -> F`` without cancellation (resolution of ``I + I'``)."""
    if F.length != 3:
        raise ValueError("the Gorenstein sum is implemented for length-3 formats")
    if s <= max(max(deg) for deg in F.twists):
        raise ValueError(f"shift {s} must exceed every twist of the format")
    c = F.length
    dual = [[s - d for d in F.twists[c - j]] for j in range(c + 1)]
    terms = [list(F.twists[0])]
    for i in range(1, c + 1):
        terms.append(list(F.twists[i]) + dual[i - 1])
    terms.append(dual[c])
    return GradedFormat(tuple(tuple(t) for t in terms))


@dataclass(frozen=True)
class BettiSolution:
    n: int
    degree_sum: int
    square_sum: int
    tangent: bool
    degrees: tuple[int, ...] | None
    diagnostic: str


def betti_degree_solve(
    gens: Sequence[int], top: Sequence[int], n: int, codim: int = 3
) -> BettiSolution:
    """Solve for the ``n`` middle twists of ``A <- A(-gens) <- A^n <- A(-top)``.

    Divisibility of ``K(t)`` by ``(1 - t)^3`` fixes the sum and the sum of
    squares of the unknown degrees.  When the plane ``sum d = S`` touches the
    sphere ``sum d^2 = Q`` (equality in Cauchy-Schwarz) the solution is unique.
    """
    if codim != 3:
        raise ValueError("only the codimension-3 case is supported")
    if n < 1:
        raise ValueError("n must be positive")
    if 1 - len(gens) + n - len(top) != 0:
        raise NoIntegerSolution("ranks do not give an alternating sum of zero")
    # K'(1) = 0 and K''(1) = 0
    s1 = sum(gens) + sum(top)
    falling = sum(g * (g - 1) for g in gens) + sum(t * (t - 1) for t in top)
    s2 = falling + s1
    gap = n * s2 - s1 * s1
    if gap < 0:
        raise NoIntegerSolution(f"sum {s1} and square sum {s2} admit no real solution for n = {n}")
    if gap == 0:
        d, rem = divmod(s1, n)
        if rem or d <= 0:
            raise NoIntegerSolution(f"tangency point {s1}/{n} is not a positive integer")
        return BettiSolution(n, s1, s2, True, (d,) * n, f"tangent at ({d}^{n})")
    return BettiSolution(
        n, s1, s2, False, None, f"plane sum={s1} cuts the sphere sum_sq={s2}; solution not unique"
    )
