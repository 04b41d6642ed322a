"""Sparse multivariate polynomials with integer coefficients."""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class SparsePoly:
    """A polynomial in ``nvars`` variables stored as ``{exponent vector: coefficient}``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            if c:
                clean[tuple(exp)] = int(c)
        self.terms = clean

    @classmethod
    def variable(cls, nvars: int, i: int) -> SparsePoly:
        return cls(nvars, {tuple(1 if k == i else 0 for k in range(nvars)): 1})

    @classmethod
    def constant(cls, nvars: int, c: int) -> SparsePoly:
        return cls(nvars, {(0,) * nvars: c})

    def _coerce(self, other) -> SparsePoly:
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different rings")
            return other
        if isinstance(other, int):
            return SparsePoly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other) -> SparsePoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> SparsePoly:
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> SparsePoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> SparsePoly:
        return (-self) + other

    def __mul__(self, other) -> SparsePoly:
        if isinstance(other, int):
            return SparsePoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return SparsePoly(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == ({(0,) * self.nvars: other} if other else {})
        if isinstance(other, SparsePoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"SparsePoly({self.nvars} vars, {len(self.terms)} terms)"

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def exact_div(self, k: int) -> SparsePoly:
        out = {}
        for e, c in self.terms.items():
            q, r = divmod(c, k)
            if r:
                raise ArithmeticError(f"{k} does not divide coefficient {c}")
            out[e] = q
        return SparsePoly(self.nvars, out)

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms in descending lexicographic order of exponent vectors."""
        return sorted(self.terms.items(), reverse=True)

    def derivative(self, i: int) -> SparsePoly:
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return SparsePoly(self.nvars, out)

    def __call__(self, values: Sequence[int]) -> int:
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values")
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term *= v**k
            total += term
        return total

    def to_string(self, names: Sequence[str], power: str = "^") -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}{power}{k}")
            mono = "*".join(factors)
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


def monomial_weights(p: SparsePoly, weight_of_variable: Sequence[Sequence[int]]) -> set[tuple[int, ...]]:
    """Torus weights of the monomials of ``p``, given a weight for each variable."""
    out = set()
    for e in p.terms:
        w = [0] * len(weight_of_variable[0])
        for k, var_weight in zip(e, weight_of_variable):
            if k:
                for j, x in enumerate(var_weight):
                    w[j] += k * x
        out.add(tuple(w))
    return out


def sum_polys(polys: Iterable[SparsePoly], nvars: int) -> SparsePoly:
    out = SparsePoly(nvars)
    for p in polys:
        out = out + p
    return out
