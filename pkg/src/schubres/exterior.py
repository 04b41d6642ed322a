"""Exterior algebra of a based free module ``k^n`` with basis ``e_1 .. e_n``.

Coefficients may be anything that supports ``+``, ``-``, ``*`` and comparison
with ``0`` (integers, fractions, :class:`~schubres.polynomial.SparsePoly`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable, Mapping

Key = tuple[int, ...]


def _sort_sign(seq: Iterable[int]) -> tuple[int, Key]:
    """Sign of the sorting permutation and the sorted tuple; sign 0 on repeats."""
    items = list(seq)
    if len(set(items)) != len(items):
        return 0, ()
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(items)


@dataclass(frozen=True)
class MultiVector:
    degree: int
    terms: Mapping[Key, Any] = field(default_factory=dict)
    n: int = 6

    def __post_init__(self) -> None:
        clean = {}
        for key, c in self.terms.items():
            key = tuple(key)
            if len(key) != self.degree:
                raise ValueError(f"key {key} has the wrong degree for a {self.degree}-vector")
            if any(a >= b for a, b in zip(key, key[1:])) or any(not 1 <= k <= self.n for k in key):
                raise ValueError(f"key {key} is not a strictly increasing subset of 1..{self.n}")
            if c != 0:
                clean[key] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @classmethod
    def basis(cls, *indices: int, n: int = 6) -> MultiVector:
        sign, key = _sort_sign(indices)
        if sign == 0:
            return cls(len(indices), {}, n)
        return cls(len(indices), {key: sign}, n)

    def __getitem__(self, key: Key) -> Any:
        return self.terms.get(tuple(key), 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: MultiVector) -> MultiVector:
        if other.degree != self.degree or other.n != self.n:
            raise ValueError("can only add multivectors of the same degree")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return MultiVector(self.degree, out, self.n)

    def __neg__(self) -> MultiVector:
        return MultiVector(self.degree, {k: -c for k, c in self.terms.items()}, self.n)

    def __sub__(self, other: MultiVector) -> MultiVector:
        return self + (-other)

    def scale(self, c: Any) -> MultiVector:
        return MultiVector(self.degree, {k: c * v for k, v in self.terms.items()}, self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiVector):
            return NotImplemented
        return (self.degree, self.n, dict(self.terms)) == (other.degree, other.n, dict(other.terms))

    def __hash__(self) -> int:
        return hash((self.degree, self.n, tuple(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return f"MultiVector({self.degree}, 0)"
        body = " + ".join(f"{c}*e{''.join(map(str, k))}" for k, c in self.terms.items())
        return f"MultiVector({self.degree}, {body})"


def wedge(a: MultiVector, b: MultiVector) -> MultiVector:
    if a.n != b.n:
        raise ValueError("multivectors live in different exterior algebras")
    if a.degree + b.degree > a.n:
        raise ValueError(f"degree {a.degree} + {b.degree} exceeds {a.n}")
    out: dict[Key, Any] = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            sign, key = _sort_sign(ka + kb)
            if sign == 0:
                continue
            term = ca * cb if sign > 0 else -(ca * cb)
            out[key] = out[key] + term if key in out else term
    return MultiVector(a.degree + b.degree, out, a.n)


def contract(v: int, a: MultiVector) -> MultiVector:
    """Interior product with the dual basis vector ``e_v^*``."""
    if a.degree < 1:
        raise ValueError("cannot contract a scalar")
    out = {}
    for key, c in a.terms.items():
        if v in key:
            pos = key.index(v)
            out[key[:pos] + key[pos + 1:]] = c if pos % 2 == 0 else -c
    return MultiVector(a.degree - 1, out, a.n)


def subsets(k: int, n: int = 6) -> list[Key]:
    return list(combinations(range(1, n + 1), k))
