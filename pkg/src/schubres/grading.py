"""Z-gradings of finite-type Lie algebras and of irreducible modules.

Weight multiplicities come from Freudenthal's recursion, evaluated on dominant
weights only; the full weight system is recovered by expanding Weyl orbits.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .diagram import (
    Node,
    TDiagram,
    Vector,
    cartan_type,
    positive_roots,
    sub_positive_roots,
    weight_to_root,
    weyl_group_order,
)
from .orbit import reflect


@dataclass(frozen=True)
class GradedDims:
    dims: dict[int, int]
    levi: str

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self.dims[k] for k in sorted(self.dims))

    def positive_part(self) -> int:
        return sum(v for k, v in self.dims.items() if k > 0)


def z_grading_dims(d: TDiagram, node: Node = "x1") -> GradedDims:
    """Dimensions of ``g_k`` for the grading by the coefficient of ``alpha_node``."""
    j = d.index(node)
    dims: Counter = Counter()
    for beta in positive_roots(d):
        dims[beta[j]] += 1
        dims[-beta[j]] += 1
    dims[0] += d.rank
    others = [i for i in range(d.rank) if i != j]
    levi = cartan_type(d, others) + "+T1"
    return GradedDims(dict(sorted(dims.items())), levi)


def levi_highest_weight(d: TDiagram, node: Node, grade: int) -> Vector:
    """Highest weight of ``g_grade`` as a module over the Levi, on the other nodes.

    Returned in fundamental coordinates with the ``node`` entry dropped.
    """
    j = d.index(node)
    roots = [b for b in positive_roots(d) if b[j] == grade]
    if not roots:
        raise ValueError(f"no roots of grade {grade}")
    top = max(roots, key=sum)
    mu = tuple(sum(a * b for a, b in zip(row, top)) for row in d.cartan)
    return tuple(c for i, c in enumerate(mu) if i != j)


def big_cell_dimension(d: TDiagram, node: Node = "x1") -> int:
    j = d.index(node)
    others = [i for i in range(d.rank) if i != j]
    return len(positive_roots(d)) - len(sub_positive_roots(d, others))


def _check_dominant(lam: Sequence[int]) -> None:
    if any(c < 0 for c in lam):
        raise ValueError(f"weight {tuple(lam)} is not dominant")


def weyl_dimension(d: TDiagram, lam: Sequence[int]) -> int:
    """Weyl's product formula ``prod (lam+rho, a) / (rho, a)``."""
    _check_dominant(lam)
    num = den = 1
    for beta in positive_roots(d):
        num *= sum((l + 1) * b for l, b in zip(lam, beta))
        den *= sum(beta)
    q, rem = divmod(num, den)
    assert rem == 0
    return q


def _form(d: TDiagram, a: Sequence[int], b: Sequence[int]) -> Fraction:
    """Invariant form on weights in fundamental coordinates, (alpha, alpha) = 2."""
    inv = d.inverse_cartan
    return sum(
        (a[i] * inv[i][k] * b[k] for i in range(d.rank) for k in range(d.rank) if a[i] and b[k]),
        Fraction(0),
    )


def dominant_conjugate(d: TDiagram, mu: Sequence[int]) -> Vector:
    mu = tuple(mu)
    while True:
        for i, c in enumerate(mu):
            if c < 0:
                mu = reflect(d, mu, i)
                break
        else:
            return mu


@dataclass
class WeightSystem:
    diagram: TDiagram
    highest: Vector
    dominant: dict[Vector, int]

    def orbit_size(self, mu: Vector) -> int:
        zeros = [i for i, c in enumerate(mu) if c == 0]
        return weyl_group_order(self.diagram) // weyl_group_order(self.diagram, zeros)

    @property
    def dimension(self) -> int:
        return sum(m * self.orbit_size(mu) for mu, m in self.dominant.items())

    def multiplicity(self, mu: Sequence[int]) -> int:
        return self.dominant.get(dominant_conjugate(self.diagram, mu), 0)

    def weights(self) -> Iterator[tuple[Vector, int]]:
        """Every weight with its multiplicity (orbit by orbit)."""
        d = self.diagram
        for mu, m in self.dominant.items():
            seen = {mu}
            frontier = [mu]
            while frontier:
                nxt = []
                for nu in frontier:
                    yield nu, m
                    for i, c in enumerate(nu):
                        if c > 0:
                            rho = reflect(d, nu, i)
                            if rho not in seen:
                                seen.add(rho)
                                nxt.append(rho)
                frontier = nxt


def weight_multiplicities(d: TDiagram, lam: Sequence[int]) -> WeightSystem:
    """Freudenthal's formula over the dominant weights of ``V_lam``."""
    lam = tuple(lam)
    if len(lam) != d.rank:
        raise ValueError("weight has the wrong number of coordinates")
    _check_dominant(lam)
    roots = positive_roots(d)
    root_weights = [tuple(sum(a * b for a, b in zip(row, beta)) for row in d.cartan) for beta in roots]

    # dominant weights below lam: saturated, so descending by positive roots suffices
    found = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for nu in frontier:
            for rw in root_weights:
                mu = tuple(a - b for a, b in zip(nu, rw))
                if mu not in found and all(c >= 0 for c in mu):
                    found.add(mu)
                    nxt.append(mu)
        frontier = nxt

    lam_root = weight_to_root(d, lam)

    def depth(mu):
        return sum(lam_root) - sum(weight_to_root(d, mu))

    rho = tuple(1 for _ in lam)
    lam_rho = tuple(a + 1 for a in lam)
    norm_top = _form(d, lam_rho, lam_rho)
    mults: dict[Vector, int] = {lam: 1}
    for mu in sorted(found, key=lambda m: (depth(m), m)):
        if mu == lam:
            continue
        gap = [a - b for a, b in zip(lam_root, weight_to_root(d, mu))]
        total = Fraction(0)
        for beta, rw in zip(roots, root_weights):
            k = 1
            while all(g - k * b >= 0 for g, b in zip(gap, beta)):
                nu = tuple(m + k * r for m, r in zip(mu, rw))
                m = mults.get(dominant_conjugate(d, nu), 0)
                if m:
                    # (nu, beta) = <nu, beta^vee> since the diagram is simply laced
                    total += m * sum(c * b for c, b in zip(nu, beta))
                k += 1
        mu_rho = tuple(a + b for a, b in zip(mu, rho))
        value = 2 * total / (norm_top - _form(d, mu_rho, mu_rho))
        assert value.denominator == 1
        if value:
            mults[mu] = int(value)
    return WeightSystem(d, lam, dict(sorted(mults.items(), key=lambda kv: (depth(kv[0]), kv[0]))))


@dataclass(frozen=True)
class GradingRange:
    span: int
    dim_bottom: int
    dim_top: int
    dims: dict[int, int]


def module_grading_range(d: TDiagram, lam: Sequence[int], node: Node = "x1") -> GradingRange:
    """Grading of ``V_lam`` by the ``alpha_node`` coefficient, normalised to start at 0."""
    ws = weight_multiplicities(d, lam)
    j = d.index(node)
    row = d.inverse_cartan[j]
    dims: Counter = Counter()
    for mu, m in ws.weights():
        dims[sum((c * x for c, x in zip(row, mu)), Fraction(0))] += m
    low = min(dims)
    shifted = {}
    for g, v in dims.items():
        k = g - low
        assert k.denominator == 1
        shifted[int(k)] = v
    shifted = dict(sorted(shifted.items()))
    span = max(shifted)
    return GradingRange(span, shifted[0], shifted[span], shifted)


def adjoint_check(d: TDiagram, node: Node = "x1") -> bool:
    """True when ``V_{omega_node}`` is the adjoint representation."""
    j = d.index(node)
    lam = tuple(1 if i == j else 0 for i in range(d.rank))
    roots = positive_roots(d)
    highest = max(roots, key=sum)
    return tuple(sum(a * b for a, b in zip(row, highest)) for row in d.cartan) == lam
