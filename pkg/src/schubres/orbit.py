"""The coset poset W/W_P for P = P_{x1}, realised as the W-orbit of omega_{x1}.

Elements are found by breadth-first search from ``omega_{x1}``: an edge
``w -> s_i w`` exists whenever the ``i``-th coordinate of ``w . omega`` is
positive, and it raises the length by one.  Distinct cosets have distinct
weights, so elements are deduplicated by weight.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .diagram import (
    Node,
    TDiagram,
    Vector,
    build_diagram,
    classify,
    simple_root_weight,
    weight_to_root,
)

SCHEMA = 1


class IncompleteOrbit(ValueError):
    """An operation needed the full orbit but the poset was truncated."""


def reflect(d: TDiagram, mu: Sequence[int], i: Node) -> Vector:
    """``s_i(mu) = mu - mu_i alpha_i`` in fundamental-weight coordinates."""
    j = d.index(i)
    c = mu[j]
    if c == 0:
        return tuple(mu)
    alpha = simple_root_weight(d, j)
    return tuple(m - c * a for m, a in zip(mu, alpha))


def fundamental_weight(d: TDiagram, i: Node) -> Vector:
    j = d.index(i)
    return tuple(1 if k == j else 0 for k in range(d.rank))


@dataclass(frozen=True)
class CosetElement:
    id: int
    weight: Vector
    length: int
    reduced_word: tuple[str, ...]  # in order of application to omega_{x1}
    covers_from: tuple[int, ...]


@dataclass
class OrbitPoset:
    diagram: TDiagram
    elements: list[CosetElement]
    edges: list[tuple[int, int, str]]
    max_length: int | None
    complete: bool
    _by_weight: dict[Vector, int] = field(default_factory=dict, repr=False)
    _leq_memo: dict[tuple[int, int], bool] = field(default_factory=dict, repr=False)
    _grades: list[Fraction] | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if not self._by_weight:
            self._by_weight = {e.weight: e.id for e in self.elements}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, key: int) -> CosetElement:
        return self.elements[key]

    def get(self, weight: Sequence[int]) -> CosetElement:
        try:
            return self.elements[self._by_weight[tuple(weight)]]
        except KeyError:
            raise KeyError(f"weight {tuple(weight)} not in poset") from None

    def __contains__(self, weight) -> bool:
        return tuple(weight) in self._by_weight

    def at_length(self, length: int) -> list[CosetElement]:
        return [e for e in self.elements if e.length == length]

    @property
    def length_bound(self) -> int:
        return max(e.length for e in self.elements)

    def top(self) -> CosetElement:
        self.require_complete()
        return self.elements[-1]

    def require_complete(self) -> None:
        if not self.complete:
            raise IncompleteOrbit(
                f"orbit of {self.diagram} truncated at length {self.max_length}; full orbit required"
            )

    def to_json(self) -> dict:
        d = self.diagram
        return {
            "schema": SCHEMA,
            "diagram": [d.p, d.q, d.r],
            "nodes": list(d.nodes),
            "max_length": self.max_length,
            "complete": self.complete,
            "elements": [
                {
                    "id": e.id,
                    "weight": list(e.weight),
                    "length": e.length,
                    "reduced_word": list(e.reduced_word),
                }
                for e in self.elements
            ],
            "edges": [list(edge) for edge in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> OrbitPoset:
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported poset schema {data.get('schema')!r}")
        d = build_diagram(*data["diagram"])
        preds: dict[int, set[int]] = {}
        edges = [(int(a), int(b), str(n)) for a, b, n in data["edges"]]
        for a, b, _ in edges:
            preds.setdefault(b, set()).add(a)
        elements = [
            CosetElement(
                int(e["id"]),
                tuple(e["weight"]),
                int(e["length"]),
                tuple(e["reduced_word"]),
                tuple(sorted(preds.get(int(e["id"]), ()))),
            )
            for e in data["elements"]
        ]
        return cls(d, elements, edges, data["max_length"], bool(data["complete"]))


def orbit_poset(d: TDiagram, max_length: int | None = None) -> OrbitPoset:
    """Enumerate ``W . omega_{x1}`` layer by layer up to ``max_length``."""
    if d.p < 2:
        raise ValueError(f"{d} has no node x1")
    if max_length is None and classify(d) != "finite":
        raise ValueError(f"{d} is {classify(d)}: the orbit is infinite, give max_length")
    if max_length is not None and max_length < 0:
        raise ValueError("max_length must be nonnegative")

    start = fundamental_weight(d, "x1")
    words: dict[Vector, tuple[str, ...]] = {start: ()}
    layers: list[list[Vector]] = [[start]]
    raw_edges: list[tuple[Vector, Vector, str]] = []
    complete = False
    while True:
        layer = layers[-1]
        if max_length is not None and len(layers) - 1 == max_length:
            complete = not any(c > 0 for mu in layer for c in mu)
            break
        nxt: dict[Vector, None] = {}
        for mu in layer:
            for i, c in enumerate(mu):
                if c > 0:
                    nu = reflect(d, mu, i)
                    raw_edges.append((mu, nu, d.nodes[i]))
                    if nu not in words:
                        words[nu] = words[mu] + (d.nodes[i],)
                        nxt[nu] = None
        if not nxt:
            complete = True
            break
        layers.append(list(nxt))

    ids: dict[Vector, int] = {}
    ordered: list[tuple[Vector, int]] = []
    for length, layer in enumerate(layers):
        for mu in sorted(layer):
            ids[mu] = len(ordered)
            ordered.append((mu, length))
    preds: dict[int, set[int]] = {}
    edges = []
    for a, b, name in raw_edges:
        edges.append((ids[a], ids[b], name))
        preds.setdefault(ids[b], set()).add(ids[a])
    edges.sort()
    elements = [
        CosetElement(i, mu, length, words[mu], tuple(sorted(preds.get(i, ()))))
        for i, (mu, length) in enumerate(ordered)
    ]
    return OrbitPoset(d, elements, edges, max_length, complete)


def _element(P: OrbitPoset, x) -> CosetElement:
    if isinstance(x, CosetElement):
        if x.id >= len(P.elements) or P.elements[x.id].weight != x.weight:
            raise ValueError("element does not belong to this poset")
        return x
    return P.get(x)


def bruhat_leq(P: OrbitPoset, a, b) -> bool:
    """Bruhat order on minimal coset representatives.

    Uses the descent recursion: for a left descent ``s`` of ``b``,
    ``a <= b`` iff ``min(a, s a) <= s b``.
    """
    a = _element(P, a)
    b = _element(P, b)
    return _leq(P, a.id, b.id)


def _leq(P: OrbitPoset, ia: int, ib: int) -> bool:
    memo = P._leq_memo
    key = (ia, ib)
    hit = memo.get(key)
    if hit is not None:
        return hit
    a, b = P.elements[ia], P.elements[ib]
    if a.length > b.length:
        result = False
    elif a.length == b.length:
        result = ia == ib
    elif a.length == 0:
        result = True
    else:
        d = P.diagram
        s = next(i for i, c in enumerate(b.weight) if c < 0)
        sb = P._by_weight[reflect(d, b.weight, s)]
        if a.weight[s] < 0:
            result = _leq(P, P._by_weight[reflect(d, a.weight, s)], sb)
        else:
            result = _leq(P, ia, sb)
    memo[key] = result
    return result


class SigmaChain(NamedTuple):
    sigma0: Vector
    sigma1: Vector
    sigma2: Vector
    sigma3: Vector
    sigma3p: Vector


def sigma_chain(d: TDiagram) -> SigmaChain:
    """The elements of length 0..3 of ``W/W_P``; ``sigma3`` uses z1, ``sigma3p`` uses y1."""
    if d.p < 2 or d.q < 2 or d.r < 2:
        raise ValueError(f"{d}: the sigma chain needs the nodes x1, y1 and z1")
    s0 = fundamental_weight(d, "x1")
    s1 = reflect(d, s0, "x1")
    s2 = reflect(d, s1, "u")
    return SigmaChain(s0, s1, s2, reflect(d, s2, "z1"), reflect(d, s2, "y1"))


def _sort_key(e: CosetElement):
    return (e.length, e.weight)


def complement_filter(P: OrbitPoset, w, L: int) -> list[CosetElement]:
    """All ``tau`` with ``l(tau) <= L`` and ``not (w <= tau)``."""
    w = _element(P, w)
    if L > P.length_bound and not P.complete:
        raise IncompleteOrbit(f"length {L} exceeds the computed bound {P.length_bound}")
    out = [t for t in P.elements if t.length <= L and not _leq(P, w.id, t.id)]
    return sorted(out, key=_sort_key)


def inverse_act_on_root(d: TDiagram, word: Sequence[str], beta: Sequence[int]) -> Vector:
    """``w^{-1}(beta)`` for ``w`` given by its word in order of application."""
    from .diagram import reflect_root

    out = tuple(beta)
    for name in reversed(word):
        out = reflect_root(d, out, name)
    return out


def _chain_order(d: TDiagram) -> list[int]:
    names = (
        [f"z{i}" for i in range(d.r - 1, 0, -1)]
        + ["u"]
        + [f"y{i}" for i in range(1, d.q)]
        + [f"x{i}" for i in range(2, d.p)]
    )
    return [d.index(n) for n in names]


def levi_symmetry(P: OrbitPoset, w) -> tuple[tuple[str, ...], tuple[int, ...]]:
    """Simple roots other than ``x1`` with ``l(s_a w) > l(w)`` and the GL block sizes.

    Blocks are listed along the chain ``z_{r-1} ... z_1 u y_1 ... y_{q-1}``.
    """
    w = _element(P, w)
    if w.reduced_word is None:
        raise ValueError("element has no reduced word")
    d = P.diagram
    x1 = d.index("x1")
    keep = []
    for i in range(d.rank):
        if i == x1:
            continue
        alpha = tuple(1 if k == i else 0 for k in range(d.rank))
        image = inverse_act_on_root(d, w.reduced_word, alpha)
        if all(c >= 0 for c in image):
            keep.append(i)
    keep_set = set(keep)
    blocks, run = [], 0
    for i in _chain_order(d):
        if i in keep_set:
            run += 1
        elif run:
            blocks.append(run + 1)
            run = 0
    if run:
        blocks.append(run + 1)
    return tuple(d.nodes[i] for i in sorted(keep)), tuple(blocks)


def weight_grade(d: TDiagram, mu: Sequence[int], node: Node = "x1") -> Fraction:
    """Coefficient of ``alpha_node`` when ``mu`` is written in simple roots."""
    return weight_to_root(d, mu)[d.index(node)]


def _grades(P: OrbitPoset) -> list[Fraction]:
    if P._grades is None:
        x1 = P.diagram.index("x1")
        row = P.diagram.inverse_cartan[x1]
        P._grades = [sum((c * m for c, m in zip(row, e.weight)), Fraction(0)) for e in P.elements]
    return P._grades


def grade_distribution(P: OrbitPoset) -> Counter:
    """Multiset of x1-grades over the orbit (keys are fractions)."""
    return Counter(_grades(P))


def coordinate_degree(P: OrbitPoset, tau) -> int:
    """Degree of the Pluecker coordinate ``p_tau`` restricted to the big cell."""
    P.require_complete()
    tau = _element(P, tau)
    grades = _grades(P)
    value = grades[tau.id] - min(grades)
    assert value.denominator == 1
    return int(value)


def ci_degrees(P: OrbitPoset) -> tuple[int, int, int]:
    """Degrees of the three coordinates indexed by sigma0, sigma1, sigma2."""
    P.require_complete()
    chain = sigma_chain(P.diagram)
    return tuple(coordinate_degree(P, mu) for mu in chain[:3])


def rank_sizes(P: OrbitPoset) -> list[int]:
    counts = Counter(e.length for e in P.elements)
    return [counts[k] for k in range(P.length_bound + 1)]


def format_weight(d: TDiagram, mu: Sequence[int]) -> str:
    """Render as the top row (x..., u, y...) then ``|`` then the z column."""
    top = [mu[d.index(n)] for n in d.nodes if not n.startswith("z")]
    col = [mu[d.index(n)] for n in d.nodes if n.startswith("z")]
    text = " ".join(str(c) for c in top)
    if col:
        text += " | " + " ".join(str(c) for c in col)
    return f"({text})"


def weight_from_display(d: TDiagram, top: Sequence[int], column: Sequence[int]) -> Vector:
    """Inverse of ``format_weight``: top row then z column."""
    top_nodes = [n for n in d.nodes if not n.startswith("z")]
    col_nodes = [n for n in d.nodes if n.startswith("z")]
    if len(top) != len(top_nodes) or len(column) != len(col_nodes):
        raise ValueError("display shape does not match the diagram")
    out = [0] * d.rank
    for n, c in zip(top_nodes, top):
        out[d.index(n)] = c
    for n, c in zip(col_nodes, column):
        out[d.index(n)] = c
    return tuple(out)
