"""T-shaped Dynkin diagrams, their Cartan matrices and finite root systems.

The diagram ``T_{p,q,r}`` has a trivalent node ``u`` with three arms of
``p-1``, ``q-1`` and ``r-1`` nodes.  Nodes are always ordered as::

    x_{p-1}, ..., x_1, u, y_1, ..., y_{q-1}, z_1, ..., z_{r-1}

and every weight or root vector in this package is indexed in that order.
For ``p = 2`` this is the reading order of the usual weight pictures: the top
row ``x1 u y1 y2 ...`` followed by the column ``z1 z2 ...`` hanging from ``u``.

Correspondence with Bourbaki labels (documentation only, never used in code):

* E6 = T(2,3,3): a1=z2, a2=x1, a3=z1, a4=u, a5=y1, a6=y2
* E7 = T(2,4,3): a1=z2, a2=x1, a3=z1, a4=u, a5=y1, a6=y2, a7=y3
* E8 = T(2,5,3): a1=z2, a2=x1, a3=z1, a4=u, a5=y1, ..., a8=y4
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

Node = Union[str, int]
Vector = tuple[int, ...]

# named presets; the long arm is the y arm, matching the weight pictures
PRESETS: dict[str, tuple[int, int, int]] = {
    "e6": (2, 3, 3),
    "e7": (2, 4, 3),
    "e8": (2, 5, 3),
    "t244": (2, 4, 4),
    "t236": (2, 3, 6),
}


class NotFiniteType(ValueError):
    """Raised when an operation needs a finite root system."""


@dataclass(frozen=True)
class TDiagram:
    p: int
    q: int
    r: int
    nodes: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def rank(self) -> int:
        return len(self.nodes)

    def index(self, node: Node) -> int:
        """Position of ``node`` (a name such as ``"y2"`` or an index)."""
        if isinstance(node, int) and not isinstance(node, bool):
            if 0 <= node < self.rank:
                return node
            raise KeyError(f"node index {node} out of range for {self}")
        try:
            return self._positions[node]
        except KeyError:
            raise KeyError(f"unknown node {node!r} in T({self.p},{self.q},{self.r})") from None

    def name(self, i: int) -> str:
        return self.nodes[i]

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {n: i for i, n in enumerate(self.nodes)}

    @cached_property
    def neighbours(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in self.nodes]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def cartan(self) -> tuple[Vector, ...]:
        """Symmetric Cartan matrix: 2 on the diagonal, -1 on edges."""
        n = self.rank
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = 2
        for a, b in self.edges:
            rows[a][b] = rows[b][a] = -1
        return tuple(tuple(row) for row in rows)

    @cached_property
    def inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        import sympy

        inv = sympy.Matrix(self.cartan).inv()
        n = self.rank
        return tuple(
            tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(n))
            for i in range(n)
        )

    def __str__(self) -> str:
        return f"T({self.p},{self.q},{self.r})"


def build_diagram(p: int, q: int, r: int) -> TDiagram:
    for name, value in (("p", p), ("q", q), ("r", r)):
        if not isinstance(value, int) or value < 1:
            raise ValueError(f"arm parameter {name} must be a positive integer, got {value!r}")
    nodes = (
        [f"x{i}" for i in range(p - 1, 0, -1)]
        + ["u"]
        + [f"y{i}" for i in range(1, q)]
        + [f"z{i}" for i in range(1, r)]
    )
    pos = {n: i for i, n in enumerate(nodes)}
    edges = []
    for arm, length in (("x", p - 1), ("y", q - 1), ("z", r - 1)):
        prev = "u"
        for i in range(1, length + 1):
            edges.append((pos[prev], pos[f"{arm}{i}"]))
            prev = f"{arm}{i}"
    return TDiagram(p, q, r, tuple(nodes), tuple(sorted(tuple(sorted(e)) for e in edges)))


def parse_diagram(text: str) -> TDiagram:
    """Parse ``"p,q,r"`` or a preset name such as ``"e7"``."""
    key = text.strip().lower()
    if key in PRESETS:
        return build_diagram(*PRESETS[key])
    try:
        p, q, r = (int(part) for part in key.split(","))
    except ValueError:
        raise ValueError(f"diagram must look like 'p,q,r' or be one of {sorted(PRESETS)}: {text!r}") from None
    return build_diagram(p, q, r)


def classify(d: TDiagram) -> str:
    s = Fraction(1, d.p) + Fraction(1, d.q) + Fraction(1, d.r)
    if s > 1:
        return "finite"
    if s == 1:
        return "affine"
    return "indefinite"


def cartan_determinant(d: TDiagram) -> int:
    import sympy

    return int(sympy.Matrix(d.cartan).det())


def simple_root_weight(d: TDiagram, i: Node) -> Vector:
    """The simple root ``alpha_i`` in the fundamental-weight basis."""
    j = d.index(i)
    return tuple(row[j] for row in d.cartan)


def root_to_weight(d: TDiagram, beta: Sequence[int]) -> Vector:
    """Convert simple-root coordinates to fundamental-weight coordinates."""
    return tuple(sum(a * b for a, b in zip(row, beta)) for row in d.cartan)


def weight_to_root(d: TDiagram, mu: Sequence[int]) -> tuple[Fraction, ...]:
    """Convert fundamental-weight coordinates to (rational) simple-root coordinates."""
    return tuple(sum((c * m for c, m in zip(row, mu)), Fraction(0)) for row in d.inverse_cartan)


def pairing(beta: Sequence[int], mu: Sequence[int]) -> int:
    """``<mu, beta^vee>`` for a root in root coordinates and a weight in fundamental ones."""
    return sum(b * m for b, m in zip(beta, mu))


def reflect_root(d: TDiagram, beta: Sequence[int], i: Node) -> Vector:
    j = d.index(i)
    c = sum(beta[k] * d.cartan[k][j] for k in range(d.rank))
    out = list(beta)
    out[j] -= c
    return tuple(out)


def _require_finite(d: TDiagram) -> None:
    if classify(d) != "finite":
        raise NotFiniteType(f"{d} is {classify(d)}; a finite root system is required")


def _positive_roots_of(d: TDiagram, support: Iterable[int]) -> list[Vector]:
    support = sorted(set(support))
    n = d.rank
    simple = []
    for i in support:
        e = [0] * n
        e[i] = 1
        simple.append(tuple(e))
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in support:
                gamma = reflect_root(d, beta, i)
                if gamma not in seen and all(c >= 0 for c in gamma):
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return sorted(seen, key=lambda b: (sum(b), b))


def positive_roots(d: TDiagram) -> list[Vector]:
    """All positive roots, sorted by height, found by reflection saturation."""
    _require_finite(d)
    return _positive_roots_of(d, range(d.rank))


def sub_positive_roots(d: TDiagram, nodes: Iterable[Node]) -> list[Vector]:
    """Positive roots of the sub-root-system spanned by ``nodes``."""
    idx = [d.index(v) for v in nodes]
    _require_finite(d)
    return _positive_roots_of(d, idx)


def components(d: TDiagram, nodes: Iterable[Node]) -> list[list[int]]:
    """Connected components of the induced subdiagram, each sorted."""
    left = {d.index(v) for v in nodes}
    out = []
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        while stack:
            a = stack.pop()
            for b in d.neighbours[a]:
                if b in left and b not in comp:
                    comp.add(b)
                    stack.append(b)
        left -= comp
        out.append(sorted(comp))
    return sorted(out)


def _component_type(d: TDiagram, comp: list[int]) -> tuple[str, int]:
    cs = set(comp)
    degree = {a: len(d.neighbours[a] & cs) for a in comp}
    n = len(comp)
    branch = [a for a in comp if degree[a] == 3]
    if not branch:
        return "A", n
    # three arms out of the branch node
    center = branch[0]
    arms = []
    for start in d.neighbours[center] & cs:
        length, prev, cur = 1, center, start
        while True:
            nxt = [b for b in d.neighbours[cur] & cs if b != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    a, b, c = sorted(arms)
    if a == 1 and b == 1:
        return "D", n
    if (a, b) == (1, 2) and c in (2, 3, 4):
        return "E", n
    raise NotFiniteType("subdiagram is not of finite type")


def cartan_type(d: TDiagram, nodes: Iterable[Node] | None = None) -> str:
    """Cartan type label of a subdiagram, e.g. ``"A5"`` or ``"A1xA3"``."""
    nodes = range(d.rank) if nodes is None else nodes
    parts = [f"{t}{n}" for t, n in (_component_type(d, c) for c in components(d, nodes))]
    return "x".join(parts) if parts else "trivial"


def weyl_group_order(d: TDiagram, nodes: Iterable[Node] | None = None) -> int:
    """Order of the (parabolic) Weyl group generated by ``nodes``."""
    nodes = range(d.rank) if nodes is None else nodes
    order = 1
    for comp in components(d, nodes):
        kind, n = _component_type(d, comp)
        if kind == "A":
            order *= math.factorial(n + 1)
        elif kind == "D":
            order *= 2 ** (n - 1) * math.factorial(n)
        else:
            order *= {6: 51840, 7: 2903040, 8: 696729600}[n]
    return order


def lie_algebra_dimension(d: TDiagram) -> int:
    return 2 * len(positive_roots(d)) + d.rank
