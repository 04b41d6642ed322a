"""The quartic SL_6-invariant on the third exterior power of k^6.

For a 3-form ``w`` the map ``A(w): e_i^* -> (i_{e_i^*} w) ^ w`` lands in
``Lambda^5 k^6``, which is ``(k^6)^* (x) Lambda^6 k^6``; so ``A(w)`` is an
endomorphism of ``(k^6)^*`` twisted by the determinant and ``tr A(w)^2`` is a
quartic with ``Delta(g w) = det(g)^2 Delta(w)``.  The quartic is normalised to
coprime integer coefficients with a positive leading term.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .exterior import MultiVector, contract, subsets, wedge
from .polynomial import SparsePoly

N = 6
TRIPLES: tuple[tuple[int, int, int], ...] = tuple(subsets(3, N))
VARIABLE_NAMES: tuple[str, ...] = tuple("x" + "".join(map(str, t)) for t in TRIPLES)
NVARS = len(TRIPLES)

# degree and variable count of the analogous hyperdiscriminants
HYPERDISCRIMINANTS = {"e6": (4, 20), "e7": (7, 35), "e8": (16, 56)}


def variable_index(triple: Sequence[int]) -> int:
    return TRIPLES.index(tuple(sorted(triple)))


def generic_form() -> MultiVector:
    """The 3-form ``sum_T x_T e_T`` with one indeterminate per triple."""
    return MultiVector(3, {t: SparsePoly.variable(NVARS, i) for i, t in enumerate(TRIPLES)}, N)


def _complement(j: int) -> tuple[int, ...]:
    return tuple(k for k in range(1, N + 1) if k != j)


def twisted_operator(omega: MultiVector) -> list[list]:
    """Matrix of ``A(omega)``: column ``i`` is ``(i_i omega) ^ omega`` in the dual basis."""
    if omega.degree != 3 or omega.n != N:
        raise ValueError("expected a 3-form on k^6")
    rows = [[0] * N for _ in range(N)]
    for i in range(1, N + 1):
        five = wedge(contract(i, omega), omega)
        for j in range(1, N + 1):
            # e_j^* corresponds to i_{e_j^*}(e_1..e_6) = (-1)^(j-1) e_{complement of j}
            c = five[_complement(j)]
            rows[j - 1][i - 1] = c if j % 2 == 1 else -c
    return rows


@lru_cache(maxsize=1)
def delta_polynomial() -> SparsePoly:
    A = twisted_operator(generic_form())
    trace = SparsePoly(NVARS)
    for i in range(N):
        for j in range(N):
            if A[i][j] != 0 and A[j][i] != 0:
                trace = trace + A[i][j] * A[j][i]
    g = trace.content()
    delta = trace.exact_div(g)
    if delta.sorted_terms()[0][1] < 0:
        delta = -delta
    return delta


def coefficient_vector(omega: MultiVector | Mapping[Sequence[int], int]) -> list[int]:
    """Values of the 20 variables at a concrete 3-form."""
    terms = omega.terms if isinstance(omega, MultiVector) else omega
    out = [0] * NVARS
    for key, c in terms.items():
        out[variable_index(key)] = int(c)
    return out


def evaluate_delta(omega: MultiVector | Mapping[Sequence[int], int]) -> int:
    return delta_polynomial()(coefficient_vector(omega))


def parse_coefficients(data: Mapping[str, int]) -> MultiVector:
    """Read ``{"1,2,3": 1, "4,5,6": 1}`` into a 3-form."""
    from .exterior import _sort_sign

    terms: dict[tuple[int, ...], int] = {}
    for key, value in data.items():
        idx = tuple(int(x) for x in key.split(","))
        if len(idx) != 3:
            raise ValueError(f"key {key!r} is not a triple")
        sign, sorted_key = _sort_sign(idx)
        if sign == 0:
            raise ValueError(f"key {key!r} repeats an index")
        terms[sorted_key] = terms.get(sorted_key, 0) + sign * int(value)
    return MultiVector(3, terms, N)


@dataclass(frozen=True)
class SplitBasis:
    f_part: tuple[int, ...]
    g_part: tuple[int, ...]

    def __post_init__(self) -> None:
        f, g = tuple(sorted(self.f_part)), tuple(sorted(self.g_part))
        if set(f) & set(g) or set(f) | set(g) != set(range(1, N + 1)):
            raise ValueError("F and G must split {1, ..., 6}")
        object.__setattr__(self, "f_part", f)
        object.__setattr__(self, "g_part", g)

    @classmethod
    def standard(cls, dim_f: int) -> SplitBasis:
        return cls(tuple(range(1, dim_f + 1)), tuple(range(dim_f + 1, N + 1)))


def derivative_variables(split: SplitBasis, variety: str) -> list[int]:
    """Variables whose partials join Delta as generators."""
    f, g = split.f_part, split.g_part
    if variety == "sigma3":
        if len(f) != 4:
            raise ValueError("sigma3 needs dim F = 4")
        triples = [t for t in TRIPLES if set(t) <= set(f)]
    elif variety == "sigma3p":
        if len(f) != 2:
            raise ValueError("sigma3p needs dim F' = 2")
        triples = [tuple(sorted(f + (k,))) for k in g]
    else:
        raise ValueError(f"unknown variety {variety!r}")
    return sorted(variable_index(t) for t in triples)


def generator_set(split: SplitBasis, variety: str) -> list[SparsePoly]:
    delta = delta_polynomial()
    return [delta] + [delta.derivative(i) for i in derivative_variables(split, variety)]


def variable_weights() -> list[tuple[int, ...]]:
    """Torus weight of each variable ``x_T``: the indicator vector of ``T``."""
    return [tuple(1 if k in t else 0 for k in range(1, N + 1)) for t in TRIPLES]


def emit_cas_script(
    gens: Sequence[SparsePoly], dialect: str = "macaulay2", title: str | None = None
) -> str:
    """Script declaring the ring and ideal and computing codimension and Betti numbers."""
    if not gens:
        raise ValueError("need at least one generator")
    names = list(VARIABLE_NAMES)
    header = title or "restricted Schubert ideal"
    polys = [g.to_string(names) for g in gens]
    if dialect in ("macaulay2", "m2"):
        lines = [f"-- {header}", f"-- {len(gens)} generators of degrees {[g.total_degree for g in gens]}"]
        lines.append(f"R = QQ[{', '.join(names)}];")
        lines.append("I = ideal(")
        lines.extend(f"    {p}{',' if k < len(polys) - 1 else ''}" for k, p in enumerate(polys))
        lines.append(");")
        lines.append("print codim I")
        lines.append("print betti res I")
    elif dialect == "singular":
        lines = [f"// {header}", f"// {len(gens)} generators of degrees {[g.total_degree for g in gens]}"]
        lines.append(f"ring R = 0, ({', '.join(names)}), dp;")
        lines.append("ideal I =")
        lines.extend(f"    {p}{',' if k < len(polys) - 1 else ';'}" for k, p in enumerate(polys))
        lines.append("ideal J = std(I);")
        lines.append("print(nvars(R) - dim(J));")
        lines.append("print(betti(mres(I, 0)), \"betti\");")
    else:
        raise ValueError(f"unsupported dialect {dialect!r}")
    return "\n".join(lines) + "\n"
