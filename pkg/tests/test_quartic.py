from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations
from pathlib import Path

import numpy as np
import pytest
import sympy

from schubres.exterior import MultiVector, contract, subsets, wedge
from schubres.polynomial import SparsePoly, monomial_weights, sum_polys
from schubres.quartic import (
    HYPERDISCRIMINANTS,
    NVARS,
    TRIPLES,
    VARIABLE_NAMES,
    SplitBasis,
    coefficient_vector,
    delta_polynomial,
    derivative_variables,
    emit_cas_script,
    evaluate_delta,
    generator_set,
    parse_coefficients,
    variable_weights,
)

GOLDEN = Path(__file__).parent / "golden"


def _perm_sign(p):
    sign, p = 1, list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


EPS = np.zeros((6,) * 6, dtype=np.int64)
for _p in permutations(range(6)):
    EPS[_p] = _perm_sign(_p)


def _tensor(coeffs):
    """Fully antisymmetric 6x6x6 array of a 3-form given on sorted triples."""
    W = np.zeros((6, 6, 6), dtype=np.int64)
    for (i, j, k), c in coeffs.items():
        for p in permutations((0, 1, 2)):
            idx = tuple((i - 1, j - 1, k - 1)[q] for q in p)
            W[idx] = _perm_sign(p) * c
    return W


def _from_tensor(W):
    return {t: int(W[t[0] - 1, t[1] - 1, t[2] - 1]) for t in TRIPLES}


def _trace_oracle(coeffs):
    # M[i, j] ~ (i_i w) ^ w ^ e_j, via the Levi-Civita symbol
    W = _tensor(coeffs)
    M = np.einsum("bcdefj,ibc,def->ij", EPS, W, W)
    return int(np.trace(M @ M))


def _random_form(rng, spread=3):
    return {t: rng.randint(-spread, spread) for t in TRIPLES}


# -- exterior algebra ------------------------------------------------------


def test_wedge_examples():
    e = lambda *i: MultiVector.basis(*i)  # noqa: E731
    assert wedge(e(1), e(2)) == e(1, 2)
    assert not wedge(e(1, 2), e(1, 3))
    assert wedge(e(1, 2, 3), e(4, 5, 6)) == MultiVector(6, {(1, 2, 3, 4, 5, 6): 1})
    assert wedge(e(2), e(1)) == MultiVector(2, {(1, 2): -1})
    assert e(3, 1) == MultiVector(2, {(1, 3): -1})
    with pytest.raises(ValueError):
        wedge(e(1, 2, 3, 4), e(5, 6, 1))


def test_contract_examples():
    e123 = MultiVector.basis(1, 2, 3)
    assert contract(1, e123) == MultiVector.basis(2, 3)
    assert contract(2, e123) == MultiVector(2, {(1, 3): -1})
    assert not contract(4, e123)
    with pytest.raises(ValueError):
        contract(1, MultiVector(0, {(): 1}))


def test_graded_anticommutativity_and_leibniz():
    rng = random.Random(1)
    for _ in range(20):
        a = MultiVector(2, {t: rng.randint(-2, 2) for t in subsets(2)})
        b = MultiVector(3, {t: rng.randint(-2, 2) for t in subsets(3)})
        assert wedge(a, b) == wedge(b, a).scale((-1) ** 6)
        c = MultiVector(1, {(k,): rng.randint(-2, 2) for k in range(1, 7)})
        assert wedge(c, c) == MultiVector(2, {})
        for v in range(1, 7):
            assert not contract(v, contract(v, b))
            # i_v(a ^ b) = i_v a ^ b + a ^ i_v b
            lhs = contract(v, wedge(a, b))
            rhs = wedge(contract(v, a), b) + wedge(a, contract(v, b))
            assert lhs == rhs


def test_multivector_validation():
    with pytest.raises(ValueError):
        MultiVector(2, {(2, 1): 1})
    with pytest.raises(ValueError):
        MultiVector(1, {(7,): 1})


# -- the invariant -----------------------------------------------------------


def test_delta_shape():
    D = delta_polynomial()
    assert D.nvars == NVARS == 20 and len(VARIABLE_NAMES) == 20
    assert D.total_degree == 4 and D.is_homogeneous()
    assert D.content() == 1
    exp, coef = D.sorted_terms()[0]
    assert coef > 0
    assert D.to_string(VARIABLE_NAMES).startswith("x123^2*x456^2")


def test_delta_values():
    assert evaluate_delta({(1, 2, 3): 1, (4, 5, 6): 1}) != 0
    assert evaluate_delta({(1, 2, 3): 1}) == 0
    # another decomposable form: (e1 + e4) ^ (e2 - e5) ^ e3
    v = [MultiVector.basis(1) + MultiVector.basis(4), MultiVector.basis(2) - MultiVector.basis(5), MultiVector.basis(3)]
    assert evaluate_delta(wedge(wedge(v[0], v[1]), v[2])) == 0


def test_delta_matches_trace_oracle():
    rng = random.Random(7)
    ratios = set()
    for _ in range(15):
        w = _random_form(rng)
        d, t = evaluate_delta(w), _trace_oracle(w)
        assert (d == 0) == (t == 0)
        if d:
            ratios.add(Fraction(t, d))
    assert len(ratios) == 1 and 0 not in ratios


def test_det_squared_equivariance():
    rng = random.Random(2024)
    for _ in range(100):
        g = np.array([[rng.randint(-3, 3) for _ in range(6)] for _ in range(6)], dtype=np.int64)
        w = _random_form(rng, 2)
        gw = _from_tensor(np.einsum("ai,bj,ck,ijk->abc", g, g, g, _tensor(w)))
        det = int(sympy.Matrix(g.tolist()).det())
        assert evaluate_delta(gw) == det ** 2 * evaluate_delta(w)


def test_homogeneity_and_euler():
    D = delta_polynomial()
    rng = random.Random(3)
    for _ in range(10):
        x = [rng.randint(-4, 4) for _ in range(NVARS)]
        t = rng.randint(-3, 3)
        assert D([t * c for c in x]) == t ** 4 * D(x)
    euler = sum_polys((SparsePoly.variable(NVARS, i) * D.derivative(i) for i in range(NVARS)), NVARS)
    assert euler == D * 4


def test_parse_coefficients():
    w = parse_coefficients({"1,2,3": 1, "6,5,4": 1})
    assert coefficient_vector(w)[TRIPLES.index((4, 5, 6))] == -1
    with pytest.raises(ValueError):
        parse_coefficients({"1,1,2": 1})
    with pytest.raises(ValueError):
        parse_coefficients({"1,2": 1})


# -- generator sets ----------------------------------------------------------


@pytest.mark.parametrize("variety,dim_f", [("sigma3", 4), ("sigma3p", 2)])
def test_generator_degrees(variety, dim_f):
    gens = generator_set(SplitBasis.standard(dim_f), variety)
    assert sorted((g.total_degree for g in gens), reverse=True) == [4, 3, 3, 3, 3]
    D = delta_polynomial()
    assert gens[0] == D
    for g, i in zip(gens[1:], derivative_variables(SplitBasis.standard(dim_f), variety)):
        assert g == D.derivative(i)


def test_sigma3_cubics_span_lambda3_f():
    split = SplitBasis.standard(4)
    weights = variable_weights()
    delta_weights = monomial_weights(delta_polynomial(), weights)
    assert delta_weights == {(2,) * 6}
    cubics = generator_set(split, "sigma3")[1:]
    seen = []
    for g, i in zip(cubics, derivative_variables(split, "sigma3")):
        w = monomial_weights(g, weights)
        assert len(w) == 1
        (only,) = w
        assert only == tuple(2 - x for x in weights[i])
        assert set(TRIPLES[i]) <= set(split.f_part)
        seen.append(TRIPLES[i])
    assert sorted(seen) == subsets(3, 4)


def test_sigma3p_variables():
    split = SplitBasis((1, 2), (3, 4, 5, 6))
    assert [TRIPLES[i] for i in derivative_variables(split, "sigma3p")] == [(1, 2, k) for k in (3, 4, 5, 6)]


def test_split_errors():
    with pytest.raises(ValueError):
        SplitBasis((1, 2), (2, 3, 4, 5, 6))
    with pytest.raises(ValueError):
        generator_set(SplitBasis.standard(2), "sigma3")
    with pytest.raises(ValueError):
        generator_set(SplitBasis.standard(4), "sigma3p")
    with pytest.raises(ValueError):
        generator_set(SplitBasis.standard(4), "sigma9")


def test_hyperdiscriminant_metadata():
    assert HYPERDISCRIMINANTS["e6"] == (delta_polynomial().total_degree, NVARS)
    assert HYPERDISCRIMINANTS["e7"] == (7, 35) and HYPERDISCRIMINANTS["e8"] == (16, 56)


# -- CAS scripts -------------------------------------------------------------


def _script(variety, dialect):
    split = SplitBasis.standard(4 if variety == "sigma3" else 2)
    title = f"E6 {variety} restricted to Lambda^3 k^6, F = {list(split.f_part)}"
    return emit_cas_script(generator_set(split, variety), dialect, title)


@pytest.mark.parametrize("name,variety,dialect", [
    ("e6_sigma3.m2", "sigma3", "macaulay2"),
    ("e6_sigma3.sing", "sigma3", "singular"),
    ("e6_sigma3p.m2", "sigma3p", "macaulay2"),
])
def test_cas_golden(name, variety, dialect):
    assert _script(variety, dialect).encode() == (GOLDEN / name).read_bytes()


def test_cas_script_structure():
    a, b = _script("sigma3", "macaulay2"), _script("sigma3", "m2")
    assert a == b
    assert "degrees [4, 3, 3, 3, 3]" in a
    assert a.count("\n    ") == 5
    assert "print codim I" in a and "print betti res I" in a
    sp = _script("sigma3p", "macaulay2")
    ring = [line for line in a.splitlines() if line.startswith("R = ")]
    assert ring == [line for line in sp.splitlines() if line.startswith("R = ")]
    with pytest.raises(ValueError):
        emit_cas_script([], "macaulay2")
    with pytest.raises(ValueError):
        emit_cas_script([delta_polynomial()], "maple")
