from __future__ import annotations

import json

import pytest

from schubres import fixtures as fx
from schubres.diagram import PRESETS, build_diagram, positive_roots, weyl_group_order
from schubres.orbit import (
    IncompleteOrbit,
    OrbitPoset,
    bruhat_leq,
    ci_degrees,
    complement_filter,
    coordinate_degree,
    format_weight,
    fundamental_weight,
    grade_distribution,
    levi_symmetry,
    orbit_poset,
    rank_sizes,
    reflect,
    sigma_chain,
    weight_from_display,
)


def _display(d, key):
    return [weight_from_display(d, *w) for w in key]


# -- reflections and the sigma chain ----------------------------------------


def test_reflect_examples(e6):
    s0 = fundamental_weight(e6, "x1")
    s1 = reflect(e6, s0, "x1")
    assert s1[e6.index("x1")] == -1 and s1[e6.index("u")] == 1
    s2 = reflect(e6, s1, "u")
    assert reflect(e6, s2, "z1") == weight_from_display(e6, (0, 0, 1, 0), (-1, 1))
    for mu in (s0, s1, s2):
        for i in e6.nodes:
            assert reflect(e6, reflect(e6, mu, i), i) == mu
    with pytest.raises(KeyError):
        reflect(e6, s0, "q9")


@pytest.mark.parametrize("key", ["e6"])
def test_sigma_chain_e6_displays(key):
    d = build_diagram(*PRESETS[key])
    chain = sigma_chain(d)._asdict()
    for name, (top, col) in fx.SIGMA_DISPLAYS[key].items():
        assert chain[name] == weight_from_display(d, top, col), name


def test_sigma_chain_e7_e8(e7, e8):
    assert sigma_chain(e7).sigma2 == weight_from_display(e7, (0, -1, 1, 0, 0), (1, 0))
    c8 = sigma_chain(e8)
    # the y1 branch is the fourth coordinate of the sigma3 list, the z1 branch of the sigma3' list
    assert c8.sigma3p == weight_from_display(e8, (0, 0, -1, 1, 0, 0), (1, 0))
    assert c8.sigma3 == weight_from_display(e8, (0, 0, 1, 0, 0, 0), (-1, 1))


def test_sigma_chain_needs_arms():
    with pytest.raises(ValueError):
        sigma_chain(build_diagram(2, 3, 1))


# -- the coset poset ---------------------------------------------------------


@pytest.mark.parametrize("key,size", [("e6", 72), ("e7", 576), ("e8", 17280)])
def test_orbit_sizes(posets, key, size):
    P = posets(key)
    d = P.diagram
    assert len(P) == size
    assert size == weyl_group_order(d) // weyl_group_order(d, [n for n in d.nodes if n != "x1"])
    assert P.complete
    assert len({e.weight for e in P}) == size
    assert len(P.at_length(0)) == 1


@pytest.mark.parametrize("key", ["e6", "e7"])
def test_reduced_words(posets, key):
    P = posets(key)
    d = P.diagram
    for e in P:
        mu = fundamental_weight(d, "x1")
        for name in e.reduced_word:
            mu = reflect(d, mu, name)
        assert mu == e.weight
        assert len(e.reduced_word) == e.length
    for a, b, _ in P.edges:
        assert P[b].length == P[a].length + 1


def test_top_is_antidominant(posets):
    for key in ("e6", "e7", "e8"):
        top = posets(key).top()
        assert all(c <= 0 for c in top.weight)


def _closure_oracle(P):
    """Bruhat order on the orbit by reflection closure: lam < s_beta lam when <lam, beta> > 0."""
    d = P.diagram
    roots = positive_roots(d)
    index = {e.weight: e.id for e in P}
    up = {e.id: set() for e in P}
    for e in P:
        for beta in roots:
            c = sum(b * m for b, m in zip(beta, e.weight))
            if c > 0:
                image = tuple(m - c * x for m, x in zip(e.weight, _root_weight(d, beta)))
                up[e.id].add(index[image])
    leq = {e.id: {e.id} for e in P}
    for e in sorted(P, key=lambda x: -x.length):
        for f in up[e.id]:
            leq[e.id] |= leq[f]
    return leq


def _root_weight(d, beta):
    return tuple(sum(row[j] * beta[j] for j in range(d.rank)) for row in d.cartan)


def test_bruhat_matches_reflection_closure_e6(posets):
    P = posets("e6")
    oracle = _closure_oracle(P)
    for a in P:
        for b in P:
            assert bruhat_leq(P, a, b) == (b.id in oracle[a.id]), (a.id, b.id)


def test_bruhat_is_partial_order_e6(posets):
    P = posets("e6")
    ids = range(len(P))
    leq = [[bruhat_leq(P, P[a], P[b]) for b in ids] for a in ids]
    for a in ids:
        assert leq[a][a] and leq[0][a]
        for b in ids:
            if a != b:
                assert not (leq[a][b] and leq[b][a])
            if leq[a][b]:
                assert all(leq[a][c] for c in ids if leq[b][c])
    for a, b, _ in P.edges:
        assert leq[a][b]


def test_bruhat_examples(posets):
    P = posets("e6")
    c = sigma_chain(P.diagram)
    assert bruhat_leq(P, c.sigma2, c.sigma3)
    assert not bruhat_leq(P, c.sigma3p, c.sigma3)
    assert all(bruhat_leq(P, c.sigma0, w) for w in P)
    foreign = orbit_poset(build_diagram(*PRESETS["e7"]), 2)[2]
    with pytest.raises(ValueError):
        bruhat_leq(P, foreign, P[5])


def _downward_closed(P, w):
    out = {t.id for t in complement_filter(P, w, P.length_bound)}
    for t in out:
        for s in P:
            if s.length <= P[t].length and bruhat_leq(P, s, P[t]):
                assert s.id in out


def test_complement_downward_closed_e6(posets):
    P = posets("e6")
    for w in P:
        _downward_closed(P, w.weight)


def test_complement_downward_closed_e7_truncated(e7):
    P = orbit_poset(e7, 6)
    assert not P.complete
    for w in P:
        _downward_closed(P, w.weight)


@pytest.mark.parametrize("key", ["e6", "e7", "e8"])
def test_grade_distribution_symmetric(posets, key):
    dist = grade_distribution(posets(key))
    lo, hi = min(dist), max(dist)
    for g, n in dist.items():
        assert dist[lo + hi - g] == n


def test_json_round_trip(posets, tmp_path):
    P = posets("e6")
    path = tmp_path / "poset.json"
    path.write_text(json.dumps(P.to_json()))
    Q = OrbitPoset.from_json(json.loads(path.read_text()))
    assert Q.elements == P.elements and Q.edges == P.edges
    assert [bruhat_leq(Q, Q[a], Q[71]) for a in range(72)] == [bruhat_leq(P, P[a], P[71]) for a in range(72)]
    with pytest.raises(ValueError):
        OrbitPoset.from_json({**P.to_json(), "schema": 99})


# -- rank sizes and truncation -----------------------------------------------


@pytest.mark.parametrize("key", ["e6", "e7", "e8"])
def test_rank_sizes_finite(posets, key):
    sizes = rank_sizes(posets(key))
    assert sizes[:4] == [1, 1, 1, 2]
    assert sizes == sizes[::-1]


def test_rank_sizes_e6_length4(posets):
    assert rank_sizes(posets("e6"))[4] == 2 + 1


@pytest.mark.parametrize("key", ["t244", "t236"])
def test_affine_truncated(key):
    d = build_diagram(*PRESETS[key])
    P = orbit_poset(d, 3)
    assert rank_sizes(P) == [1, 1, 1, 2]
    assert not orbit_poset(d, 8).complete
    with pytest.raises(IncompleteOrbit):
        coordinate_degree(P, P[0])
    with pytest.raises(ValueError):
        orbit_poset(d)


def test_orbit_rejects_bad_input():
    with pytest.raises(ValueError):
        orbit_poset(build_diagram(1, 3, 3))
    with pytest.raises(ValueError):
        orbit_poset(build_diagram(2, 3, 3), -1)


# -- generator lists, Levi symmetry and degrees ------------------------------


CASES = [
    ("e6", "sigma3", 4, 5),
    ("e6", "sigma3p", 4, 5),
    ("e7", "sigma3", 5, 6),
    ("e7", "sigma3p", 4, 5),
    ("e8", "sigma3", 6, 7),
    ("e8", "sigma3p", 4, 5),
]


@pytest.mark.parametrize("key,variety,L,count", CASES)
def test_generator_weights(posets, key, variety, L, count):
    P = posets(key)
    w = getattr(sigma_chain(P.diagram), variety)
    gens = complement_filter(P, w, L)
    assert len(gens) == count
    assert [g.weight for g in gens] == _display(P.diagram, fx.GENERATOR_WEIGHTS[key][variety])
    # nothing longer is missed
    assert complement_filter(P, w, P.length_bound) == gens


def test_e6_sigma3_list_names(posets):
    P = posets("e6")
    c = sigma_chain(P.diagram)
    gens = [g.weight for g in complement_filter(P, c.sigma3, 4)]
    assert gens[:4] == [c.sigma0, c.sigma1, c.sigma2, c.sigma3p]
    assert gens[4] == reflect(P.diagram, c.sigma3p, "y2")


@pytest.mark.parametrize("key,variety,expected", [
    ("e6", "sigma3", [4, 3, 3, 3, 3]),
    ("e6", "sigma3p", [4, 3, 3, 3, 3]),
    ("e7", "sigma3", [7] + [6] * 5),
    ("e7", "sigma3p", [7] + [6] * 4),
    ("e8", "sigma3", [16] + [15] * 6),
    ("e8", "sigma3p", [16] + [15] * 4),
])
def test_coordinate_degrees(posets, key, variety, expected):
    P = posets(key)
    w = getattr(sigma_chain(P.diagram), variety)
    degrees = sorted((coordinate_degree(P, g) for g in complement_filter(P, w, P.length_bound)), reverse=True)
    assert degrees == expected
    assert degrees == sorted(fx.FORMATS[key][variety].twists[1], reverse=True)
    assert coordinate_degree(P, P.top()) == 0


def test_ci_degrees(posets):
    assert ci_degrees(posets("e6")) == (4, 3, 3)
    assert ci_degrees(posets("e7")) == (7, 6, 6)
    assert ci_degrees(posets("e8")) == (16, 15, 15)


def test_levi_e6(posets):
    P = posets("e6")
    c = sigma_chain(P.diagram)
    assert levi_symmetry(P, c.sigma3)[1] == (2, 4)
    assert levi_symmetry(P, c.sigma3p)[1] == (4, 2)
    nodes, blocks = levi_symmetry(P, c.sigma0)
    assert blocks == (6,) and "x1" not in nodes and len(nodes) == 5


def test_levi_other_types(posets):
    for key in ("e7", "e8"):
        P = posets(key)
        c = sigma_chain(P.diagram)
        # sigma0 is fixed by the whole A_{n-1} chain, so the Levi is GL_n
        blocks = levi_symmetry(P, c.sigma0)[1]
        assert blocks == (P.diagram.rank,)


def test_format_weight_round_trip(e8):
    mu = (0, 0, -1, 1, 0, 0, 1, 0)
    assert format_weight(e8, mu) == "(0 0 -1 1 0 0 | 1 0)"
    assert weight_from_display(e8, (0, 0, -1, 1, 0, 0), (1, 0)) == mu
    with pytest.raises(ValueError):
        weight_from_display(e8, (0, 0), (1, 0))
