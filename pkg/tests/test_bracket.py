import pytest
from hypothesis import assume, given, strategies as st

from csskein.bracket import (
    HomflyDepthError,
    ambient_normalized,
    homfly_eval,
    homfly_poly,
    homfly_tree,
    jones,
    jones_in_t,
    kauffman_bracket,
    kauffman_state_sum,
    su2_pipeline_bracket,
)
from csskein.corpus import named
from csskein.coupling import su2_coeffs
from csskein.diagram import (
    Choice,
    LinkDiagram,
    apply_reidemeister,
    components,
    reidemeister_sites,
    switch_crossing,
)
from csskein.laurent import LaurentPoly, LaurentPoly2
from conftest import braid_diagrams
from oracles import brute_bracket

q = LaurentPoly.var()
delta = -q ** 2 - q ** -2


def T(text):
    """Laurent polynomial in q from ``{exponent: coeff}``."""
    return LaurentPoly(text)


def test_unknot_and_unlinks():
    assert kauffman_bracket(LinkDiagram((), 1)) == -q ** 2 - q ** -2
    assert kauffman_bracket(LinkDiagram((), 2)) == (-q ** 2 - q ** -2) ** 2
    assert kauffman_bracket(LinkDiagram((), 4)) == delta ** 4


def test_frozen_brackets():
    # frozen from the all-states brute force
    assert kauffman_bracket(named("hopf+")) == T({-6: 1, -2: 1, 2: 1, 6: 1})
    assert kauffman_bracket(named("trefoil-")) == T({9: -1, 1: 1, -3: 1, -7: 1})
    assert kauffman_bracket(named("figure8")) == T({-10: -1, 10: -1})
    for name in ("hopf+", "trefoil-", "figure8"):
        assert kauffman_bracket(named(name)) == brute_bracket(named(name))


@given(braid_diagrams(max_crossings=7))
def test_bracket_matches_brute_force(d):
    assert kauffman_bracket(d) == brute_bracket(d)


@given(braid_diagrams(max_crossings=8), st.data())
def test_bracket_regular_isotopy(d, data):
    base = kauffman_bracket(d)
    for move in ("R2", "R3"):
        sites = reidemeister_sites(d, move)
        if sites:
            e = apply_reidemeister(d, move, data.draw(st.sampled_from(sites)))
            assert kauffman_bracket(e) == base


@given(braid_diagrams(max_crossings=7), st.data())
def test_kink_factor(d, data):
    arc = data.draw(st.sampled_from(sorted(d.arcs)))
    base = kauffman_bracket(d)
    for move, eps in (("R1+", 1), ("R1-", -1)):
        k = apply_reidemeister(d, move, arc, over_first=data.draw(st.booleans()))
        assert kauffman_bracket(k) == -q ** (3 * eps) * base
        assert ambient_normalized(k) == ambient_normalized(d)


@given(braid_diagrams(max_crossings=7), st.data())
def test_bracket_sum_relation(d, data):
    j = data.draw(st.integers(0, len(d.crossings) - 1))
    a = kauffman_bracket(d, forced={j: Choice.A})
    b = kauffman_bracket(d, forced={j: Choice.B})
    assert kauffman_bracket(d) == q * a + q ** -1 * b
    lhs = kauffman_bracket(d) + kauffman_bracket(switch_crossing(d, j))
    assert lhs == (q + q ** -1) * (a + b)


def test_ambient_normalization_examples():
    assert ambient_normalized(named("kink+")) == delta
    assert ambient_normalized(named("kink-")) == delta
    assert ambient_normalized(LinkDiagram((), 1)) == delta
    left, right = ambient_normalized(named("trefoil-")), ambient_normalized(named("trefoil+"))
    assert left == right.substitute_inverse()
    assert right != ambient_normalized(LinkDiagram((), 1))


@pytest.mark.parametrize("name, var, poly", [
    ("trefoil+", "t", {1: 1, 3: 1, 4: -1}),
    ("trefoil-", "t", {-1: 1, -3: 1, -4: -1}),
    ("figure8", "t", {-2: 1, -1: -1, 0: 1, 1: -1, 2: 1}),
    ("hopf+", "s", {1: -1, 5: -1}),
    ("cinquefoil", "t", {2: 1, 4: 1, 5: -1, 6: 1, 7: -1}),
    ("borromean", "t", {-3: -1, -2: 3, -1: -2, 0: 4, 1: -2, 2: 3, 3: -1}),
    ("unlink2", "s", {-1: -1, 1: -1}),
])
def test_known_jones(name, var, poly):
    v, got_var = jones_in_t(named(name))
    assert got_var == var
    assert v == LaurentPoly(poly, (var,))


def test_jones_of_unknot_is_one():
    assert jones(named("kink+")) == LaurentPoly.constant(1)


@pytest.mark.parametrize("beta", [0.0, 0.3, -0.45, 0.8, 0.2 + 0.4j])
def test_su2_pipeline_hopf(beta):
    d = named("hopf+")
    want = kauffman_bracket(d).eval_numeric(su2_coeffs(beta).q)
    assert abs(su2_pipeline_bracket(d, beta) - want) <= 1e-9 * abs(want)


def test_su2_pipeline_unknot():
    assert su2_pipeline_bracket(LinkDiagram((), 1), 0.7) == pytest.approx(su2_coeffs(0.7).delta)


@given(braid_diagrams(max_crossings=7), st.floats(-1, 1, allow_nan=False))
def test_su2_pipeline_is_bracket(d, beta):
    want = kauffman_bracket(d).eval_numeric(su2_coeffs(beta).q)
    got = su2_pipeline_bracket(d, beta)
    assert abs(got - want) <= 1e-9 * max(1.0, abs(want))


@given(braid_diagrams(max_crossings=7))
def test_gauge_point_is_q_minus_one(d):
    assert su2_pipeline_bracket(d, 0.0) == pytest.approx(kauffman_bracket(d).eval_numeric(-1))


def test_state_sum_loop_override():
    d = named("trefoil+")
    x = 1.3
    assert kauffman_state_sum(d, x) == pytest.approx(kauffman_bracket(d).eval_numeric(x))
    # loop value 1 with q = 1 counts states
    assert kauffman_state_sum(d, 1.0, loop_value=1.0) == 8


# ---------------------------------------------------------------------------- HOMFLY

Q = LaurentPoly2.var(0)
Z = LaurentPoly2.var(1)


def test_homfly_unknot_and_unlink():
    assert homfly_poly(LinkDiagram((), 1)) == LaurentPoly2.constant(1)
    assert homfly_poly(named("kink-")) == LaurentPoly2.constant(1)
    assert homfly_poly(LinkDiagram((), 2)) == (Q - Q ** -1) * Z ** -1


def test_homfly_trefoil():
    assert homfly_poly(named("trefoil+")) == 2 * Q ** -2 - Q ** -4 + Q ** -2 * Z ** 2


def test_homfly_node_relation_hopf():
    for node in homfly_tree(named("hopf+")):
        plus, minus = (node.diagram, node.switched) if node.sign > 0 else (node.switched, node.diagram)
        assert Q * homfly_poly(plus) - Q ** -1 * homfly_poly(minus) == Z * homfly_poly(node.smoothed)


@given(braid_diagrams(max_crossings=7))
def test_homfly_node_relation(d):
    nodes = homfly_tree(d)
    for node in nodes:
        plus, minus = (node.diagram, node.switched) if node.sign > 0 else (node.switched, node.diagram)
        assert Q * homfly_poly(plus) - Q ** -1 * homfly_poly(minus) == Z * homfly_poly(node.smoothed)


@given(braid_diagrams(max_crossings=7), st.floats(0.6, 1.4))
def test_homfly_specializes_to_jones(d, a):
    # q -> a^4, z -> a^-2 - a^2 turns the HOMFLY relation into the Jones one
    assume(abs(a - 1) > 0.05)  # z -> 0 is a pole for links
    v = homfly_eval(d, a ** 4, a ** -2 - a ** 2)
    assert v == pytest.approx(jones(d).eval_numeric(a), rel=1e-9, abs=1e-9)


def test_homfly_is_mirror_symmetric_in_q():
    p = homfly_poly(named("trefoil+"))
    m = homfly_poly(named("trefoil-"))
    flipped = LaurentPoly2({(-e1, e2): c for (e1, e2), c in p.terms.items()})
    assert m == flipped


def test_homfly_depth_cap():
    with pytest.raises(HomflyDepthError):
        homfly_poly(named("torus(3,4)"), max_depth=1)


def test_homfly_components_base_case():
    d = named("borromean")
    assert components(d)[0] == 3
    p = homfly_poly(d)
    assert p.eval_numeric(1.0, 1.0) == pytest.approx(homfly_eval(d, 1.0, 1.0))
