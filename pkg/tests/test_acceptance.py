"""Acceptance criteria, one test each, with wall-clock budgets.

Every test appends a ``PASS``/``FAIL`` line to ``REPORT``; the conftest hook
prints them after the run.  ``python3 tests/test_acceptance.py`` prints the
same lines without pytest.
"""

import cmath
import math
import random
import time
from contextlib import contextmanager

import numpy as np

from csskein.braids import braid_closure, random_diagram
from csskein.bracket import (
    ambient_normalized,
    homfly_poly,
    homfly_tree,
    kauffman_bracket,
    su2_pipeline_bracket,
)
from csskein.corpus import corpus_items, named
from csskein.coupling import (
    SU2_MATRIX,
    Coupling,
    gln_matrices,
    homfly_params,
    su2_coeffs,
    traceless_exp,
)
from csskein.diagram import (
    Choice,
    LinkDiagram,
    apply_reidemeister,
    components,
    linking_matrix,
    reidemeister_sites,
    switch_crossing,
    writhe,
)
from csskein.expectation import GaugeSpec, gauge_expectation, u1_expectation
from csskein.goldman import (
    CurveSystem,
    TorusCurve,
    goldman_gl,
    goldman_su2,
    torus_bracket,
)
from csskein.laurent import LaurentPoly, LaurentPoly2
from csskein.verify import random_curve_system

REPORT: list[str] = []

q = LaurentPoly.var()
DELTA = -q ** 2 - q ** -2


def rel_close(x, y, tol):
    return abs(x - y) <= tol * max(1.0, abs(x), abs(y))


@contextmanager
def criterion(number, title, budget):
    """Time the block; record one line; fail on a broken check or a blown budget."""
    start = time.perf_counter()
    failure = None
    try:
        yield
    except AssertionError as exc:
        failure = exc
    elapsed = time.perf_counter() - start
    ok = failure is None and elapsed < budget
    why = "" if failure is None else f" ({failure})"
    REPORT.append(f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} "
                  f"[{elapsed:.2f}s / {budget:g}s]{why}")
    if failure is not None:
        raise failure
    assert elapsed < budget, f"criterion {number} took {elapsed:.2f}s, budget {budget}s"


def diagrams_le8(count, seed):
    """Corpus diagrams with at most 8 crossings, topped up with seeded braid closures."""
    items = [d for _, d in corpus_items(max_crossings=8)]
    rng = random.Random(seed)
    while len(items) < count:
        items.append(random_diagram(rng, max_crossings=8))
    return items[:count]


def test_1_coefficient_identities():
    rng = random.Random(1)
    s3 = math.sqrt(3)
    with criterion(1, "coefficient identities", 1.0):
        betas = [rng.uniform(-1, 1) for _ in range(100)]
        betas += [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(20)]
        assert np.allclose(SU2_MATRIX @ SU2_MATRIX, 3 * np.eye(2), rtol=0, atol=1e-10)
        for n in range(1, 7):
            _, mn, delta = gln_matrices(n)
            assert np.allclose(mn @ mn, delta * np.eye(2), rtol=0, atol=1e-10)
        for beta in betas:
            c = su2_coeffs(beta)
            ch, sh = cmath.cosh(s3 * beta), cmath.sinh(s3 * beta)
            assert abs(c.a + c.b + 2 * ch) <= 1e-10 * max(1, abs(ch))
            assert abs(c.b - c.a - 2 / s3 * sh) <= 1e-10 * max(1, abs(sh))
            ident = traceless_exp(SU2_MATRIX, beta) @ traceless_exp(SU2_MATRIX, -beta)
            assert np.allclose(ident, np.eye(2), rtol=0, atol=1e-10)


def test_2_kauffman_bracket():
    rng = random.Random(2)
    with criterion(2, "bracket invariance under 200 R2/R3 moves, R1 factor, unlinks", 10.0):
        applied = 0
        while applied < 200:
            d = random_diagram(rng, max_crossings=8)
            base = kauffman_bracket(d)
            for move in ("R2", "R3"):
                sites = reidemeister_sites(d, move)
                if not sites:
                    continue
                site = rng.choice(sites)
                e = (apply_reidemeister(d, move, site, a_over=rng.random() < 0.5)
                     if move == "R2" else apply_reidemeister(d, move, site))
                assert kauffman_bracket(e) == base, f"{move} on {d.to_pd()}"
                applied += 1
            arc = rng.choice(sorted(d.arcs))
            for move, eps in (("R1+", 1), ("R1-", -1)):
                k = apply_reidemeister(d, move, arc, over_first=rng.random() < 0.5)
                assert kauffman_bracket(k) == -q ** (3 * eps) * base
        for k in range(1, 5):
            assert kauffman_bracket(LinkDiagram((), k)) == DELTA ** k


def test_3_su2_pipeline_is_bracket():
    betas = [-0.9, -0.35, 0.1, 0.5, 1.0]
    with criterion(3, "SU(2) pipeline equals bracket at q(beta), 50 diagrams x 5 beta", 30.0):
        for d in diagrams_le8(50, seed=3):
            poly = kauffman_bracket(d)
            for beta in betas:
                want = poly.eval_numeric(su2_coeffs(beta).q)
                got = su2_pipeline_bracket(d, beta)
                assert rel_close(got, want, 1e-9), f"beta={beta} on {d.to_pd()}"


def _no_self_crossings(d):
    comp = components(d)[1]
    return all(comp[c.over_in] != comp[c.under_in] for c in d.crossings)


def test_4_abelian_sector():
    lams = [0.7, 1.0, 2.5, -3.0]
    with criterion(4, "U(1) closed form, GL(1) engine, 2 lk / lambda", 5.0):
        for d in diagrams_le8(50, seed=4):
            for lam in lams:
                c = Coupling.from_lambda(lam)
                closed = u1_expectation(d, c)
                assert rel_close(closed, math.exp(writhe(d) / lam), 1e-12)
                assert rel_close(gauge_expectation(d, GaugeSpec("GLN", c, n=1)), closed, 1e-12)
        two = [named("hopf+"), named("hopf-"), named("torus(2,4)")]
        two += [braid_closure([s] * k, 2) for s in (1, -1) for k in (6, 8)]
        for d in two:
            assert components(d)[0] == 2 and _no_self_crossings(d)
            lk = linking_matrix(d)[0][1]
            for lam in lams:
                u = u1_expectation(d, Coupling.from_lambda(lam))
                assert rel_close(u, math.exp(2 * lk / lam), 1e-12)


def test_5_framing_relation():
    betas = [-0.8, -0.2, 0.3, 0.75]
    with criterion(5, "GL(2) = exp(beta w) SU(2) on the corpus", 30.0):
        for _, d in corpus_items():
            for beta in betas:
                c = Coupling(beta)
                gl = gauge_expectation(d, GaugeSpec("GLN", c, n=2))
                su = gauge_expectation(d, GaugeSpec("SU2", c))
                assert rel_close(gl, math.exp(beta * writhe(d)) * su, 1e-9)


def test_6_gln_skein():
    rng = random.Random(6)
    with criterion(6, "GL(n) sum and HOMFLY-type skein identities, 20 (n, beta)", 30.0):
        for _ in range(20):
            n, beta = rng.randint(1, 4), rng.uniform(-1, 1)
            d = random_diagram(rng, max_crossings=6)
            j = rng.randrange(len(d.crossings))
            plus = d if d.crossings[j].sign > 0 else switch_crossing(d, j)
            minus = switch_crossing(plus, j)
            spec = GaugeSpec("GLN", Coupling(beta), n=n)
            vp, vm = gauge_expectation(plus, spec), gauge_expectation(minus, spec)
            flat = gauge_expectation(plus, spec, forced={j: Choice.FLAT})
            smooth = gauge_expectation(plus, spec, forced={j: Choice.SMOOTH})
            sd = math.sqrt(gln_matrices(n)[2])
            fp, fm = math.exp(-beta * n / 2), math.exp(beta * n / 2)
            assert rel_close(fp * vp + fm * vm, 2 * math.cosh(beta * sd) * flat, 1e-9)
            r = n * math.tanh(beta * sd) / (2 * sd)
            lhs = (1 + r) * fp * vp - (1 - r) * fm * vm
            assert rel_close(lhs, 4 * math.sinh(beta * sd) / sd * smooth, 1e-9)
            qn, zn = homfly_params(n, beta)
            assert rel_close(qn * vp - vm / qn, zn * smooth, 1e-9)


def test_7_homfly():
    Q, Z = LaurentPoly2.var(0), LaurentPoly2.var(1)
    rng = random.Random(7)
    with criterion(7, "HOMFLY unknot, node-local skein relation, trefoil vs unknot", 10.0):
        assert homfly_poly(LinkDiagram((), 1)) == LaurentPoly2.constant(1)
        ds = [named("trefoil+"), named("figure8"), named("hopf+")]
        ds += [random_diagram(rng, max_crossings=8) for _ in range(20)]
        for d in ds:
            for node in homfly_tree(d):
                plus, minus = ((node.diagram, node.switched) if node.sign > 0
                               else (node.switched, node.diagram))
                lhs = Q * homfly_poly(plus) - Q ** -1 * homfly_poly(minus)
                assert lhs == Z * homfly_poly(node.smoothed), d.to_pd()
        assert ambient_normalized(named("trefoil+")) != ambient_normalized(LinkDiagram((), 1))


def test_8_goldman():
    rng = random.Random(8)
    with criterion(8, "Goldman antisymmetry, empty bracket, torus oracle, SU(2) in Z/2", 5.0):
        for _ in range(100):
            cs = random_curve_system(rng)
            assert goldman_gl(cs.swapped()) == -goldman_gl(cs)
            assert goldman_su2(cs.swapped()) == -goldman_su2(cs)
            assert all((2 * c).denominator == 1 for c in goldman_su2(cs).terms.values())
        empty = CurveSystem(("a", "-b"), ("b", "c"), ())
        assert goldman_gl(empty).is_zero() and goldman_su2(empty).is_zero()
        entries = range(-5, 6)
        prims = [(p, s) for p in entries for s in entries if math.gcd(p, s) == 1]
        for p, qq in prims:
            for r, s in prims:
                det = p * s - qq * r
                want = {TorusCurve(p + r, qq + s): det} if det else {}
                assert torus_bracket(TorusCurve(p, qq), TorusCurve(r, s)).terms == want, (p, qq, r, s)


def test_9_beta_zero():
    with criterion(9, "beta = 0 degeneration", 1.0):
        c = su2_coeffs(0.0)
        assert c.q == -1 and c.delta == -2
        for _, d in corpus_items(max_crossings=8):
            assert gauge_expectation(d, GaugeSpec("SU2", Coupling(0.0))) == 2 ** components(d)[0]
            for n in (1, 2, 3):
                spec = GaugeSpec("GLN", Coupling(0.0), n=n)
                for j in range(len(d.crossings)):
                    assert gauge_expectation(d, spec) == gauge_expectation(switch_crossing(d, j), spec)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(REPORT))
