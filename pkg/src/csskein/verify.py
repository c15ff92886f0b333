"""Seeded invariant suites behind ``csskein verify``.

Each check is a dict ``{"name", "ok"}`` plus, on failure, the serialized
diagram or curve system that broke it.  Reports are deterministic for a
given seed and count.
"""

from __future__ import annotations

import math
import random
from typing import Callable

from .braids import random_diagram
from .bracket import ambient_normalized, kauffman_bracket
from .corpus import corpus_items
from .coupling import Coupling, gln_matrices
from .diagram import (
    Choice,
    apply_reidemeister,
    isomorphic,
    reidemeister_sites,
    switch_crossing,
    writhe,
)
from .expectation import GaugeSpec, gauge_expectation, u1_expectation
from .goldman import CurveSystem, Intersection, TorusCurve, goldman_gl, goldman_su2, torus_bracket
from .laurent import LaurentPoly

__all__ = ["SUITES", "run_suite", "random_curve_system", "close"]

_Q = LaurentPoly.var()


def close(x, y, rel: float = 1e-9) -> bool:
    return abs(x - y) <= rel * max(1.0, abs(x), abs(y))


def _check(name: str, ok: bool, failure_payload: Callable[[], object]) -> dict:
    out = {"name": name, "ok": bool(ok)}
    if not ok:
        out["input"] = failure_payload()
    return out


def _reidemeister(rng: random.Random, count: int) -> list[dict]:
    checks = []
    for i in range(count):
        d = random_diagram(rng, max_crossings=8)
        base = kauffman_bracket(d)
        payload = lambda d=d: d.to_json()
        sites = reidemeister_sites(d, "R2")
        if sites:
            a, b = rng.choice(sites)
            e = apply_reidemeister(d, "R2", (a, b), a_over=rng.random() < 0.5)
            checks.append(_check(f"{i}: R2 bracket", kauffman_bracket(e) == base, payload))
            undo = reidemeister_sites(e, "R2^-1")
            restored = any(isomorphic(apply_reidemeister(e, "R2^-1", s), d) for s in undo)
            checks.append(_check(f"{i}: R2 inverse restores", restored, payload))
            for s in reidemeister_sites(e, "R3")[:1]:
                f = apply_reidemeister(e, "R3", s)
                checks.append(_check(f"{i}: R3 bracket", kauffman_bracket(f) == base, payload))
        for s in reidemeister_sites(d, "R3")[:1]:
            f = apply_reidemeister(d, "R3", s)
            checks.append(_check(f"{i}: R3 bracket", kauffman_bracket(f) == base, payload))
        arc = rng.choice(sorted(d.arcs)) if d.arcs else None
        for move, eps in (("R1+", 1), ("R1-", -1)):
            k = apply_reidemeister(d, move, arc, over_first=rng.random() < 0.5)
            factor = LaurentPoly.monomial(3 * eps, -1)
            checks.append(_check(f"{i}: {move} factor", kauffman_bracket(k) == factor * base, payload))
            checks.append(_check(f"{i}: {move} ambient", ambient_normalized(k) == ambient_normalized(d), payload))
    return checks


def _skein(rng: random.Random, count: int) -> list[dict]:
    checks = []
    for i in range(count):
        d = random_diagram(rng, max_crossings=6)
        j = rng.randrange(len(d.crossings))
        plus = d if d.crossings[j].sign > 0 else switch_crossing(d, j)
        minus = switch_crossing(plus, j)
        payload = lambda plus=plus, j=j: {"diagram": plus.to_json(), "crossing": j}
        a = kauffman_bracket(plus, forced={j: Choice.A})
        b = kauffman_bracket(plus, forced={j: Choice.B})
        lhs = kauffman_bracket(plus) + kauffman_bracket(minus)
        checks.append(_check(f"{i}: bracket sum relation", lhs == (_Q + _Q ** -1) * (a + b), payload))
        n = rng.randint(1, 4)
        beta = rng.uniform(-1, 1)
        spec = GaugeSpec("GLN", Coupling(beta), n=n)
        _, _, delta = gln_matrices(n)
        sd = math.sqrt(delta)
        vp, vm = gauge_expectation(plus, spec), gauge_expectation(minus, spec)
        flat = gauge_expectation(plus, spec, forced={j: Choice.FLAT})
        smooth = gauge_expectation(plus, spec, forced={j: Choice.SMOOTH})
        fp, fm = math.exp(-beta * n / 2), math.exp(beta * n / 2)
        ok_sum = close(fp * vp + fm * vm, 2 * math.cosh(beta * sd) * flat)
        r = n * math.tanh(beta * sd) / (2 * sd)
        ok_h = close((1 + r) * fp * vp - (1 - r) * fm * vm, 4 * math.sinh(beta * sd) / sd * smooth)
        checks.append(_check(f"{i}: GL({n}) sum relation", ok_sum, payload))
        checks.append(_check(f"{i}: GL({n}) HOMFLY-type relation", ok_h, payload))
    return checks


def _cross_group(rng: random.Random, count: int) -> list[dict]:
    diagrams = [(name, d) for name, d in corpus_items(max_crossings=8)]
    diagrams += [(f"random{i}", random_diagram(rng, max_crossings=8)) for i in range(count)]
    checks = []
    for name, d in diagrams:
        beta = rng.uniform(-1, 1)
        c = Coupling(beta)
        w = writhe(d)
        payload = lambda d=d, beta=beta: {"diagram": d.to_json(), "beta": beta}
        gl2 = gauge_expectation(d, GaugeSpec("GLN", c, n=2))
        su2 = gauge_expectation(d, GaugeSpec("SU2", c))
        checks.append(_check(f"{name}: GL(2) = e^(beta w) SU(2)", close(gl2, math.exp(beta * w) * su2), payload))
        gl1 = gauge_expectation(d, GaugeSpec("GLN", c, n=1))
        checks.append(_check(f"{name}: GL(1) = U(1)", close(gl1, u1_expectation(d, c), 1e-12), payload))
        un = gauge_expectation(d, GaugeSpec("UN", c, n=3))
        checks.append(_check(f"{name}: U(3) = GL(3)", un == gauge_expectation(d, GaugeSpec("GLN", c, n=3)), payload))
    return checks


def random_curve_system(rng: random.Random, letters: str = "abc", max_len: int = 5,
                        max_points: int = 4) -> CurveSystem:
    def word():
        return tuple(rng.choice(("", "-")) + rng.choice(letters) for _ in range(rng.randint(1, max_len)))
    c1, c2 = word(), word()
    k = rng.randint(0, min(max_points, len(c1), len(c2)))
    p1 = rng.sample(range(len(c1)), k)
    p2 = rng.sample(range(len(c2)), k)
    return CurveSystem(c1, c2, tuple(
        Intersection(i, a, b, rng.choice((1, -1))) for i, (a, b) in enumerate(zip(p1, p2))))


def _goldman(rng: random.Random, count: int) -> list[dict]:
    checks = []
    for i in range(count):
        cs = random_curve_system(rng)
        ok = goldman_gl(cs.swapped()) == -goldman_gl(cs)
        ok = ok and goldman_su2(cs.swapped()) == -goldman_su2(cs)
        checks.append(_check(f"{i}: antisymmetry", ok, cs.to_json))
    bad = []
    rng_entries = range(-5, 6)
    for p in rng_entries:
        for q in rng_entries:
            if math.gcd(p, q) != 1:
                continue
            for r in rng_entries:
                for s in rng_entries:
                    if math.gcd(r, s) != 1:
                        continue
                    det = p * s - q * r
                    want = {} if det == 0 else {TorusCurve(p + r, q + s): det}
                    if torus_bracket(TorusCurve(p, q), TorusCurve(r, s)).terms != want:
                        bad.append([p, q, r, s])
    checks.append(_check("torus (ps - qr) (p+r, q+s), entries in [-5, 5]", not bad, lambda: bad))
    return checks


SUITES = {
    "reidemeister": _reidemeister,
    "skein": _skein,
    "cross-group": _cross_group,
    "goldman": _goldman,
}


def run_suite(suite: str, seed: int = 0, count: int = 20) -> dict:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {sorted(SUITES)}")
    checks = SUITES[suite](random.Random(seed), count)
    return {
        "suite": suite,
        "seed": seed,
        "count": count,
        "checks": checks,
        "passed": all(c["ok"] for c in checks),
        "failures": sum(not c["ok"] for c in checks),
    }
