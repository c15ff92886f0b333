"""Kauffman bracket, its SU(2) transfer-matrix derivation, Jones and HOMFLY.

Bracket convention: ``<X> = q <A> + q^-1 <B>`` with loop value
``delta = -q^2 - q^-2``; a positive kink multiplies the bracket by ``-q^3``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

import numpy as np

from .coupling import su2_coeffs, su2_resolution_coeffs
from .diagram import Choice, LinkDiagram, components, smooth_crossing, switch_crossing, writhe
from .laurent import LaurentPoly, LaurentPoly2, PolyError
from .states import loop_counts, loop_histogram

__all__ = [
    "kauffman_bracket",
    "kauffman_state_sum",
    "su2_pipeline_bracket",
    "ambient_normalized",
    "jones",
    "jones_in_t",
    "homfly_poly",
    "homfly_eval",
    "homfly_tree",
    "SkeinNode",
    "HomflyDepthError",
    "DEFAULT_HOMFLY_DEPTH",
]

_Q = LaurentPoly.var("q")
DELTA = -(_Q ** 2) - _Q ** -2


def kauffman_bracket(d: LinkDiagram, cap: int | None = None,
                     forced: Mapping[int, Choice] | None = None) -> LaurentPoly:
    """``sum over A/B states of q^(#A - #B) delta^loops``, exactly.

    ``forced`` pins crossings to A or B with weight 1, giving the bracket of
    the diagram with those crossings smoothed.
    """
    forced = dict(forced or {})
    if any(ch not in (Choice.A, Choice.B) for ch in forced.values()):
        raise ValueError("only A or B can be forced in the bracket")
    bits = {j: int(ch is Choice.B) for j, ch in forced.items()}
    k = len(d.crossings) - len(bits)
    hist = loop_histogram(d, "bracket", bits, cap)
    by_exp: dict[tuple[int, int], int] = {}
    for (bp, bn, loops), count in hist.items():
        key = (k - 2 * (bp + bn), loops)
        by_exp[key] = by_exp.get(key, 0) + count
    powers: dict[int, LaurentPoly] = {}
    total = LaurentPoly()
    for (e, loops), count in sorted(by_exp.items()):
        if loops not in powers:
            powers[loops] = DELTA ** loops
        total = total + LaurentPoly.monomial(e, count) * powers[loops]
    return total


def kauffman_state_sum(d: LinkDiagram, q, loop_value=None, cap: int | None = None):
    """Numeric bracket state sum at ``q``; ``loop_value`` defaults to ``-q^2 - q^-2``."""
    if q == 0:
        raise PolyError("q must be nonzero")
    lv = -(q * q) - 1 / (q * q) if loop_value is None else loop_value
    k = len(d.crossings)
    terms = [count * q ** (k - 2 * (bp + bn)) * lv ** loops
             for (bp, bn, loops), count in sorted(loop_histogram(d, "bracket", None, cap).items())]
    if any(isinstance(t, complex) for t in terms):
        return complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    return math.fsum(terms)


def _subset_sums(g: np.ndarray, k: int) -> np.ndarray:
    """``h[T] = sum over S subset of T of g[S]``."""
    h = g.copy()
    for j in range(k):
        step = 1 << j
        h = h.reshape(-1, 2, step)
        h[:, 1, :] += h[:, 0, :]
        h = h.reshape(-1)
    return h


def su2_pipeline_bracket(d: LinkDiagram, coupling, cap: int | None = None) -> complex:
    """Bracket at ``q(beta)`` rebuilt from the SU(2) crossing coefficients.

    Each crossing becomes ``c_flat (bare) + c_smooth (smoothed)`` from
    ``exp(eps beta M)``; a state with ``l`` loops out of a ``j``-component
    link carries ``(-1)^(j - l)``, which turns the loop value 2 into -2.
    A bare crossing is then expanded as ``-(A + B)`` and a smoothed one is
    the A (positive) or B (negative) smoothing.  Final planar loops are
    valued at ``delta(beta)`` and the total divided by ``sqrt(ab)^k``.
    """
    coeffs = su2_coeffs(coupling)
    k = len(d.crossings)
    n_comp, _ = components(d)
    if k == 0:
        return complex(coeffs.delta ** d.unknots)
    oriented = loop_counts(d, "oriented", None, cap).astype(np.int64)
    planar = loop_counts(d, "bracket", None, cap).astype(np.int64)
    idx = np.arange(1 << k, dtype=np.int64)
    g = np.ones(1 << k, dtype=complex)
    for j, c in enumerate(d.crossings):
        flat, smooth = su2_resolution_coeffs(coupling, c.sign)
        bit = ((idx >> j) & 1).astype(bool)
        g *= np.where(bit, complex(smooth), -complex(flat))
    g *= np.where((n_comp - oriented) % 2 == 0, 1.0, -1.0)
    # oriented state S (smooth set) feeds planar state tau iff S lies inside
    # the crossings where tau picks the oriented smoothing
    h = _subset_sums(g, k)
    neg = sum(1 << j for j, c in enumerate(d.crossings) if c.sign < 0)
    full = (1 << k) - 1
    agree = ~(idx ^ neg) & full
    weights = h[agree] * np.power(complex(coeffs.delta), planar)
    total = complex(math.fsum(weights.real), math.fsum(weights.imag))
    return total / complex(coeffs.sqrt_ab) ** k


def ambient_normalized(d: LinkDiagram, cap: int | None = None) -> LaurentPoly:
    """Writhe-corrected bracket ``(-q^3)^(-w) <d>``."""
    w = writhe(d)
    twist = LaurentPoly.monomial(-3 * w, (-1) ** (w % 2))
    return twist * kauffman_bracket(d, cap)


def jones(d: LinkDiagram, cap: int | None = None) -> LaurentPoly:
    """Jones polynomial in ``q`` (unknot = 1); ``t = q^-4``."""
    return ambient_normalized(d, cap).exact_div(DELTA)


def jones_in_t(d: LinkDiagram, cap: int | None = None) -> tuple[LaurentPoly, str]:
    """Jones polynomial in ``t`` if all exponents are integral, else in ``s = t^(1/2)``."""
    v = jones(d, cap)
    if all(e % 4 == 0 for e in v.terms):
        return LaurentPoly({-e // 4: c for e, c in v.terms.items()}, ("t",)), "t"
    return LaurentPoly({-e // 2: c for e, c in v.terms.items()}, ("s",)), "s"


# ----------------------------------------------------------------------------
# HOMFLY by descending diagrams

DEFAULT_HOMFLY_DEPTH = 64
_Qh = LaurentPoly2.var(0)
_Zh = LaurentPoly2.var(1)
_ONE = LaurentPoly2.constant(1)


class HomflyDepthError(RuntimeError):
    pass


def _first_bad_crossing(d: LinkDiagram) -> int | None:
    """First crossing met on its under-strand when walking components in order."""
    _, comp = components(d)
    starts = {}
    for a in sorted(d.arcs):
        starts.setdefault(comp[a], a)
    seen: set[int] = set()
    nxt = d.successor
    for ci in sorted(starts):
        a = starts[ci]
        while True:
            x, slot = d.head(a)
            if x not in seen:
                if slot == 2:
                    return x
                seen.add(x)
            a = nxt[a]
            if a == starts[ci]:
                break
    return None


@dataclass(frozen=True)
class SkeinNode:
    diagram: LinkDiagram
    crossing: int
    sign: int
    switched: LinkDiagram
    smoothed: LinkDiagram


def _unlink_value(n: int) -> LaurentPoly2:
    return ((_Qh - _Qh ** -1) * _Zh ** -1) ** (n - 1)


def homfly_poly(d: LinkDiagram, max_depth: int = DEFAULT_HOMFLY_DEPTH) -> LaurentPoly2:
    """HOMFLY polynomial with ``q P(L+) - q^-1 P(L-) = z P(L0)`` and ``P(unknot) = 1``."""
    return _homfly(d, max_depth)


@lru_cache(maxsize=4096)
def _homfly(d: LinkDiagram, depth: int) -> LaurentPoly2:
    n_comp, _ = components(d)
    if n_comp == 0:
        raise PolyError("HOMFLY of the empty link is undefined")
    bad = _first_bad_crossing(d)
    if bad is None:
        return _unlink_value(n_comp)
    if depth <= 0:
        raise HomflyDepthError("skein tree exceeded its depth cap")
    sw = switch_crossing(d, bad)
    sm = smooth_crossing(d, bad)
    if d.crossings[bad].sign > 0:
        return _Qh ** -2 * _homfly(sw, depth - 1) + _Qh ** -1 * _Zh * _homfly(sm, depth - 1)
    return _Qh ** 2 * _homfly(sw, depth - 1) - _Qh * _Zh * _homfly(sm, depth - 1)


def homfly_tree(d: LinkDiagram, max_depth: int = DEFAULT_HOMFLY_DEPTH) -> list[SkeinNode]:
    """Every branch node of the skein tree, parents before children."""
    out: list[SkeinNode] = []
    stack = [(d, max_depth)]
    while stack:
        cur, depth = stack.pop()
        bad = _first_bad_crossing(cur)
        if bad is None:
            continue
        if depth <= 0:
            raise HomflyDepthError("skein tree exceeded its depth cap")
        node = SkeinNode(cur, bad, cur.crossings[bad].sign,
                         switch_crossing(cur, bad), smooth_crossing(cur, bad))
        out.append(node)
        stack.append((node.smoothed, depth - 1))
        stack.append((node.switched, depth - 1))
    return out


def homfly_eval(d: LinkDiagram, q, z, max_depth: int = DEFAULT_HOMFLY_DEPTH):
    """Numeric HOMFLY at ``(q, z)``; ``z = 0`` is a pole for links."""
    return homfly_poly(d, max_depth).eval_numeric(q, z)
