"""Wilson-loop expectations at trivial background by oriented state sums.

Each crossing of sign ``eps`` is replaced by ``c_flat * (flat) + c_smooth *
(smoothed)`` with the pair taken from :mod:`csskein.coupling`, and every
closed loop of a resolved state contributes ``loop_value``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Mapping

from .coupling import Coupling, gln_resolution_coeffs, su2_resolution_coeffs
from .diagram import Choice, LinkDiagram, writhe
from .states import loop_histogram

__all__ = ["GaugeSpec", "GROUPS", "u1_expectation", "gauge_expectation", "crossing_coeffs"]

GROUPS = ("U1", "SU2", "GLN", "UN")


@dataclass(frozen=True)
class GaugeSpec:
    group: str
    coupling: Coupling = field(default_factory=lambda: Coupling(0.0))
    n: int | None = None
    loop_value: complex | float | None = None

    def __post_init__(self):
        g = self.group.upper()
        if g not in GROUPS:
            raise ValueError(f"unknown group {self.group!r}; expected one of {GROUPS}")
        object.__setattr__(self, "group", g)
        if g in ("GLN", "UN"):
            if not isinstance(self.n, int) or self.n < 1:
                raise ValueError(f"{g} needs a positive integer n, got {self.n!r}")
        elif g == "SU2":
            object.__setattr__(self, "n", 2)
        else:
            object.__setattr__(self, "n", 1)
        if not isinstance(self.coupling, Coupling):
            object.__setattr__(self, "coupling", Coupling(self.coupling))

    @property
    def loops(self):
        """Value of one closed loop: the trace of the identity unless overridden."""
        if self.loop_value is not None:
            return self.loop_value
        return {"U1": 1, "SU2": 2}.get(self.group, self.n)


def crossing_coeffs(spec: GaugeSpec, sign: int) -> tuple:
    """``(c_flat, c_smooth)`` for one crossing of the given sign."""
    beta = spec.coupling.beta
    if spec.group == "U1":
        f = cmath.exp(2 * sign * beta)
        return (f.real if not isinstance(beta, complex) else f), 0.0
    if spec.group == "SU2":
        return su2_resolution_coeffs(spec.coupling, sign)
    return gln_resolution_coeffs(spec.n, spec.coupling, sign)


def u1_expectation(d: LinkDiagram, coupling) -> complex | float:
    """``exp(w / lam)``, with ``w`` the writhe."""
    c = coupling if isinstance(coupling, Coupling) else Coupling(coupling)
    w = writhe(d)
    if isinstance(c.beta, complex):
        return cmath.exp(2 * c.beta * w)
    return math.exp(2 * c.beta * w)


def _fsum(values) -> complex | float:
    values = list(values)
    if any(isinstance(v, complex) for v in values):
        return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))
    return math.fsum(values)


def gauge_expectation(d: LinkDiagram, spec: GaugeSpec,
                      forced: Mapping[int, Choice] | None = None,
                      cap: int | None = None) -> complex | float:
    """Sum over all flat/smooth states of the product of crossing coefficients.

    ``forced`` fixes some crossings to FLAT or SMOOTH with weight 1; this is
    the diagram with that crossing replaced by a bare (virtual) crossing or
    by its smoothing.
    """
    forced = dict(forced or {})
    for j, ch in forced.items():
        if ch not in (Choice.FLAT, Choice.SMOOTH):
            raise ValueError(f"crossing {j}: only FLAT or SMOOTH can be forced, got {ch}")
    bits = {j: int(ch is Choice.SMOOTH) for j, ch in forced.items()}
    hist = loop_histogram(d, "oriented", bits, cap)
    free = [c for j, c in enumerate(d.crossings) if j not in bits]
    n_pos = sum(1 for c in free if c.sign > 0)
    n_neg = len(free) - n_pos
    fp, sp = crossing_coeffs(spec, 1)
    fn, sn = crossing_coeffs(spec, -1)
    lv = spec.loops
    terms = []
    for (kp, kn, loops), count in sorted(hist.items()):
        w = fp ** (n_pos - kp) * sp ** kp * fn ** (n_neg - kn) * sn ** kn * lv ** loops
        terms.append(count * w)
    return _fsum(terms)
