"""Coupling-derived scalars and 2x2 transfer matrices.

The crossing operator acts on coefficient vectors ``(c_flat, c_smooth)``
through a 2x2 matrix; exponentiating it at ``beta = 1/(2 lambda)`` gives the
resolution coefficients of a single crossing.  Everything here is a pure
function of numbers, with complex ``beta`` allowed throughout.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from numbers import Number

import numpy as np

__all__ = [
    "Coupling",
    "CouplingError",
    "SkeinCoeffs",
    "SU2_MATRIX",
    "traceless_exp",
    "su2_coeffs",
    "su2_resolution_coeffs",
    "gln_matrices",
    "gln_resolution_coeffs",
    "framing_factor",
    "homfly_params",
]

_TOL = 1e-12


class CouplingError(ValueError):
    pass


@dataclass(frozen=True)
class Coupling:
    """Coupling constant; stored as ``beta = 1/(2*lam)`` so that lam = inf is beta = 0."""

    beta: complex

    @classmethod
    def from_lambda(cls, lam) -> "Coupling":
        if lam == 0:
            raise CouplingError("lambda must be nonzero")
        if isinstance(lam, float) and math.isinf(lam):
            return cls(0.0)
        return cls(1 / (2 * lam))

    @classmethod
    def from_beta(cls, beta) -> "Coupling":
        return cls(beta)

    @property
    def lam(self):
        if self.beta == 0:
            return math.inf
        return 1 / (2 * self.beta)


def _beta(x) -> complex | float:
    if isinstance(x, Coupling):
        return x.beta
    if isinstance(x, Number):
        return x
    raise TypeError(f"expected Coupling or number, got {type(x).__name__}")


def _ch_sh(beta, c):
    """``cosh(beta*sqrt(c))`` and ``sinh(beta*sqrt(c))/sqrt(c)``; even in sqrt(c), so branch-free."""
    x2 = beta * beta * c
    if abs(x2) < 1e-8:
        return 1 + x2 / 2 + x2 * x2 / 24, beta * (1 + x2 / 6 + x2 * x2 / 120)
    r = cmath.sqrt(c)
    return cmath.cosh(beta * r), cmath.sinh(beta * r) / r


def traceless_exp(m, beta) -> np.ndarray:
    """``exp(beta*M)`` for a traceless 2x2 ``M`` via ``M^2 = c I``.

    Returns ``cosh(beta sqrt c) I + sinh(beta sqrt c)/sqrt(c) M`` (which
    tends to ``I + beta M`` as c -> 0).
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise CouplingError(f"expected a 2x2 matrix, got shape {m.shape}")
    scale = max(1.0, float(np.abs(m).max()))
    if abs(m[0, 0] + m[1, 1]) > _TOL * scale:
        raise CouplingError(f"matrix is not traceless (trace {m[0, 0] + m[1, 1]})")
    beta = _beta(beta)
    c = -(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
    ch, sh = _ch_sh(beta, complex(c))
    return ch * np.eye(2) + sh * m


SU2_MATRIX = np.array([[-1.0, 1.0], [2.0, 1.0]])


def gln_matrices(n: int) -> tuple[np.ndarray, np.ndarray, float]:
    """``(M~_n, M_n, Delta_n)``: the GL(n) transfer matrix, its traceless part, and ``M_n^2 / I``."""
    if not isinstance(n, int) or n < 1:
        raise CouplingError(f"n must be a positive integer, got {n!r}")
    mt = np.array([[0.0, 1.0], [2.0, float(n)]])
    mn = mt - (n / 2) * np.eye(2)
    return mt, mn, n * n / 4 + 2


@dataclass(frozen=True)
class SkeinCoeffs:
    a: complex
    b: complex
    q: complex
    delta: complex
    sqrt_ab: complex


def su2_coeffs(coupling) -> SkeinCoeffs:
    """SU(2) skein scalars.

    ``a = -cosh(sqrt3 beta) - sinh(sqrt3 beta)/sqrt3``, ``b`` with the sign
    of the sinh flipped, ``q = a / sqrt(ab)`` on the principal branch, and
    the loop value ``delta = -(q^2 + q^-2)``.
    """
    beta = _beta(coupling)
    s3 = math.sqrt(3)
    if isinstance(beta, complex):
        ch, sh = cmath.cosh(s3 * beta), cmath.sinh(s3 * beta)
    else:
        ch, sh = math.cosh(s3 * beta), math.sinh(s3 * beta)
    a = -ch - sh / s3
    b = -ch + sh / s3
    ab = a * b
    sqrt_ab = cmath.sqrt(ab) if isinstance(ab, complex) or ab < 0 else math.sqrt(ab)
    if sqrt_ab == 0:
        raise CouplingError("ab = 0: q is undefined")
    q = a / sqrt_ab
    delta = -(q * q + 1 / (q * q))
    return SkeinCoeffs(a, b, q, delta, sqrt_ab)


def _first_column(mat: np.ndarray, real: bool):
    c_flat, c_smooth = complex(mat[0, 0]), complex(mat[1, 0])
    if real:
        return c_flat.real, c_smooth.real
    return c_flat, c_smooth


def su2_resolution_coeffs(coupling, sign: int) -> tuple:
    """``exp(sign*beta*M)`` applied to ``(1, 0)``: flat and smoothed coefficients."""
    if sign not in (1, -1):
        raise CouplingError(f"sign must be +1 or -1, got {sign!r}")
    beta = _beta(coupling)
    return _first_column(traceless_exp(SU2_MATRIX, sign * beta), not isinstance(beta, complex))


def framing_factor(n: int, coupling, sign: int):
    """``exp(sign*beta*n/2)``, the trace part of the GL(n) transfer matrix."""
    beta = _beta(coupling)
    f = cmath.exp(sign * beta * n / 2)
    return f.real if not isinstance(beta, complex) else f


def gln_resolution_coeffs(n: int, coupling, sign: int) -> tuple:
    """GL(n)/U(n) per-crossing coefficients ``(c_flat, c_smooth)``.

    Closed form of ``exp(sign*beta*M~_n) (1, 0)``::

        c_flat   = e^{sign*beta*n/2} (cosh(beta sqrt D) - sign*(n/2) sinh(beta sqrt D)/sqrt D)
        c_smooth = sign * e^{sign*beta*n/2} * 2 sinh(beta sqrt D)/sqrt D
    """
    if sign not in (1, -1):
        raise CouplingError(f"sign must be +1 or -1, got {sign!r}")
    _, _, delta = gln_matrices(n)
    beta = _beta(coupling)
    ch, sh = _ch_sh(beta, complex(delta))
    f = cmath.exp(sign * beta * n / 2)
    c_flat = f * (ch - sign * (n / 2) * sh)
    c_smooth = sign * f * 2 * sh
    if not isinstance(beta, complex):
        return c_flat.real, c_smooth.real
    return c_flat, c_smooth


def homfly_params(n: int, coupling) -> tuple:
    """``(q_n, z_n)`` with ``q_n <L+> - q_n^-1 <L-> = z_n <L0>`` for the GL(n) engine.

    With ``r = n tanh(beta sqrt D) / (2 sqrt D)`` and ``N = sqrt(1 - r^2)``::

        q_n = e^{-beta n/2} (1 + r) / N,   z_n = 4 sinh(beta sqrt D) / (sqrt D * N)

    so that ``q_n^-1 = e^{beta n/2} (1 - r) / N``.
    """
    _, _, delta = gln_matrices(n)
    beta = _beta(coupling)
    sd = math.sqrt(delta)
    ch = cmath.cosh(beta * sd)
    if abs(ch) < _TOL:
        raise CouplingError("cosh(beta sqrt(Delta)) = 0: tanh has a pole")
    sh = cmath.sinh(beta * sd)
    r = (n / (2 * sd)) * sh / ch
    denom = 1 - r * r
    if abs(denom) < _TOL:
        raise CouplingError("degenerate denominator 1 - r^2 = 0")
    norm = cmath.sqrt(denom)
    qn = cmath.exp(-beta * n / 2) * (1 + r) / norm
    zn = 4 * sh / (sd * norm)
    if not isinstance(beta, complex):
        return qn.real, zn.real
    return qn, zn
