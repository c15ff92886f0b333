"""Goldman bracket of two closed curves given as cyclic words.

A curve is a cyclic word of letters (strings); ``"-x"`` is ``"x"`` traversed
backwards.  An intersection records where it sits in each word: position
``p`` is the point just before letter ``p``.  Brackets are computed at word
level, with no cancellation of backtracks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

__all__ = [
    "GoldmanError",
    "Intersection",
    "CurveSystem",
    "FormalSum",
    "inverse_letter",
    "reverse_word",
    "rotate",
    "canonical_word",
    "goldman_gl",
    "goldman_su2",
    "unoriented_word",
    "unoriented",
    "TorusCurve",
    "torus_curve_system",
    "torus_bracket",
]


class GoldmanError(ValueError):
    pass


def inverse_letter(x: str) -> str:
    return x[1:] if x.startswith("-") else "-" + x


def reverse_word(w: Sequence[str]) -> tuple[str, ...]:
    return tuple(inverse_letter(x) for x in reversed(w))


def rotate(w: Sequence[str], p: int) -> tuple[str, ...]:
    w = tuple(w)
    return w[p:] + w[:p]


def canonical_word(w: Sequence[str]) -> tuple[str, ...]:
    """Lexicographically least rotation."""
    w = tuple(w)
    if not w:
        return w
    first = min(w)
    return min(rotate(w, i) for i, x in enumerate(w) if x == first)


@dataclass(frozen=True)
class Intersection:
    point: Hashable
    pos1: int
    pos2: int
    sign: int


@dataclass(frozen=True)
class CurveSystem:
    c1: tuple[str, ...]
    c2: tuple[str, ...]
    intersections: tuple[Intersection, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "c1", tuple(self.c1))
        object.__setattr__(self, "c2", tuple(self.c2))
        object.__setattr__(self, "intersections", tuple(
            x if isinstance(x, Intersection) else Intersection(*x) for x in self.intersections))
        problems = self.violations()
        if problems:
            raise GoldmanError("; ".join(problems))

    def violations(self) -> list[str]:
        out = []
        for name, w in (("c1", self.c1), ("c2", self.c2)):
            if any(not isinstance(x, str) or x in ("", "-") for x in w):
                out.append(f"{name}: letters must be nonempty strings")
        seen_pts, seen1, seen2 = set(), set(), set()
        for x in self.intersections:
            if x.point in seen_pts:
                out.append(f"duplicate point id {x.point!r}")
            seen_pts.add(x.point)
            if x.sign not in (1, -1):
                out.append(f"point {x.point!r}: sign must be +1 or -1")
            for pos, w, seen, name in ((x.pos1, self.c1, seen1, "c1"), (x.pos2, self.c2, seen2, "c2")):
                if not 0 <= pos < len(w):
                    out.append(f"point {x.point!r}: position {pos} outside {name}")
                elif pos in seen:
                    out.append(f"point {x.point!r}: position {pos} repeated on {name}")
                seen.add(pos)
        return out

    def swapped(self) -> "CurveSystem":
        """``(C', C)``: positions transposed and signs flipped."""
        return CurveSystem(self.c2, self.c1, tuple(
            Intersection(x.point, x.pos2, x.pos1, -x.sign) for x in self.intersections))

    def reversed_second(self) -> "CurveSystem":
        """``(C, C'^-1)``: reversing C' moves each point and flips its sign."""
        n = len(self.c2)
        return CurveSystem(self.c1, reverse_word(self.c2), tuple(
            Intersection(x.point, x.pos1, (n - x.pos2) % n, -x.sign) for x in self.intersections))

    def to_json(self) -> dict:
        return {
            "c1": list(self.c1),
            "c2": list(self.c2),
            "intersections": [
                {"point": x.point, "pos1": x.pos1, "pos2": x.pos2, "sign": x.sign}
                for x in self.intersections
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "CurveSystem":
        try:
            return cls(obj["c1"], obj["c2"], tuple(
                Intersection(x["point"], int(x["pos1"]), int(x["pos2"]), int(x["sign"]))
                for x in obj.get("intersections", ())))
        except (KeyError, TypeError) as exc:
            raise GoldmanError(f"malformed curve system: {exc}") from None


@dataclass(frozen=True)
class FormalSum:
    """Finite rational combination of hashable terms, zero coefficients dropped."""

    terms: Mapping = field(default_factory=dict)

    def __post_init__(self):
        acc: dict = {}
        for k, c in dict(self.terms).items():
            acc[k] = acc.get(k, 0) + Fraction(c)
        object.__setattr__(self, "terms", {k: c for k, c in acc.items() if c != 0})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Hashable, Fraction | int]]) -> "FormalSum":
        acc: dict = {}
        for k, c in pairs:
            acc[k] = acc.get(k, 0) + Fraction(c)
        return cls(acc)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        return FormalSum.from_pairs([*self.terms.items(), *other.terms.items()])

    def __neg__(self) -> "FormalSum":
        return FormalSum({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def scale(self, c) -> "FormalSum":
        return FormalSum({k: v * Fraction(c) for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def to_json(self) -> list:
        def fmt(c: Fraction):
            return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        return [{"term": list(k) if isinstance(k, tuple) else k, "coeff": fmt(c)}
                for k, c in sorted(self.terms.items(), key=lambda kv: repr(kv[0]))]


def _concat(cs: CurveSystem, x: Intersection, second: tuple[str, ...]) -> tuple[str, ...]:
    return canonical_word(rotate(cs.c1, x.pos1) + second)


def goldman_gl(cs: CurveSystem) -> FormalSum:
    """``sum_i eps_i (C *_i C')`` over cyclic words."""
    return FormalSum.from_pairs(
        (_concat(cs, x, rotate(cs.c2, x.pos2)), x.sign) for x in cs.intersections)


def unoriented_word(word: tuple[str, ...]) -> tuple[str, ...]:
    """Class of a cyclic word up to inversion; SU(2) traces cannot tell ``w`` from ``w^-1``."""
    return min(canonical_word(word), canonical_word(reverse_word(word)))


def unoriented(s: FormalSum) -> FormalSum:
    return FormalSum.from_pairs((unoriented_word(w), c) for w, c in s.terms.items())


def goldman_su2(cs: CurveSystem) -> FormalSum:
    """``1/2 sum_i eps_i ((C *_i C') - (C *_i C'^-1))``, words taken up to inversion."""
    half = Fraction(1, 2)
    pairs = []
    for x in cs.intersections:
        forward = rotate(cs.c2, x.pos2)
        pairs.append((unoriented_word(_concat(cs, x, forward)), half * x.sign))
        pairs.append((unoriented_word(_concat(cs, x, reverse_word(forward))), -half * x.sign))
    return FormalSum.from_pairs(pairs)


# ----------------------------------------------------------------------------
# flat torus


@dataclass(frozen=True)
class TorusCurve:
    p: int
    q: int

    def __post_init__(self):
        if self.p == 0 and self.q == 0:
            raise GoldmanError("(0, 0) is not a curve class")

    @property
    def primitive(self) -> bool:
        return math.gcd(self.p, self.q) == 1


# the second line passes through (1/1009, 3/997); the first through the origin
_OFFSET_DEN = 1009 * 997
_OFFSET2 = (997, 3 * 1009)


def _cross(a, b) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _bezout(r: int, s: int) -> tuple[int, int]:
    """Integers ``(x, y)`` with ``r*y - s*x = 1``."""
    def egcd(a, b):
        if b == 0:
            return (a, 1, 0)
        g, x, y = egcd(b, a % b)
        return (g, y, x - (a // b) * y)
    g, a, b = egcd(r, s)  # a*r + b*s = g = +-1
    return (-b * g, a * g)


def _line_meetings(c1: TorusCurve, c2: TorusCurve) -> tuple[list[tuple[int, int]], int]:
    """Parameters ``(t, u)`` in ``[0,1)^2`` where the two straight lines meet.

    Returned as integer numerators over a shared denominator.  The second
    line is the level set ``x cross w = const (mod 1)`` of its direction
    ``w``, so each integer level crossed by the first line is one meeting.
    """
    v, w = (c1.p, c1.q), (c2.p, c2.q)
    det = _cross(v, w)
    n = _OFFSET_DEN
    if det == 0:
        return [], n
    ad = abs(det)
    den = n * ad
    diff = (-_OFFSET2[0], -_OFFSET2[1])  # scaled by n
    base = _cross(diff, w)  # scaled by n
    z = _bezout(*w)
    out = []
    for k in range(-ad - 1, ad + 2):
        # t = (k - base/n) / det, as a numerator over n*|det|
        t = (k * n - base) * (1 if det > 0 else -1)
        if not 0 <= t < den:
            continue
        rel = (diff[0] * ad + t * v[0], diff[1] * ad + t * v[1])
        u = _cross(rel, z) % den
        out.append((t, u))
    return out, den


def torus_curve_system(c1: TorusCurve, c2: TorusCurve):
    """Cut both lines at their meeting points and record the pieces.

    Returns the curve system on piece letters and each letter's
    displacement in the plane as an integer pair over a common denominator.
    """
    meets, den = _line_meetings(c1, c2)
    ts = sorted(t for t, _ in meets)
    us = sorted(u for _, u in meets)
    sign = 1 if _cross((c1.p, c1.q), (c2.p, c2.q)) > 0 else -1
    displacement: dict[str, tuple[int, int]] = {}

    def pieces(params, curve, tag):
        if not params:
            displacement[f"{tag}0"] = (curve.p * den, curve.q * den)
            return (f"{tag}0",)
        word = []
        for i, t in enumerate(params):
            length = (params[i + 1] if i + 1 < len(params) else params[0] + den) - t
            displacement[f"{tag}{i}"] = (length * curve.p, length * curve.q)
            word.append(f"{tag}{i}")
        return tuple(word)

    w1 = pieces(ts, c1, "a")
    w2 = pieces(us, c2, "b")
    rank_t = {t: i for i, t in enumerate(ts)}
    rank_u = {u: i for i, u in enumerate(us)}
    xs = tuple(Intersection(i, rank_t[t], rank_u[u], sign) for i, (t, u) in enumerate(meets))
    return CurveSystem(w1, w2, xs), displacement, den


def _word_class(word: Sequence[str], displacement: Mapping, den: int) -> tuple[int, int]:
    x = y = 0
    for a in word:
        if a.startswith("-"):
            dx, dy = displacement[a[1:]]
            x, y = x - dx, y - dy
        else:
            dx, dy = displacement[a]
            x, y = x + dx, y + dy
    if x % den or y % den:
        raise GoldmanError(f"word {word} does not close up on the torus")
    return x // den, y // den


def torus_bracket(c1: TorusCurve, c2: TorusCurve) -> FormalSum:
    """Goldman bracket of two straight curves, by enumerating their meetings.

    The word-level bracket is mapped to homotopy classes through the
    displacement of each concatenated loop.  Terms are ``TorusCurve`` keys.
    """
    for c in (c1, c2):
        if not c.primitive:
            raise GoldmanError(f"({c.p}, {c.q}) is not primitive")
    cs, disp, den = torus_curve_system(c1, c2)
    pairs = [(TorusCurve(*_word_class(w, disp, den)), c) for w, c in goldman_gl(cs).terms.items()]
    return FormalSum.from_pairs(pairs)
