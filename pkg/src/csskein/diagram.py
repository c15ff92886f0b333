"""Oriented link diagrams as 4-valent crossing data.

A diagram is a tuple of crossings plus a count of crossing-free circles.
Each crossing names the four arcs at its slots (over-strand in/out,
under-strand in/out) and carries its sign.  The planar cyclic order at a
crossing is recovered from the sign: reading counterclockwise from the
incoming under-arc, a positive crossing shows
``under_in, over_out, under_out, over_in`` and a negative one
``under_in, over_in, under_out, over_out``.  This is exactly the
KnotTheory ``X[i,j,k,l]`` convention, so PD codes round-trip.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Crossing",
    "LinkDiagram",
    "DiagramError",
    "Choice",
    "ResolutionState",
    "parse_pd",
    "parse_diagram",
    "validate",
    "components",
    "writhe",
    "linking_matrix",
    "resolve",
    "faces",
    "euler_ok",
    "projection_pieces",
    "remove_flat",
    "mirror",
    "switch_crossing",
    "smooth_crossing",
    "disjoint_union",
    "canonical_key",
    "isomorphic",
    "apply_reidemeister",
    "reidemeister_sites",
]

# slot indices inside Crossing.slots()
OVER_IN, OVER_OUT, UNDER_IN, UNDER_OUT = range(4)
# counterclockwise slot order, starting at the incoming under-arc
_CCW = {1: (UNDER_IN, OVER_OUT, UNDER_OUT, OVER_IN), -1: (UNDER_IN, OVER_IN, UNDER_OUT, OVER_OUT)}


class DiagramError(ValueError):
    """Invalid diagram input; ``violations`` lists every problem found."""

    def __init__(self, message: str, violations: Sequence[str] = ()):
        super().__init__(message)
        self.violations = list(violations) or [message]


@dataclass(frozen=True)
class Crossing:
    over_in: int
    over_out: int
    under_in: int
    under_out: int
    sign: int

    def slots(self) -> tuple[int, int, int, int]:
        return (self.over_in, self.over_out, self.under_in, self.under_out)

    def ccw(self) -> tuple[int, int, int, int]:
        """Arcs in counterclockwise order from the incoming under-arc (PD order)."""
        s = self.slots()
        return tuple(s[p] for p in _CCW[self.sign])

    def switched(self) -> "Crossing":
        """Same planar crossing with over and under exchanged."""
        return Crossing(self.under_in, self.under_out, self.over_in, self.over_out, -self.sign)

    def relabeled(self, m) -> "Crossing":
        return Crossing(m[self.over_in], m[self.over_out], m[self.under_in], m[self.under_out], self.sign)

    def to_pd(self) -> str:
        return "X[{},{},{},{}]".format(*self.ccw())


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...] = ()
    unknots: int = 0
    arcs: frozenset = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self.arcs is None:
            object.__setattr__(self, "arcs", frozenset(a for c in self.crossings for a in c.slots()))
        else:
            object.__setattr__(self, "arcs", frozenset(self.arcs))

    def __len__(self):
        return len(self.crossings)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @cached_property
    def _ends(self) -> dict[int, list[tuple[int, int]]]:
        """arc -> list of (crossing index, slot index) where it occurs."""
        ends: dict[int, list[tuple[int, int]]] = {a: [] for a in self.arcs}
        for ci, c in enumerate(self.crossings):
            for si, a in enumerate(c.slots()):
                ends.setdefault(a, []).append((ci, si))
        return ends

    def head(self, arc: int) -> tuple[int, int]:
        """(crossing, slot) where ``arc`` ends."""
        return next(e for e in self._ends[arc] if e[1] in (OVER_IN, UNDER_IN))

    def tail(self, arc: int) -> tuple[int, int]:
        """(crossing, slot) where ``arc`` starts."""
        return next(e for e in self._ends[arc] if e[1] in (OVER_OUT, UNDER_OUT))

    @cached_property
    def successor(self) -> dict[int, int]:
        """Next arc along the orientation (straight through each crossing)."""
        nxt = {}
        for c in self.crossings:
            nxt[c.over_in] = c.over_out
            nxt[c.under_in] = c.under_out
        return nxt

    def to_pd(self) -> str:
        return ", ".join(c.to_pd() for c in self.crossings)

    def to_json(self) -> dict:
        return {
            "crossings": [
                {"over_in": c.over_in, "over_out": c.over_out, "under_in": c.under_in,
                 "under_out": c.under_out, "sign": c.sign}
                for c in self.crossings
            ],
            "unknots": self.unknots,
        }

    def normalized(self) -> "LinkDiagram":
        """Relabel arcs to 1..2k preserving their relative order."""
        m = {a: i + 1 for i, a in enumerate(sorted(self.arcs))}
        return LinkDiagram(tuple(c.relabeled(m) for c in self.crossings), self.unknots)


# ----------------------------------------------------------------------------
# parsing

_TERM_RE = re.compile(r"X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")


def _split_terms(body: str) -> list[str]:
    terms, depth, cur = [], 0, []
    for ch in body:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise DiagramError(f"malformed PD code: unbalanced ']' in {body!r}")
        if ch == "," and depth == 0:
            terms.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise DiagramError(f"malformed PD code: unbalanced '[' in {body!r}")
    tail = "".join(cur).strip()
    if tail:
        terms.append(tail)
    return [t for t in terms if t]


def _pd_quadruples(text: str) -> list[tuple[int, int, int, int]]:
    body = text.strip()
    m = re.fullmatch(r"PD\s*\[(.*)\]", body, flags=re.S)
    if m:
        body = m.group(1)
    quads = []
    for n, term in enumerate(_split_terms(body)):
        mt = _TERM_RE.fullmatch(term)
        if not mt:
            raise DiagramError(f"malformed PD term #{n + 1}: {term!r}")
        quads.append(tuple(int(g) for g in mt.groups()))
    return quads


def _orient_pd(quads: list[tuple[int, int, int, int]]) -> list[Crossing]:
    """Decide the over-strand direction at every crossing.

    Under-strands are oriented by the convention.  Each arc is once-in and
    once-out, which propagates orientation to over-strands; crossings left
    undecided (components that only ever pass over) fall back to the rule
    that labels increase along a component.
    """
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, q in enumerate(quads):
        for pos, a in enumerate(q):
            occ.setdefault(a, []).append((ci, pos))
    problems = [f"arc multiplicity: arc {a} appears {len(v)} times" for a, v in sorted(occ.items()) if len(v) != 2]
    if problems:
        raise DiagramError(problems[0], problems)

    # role[(ci, pos)] is +1 for an incoming slot, -1 for outgoing
    role: dict[tuple[int, int], int] = {}
    stack: list[tuple[int, int]] = []

    def assign(key, r):
        old = role.get(key)
        if old is None:
            role[key] = r
            stack.append(key)
        elif old != r:
            ci, pos = key
            raise DiagramError(
                f"non-closable strand structure at crossing {ci + 1} (arc {quads[ci][pos]})"
            )

    def drain():
        while stack:
            ci, pos = stack.pop()
            r = role[(ci, pos)]
            a = quads[ci][pos]
            assign(next(o for o in occ[a] if o != (ci, pos)), -r)
            if pos in (1, 3):
                assign((ci, 4 - pos), -r)

    for ci in range(len(quads)):
        assign((ci, 0), 1)
        assign((ci, 2), -1)
    drain()
    for ci, (i, j, k, l) in enumerate(quads):
        if (ci, 1) not in role:
            positive = (j - l == 1) or (l - j > 1)
            assign((ci, 3), 1 if positive else -1)
            drain()

    crossings = []
    for ci, (i, j, k, l) in enumerate(quads):
        if role[(ci, 3)] == 1:
            crossings.append(Crossing(l, j, i, k, 1))
        else:
            crossings.append(Crossing(j, l, i, k, -1))
    return crossings


def parse_pd(text: str, unknots: int = 0) -> LinkDiagram:
    """Parse a PD code (``X[a,b,c,d], ...``) or a native JSON document.

    >>> d = parse_pd("X[1,3,2,4], X[3,1,4,2]")
    >>> components(d)[0], writhe(d)
    (2, 2)
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        return parse_diagram(json.loads(stripped))
    quads = _pd_quadruples(stripped) if stripped else []
    d = LinkDiagram(tuple(_orient_pd(quads)), unknots).normalized()
    _raise_if_invalid(d)
    return d


def parse_diagram(obj: dict) -> LinkDiagram:
    """Build a diagram from the native JSON object.

    Keys: ``crossings`` (list of ``over_in``/``over_out``/``under_in``/
    ``under_out``/``sign`` records) or ``pd`` (PD string), and ``unknots``.
    """
    if not isinstance(obj, dict):
        raise DiagramError("diagram JSON must be an object")
    unknots = obj.get("unknots", 0)
    if not isinstance(unknots, int) or unknots < 0:
        raise DiagramError(f"unknots must be a non-negative integer, got {unknots!r}")
    if "pd" in obj:
        return parse_pd(obj["pd"], unknots=unknots)
    crossings = []
    for n, rec in enumerate(obj.get("crossings", [])):
        try:
            crossings.append(Crossing(int(rec["over_in"]), int(rec["over_out"]),
                                      int(rec["under_in"]), int(rec["under_out"]), int(rec["sign"])))
        except KeyError as exc:
            raise DiagramError(f"crossing #{n + 1}: missing field {exc.args[0]!r}") from None
        except (TypeError, ValueError):
            raise DiagramError(f"crossing #{n + 1}: fields must be integers") from None
    arcs = obj.get("arcs")
    d = LinkDiagram(tuple(crossings), unknots, arcs=frozenset(arcs) if arcs is not None else None)
    _raise_if_invalid(d)
    return d.normalized()


def _raise_if_invalid(d: LinkDiagram) -> None:
    problems = validate(d)
    if problems:
        raise DiagramError(problems[0], problems)


# ----------------------------------------------------------------------------
# validation and queries


def validate(d: LinkDiagram) -> list[str]:
    """Return the list of invariant violations (empty when ``d`` is valid)."""
    problems = []
    if d.unknots < 0:
        problems.append(f"unknots: negative count {d.unknots}")
    ins: dict[int, int] = {}
    outs: dict[int, int] = {}
    for ci, c in enumerate(d.crossings):
        if c.sign not in (1, -1):
            problems.append(f"sign: crossing {ci + 1} has sign {c.sign}")
        for si, a in enumerate(c.slots()):
            if a not in d.arcs:
                problems.append(f"dangling arc: crossing {ci + 1} references unknown arc {a}")
            target = ins if si in (OVER_IN, UNDER_IN) else outs
            target[a] = target.get(a, 0) + 1
    for a in sorted(d.arcs | ins.keys() | outs.keys()):
        n_in, n_out = ins.get(a, 0), outs.get(a, 0)
        if n_in + n_out != 2:
            problems.append(f"arc multiplicity: arc {a} appears {n_in + n_out} times")
        elif n_in != 1:
            problems.append(f"orientation: arc {a} has {n_in} incoming and {n_out} outgoing slots")
    return problems


def components(d: LinkDiagram) -> tuple[int, dict[int, int]]:
    """Number of components and arc -> component index.

    Indices are ordered by the smallest arc label of each component;
    crossing-free circles count but own no arcs.
    """
    nxt = d.successor
    assignment: dict[int, int] = {}
    idx = 0
    for a in sorted(d.arcs):
        if a in assignment:
            continue
        x = a
        while x not in assignment:
            assignment[x] = idx
            x = nxt[x]
        idx += 1
    return idx + d.unknots, assignment


def writhe(d: LinkDiagram) -> int:
    return sum(c.sign for c in d.crossings)


def linking_matrix(d: LinkDiagram) -> list[list[int]]:
    """Symmetric matrix: self-writhe on the diagonal, linking numbers off it.

    Crossing-free circles get zero rows at the end.
    """
    n, comp = components(d)
    mat = [[0] * n for _ in range(n)]
    twice = [[0] * n for _ in range(n)]
    for c in d.crossings:
        i, j = comp[c.over_in], comp[c.under_in]
        if i == j:
            mat[i][i] += c.sign
        else:
            twice[i][j] += c.sign
            twice[j][i] += c.sign
    for i in range(n):
        for j in range(n):
            if i != j:
                if twice[i][j] % 2:
                    raise DiagramError("odd mutual crossing count; diagram is not closed")
                mat[i][j] = twice[i][j] // 2
    return mat


# ----------------------------------------------------------------------------
# resolutions


class Choice(enum.Enum):
    FLAT = "flat"
    SMOOTH = "smooth"
    A = "A"
    B = "B"


# slot pairings of a crossing
_FLAT = ((OVER_IN, OVER_OUT), (UNDER_IN, UNDER_OUT))
_SMOOTH = ((OVER_IN, UNDER_OUT), (UNDER_IN, OVER_OUT))
_OTHER = ((OVER_IN, UNDER_IN), (OVER_OUT, UNDER_OUT))


def pairing(choice: Choice, sign: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Slot pairing realised by ``choice`` at a crossing of the given sign.

    The A-smoothing joins the two regions swept when the over-strand is
    rotated counterclockwise; for a positive crossing it coincides with the
    oriented smoothing, for a negative one the B-smoothing does.
    """
    if choice is Choice.FLAT:
        return _FLAT
    if choice is Choice.SMOOTH:
        return _SMOOTH
    if choice is Choice.A:
        return _SMOOTH if sign > 0 else _OTHER
    return _OTHER if sign > 0 else _SMOOTH


@dataclass(frozen=True)
class ResolutionState:
    choices: tuple[Choice, ...]

    @classmethod
    def of(cls, choices: Iterable) -> "ResolutionState":
        return cls(tuple(c if isinstance(c, Choice) else Choice(c) for c in choices))

    def loop_count(self, d: LinkDiagram) -> int:
        return resolve(d, self)


class _DSU:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def resolve(d: LinkDiagram, state: ResolutionState | Sequence) -> int:
    """Number of closed loops after resolving every crossing per ``state``."""
    if not isinstance(state, ResolutionState):
        state = ResolutionState.of(state)
    if len(state.choices) != len(d.crossings):
        raise DiagramError(
            f"resolution state has {len(state.choices)} choices for {len(d.crossings)} crossings"
        )
    dsu = _DSU(d.arcs)
    for c, ch in zip(d.crossings, state.choices):
        s = c.slots()
        for p, r in pairing(ch, c.sign):
            dsu.union(s[p], s[r])
    return len({dsu.find(a) for a in d.arcs}) + d.unknots


# ----------------------------------------------------------------------------
# planar structure


def faces(d: LinkDiagram) -> list[list[tuple[int, int]]]:
    """Faces of the projection, each a cyclic list of ``(arc, direction)``.

    Every face is traversed with the face on the left; ``direction`` is +1
    when the arc is walked along its orientation.
    """
    # dart = (crossing, ccw position); arc at a dart and the dart at its other end
    arc_at = {}
    darts_of: dict[int, list[tuple[int, int]]] = {}
    for ci, c in enumerate(d.crossings):
        s = c.slots()
        for pos, slot in enumerate(_CCW[c.sign]):
            arc_at[(ci, pos)] = (s[slot], slot)
            darts_of.setdefault(s[slot], []).append((ci, pos))
    seen = set()
    out = []
    for start in sorted(arc_at):
        if start in seen:
            continue
        face = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            arc, slot = arc_at[dart]
            face.append((arc, 1 if slot in (OVER_OUT, UNDER_OUT) else -1))
            a, b = darts_of[arc]
            far = b if a == dart else a
            dart = (far[0], (far[1] - 1) % 4)
        out.append(face)
    return out


def projection_pieces(d: LinkDiagram) -> int:
    """Connected components of the projection graph (crossing-free circles excluded)."""
    if not d.crossings:
        return 0
    dsu = _DSU(range(len(d.crossings)))
    for a in d.arcs:
        (c1, _), (c2, _) = d._ends[a]
        dsu.union(c1, c2)
    return len({dsu.find(i) for i in range(len(d.crossings))})


def euler_ok(d: LinkDiagram) -> bool:
    """Planarity check: each connected piece with k crossings has k + 2 faces."""
    return len(faces(d)) == len(d.crossings) + 2 * projection_pieces(d)


# ----------------------------------------------------------------------------
# rewriting helpers


def mirror(d: LinkDiagram) -> LinkDiagram:
    return LinkDiagram(tuple(c.switched() for c in d.crossings), d.unknots)


def switch_crossing(d: LinkDiagram, index: int) -> LinkDiagram:
    cs = list(d.crossings)
    cs[index] = cs[index].switched()
    return LinkDiagram(tuple(cs), d.unknots)


def _splice(d: LinkDiagram, removals: dict[int, Choice]) -> LinkDiagram:
    """Delete crossings, reconnecting their strands flat or smoothed."""
    dsu = _DSU(d.arcs)
    for ci, ch in removals.items():
        c = d.crossings[ci]
        s = c.slots()
        for p, r in pairing(ch, c.sign):
            dsu.union(s[p], s[r])
    kept = [c for ci, c in enumerate(d.crossings) if ci not in removals]
    used = {dsu.find(a) for c in kept for a in c.slots()}
    closed = len({dsu.find(a) for a in d.arcs} - used)
    m = {a: dsu.find(a) for a in d.arcs}
    return LinkDiagram(tuple(c.relabeled(m) for c in kept), d.unknots + closed).normalized()


def smooth_crossing(d: LinkDiagram, index: int) -> LinkDiagram:
    """Oriented smoothing of one crossing (the L0 of a skein triple)."""
    return _splice(d, {index: Choice.SMOOTH})


def remove_flat(d: LinkDiagram, indices: Iterable[int]) -> LinkDiagram:
    return _splice(d, {i: Choice.FLAT for i in indices})


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    shift = max(d1.arcs, default=0)
    m = {a: a + shift for a in d2.arcs}
    cs = d1.crossings + tuple(c.relabeled(m) for c in d2.crossings)
    return LinkDiagram(cs, d1.unknots + d2.unknots).normalized()


# ----------------------------------------------------------------------------
# canonical form


def _label_from(d: LinkDiagram, start: int, labels: dict[int, int]) -> None:
    nxt = d.successor
    x = start
    while x not in labels:
        labels[x] = len(labels) + 1
        x = nxt[x]


def _complete_labels(d: LinkDiagram, labels: dict[int, int]) -> list[dict[int, int]]:
    """Extend a partial labelling component by component, deterministically.

    The next component is entered through the first unlabelled slot of the
    crossing met earliest along the labelled arcs; disconnected remainders
    branch over every possible start arc.
    """
    while len(labels) < len(d.arcs):
        order = sorted(labels, key=labels.get)
        nxt_start = None
        for a in order:
            ci, _ = d.head(a)
            for x in d.crossings[ci].slots():
                if x not in labels:
                    nxt_start = x
                    break
            if nxt_start is not None:
                break
        if nxt_start is None:
            out = []
            for s in sorted(set(d.arcs) - labels.keys()):
                branch = dict(labels)
                _label_from(d, s, branch)
                out.extend(_complete_labels(d, branch))
            return out
        _label_from(d, nxt_start, labels)
    return [labels]


def canonical_key(d: LinkDiagram) -> tuple:
    """Relabelling-invariant key: equal keys iff the diagrams are isomorphic."""
    if not d.crossings:
        return ((), d.unknots)
    best = None
    for s in sorted(d.arcs):
        first = {}
        _label_from(d, s, first)
        for labels in _complete_labels(d, first):
            key = tuple(sorted(c.relabeled(labels).slots() + (c.sign,) for c in d.crossings))
            if best is None or key < best:
                best = key
    return (best, d.unknots)


def isomorphic(d1: LinkDiagram, d2: LinkDiagram) -> bool:
    return canonical_key(d1) == canonical_key(d2)


# ----------------------------------------------------------------------------
# Reidemeister moves


def _fresh(d: LinkDiagram, n: int) -> list[int]:
    top = max(d.arcs, default=0)
    return list(range(top + 1, top + 1 + n))


def _replace_slot(cs: list[Crossing], ci: int, slot: int, arc: int) -> None:
    s = list(cs[ci].slots())
    s[slot] = arc
    cs[ci] = Crossing(*s, cs[ci].sign)


def _r1_add(d: LinkDiagram, arc: int | None, sign: int, over_first: bool) -> LinkDiagram:
    cs = list(d.crossings)
    unknots = d.unknots
    if arc is None:
        if unknots == 0:
            raise DiagramError("R1 needs an arc or a crossing-free circle")
        unknots -= 1
        a, loop = _fresh(d, 2)
        a2 = a
    else:
        if arc not in d.arcs:
            raise DiagramError(f"R1: unknown arc {arc}")
        a = arc
        loop, a2 = _fresh(d, 2)
        ci, slot = d.head(a)
        _replace_slot(cs, ci, slot, a2)
    if over_first:
        cs.append(Crossing(a, loop, loop, a2, sign))
    else:
        cs.append(Crossing(loop, a2, a, loop, sign))
    return LinkDiagram(tuple(cs), unknots).normalized()


def _kink_at(d: LinkDiagram, loop: int) -> int | None:
    if loop not in d.arcs:
        return None
    (c1, s1), (c2, s2) = d.tail(loop), d.head(loop)
    if c1 != c2:
        return None
    if (s1, s2) in ((OVER_OUT, UNDER_IN), (UNDER_OUT, OVER_IN)):
        return c1
    return None


def _r1_remove(d: LinkDiagram, loop: int) -> LinkDiagram:
    ci = _kink_at(d, loop)
    if ci is None:
        raise DiagramError(f"R1^-1: arc {loop} is not the loop of a kink")
    return remove_flat(d, [ci])


def _face_with(d: LinkDiagram, a: int, b: int):
    for f in faces(d):
        da = next((s for x, s in f if x == a), None)
        db = next((s for x, s in f if x == b), None)
        if da is not None and db is not None:
            return da, db
    return None


def _r2_add(d: LinkDiagram, a: int, b: int, a_over: bool) -> LinkDiagram:
    if a == b:
        raise DiagramError("R2 needs two distinct arcs")
    found = _face_with(d, a, b)
    if found is None:
        raise DiagramError(f"R2: arcs {a} and {b} do not share a face")
    sa, sb = found
    # Local picture: the shared face lies between a (bottom, running right
    # in face direction) and b (top, running left).  A finger of a pushes
    # up through b, giving crossings P (left) and Q (right).
    m1, m2, n1, n2 = _fresh(d, 4)
    seg_a = {"L": a, "M": m1, "R": m2} if sa > 0 else {"R": a, "M": m1, "L": m2}
    seg_b = {"bR": b, "bM": n1, "bL": n2} if sb > 0 else {"bL": b, "bM": n1, "bR": n2}
    cs = list(d.crossings)
    hc, hs = d.head(a)
    _replace_slot(cs, hc, hs, seg_a["R"] if sa > 0 else seg_a["L"])
    hc, hs = d.head(b)
    _replace_slot(cs, hc, hs, seg_b["bL"] if sb > 0 else seg_b["bR"])

    # (in, out, tangent) for each strand at P and Q
    a_P = (seg_a["L"], seg_a["M"], (0, 1)) if sa > 0 else (seg_a["M"], seg_a["L"], (0, -1))
    a_Q = (seg_a["M"], seg_a["R"], (0, -1)) if sa > 0 else (seg_a["R"], seg_a["M"], (0, 1))
    b_P = (seg_b["bM"], seg_b["bL"], (-1, 0)) if sb > 0 else (seg_b["bL"], seg_b["bM"], (1, 0))
    b_Q = (seg_b["bR"], seg_b["bM"], (-1, 0)) if sb > 0 else (seg_b["bM"], seg_b["bR"], (1, 0))
    for ast, bst in ((a_P, b_P), (a_Q, b_Q)):
        over, under = (ast, bst) if a_over else (bst, ast)
        (ox, oy), (ux, uy) = over[2], under[2]
        sign = 1 if ox * uy - oy * ux > 0 else -1
        cs.append(Crossing(over[0], over[1], under[0], under[1], sign))
    return LinkDiagram(tuple(cs), d.unknots).normalized()


def _bigon(d: LinkDiagram, x: int, y: int) -> tuple[int, int] | None:
    if x == y or x not in d.arcs or y not in d.arcs:
        return None
    for f in faces(d):
        if len(f) == 2 and {f[0][0], f[1][0]} == {x, y}:
            (cx1, sx1), (cx2, sx2) = d.tail(x), d.head(x)
            if cx1 == cx2:
                return None
            level = lambda s: s in (OVER_IN, OVER_OUT)
            if level(sx1) == level(sx2):
                return cx1, cx2
    return None


def _r2_remove(d: LinkDiagram, x: int, y: int) -> LinkDiagram:
    pair = _bigon(d, x, y)
    if pair is None:
        raise DiagramError(f"R2^-1: arcs {x}, {y} do not bound a removable bigon")
    return remove_flat(d, pair)


def _triangle(d: LinkDiagram, arcs: Iterable[int]):
    want = set(arcs)
    for f in faces(d):
        if len(f) == 3 and {a for a, _ in f} == want and len(want) == 3:
            edges = []
            for a, _ in f:
                (cp, sp), (cq, sq) = d.tail(a), d.head(a)
                edges.append((a, cp, sp, cq, sq))
            if len({e[1] for e in edges} | {e[3] for e in edges}) != 3:
                return None
            levels = [(sp in (OVER_OUT,), sq in (OVER_IN,)) for _, _, sp, _, sq in edges]
            if (True, True) in levels and (False, False) in levels:
                return edges
            return None
    return None


def _r3(d: LinkDiagram, arcs: Sequence[int]) -> LinkDiagram:
    edges = _triangle(d, arcs)
    if edges is None:
        raise DiagramError(f"R3: arcs {tuple(arcs)} do not bound a movable triangle")
    cs = list(d.crossings)
    updates = []
    for e, cp, sp, cq, sq in edges:
        in_slot = sp - 1  # OVER_OUT -> OVER_IN, UNDER_OUT -> UNDER_IN
        out_slot = sq + 1
        x = d.crossings[cp].slots()[in_slot]
        y = d.crossings[cq].slots()[out_slot]
        updates += [(cq, sq, x), (cq, out_slot, e), (cp, in_slot, e), (cp, sp, y)]
    for ci, slot, arc in updates:
        _replace_slot(cs, ci, slot, arc)
    return LinkDiagram(tuple(cs), d.unknots).normalized()


_MOVES = ("R1+", "R1-", "R1^-1", "R2", "R2^-1", "R3")


def apply_reidemeister(d: LinkDiagram, move: str, site: Sequence[int] | int | None = None,
                       *, over_first: bool = True, a_over: bool = True) -> LinkDiagram:
    """Apply a Reidemeister move at a site given by arc ids.

    ``R1+``/``R1-``: kink of that sign on arc ``site`` (or on a free circle
    when ``site`` is None).  ``R1^-1``: remove the kink whose loop is
    ``site``.  ``R2``: push arc ``site[0]`` across ``site[1]`` (over when
    ``a_over``).  ``R2^-1``: cancel the bigon bounded by two arcs.  ``R3``:
    slide across the triangle bounded by three arcs.
    """
    if isinstance(site, int):
        site = (site,)
    if move in ("R1+", "R1-"):
        arc = site[0] if site else None
        return _r1_add(d, arc, 1 if move == "R1+" else -1, over_first)
    if move == "R1^-1":
        return _r1_remove(d, site[0])
    if move == "R2":
        return _r2_add(d, site[0], site[1], a_over)
    if move == "R2^-1":
        return _r2_remove(d, site[0], site[1])
    if move == "R3":
        return _r3(d, site)
    raise DiagramError(f"unknown move {move!r}; expected one of {_MOVES}")


def reidemeister_sites(d: LinkDiagram, move: str) -> list[tuple[int, ...]]:
    """All sites where ``move`` applies, in a deterministic order."""
    if move in ("R1+", "R1-"):
        return [(a,) for a in sorted(d.arcs)]
    if move == "R1^-1":
        return [(a,) for a in sorted(d.arcs) if _kink_at(d, a) is not None]
    if move == "R2":
        out = set()
        for f in faces(d):
            arcs = sorted({a for a, _ in f})
            out.update((a, b) for a in arcs for b in arcs if a != b)
        return sorted(out)
    if move == "R2^-1":
        return sorted({tuple(sorted((f[0][0], f[1][0]))) for f in faces(d)
                       if len(f) == 2 and _bigon(d, f[0][0], f[1][0])})
    if move == "R3":
        return sorted({tuple(sorted(a for a, _ in f)) for f in faces(d)
                       if len(f) == 3 and _triangle(d, [a for a, _ in f])})
    raise DiagramError(f"unknown move {move!r}")
