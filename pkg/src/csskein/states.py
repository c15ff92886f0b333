"""Vectorized enumeration of resolution states.

State ``s`` (an integer in ``[0, 2**k)``) resolves crossing ``j`` with the
first choice of the mode when bit ``j`` is clear and the second when set:
Flat/Smooth for the oriented engine, A/B for the bracket.  Loops are
counted as cycles of ``P = S o E`` on the 4k crossing slots, where ``E``
joins the two ends of each arc and ``S`` is the per-crossing pairing; every
loop contributes exactly two cycles of ``P`` (one per direction).
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from .diagram import Choice, LinkDiagram, pairing

__all__ = ["MODES", "StateCapError", "max_crossings", "loop_counts", "loop_histogram"]

MODES = {"oriented": (Choice.FLAT, Choice.SMOOTH), "bracket": (Choice.A, Choice.B)}
DEFAULT_CAP = 24
_CHUNK = 1 << 14


class StateCapError(ValueError):
    pass


def max_crossings() -> int:
    """State-sum crossing cap; ``SKEIN_MAX_CROSSINGS`` overrides the default of 24."""
    env = os.environ.get("SKEIN_MAX_CROSSINGS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise StateCapError(f"SKEIN_MAX_CROSSINGS must be an integer, got {env!r}") from None
    return DEFAULT_CAP


def check_cap(d: LinkDiagram, cap: int | None = None) -> None:
    cap = max_crossings() if cap is None else cap
    if len(d.crossings) > cap:
        raise StateCapError(f"{len(d.crossings)} crossings exceeds the state-sum cap of {cap}")


def _tables(d: LinkDiagram, mode: str):
    k = len(d.crossings)
    first, second = MODES[mode]
    ends: dict[int, list[int]] = {}
    for j, c in enumerate(d.crossings):
        for p, a in enumerate(c.slots()):
            ends.setdefault(a, []).append(4 * j + p)
    arc_mate = np.empty(4 * k, dtype=np.int32)
    for e1, e2 in ends.values():
        arc_mate[e1], arc_mate[e2] = e2, e1
    mates = []
    for ch in (first, second):
        m = np.empty(4 * k, dtype=np.int32)
        for j, c in enumerate(d.crossings):
            for p, r in pairing(ch, c.sign):
                m[4 * j + p], m[4 * j + r] = 4 * j + r, 4 * j + p
        mates.append(m)
    # composite permutations P = S o E for each choice at each slot
    return mates[0][arc_mate], mates[1][arc_mate]


def _count_chunk(p0, p1, idx: np.ndarray, k: int) -> np.ndarray:
    n = 4 * k
    slot_crossing = np.arange(n) // 4
    # p0[e] and p1[e] lie in the same crossing (the one E(e) enters)
    bits = (idx[:, None] >> slot_crossing[p0][None, :]) & 1
    nxt = np.where(bits.astype(bool), p1[None, :], p0[None, :])
    lab = np.broadcast_to(np.arange(n, dtype=np.int32), nxt.shape).copy()
    steps = 1
    while steps < n:
        lab = np.minimum(lab, np.take_along_axis(lab, nxt, axis=1))
        nxt = np.take_along_axis(nxt, nxt, axis=1)
        steps *= 2
    cycles = (lab == np.arange(n)[None, :]).sum(axis=1)
    return cycles // 2


@lru_cache(maxsize=512)
def _loop_counts_cached(d: LinkDiagram, mode: str, forced: tuple) -> np.ndarray:
    k = len(d.crossings)
    free = [j for j in range(k) if j not in dict(forced)]
    base = sum(b << j for j, b in forced)
    if k == 0:
        out = np.array([d.unknots], dtype=np.int64)
        out.setflags(write=False)
        return out
    p0, p1 = _tables(d, mode)
    total = 1 << len(free)
    out = np.empty(total, dtype=np.int64)
    free_arr = np.array(free, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        sub = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        # scatter the bits of the free-state index onto the free crossings
        full = np.full(sub.shape, base, dtype=np.int64)
        for t, j in enumerate(free_arr):
            full |= ((sub >> t) & 1) << j
        out[start:start + len(sub)] = _count_chunk(p0, p1, full, k)
    out += d.unknots
    out.setflags(write=False)
    return out


def loop_counts(d: LinkDiagram, mode: str, forced: dict[int, int] | None = None,
                cap: int | None = None) -> np.ndarray:
    """Loop count for every state, indexed by state number.

    ``forced`` pins crossing ``j`` to choice bit ``forced[j]``; the returned
    array then ranges over the remaining crossings, with their bits packed
    in increasing crossing order.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    check_cap(d, cap)
    return _loop_counts_cached(d, mode, tuple(sorted((forced or {}).items())))


def loop_histogram(d: LinkDiagram, mode: str, forced: dict[int, int] | None = None,
                   cap: int | None = None) -> dict[tuple[int, int, int], int]:
    """Number of states per ``(second-choice count at + crossings, at - crossings, loops)``.

    Forced crossings are excluded from the two counts.
    """
    forced = forced or {}
    loops = loop_counts(d, mode, forced, cap)
    free = [j for j in range(len(d.crossings)) if j not in forced]
    idx = np.arange(len(loops), dtype=np.int64)
    n_pos = np.zeros(len(loops), dtype=np.int64)
    n_neg = np.zeros(len(loops), dtype=np.int64)
    for t, j in enumerate(free):
        bit = (idx >> t) & 1
        if d.crossings[j].sign > 0:
            n_pos += bit
        else:
            n_neg += bit
    keys, counts = np.unique(np.stack([n_pos, n_neg, loops]), axis=1, return_counts=True)
    return {tuple(int(x) for x in keys[:, i]): int(counts[i]) for i in range(keys.shape[1])}
