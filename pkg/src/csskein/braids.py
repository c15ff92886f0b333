"""Braid closures: a source of realizable diagrams for tests and ``verify``."""

from __future__ import annotations

import random
from typing import Sequence

from .diagram import Crossing, LinkDiagram

__all__ = ["braid_closure", "random_braid", "random_diagram"]


def braid_closure(word: Sequence[int], n_strands: int | None = None) -> LinkDiagram:
    """Closure of a braid word; ``i`` is sigma_i, ``-i`` its inverse.

    Strands run upward.  In sigma_i the strand at position i passes over
    the one at position i+1 while moving right, which is a positive crossing.
    Strands that meet no generator become crossing-free circles.
    """
    if any(g == 0 for g in word):
        raise ValueError("braid generators are nonzero integers")
    n = n_strands if n_strands is not None else max((abs(g) for g in word), default=0) + 1
    if any(abs(g) >= n for g in word):
        raise ValueError(f"generator out of range for {n} strands")
    counter = iter(range(1, 10**9))
    bottom = [next(counter) for _ in range(n)]
    pos = list(bottom)
    raw = []
    for g in word:
        i = abs(g) - 1
        left, right = pos[i], pos[i + 1]
        new_left, new_right = next(counter), next(counter)
        if g > 0:
            raw.append((left, new_right, right, new_left, 1))
        else:
            raw.append((right, new_left, left, new_right, -1))
        pos[i], pos[i + 1] = new_left, new_right
    # closing identifies the top arc at each position with the bottom one
    alias = {top: bot for top, bot in zip(pos, bottom)}
    crossings = tuple(Crossing(*(alias.get(a, a) for a in r[:4]), r[4]) for r in raw)
    used = {a for c in crossings for a in c.slots()}
    free = sum(1 for b in bottom if b not in used)
    return LinkDiagram(crossings, free).normalized()


def random_braid(rng: random.Random, n_strands: int, length: int) -> list[int]:
    return [rng.choice((1, -1)) * rng.randint(1, n_strands - 1) for _ in range(length)]


def random_diagram(rng: random.Random, max_crossings: int = 8, max_strands: int = 4) -> LinkDiagram:
    """Random braid closure with 1..max_crossings crossings."""
    n = rng.randint(2, max_strands)
    length = rng.randint(1, max_crossings)
    return braid_closure(random_braid(rng, n, length), n)
