"""Small named diagrams used by tests, scripts and ``verify``."""

from __future__ import annotations

from typing import Callable

from .braids import braid_closure
from .diagram import LinkDiagram, apply_reidemeister, mirror, parse_pd

__all__ = ["CORPUS", "named", "corpus_items"]

_PD = {
    "hopf+": "X[1,3,2,4], X[3,1,4,2]",
    "trefoil+": "X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]",
    "figure8": "X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]",
    "kink-": "X[1,2,2,1]",
}

_BRAIDS = {
    "torus(2,4)": [1, 1, 1, 1],
    "cinquefoil": [1, 1, 1, 1, 1],
    "three-twist": [1, 1, 1, 2, -1, 2],
    "borromean": [1, -2] * 3,
    "whitehead": [1, 1, -2, 1, -2],
    "stevedore": [1, 1, 2, -1, -3, 2, -3],
    "torus(3,4)": [1, 2] * 4,
    "chain3": [1, 1, 2, 2],
}


def _builders() -> dict[str, Callable[[], LinkDiagram]]:
    out: dict[str, Callable[[], LinkDiagram]] = {
        "unknot": lambda: LinkDiagram((), 1),
        "unlink2": lambda: LinkDiagram((), 2),
        "kink+": lambda: apply_reidemeister(LinkDiagram((), 1), "R1+"),
    }
    for name, pd in _PD.items():
        out[name] = lambda pd=pd: parse_pd(pd)
    for name, word in _BRAIDS.items():
        out[name] = lambda word=word: braid_closure(word)
    out["hopf-"] = lambda: mirror(parse_pd(_PD["hopf+"]))
    out["trefoil-"] = lambda: mirror(parse_pd(_PD["trefoil+"]))
    return out


CORPUS = _builders()


def named(name: str) -> LinkDiagram:
    try:
        return CORPUS[name]()
    except KeyError:
        raise KeyError(f"unknown corpus diagram {name!r}; known: {sorted(CORPUS)}") from None


def corpus_items(max_crossings: int | None = None) -> list[tuple[str, LinkDiagram]]:
    items = [(n, named(n)) for n in sorted(CORPUS)]
    if max_crossings is not None:
        items = [(n, d) for n, d in items if len(d.crossings) <= max_crossings]
    return items
