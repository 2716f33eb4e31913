"""The Avella-Alaminos--Geiss derived invariant of a gentle algebra."""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .quiver import BoundQuiver, QuiverError, is_admissible, is_connected, is_gentle
from .threads import SignConstraintError, Thread, assign_signs, forbidden_threads, permitted_threads


@dataclass(frozen=True)
class AGInvariant:
    """Finite multiset of pairs ``(n, m)`` of naturals."""

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(tuple(p) for p in self.pairs)))

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]]) -> "AGInvariant":
        return cls(tuple(pairs))

    @property
    def counts(self) -> Counter:
        return Counter(self.pairs)

    def mult(self, n: int, m: int) -> int:
        return self.pairs.count((n, m))

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __add__(self, other: "AGInvariant") -> "AGInvariant":
        return AGInvariant(self.pairs + other.pairs)

    def __str__(self) -> str:
        return format_ag(self)


def ag_equal(a: AGInvariant, b: AGInvariant) -> bool:
    return Counter(a.pairs) == Counter(b.pairs)


def format_ag(a: AGInvariant) -> str:
    if not a.pairs:
        return "0"
    terms = []
    for (n, m), k in sorted(Counter(a.pairs).items()):
        terms.append(f"({n},{m})*" if k == 1 else f"{k}.({n},{m})*")
    return " + ".join(terms)


_TERM = re.compile(r"^(?:(\d+)\s*\.\s*)?\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*\*$")


def parse_ag(text: str) -> AGInvariant:
    """Inverse of :func:`format_ag`."""
    text = text.strip()
    if text == "0":
        return AGInvariant()
    pairs = []
    for term in text.split("+"):
        match = _TERM.match(term.strip())
        if not match:
            raise ValueError(f"cannot parse term {term.strip()!r}")
        k, n, m = match.groups()
        pairs += [(int(n), int(m))] * int(k or 1)
    return AGInvariant(tuple(pairs))


@dataclass(frozen=True)
class WalkCycle:
    permitted: tuple[Thread, ...]
    forbidden: tuple[Thread, ...]

    @property
    def pair(self) -> tuple[int, int]:
        return len(self.permitted), sum(len(f) for f in self.forbidden)


def ag_walk(bq: BoundQuiver, seed: int = 0) -> tuple[list[WalkCycle], list[tuple[str, ...]]]:
    """Run the pairing walk; returns the walk cycles and the critical cycles."""
    report = is_gentle(bq)
    if not report:
        raise QuiverError("not gentle: " + "; ".join(report.violations))
    if not is_connected(bq):
        raise QuiverError("the AG-invariant is computed per connected component")
    if not is_admissible(bq):
        raise QuiverError("not admissible: an oriented cycle has no relation")
    signs = assign_signs(bq, seed)
    perm = sorted(permitted_threads(bq))
    forb, critical = forbidden_threads(bq)

    forb_by_end: dict[str, list[Thread]] = {}
    for f in forb:
        forb_by_end.setdefault(f.end, []).append(f)
    perm_by_start: dict[str, list[Thread]] = {}
    for h in perm:
        perm_by_start.setdefault(h.start, []).append(h)

    def only(candidates, what):
        if len(candidates) != 1:
            raise SignConstraintError(f"{len(candidates)} candidates for {what}")
        return candidates[0]

    used: set[Thread] = set()
    cycles = []
    for h0 in perm:
        if h0 in used:
            continue
        hs, fs = [], []
        h = h0
        while True:
            if h in used:
                raise SignConstraintError(f"walk from {h0} re-entered {h}")
            used.add(h)
            hs.append(h)
            f = only(
                [x for x in forb_by_end.get(h.end, []) if signs.end_sign(x) == -signs.end_sign(h)],
                f"forbidden thread after {h}",
            )
            fs.append(f)
            h = only(
                [x for x in perm_by_start.get(f.start, []) if signs.start_sign(x) == -signs.start_sign(f)],
                f"permitted thread after {f}",
            )
            if h == h0:
                break
        cycles.append(WalkCycle(tuple(hs), tuple(fs)))
    return cycles, critical


def ag_invariant(bq: BoundQuiver, seed: int = 0) -> AGInvariant:
    cycles, critical = ag_walk(bq, seed)
    pairs = [c.pair for c in cycles] + [(0, len(c)) for c in critical]
    return AGInvariant(tuple(pairs))
