"""Complete and gentle pairs, and nontriviality of the Gerstenhaber structure.

A gentle algebra with a gentle pair in some degree has a nontrivial cup
product on HH^*, and in characteristic zero a nontrivial Lie bracket too.
Only existence is decided here; no cochains are computed.
"""
from __future__ import annotations

from dataclasses import dataclass

from .hochschild import FieldSpec, _field
from .quiver import BoundQuiver, relation_cycles


@dataclass(frozen=True, order=True)
class CompletePair:
    path: tuple[str, ...]
    base: str

    def rotate(self, bq: BoundQuiver) -> "CompletePair":
        """The cyclic generator: move the last arrow to the front."""
        path = self.path[-1:] + self.path[:-1]
        return CompletePair(path, bq.arrow(path[0]).source)


def gamma_n(bq: BoundQuiver, n: int) -> list[tuple[str, ...]]:
    """Paths of n arrows with every consecutive composition in I."""
    if n < 2:
        raise ValueError("gamma_n is defined for n >= 2")
    out = []
    for a in bq.arrows:
        path = [a.name]
        while len(path) < n:
            nxt = bq.relation_successors(path[-1])
            if not nxt:
                break
            path.append(nxt[0])
        if len(path) == n:
            out.append(tuple(path))
    return sorted(out)


def complete_pairs(bq: BoundQuiver, n: int) -> list[CompletePair]:
    out = []
    for path in gamma_n(bq, n):
        first, last = bq.arrow(path[0]), bq.arrow(path[-1])
        if first.source == last.target and bq.is_relation(path[-1], path[0]):
            out.append(CompletePair(path, first.source))
    return out


def in_c_n_zero(bq: BoundQuiver, pair: CompletePair) -> bool:
    first, last = pair.path[0], pair.path[-1]
    if any(b != first for b in bq.relation_successors(last)):
        return False
    if any(c != last for c in bq.relation_predecessors(first)):
        return False
    return True


def is_gentle_pair(bq: BoundQuiver, pair: CompletePair) -> bool:
    p = pair
    for _ in range(len(pair.path)):
        if not in_c_n_zero(bq, p):
            return False
        p = p.rotate(bq)
    return True


def gentle_pairs(bq: BoundQuiver, n: int) -> list[CompletePair]:
    return [p for p in complete_pairs(bq, n) if is_gentle_pair(bq, p)]


@dataclass(frozen=True)
class GerstenhaberVerdict:
    cup: bool
    bracket: bool
    witness: CompletePair | None
    degree: int | None = None


def gerstenhaber_nontrivial(bq: BoundQuiver, k: FieldSpec | int = 0, n_bound: int | None = None) -> GerstenhaberVerdict:
    """Search degrees that are multiples of relation-cycle lengths, up to ``n_bound``.

    With ``n_bound`` unset, the longest relation cycle is used, which makes the
    search exact.
    """
    k = _field(k)
    lengths = sorted({len(c) for c in relation_cycles(bq)})
    if n_bound is None:
        n_bound = max(lengths, default=0)
    degrees = sorted({d for L in lengths for d in range(L, n_bound + 1, L) if d >= 2})
    for n in degrees:
        pairs = gentle_pairs(bq, n)
        if pairs:
            witness = min(pairs)
            return GerstenhaberVerdict(True, k.characteristic == 0, witness, n)
    return GerstenhaberVerdict(False, False, None, None)
