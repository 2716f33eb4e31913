"""Permitted and forbidden threads of a gentle bound quiver, and their signs."""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Literal, Union

from .quiver import AdmissibilityError, BoundQuiver, QuiverError, is_gentle, relation_cycles

Kind = Literal["permitted", "forbidden"]


class SignConstraintError(RuntimeError):
    """The sign constraints have no solution. Cannot happen for gentle input."""


@dataclass(frozen=True, order=True)
class Thread:
    kind: str
    arrows: tuple[str, ...]
    base: str
    start: str
    end: str

    @property
    def trivial(self) -> bool:
        return not self.arrows

    def __len__(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        body = " ".join(self.arrows) if self.arrows else f"e_{self.base}"
        return f"{self.kind} [{body}] {self.start} -> {self.end}"


def _trivial(kind: Kind, v: str) -> Thread:
    return Thread(kind, (), v, v, v)


def _trivial_vertices(bq: BoundQuiver, want_relation: bool) -> list[str]:
    """Vertices with at most one arrow in and out where every in/out composition
    is in I (``want_relation``) or avoids I (otherwise)."""
    found = []
    for v in bq.vertices:
        ins, outs = bq.in_arrows(v), bq.out_arrows(v)
        if len(ins) > 1 or len(outs) > 1:
            continue
        if all(bq.is_relation(g, b) == want_relation for g in ins for b in outs):
            found.append(v)
    return found


def _maximal_paths(bq: BoundQuiver, succ: dict[str, str], pred: dict[str, str], arrows) -> list[tuple[str, ...]]:
    paths = []
    for a in sorted(arrows):
        if a in pred:
            continue
        path = [a]
        while path[-1] in succ:
            path.append(succ[path[-1]])
        paths.append(tuple(path))
    return paths


def _thread(bq: BoundQuiver, kind: Kind, path: tuple[str, ...]) -> Thread:
    first, last = bq.arrow(path[0]), bq.arrow(path[-1])
    return Thread(kind, path, first.source, first.source, last.target)


def permitted_threads(bq: BoundQuiver) -> list[Thread]:
    succ, pred = {}, {}
    for a in bq.arrows:
        nxt = bq.permitted_successors(a.name)
        if len(nxt) > 1:
            raise QuiverError(f"G2 fails at {a.name}")
        if nxt:
            succ[a.name] = nxt[0]
            pred[nxt[0]] = a.name
    paths = _maximal_paths(bq, succ, pred, [a.name for a in bq.arrows])
    if sum(map(len, paths)) != bq.num_arrows:
        raise AdmissibilityError("an oriented cycle has no relation")
    threads = [_thread(bq, "permitted", p) for p in paths]
    threads += [_trivial("permitted", v) for v in _trivial_vertices(bq, want_relation=False)]
    return threads


def forbidden_threads(bq: BoundQuiver) -> tuple[list[Thread], list[tuple[str, ...]]]:
    """Forbidden threads and critical cycles (closed relation cycles)."""
    cycles = relation_cycles(bq)
    on_cycle = {a for c in cycles for a in c}
    succ, pred = {}, {}
    for a in bq.arrows:
        if a.name in on_cycle:
            continue
        nxt = bq.relation_successors(a.name)
        if nxt:
            succ[a.name] = nxt[0]
            pred[nxt[0]] = a.name
    rest = [a.name for a in bq.arrows if a.name not in on_cycle]
    threads = [_thread(bq, "forbidden", p) for p in _maximal_paths(bq, succ, pred, rest)]
    threads += [_trivial("forbidden", v) for v in _trivial_vertices(bq, want_relation=True)]
    return threads, cycles


def dump_threads(bq: BoundQuiver) -> str:
    perm = permitted_threads(bq)
    forb, cycles = forbidden_threads(bq)
    lines = [str(t) for t in sorted(perm)] + [str(t) for t in sorted(forb)]
    lines += ["critical [" + " ".join(c) + "]" for c in cycles]
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------------- signs

SignKey = Union[str, Thread]


@dataclass(frozen=True)
class SignAssignment:
    sigma: dict
    epsilon: dict

    def start_sign(self, t: Thread) -> int:
        return self.sigma[t.arrows[0] if t.arrows else t]

    def end_sign(self, t: Thread) -> int:
        return self.epsilon[t.arrows[-1] if t.arrows else t]


def _ends_by_vertex(threads: list[Thread]):
    starts, ends = {}, {}
    for t in threads:
        starts.setdefault(t.start, []).append(t)
        ends.setdefault(t.end, []).append(t)
    return starts, ends


def _sign_constraints(bq: BoundQuiver, perm: list[Thread], forb: list[Thread]) -> list[tuple[tuple, tuple]]:
    """Pairs of sign variables that must take opposite values."""
    def s(x):
        return ("s", x.arrows[0] if isinstance(x, Thread) and x.arrows else x)

    def e(x):
        return ("e", x.arrows[-1] if isinstance(x, Thread) and x.arrows else x)

    edges = []
    for v in bq.vertices:
        outs, ins = bq.out_arrows(v), bq.in_arrows(v)
        if len(outs) == 2:
            edges.append((s(outs[0]), s(outs[1])))
        if len(ins) == 2:
            edges.append((e(ins[0]), e(ins[1])))
    for a in bq.arrows:
        for b in bq.permitted_successors(a.name):
            edges.append((s(b), e(a.name)))

    p_start, p_end = _ends_by_vertex(perm)
    f_start, f_end = _ends_by_vertex(forb)
    for v in bq.vertices:
        for side, ps, fs, var in (
            ("end", p_end.get(v, []), f_end.get(v, []), e),
            ("start", p_start.get(v, []), f_start.get(v, []), s),
        ):
            if len(ps) != len(fs):
                raise SignConstraintError(
                    f"vertex {v}: {len(ps)} permitted and {len(fs)} forbidden threads {side} here"
                )
            if len(ps) == 1:
                edges.append((var(ps[0]), var(fs[0])))
            elif len(ps) == 2:
                edges.append((var(ps[0]), var(ps[1])))
                edges.append((var(fs[0]), var(fs[1])))
                # a trivial thread sits opposite to the arrow its group shares
                for group, other in ((ps, fs), (fs, ps)):
                    for t in group:
                        if t.trivial:
                            partner = next(x for x in other if not x.trivial)
                            edges.append((var(t), var(partner)))
            elif len(ps) > 2:
                raise SignConstraintError(f"vertex {v}: more than two threads {side} here")
    return edges


def assign_signs(bq: BoundQuiver, seed: int = 0) -> SignAssignment:
    report = is_gentle(bq)
    if not report:
        raise QuiverError("; ".join(report.violations))
    perm = permitted_threads(bq)
    forb, _ = forbidden_threads(bq)
    edges = _sign_constraints(bq, perm, forb)

    nodes: list = []
    for a in bq.arrows:
        nodes += [("s", a.name), ("e", a.name)]
    for t in perm + forb:
        if t.trivial:
            nodes += [("s", t), ("e", t)]
    adj = {n: [] for n in nodes}
    for x, y in edges:
        adj[x].append(y)
        adj[y].append(x)

    rng = random.Random(seed)
    value: dict = {}
    for root in nodes:
        if root in value:
            continue
        value[root] = rng.choice((1, -1))
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in value:
                    value[y] = -value[x]
                    queue.append(y)
                elif value[y] == value[x]:
                    raise SignConstraintError(f"conflicting sign constraints at {x} and {y}")

    sigma = {k: v for (tag, k), v in value.items() if tag == "s"}
    epsilon = {k: v for (tag, k), v in value.items() if tag == "e"}
    return SignAssignment(sigma, epsilon)


def check_sign_assignment(bq: BoundQuiver, signs: SignAssignment) -> list[str]:
    """Violations of the arrow sign rules and of the per-vertex pairing bijections."""
    problems = []
    for v in bq.vertices:
        outs, ins = bq.out_arrows(v), bq.in_arrows(v)
        if len(outs) == 2 and signs.sigma[outs[0]] == signs.sigma[outs[1]]:
            problems.append(f"outgoing arrows at {v} share sigma")
        if len(ins) == 2 and signs.epsilon[ins[0]] == signs.epsilon[ins[1]]:
            problems.append(f"incoming arrows at {v} share epsilon")
    for a in bq.arrows:
        for b in bq.permitted_successors(a.name):
            if signs.sigma[b] != -signs.epsilon[a.name]:
                problems.append(f"sigma({b}) != -epsilon({a.name})")
    perm = permitted_threads(bq)
    forb, _ = forbidden_threads(bq)
    p_start, p_end = _ends_by_vertex(perm)
    f_start, f_end = _ends_by_vertex(forb)
    for v in bq.vertices:
        for ps, fs, sign in (
            (p_end.get(v, []), f_end.get(v, []), signs.end_sign),
            (p_start.get(v, []), f_start.get(v, []), signs.start_sign),
        ):
            for h in ps:
                matches = [f for f in fs if sign(f) == -sign(h)]
                if len(matches) != 1:
                    problems.append(f"thread {h} has {len(matches)} partners at {v}")
    return problems
