"""Bound quivers with quadratic monomial relations.

Relations are ordered arrow pairs ``(a, b)`` read left to right: the path
``a`` followed by ``b``, so ``target(a) == source(b)``.
"""
from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

_IDENT = re.compile(r"^[A-Za-z0-9_]+$")


class QuiverError(ValueError):
    """Structurally invalid bound quiver."""


class QuiverSyntaxError(QuiverError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class AdmissibilityError(QuiverError):
    """An oriented cycle carries no relation, so the algebra is infinite dimensional."""


@dataclass(frozen=True, order=True)
class Arrow:
    name: str
    source: str
    target: str

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class BoundQuiver:
    """A finite quiver together with a set of length-two zero relations."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: frozenset[tuple[str, str]] = frozenset()
    name: str = field(default="Q", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows)))
        object.__setattr__(self, "relations", frozenset(self.relations))
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex id")
        for v in self.vertices:
            if not _IDENT.match(v):
                raise QuiverError(f"invalid vertex id {v!r}")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise QuiverError("duplicate arrow name")
        vs = set(self.vertices)
        for a in self.arrows:
            if not _IDENT.match(a.name):
                raise QuiverError(f"invalid arrow name {a.name!r}")
            if a.source not in vs or a.target not in vs:
                raise QuiverError(f"arrow {a.name} references an unknown vertex")
        arrows = self.arrow_map
        for first, second in self.relations:
            if first not in arrows or second not in arrows:
                raise QuiverError(f"relation {first}{second} references an unknown arrow")
            if arrows[first].target != arrows[second].source:
                raise QuiverError(f"relation {first}{second}: target({first}) != source({second})")

    @classmethod
    def build(
        cls,
        vertices: Iterable[str],
        arrows: Iterable[tuple[str, str, str]],
        relations: Iterable[tuple[str, str]] = (),
        name: str = "Q",
    ) -> "BoundQuiver":
        return cls(
            tuple(vertices),
            tuple(Arrow(*a) for a in arrows),
            frozenset(tuple(r) for r in relations),
            name=name,
        )

    @cached_property
    def arrow_map(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def _incidence(self) -> tuple[dict[str, list[str]], dict[str, list[str]]]:
        out, inc = defaultdict(list), defaultdict(list)
        for a in self.arrows:
            out[a.source].append(a.name)
            inc[a.target].append(a.name)
        return out, inc

    def arrow(self, name: str) -> Arrow:
        return self.arrow_map[name]

    def out_arrows(self, v: str) -> list[str]:
        return self._incidence[0].get(v, [])

    def in_arrows(self, v: str) -> list[str]:
        return self._incidence[1].get(v, [])

    def successors(self, a: str) -> list[str]:
        """Arrows composable after ``a``."""
        return self.out_arrows(self.arrow_map[a].target)

    def predecessors(self, a: str) -> list[str]:
        return self.in_arrows(self.arrow_map[a].source)

    def is_relation(self, a: str, b: str) -> bool:
        return (a, b) in self.relations

    def relation_successors(self, a: str) -> list[str]:
        return [b for b in self.successors(a) if (a, b) in self.relations]

    def relation_predecessors(self, a: str) -> list[str]:
        return [c for c in self.predecessors(a) if (c, a) in self.relations]

    def permitted_successors(self, a: str) -> list[str]:
        return [b for b in self.successors(a) if (a, b) not in self.relations]

    def permitted_predecessors(self, a: str) -> list[str]:
        return [c for c in self.predecessors(a) if (c, a) not in self.relations]

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_arrows(self) -> int:
        return len(self.arrows)

    def rename(self, vertex_map: dict[str, str], arrow_map: dict[str, str]) -> "BoundQuiver":
        return BoundQuiver(
            tuple(vertex_map[v] for v in self.vertices),
            tuple(Arrow(arrow_map[a.name], vertex_map[a.source], vertex_map[a.target]) for a in self.arrows),
            frozenset((arrow_map[a], arrow_map[b]) for a, b in self.relations),
            name=self.name,
        )

    def subquiver(self, arrow_names: Iterable[str], extra_vertices: Iterable[str] = ()) -> "BoundQuiver":
        """Full arrows ``arrow_names``, their endpoints, and the relations among them."""
        names = set(arrow_names)
        arrows = [a for a in self.arrows if a.name in names]
        vs = {v for a in arrows for v in (a.source, a.target)} | set(extra_vertices)
        rels = {(a, b) for a, b in self.relations if a in names and b in names}
        return BoundQuiver(tuple(vs), tuple(arrows), frozenset(rels), name=self.name)


# --------------------------------------------------------------------- text format

def parse_bound_quiver(text: str) -> BoundQuiver:
    name = None
    vertices: list[str] = []
    vertex_pos: dict[str, tuple[int, int]] = {}
    arrows: dict[str, Arrow] = {}
    relations: list[tuple[str, str, int, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if not tokens:
            continue
        keyword, col = tokens[0]
        args = tokens[1:]
        for tok, c in args:
            if not _IDENT.match(tok):
                raise QuiverSyntaxError(f"invalid identifier {tok!r}", lineno, c)
        if name is None and keyword != "quiver":
            raise QuiverSyntaxError("file must start with a 'quiver' line", lineno, col)
        if keyword == "quiver":
            if name is not None:
                raise QuiverSyntaxError("duplicate 'quiver' line", lineno, col)
            if len(args) != 1:
                raise QuiverSyntaxError("'quiver' takes exactly one name", lineno, col)
            name = args[0][0]
        elif keyword == "vertex":
            if not args:
                raise QuiverSyntaxError("'vertex' needs at least one id", lineno, col)
            for v, c in args:
                if v in vertex_pos:
                    raise QuiverSyntaxError(f"duplicate vertex {v!r}", lineno, c)
                vertex_pos[v] = (lineno, c)
                vertices.append(v)
        elif keyword == "arrow":
            if len(args) != 3:
                raise QuiverSyntaxError("'arrow' takes <name> <source> <target>", lineno, col)
            (a, ac), (s, sc), (t, tc) = args
            if a in arrows:
                raise QuiverSyntaxError(f"duplicate arrow {a!r}", lineno, ac)
            for v, c in ((s, sc), (t, tc)):
                if v not in vertex_pos:
                    raise QuiverSyntaxError(f"unknown vertex {v!r}", lineno, c)
            arrows[a] = Arrow(a, s, t)
        elif keyword == "rel":
            if len(args) != 2:
                raise QuiverSyntaxError("'rel' takes <first-arrow> <second-arrow>", lineno, col)
            (a, ac), (b, bc) = args
            for x, c in ((a, ac), (b, bc)):
                if x not in arrows:
                    raise QuiverSyntaxError(f"unknown arrow {x!r}", lineno, c)
            if arrows[a].target != arrows[b].source:
                raise QuiverSyntaxError(
                    f"relation {a} {b} does not compose: target({a})={arrows[a].target} "
                    f"but source({b})={arrows[b].source}",
                    lineno,
                    ac,
                )
            if any((a, b) == (x, y) for x, y, _, _ in relations):
                raise QuiverSyntaxError(f"duplicate relation {a} {b}", lineno, ac)
            relations.append((a, b, lineno, ac))
        else:
            raise QuiverSyntaxError(f"unknown keyword {keyword!r}", lineno, col)

    if name is None:
        raise QuiverSyntaxError("empty input: missing 'quiver' line", 1, 1)
    return BoundQuiver(
        tuple(vertices), tuple(arrows.values()), frozenset((a, b) for a, b, _, _ in relations), name=name
    )


def serialize_bound_quiver(bq: BoundQuiver) -> str:
    lines = [
        "# relation 'rel a b' is the path a then b, with target(a) = source(b)",
        f"quiver {bq.name}",
    ]
    if bq.vertices:
        lines.append("vertex " + " ".join(bq.vertices))
    lines += [f"arrow {a.name} {a.source} {a.target}" for a in sorted(bq.arrows, key=lambda a: a.name)]
    lines += [f"rel {a} {b}" for a, b in sorted(bq.relations)]
    return "\n".join(lines) + "\n"


def load_bound_quiver(path) -> BoundQuiver:
    with open(path, encoding="utf-8") as fh:
        return parse_bound_quiver(fh.read())


# --------------------------------------------------------------------- combinatorics

@dataclass
class GentlenessReport:
    violations: list[str]

    @property
    def gentle(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.gentle


def is_gentle(bq: BoundQuiver) -> GentlenessReport:
    violations = []
    for v in bq.vertices:
        n_in, n_out = len(bq.in_arrows(v)), len(bq.out_arrows(v))
        if n_in > 2 or n_out > 2:
            violations.append(f"G1 at vertex {v}: {n_in} incoming, {n_out} outgoing arrows")
    for a in bq.arrows:
        x = a.name
        if len(bq.permitted_successors(x)) > 1:
            violations.append(f"G2 at arrow {x}: several successors b with {x}b not in I")
        if len(bq.permitted_predecessors(x)) > 1:
            violations.append(f"G2 at arrow {x}: several predecessors c with c{x} not in I")
        if len(bq.relation_successors(x)) > 1:
            violations.append(f"G3 at arrow {x}: several successors b with {x}b in I")
        if len(bq.relation_predecessors(x)) > 1:
            violations.append(f"G3 at arrow {x}: several predecessors c with c{x} in I")
    return GentlenessReport(violations)


def is_admissible(bq: BoundQuiver) -> bool:
    """True iff every oriented cycle carries at least one relation."""
    return _find_cycle({a.name: bq.permitted_successors(a.name) for a in bq.arrows}) is None


def _find_cycle(graph: dict[str, list[str]]) -> list[str] | None:
    state: dict[str, int] = {}
    for root in sorted(graph):
        if root in state:
            continue
        stack = [(root, iter(graph[root]))]
        path = [root]
        state[root] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                path.pop()
                state[node] = 2
            elif state.get(nxt) == 1:
                return path[path.index(nxt):]
            elif nxt not in state:
                state[nxt] = 1
                path.append(nxt)
                stack.append((nxt, iter(graph[nxt])))
    return None


def connected_components(bq: BoundQuiver) -> list[BoundQuiver]:
    parent = {v: v for v in bq.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a in bq.arrows:
        parent[find(a.source)] = find(a.target)
    groups: dict[str, list[str]] = defaultdict(list)
    for v in bq.vertices:
        groups[find(v)].append(v)
    comps = []
    for vs in sorted(groups.values()):
        members = set(vs)
        arrows = [a.name for a in bq.arrows if a.source in members]
        comps.append(bq.subquiver(arrows, extra_vertices=vs))
    return comps


def is_connected(bq: BoundQuiver) -> bool:
    return len(connected_components(bq)) == 1


def euler_characteristic(bq: BoundQuiver) -> int:
    if not is_connected(bq):
        raise QuiverError("Euler characteristic needs a connected quiver")
    return bq.num_arrows - bq.num_vertices + 1


def relation_cycles(bq: BoundQuiver) -> list[tuple[str, ...]]:
    """Oriented cycles with every cyclically consecutive composition in I.

    Assumes G3, so each arrow has at most one relation successor. Each cycle is
    rotated to start at its smallest arrow name.
    """
    succ = {}
    for a in bq.arrows:
        nxt = bq.relation_successors(a.name)
        if len(nxt) > 1:
            raise QuiverError(f"G3 fails at {a.name}: relation graph is not functional")
        if nxt:
            succ[a.name] = nxt[0]
    seen: set[str] = set()
    cycles = []
    for start in sorted(succ):
        if start in seen:
            continue
        walk, x = [], start
        index: dict[str, int] = {}
        while x in succ and x not in index and x not in seen:
            index[x] = len(walk)
            walk.append(x)
            x = succ[x]
        seen.update(walk)
        if x in index:
            cyc = walk[index[x]:]
            k = cyc.index(min(cyc))
            cycles.append(tuple(cyc[k:] + cyc[:k]))
    return sorted(cycles)


def find_saturated_cycles(bq: BoundQuiver, m: int) -> list[tuple[str, ...]]:
    if m < 1:
        raise ValueError("m must be a positive integer")
    return [c for c in relation_cycles(bq) if len(c) == m + 2]


def max_consecutive_relations_outside(bq: BoundQuiver, m: int) -> int:
    """Longest chain of consecutive relations avoiding the m-saturated cycles.

    A chain ``a1a2, a2a3, ...`` of k relations is a path of k edges in the
    relation graph. A relation cycle of another length counts as a chain of
    all its relations.
    """
    saturated = set()
    for cyc in find_saturated_cycles(bq, m):
        saturated.update(zip(cyc, cyc[1:] + cyc[:1]))
    rels = [r for r in bq.relations if r not in saturated]
    succ = {a: b for a, b in rels}
    has_pred = {b for _, b in rels}
    best = 0
    for a in succ:
        if a in has_pred:
            continue
        n, x = 0, a
        while x in succ:
            n += 1
            x = succ[x]
        best = max(best, n)
    # whatever is left lies on relation cycles
    on_paths = set()
    for a in succ:
        if a not in has_pred:
            x = a
            while x in succ:
                on_paths.add(x)
                x = succ[x]
    for a in succ:
        if a in on_paths:
            continue
        n, x = 0, a
        visited = set()
        while x in succ and x not in visited:
            visited.add(x)
            n += 1
            x = succ[x]
        best = max(best, n)
    return best


def underlying_cycles(bq: BoundQuiver, limit: int = 100_000) -> Iterator[tuple[str, ...]]:
    """Simple cycles of the underlying undirected multigraph, as arrow-name tuples.

    Each cycle is listed once, as the arrow sequence met when walking it from its
    smallest vertex along its smallest incident arrow. Loops count as cycles.
    """
    adj: dict[str, list[tuple[str, str]]] = defaultdict(list)
    for a in bq.arrows:
        adj[a.source].append((a.name, a.target))
        if not a.is_loop:
            adj[a.target].append((a.name, a.source))
    seen: set[frozenset[str]] = set()
    produced = 0
    order = {v: i for i, v in enumerate(bq.vertices)}
    for start in bq.vertices:
        # cycles whose minimal vertex is start
        stack = [(start, [], {start})]
        while stack:
            v, path, on_path = stack.pop()
            for name, w in adj[v]:
                if path and name == path[-1]:
                    continue
                if name in path:
                    continue
                if w == start:
                    cyc = path + [name]
                    key = frozenset(cyc)
                    if key not in seen:
                        seen.add(key)
                        produced += 1
                        if produced > limit:
                            raise QuiverError("too many cycles in the underlying graph")
                        yield tuple(cyc)
                elif w not in on_path and order[w] > order[start]:
                    stack.append((w, path + [name], on_path | {w}))
