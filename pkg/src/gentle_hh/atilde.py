"""Algebras of type A-tilde: m-cluster tilted algebras and A-tilde-branched algebras.

Root-cycle and ray analysis, the structural parameters (s1, s2, k1, k2, r),
recognition, closed forms for the AG-invariant and Hochschild dimensions, and
a normal-form generator.

Orientation vocabulary: the root cycle is walked in one fixed direction,
called clockwise. Side 2 collects clockwise arrows, saturated cycles and
relations; side 1 the counterclockwise ones. ``r`` is the number of clockwise
internal relations minus the number of counterclockwise ones.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .ag import AGInvariant
from .hochschild import FieldSpec, _field, hh_dim
from .quiver import (
    BoundQuiver,
    QuiverError,
    euler_characteristic,
    find_saturated_cycles,
    is_admissible,
    is_connected,
    is_gentle,
    max_consecutive_relations_outside,
    underlying_cycles,
)


class StructureError(QuiverError):
    """The bound quiver is outside the class the operation is defined on."""


@dataclass(frozen=True)
class BranchParams:
    m: int
    s1: int
    s2: int
    k1: int
    k2: int
    r: int = 0

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be positive")
        if min(self.s1, self.s2, self.k1, self.k2) < 0:
            raise ValueError("s1, s2, k1, k2 must be natural numbers")

    def swap(self) -> "BranchParams":
        return BranchParams(self.m, self.s2, self.s1, self.k2, self.k1, -self.r)

    def canonical(self) -> "BranchParams":
        if self.r < 0 or (self.r == 0 and (self.s1, self.k1) > (self.s2, self.k2)):
            return self.swap()
        return self

    @property
    def k(self) -> int:
        return self.k1 + self.k2

    def __str__(self) -> str:
        return f"m={self.m} s1={self.s1} s2={self.s2} k1={self.k1} k2={self.k2} r={self.r}"


# ------------------------------------------------------------------ closed forms

def phi_from_params(p: BranchParams) -> AGInvariant:
    first = p.m * p.k1 + p.s1 + p.r
    second = p.m * p.k2 + p.s2 - p.r
    if first < 0 or second < 0:
        raise ValueError(f"negative first coordinate for {p}")
    return AGInvariant(((first, p.s1), (second, p.s2)) + ((0, p.m + 2),) * p.k)


def theorem_a_dims(p: BranchParams, n: int, k: FieldSpec | int = 0) -> int:
    """dim HH^n read off the closed formulas for A-tilde-branched algebras, verbatim."""
    k = _field(k)
    if n == 0:
        if (p.r == 1 and p.k1 == p.s1 == 0) or (p.r == -1 and p.k2 == p.s2 == 0):
            return 2
        return 1
    if n == 1:
        if p.k1 == p.k2 == 0 and p.s1 == p.s2 == 1:
            return 3
        if (p.r == 0 and p.s1 == 1 and p.k1 == 0) or (p.r == 0 and p.s2 == 1 and p.k2 == 0):
            return p.k1 + p.k2 + 2
        return p.k1 + p.k2 + 1
    base = 0 if p.m == 1 else 1
    period = p.m + 2 if k.characteristic == 2 else math.lcm(p.m + 2, 2)
    return base + (p.k if n % period in (0, 1) else 0)


def theorem_a_dims_proof_faithful(p: BranchParams, n: int, k: FieldSpec | int = 0) -> int:
    """dim HH^n from Ladkani's formulas applied to the closed-form invariant.

    Only ``na - nv`` enters, and it equals ``k1 + k2`` for these algebras.
    """
    return hh_dim(phi_from_params(p), 0, p.k, n, k)


def theorem_a_discrepancy(p: BranchParams, k: FieldSpec | int = 0, max_n: int = 24) -> list[tuple[int, int, int]]:
    out = []
    for n in range(max_n + 1):
        stated, faithful = theorem_a_dims(p, n, k), theorem_a_dims_proof_faithful(p, n, k)
        if stated != faithful:
            out.append((n, stated, faithful))
    return out


# ----------------------------------------------------------------- normal forms

def required_free_arrows(r: int, m: int) -> int:
    """Free arrows needed to carry ``|r|`` relations in runs of at most m-1.

    Writing ``r = a(m-1) + b`` with ``0 <= b < m-1``, this is ``r + 1 + e``
    with ``e = a - 1`` if ``b == 0`` else ``a``. Zero when r is zero.
    Returns ``math.inf`` when m = 1 and r != 0.
    """
    r = abs(r)
    if r == 0:
        return 0
    if m == 1:
        return math.inf
    a, b = divmod(r, m - 1)
    eps = a - 1 if b == 0 else a
    return r + 1 + eps


def normal_form_problem(p: BranchParams) -> str | None:
    """Why ``p`` admits no normal form, or None if it does."""
    c = p.canonical()
    if c.s1 + c.k1 == 0:
        if c.r == 0:
            return "the root cycle would be an oriented cycle without relations"
    if c.s1 + c.s2 + c.k1 + c.k2 == 0:
        return "no root cycle"
    if c.r > 0 and required_free_arrows(c.r, c.m) > c.s2:
        need = required_free_arrows(c.r, c.m)
        return f"r={c.r} needs {need} free clockwise arrows, only {c.s2} available"
    return None


def generate_normal_form(p: BranchParams) -> BoundQuiver:
    """Bound quiver with parameters ``p``.

    The root cycle is a clockwise path ``cw0, cw1, ...`` and a counterclockwise
    path ``ccw0, ...`` from vertex ``o`` to vertex ``t`` (an oriented cycle
    through ``o`` when the counterclockwise side is empty). Free arrows come
    first on each side, then one arrow per saturated cycle. Clockwise internal
    relations are packed in runs of m-1 from the start of the path.
    """
    problem = normal_form_problem(p)
    if problem:
        raise StructureError(f"no normal form for {p}: {problem}")
    c = p.canonical()
    m = c.m
    vertices = ["o"]
    arrows: list[tuple[str, str, str]] = []
    relations: list[tuple[str, str]] = []

    len1, len2 = c.s1 + c.k1, c.s2 + c.k2
    end = "o" if len1 == 0 else "t"
    if end == "t":
        vertices.append("t")

    def side_path(prefix: str, length: int) -> list[str]:
        names = [f"{prefix}{i}" for i in range(length)]
        stops = ["o"] + [f"{prefix}v{i}" for i in range(1, length)] + [end]
        vertices.extend(stops[1:-1])
        for i, a in enumerate(names):
            arrows.append((a, stops[i], stops[i + 1]))
        return names

    cw = side_path("cw", len2)
    ccw = side_path("ccw", len1)

    run, i, placed = max(m - 1, 1), 0, 0
    while placed < c.r:
        size = min(run, c.r - placed)
        relations += [(cw[j], cw[j + 1]) for j in range(i, i + size)]
        placed += size
        i += size + 1

    shared = cw[c.s2:] + ccw[c.s1:]
    src = {a: s for a, s, _ in arrows}
    tgt = {a: t for a, _, t in arrows}
    for j, a in enumerate(shared):
        stops = [tgt[a]] + [f"sat{j}v{i}" for i in range(1, m + 1)] + [src[a]]
        vertices.extend(stops[1:-1])
        cyc = [a] + [f"sat{j}_{i}" for i in range(m + 1)]
        for i in range(m + 1):
            arrows.append((cyc[i + 1], stops[i], stops[i + 1]))
        relations += [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]

    return BoundQuiver.build(vertices, arrows, relations, name=f"NF_{c.m}_{c.s1}_{c.s2}_{c.k1}_{c.k2}_{c.r}")


def param_grid(ms=range(1, 5), bound: int = 3, r_bound: int = 3) -> list[BranchParams]:
    """Canonical parameter sets with a normal form, deduplicated."""
    seen = []
    found = set()
    for m in ms:
        for s1 in range(bound + 1):
            for s2 in range(bound + 1):
                for k1 in range(bound + 1):
                    for k2 in range(bound + 1):
                        for r in range(-r_bound, r_bound + 1):
                            p = BranchParams(m, s1, s2, k1, k2, r).canonical()
                            if p in found or normal_form_problem(p):
                                continue
                            found.add(p)
                            seen.append(p)
    return seen


# ------------------------------------------------------------- root structure

CW, CCW = "cw", "ccw"
SIDE = {CCW: 1, CW: 2}


@dataclass(frozen=True)
class AttachedCycle:
    """A saturated cycle sharing an arrow with the root cycle."""

    arrows: tuple[str, ...]
    shared_arrow: str
    orientation: str


@dataclass(frozen=True)
class Ray:
    """A branch of the part of the quiver off the root cycle and its attached cycles."""

    arrows: tuple[str, ...]
    vertices: tuple[str, ...]
    union_vertex: str | None
    union_kind: str  # "internal", "external" or "none"
    orientation: str | None  # of the union relation; None for rays without union relations
    union_relations: tuple[tuple[str, str], ...]
    side: int
    saturated_cycles: tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class RootDecomposition:
    m: int
    root_cycle: tuple[tuple[str, str], ...]  # (arrow, orientation) in walking order
    attached: tuple[AttachedCycle, ...]
    rays: tuple[Ray, ...]
    internal_relations: tuple[tuple[tuple[str, str], str], ...]  # (relation, orientation)
    saturated_arrows: frozenset[str] = field(default=frozenset())

    @property
    def root_arrows(self) -> dict[str, str]:
        return dict(self.root_cycle)

    @property
    def internal_union_relations(self) -> list[tuple[tuple[str, str], str]]:
        rels = {rel for ray in self.rays if ray.union_kind == "internal" for rel in ray.union_relations}
        return [(rel, o) for rel, o in self.internal_relations if rel in rels]

    def summary(self) -> str:
        lines = [
            "root cycle: " + " ".join(f"{a}({o})" for a, o in self.root_cycle),
            "internal relations: " + (", ".join(f"{a}{b}({o})" for (a, b), o in self.internal_relations) or "none"),
        ]
        for c in self.attached:
            lines.append(f"saturated cycle [{' '.join(c.arrows)}] shares {c.shared_arrow} ({c.orientation})")
        for ray in self.rays:
            how = f"at {ray.union_vertex} by {ray.union_kind} {ray.orientation} union relation"
            if ray.union_kind == "none":
                how = "through a saturated cycle"
            lines.append(f"ray [{' '.join(ray.arrows)}] {how}, side {ray.side}")
        return "\n".join(lines)


def is_algebra_with_root(bq: BoundQuiver, m: int) -> bool:
    if not bq.vertices or not is_connected(bq) or not is_gentle(bq) or not is_admissible(bq):
        return False
    if any(a.is_loop for a in bq.arrows):
        return False
    chi = euler_characteristic(bq)
    return chi >= 1 and len(find_saturated_cycles(bq, m)) == chi - 1


def _walk_cycle(bq: BoundQuiver, arrows: tuple[str, ...]) -> tuple[tuple[str, str], ...]:
    """Orient a simple cycle of the underlying graph; its smallest arrow is clockwise."""
    first = min(arrows)
    a = bq.arrow(first)
    out = [(first, CW)]
    cur, used = a.target, {first}
    while len(out) < len(arrows):
        nxt = next(x for x in sorted(arrows) if x not in used and cur in (bq.arrow(x).source, bq.arrow(x).target))
        arr = bq.arrow(nxt)
        if arr.source == cur:
            out.append((nxt, CW))
            cur = arr.target
        else:
            out.append((nxt, CCW))
            cur = arr.source
        used.add(nxt)
    return tuple(out)


def _cycle_vertices(bq: BoundQuiver, arrows) -> set[str]:
    return {v for a in arrows for v in (bq.arrow(a).source, bq.arrow(a).target)}


def choose_root_cycle(bq: BoundQuiver, m: int) -> tuple[str, ...]:
    saturated = [set(c) for c in find_saturated_cycles(bq, m)]
    sat_keys = {frozenset(c) for c in saturated}
    best, best_key = None, None
    for cyc in underlying_cycles(bq):
        if frozenset(cyc) in sat_keys:
            continue
        overlap = sum(1 for s in saturated if len(s & set(cyc)) > 1)
        key = (overlap, len(cyc), tuple(sorted(cyc)))
        if best_key is None or key < best_key:
            best, best_key = cyc, key
    if best is None:
        raise StructureError("no non-saturated cycle to serve as root cycle")
    return best


def decompose(bq: BoundQuiver, m: int) -> RootDecomposition:
    if not is_algebra_with_root(bq, m):
        raise StructureError(f"not an algebra with root for m={m}")
    root = _walk_cycle(bq, choose_root_cycle(bq, m))
    orient = dict(root)
    root_vertices = _cycle_vertices(bq, orient)
    saturated = find_saturated_cycles(bq, m)
    sat_arrows = frozenset(a for c in saturated for a in c)

    attached, attached_arrows = [], set()
    for cyc in saturated:
        if len(_cycle_vertices(bq, cyc) & root_vertices) < 2:
            continue
        shared = [a for a in cyc if a in orient]
        if len(shared) != 1:
            raise StructureError(f"saturated cycle {cyc} meets the root cycle in {len(shared)} arrows")
        attached.append(AttachedCycle(cyc, shared[0], orient[shared[0]]))
        attached_arrows.update(cyc)

    internal = tuple(
        sorted(((a, b), orient[a]) for a, b in bq.relations if a in orient and b in orient)
    )

    # branches of the rest, never joined through a root vertex
    rest = [a.name for a in bq.arrows if a.name not in orient and a.name not in attached_arrows]
    parent = {a: a for a in rest}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_vertex: dict[str, list[str]] = {}
    for a in rest:
        arr = bq.arrow(a)
        for v in {arr.source, arr.target}:
            if v not in root_vertices:
                by_vertex.setdefault(v, []).append(a)
    for names in by_vertex.values():
        for x in names[1:]:
            parent[find(x)] = find(names[0])
    groups: dict[str, list[str]] = {}
    for a in rest:
        groups.setdefault(find(a), []).append(a)

    rays = [_classify_ray(bq, sorted(g), orient, root_vertices, attached, saturated) for g in groups.values()]
    rays.sort(key=lambda r: r.arrows)
    return RootDecomposition(m, root, tuple(attached), tuple(rays), internal, sat_arrows)


def _classify_ray(bq, arrows, orient, root_vertices, attached, saturated) -> Ray:
    names = set(arrows)
    vertices = _cycle_vertices(bq, arrows)
    touching = sorted(vertices & root_vertices)
    inner = tuple(c for c in saturated if set(c) <= names)
    if len(touching) > 1:
        raise StructureError(f"ray {arrows} meets the root cycle in several vertices")
    if touching:
        u = touching[0]
        external = sorted(
            (a, b) for a, b in bq.relations
            if bq.arrow(a).target == u and ((a in orient and b in names) or (b in orient and a in names))
        )
        if external:
            sides = {orient[a] if a in orient else orient[b] for a, b in external}
            if len(sides) > 1:
                raise StructureError(f"ray {arrows} has external union relations of both orientations")
            o = sides.pop()
            return Ray(tuple(arrows), tuple(sorted(vertices)), u, "external", o, tuple(external), SIDE[o], inner)
        internal = sorted((a, b) for a, b in bq.relations if a in orient and b in orient and bq.arrow(a).target == u)
        if internal:
            o = orient[internal[0][0]]
            # the ray sits on the far side of an internal union relation
            side = SIDE[CCW if o == CW else CW]
            return Ray(tuple(arrows), tuple(sorted(vertices)), u, "internal", o, tuple(internal), side, inner)
    for c in attached:
        if vertices & _cycle_vertices(bq, c.arrows):
            return Ray(tuple(arrows), tuple(sorted(vertices)), None, "none", None, (), SIDE[c.orientation], inner)
    raise StructureError(f"ray {arrows} matches no attachment clause")


def extract_params(bq: BoundQuiver, m: int) -> BranchParams:
    d = decompose(bq, m)
    return params_from_decomposition(bq, d)


def params_from_decomposition(bq: BoundQuiver, d: RootDecomposition) -> BranchParams:
    s = {1: 0, 2: 0}
    k = {1: 0, 2: 0}
    for a, o in d.root_cycle:
        if a not in d.saturated_arrows:
            s[SIDE[o]] += 1
    for c in d.attached:
        k[SIDE[c.orientation]] += 1
    for ray in d.rays:
        s[ray.side] += sum(1 for a in ray.arrows if a not in d.saturated_arrows)
        k[ray.side] += len(ray.saturated_cycles)
    r = sum(1 if o == CW else -1 for _, o in d.internal_relations)
    return BranchParams(d.m, s[1], s[2], k[1], k[2], r).canonical()


@dataclass(frozen=True)
class FreeArrowCount:
    cw: int
    ccw: int


def free_arrows(bq: BoundQuiver, m: int, decomposition: RootDecomposition | None = None) -> FreeArrowCount:
    d = decomposition or decompose(bq, m)
    union_internal = d.internal_union_relations
    in_union = {a for (x, y), _ in union_internal for a in (x, y)}
    count = {CW: 0, CCW: 0}
    for a, o in d.root_cycle:
        if a not in d.saturated_arrows and a not in in_union:
            count[o] += 1
    for _, o in union_internal:
        count[o] += 1
    for ray in d.rays:
        if ray.orientation is not None:
            count[ray.orientation] += sum(1 for a in ray.arrows if a not in d.saturated_arrows)
    return FreeArrowCount(cw=count[CW], ccw=count[CCW])


# ------------------------------------------------------------------ recognition

@dataclass
class Verdict:
    holds: bool
    conditions: dict[str, tuple[bool | None, str]]

    def __bool__(self) -> bool:
        return self.holds

    def report(self) -> str:
        lines = []
        for name, (ok, detail) in self.conditions.items():
            mark = "n/a " if ok is None else ("ok  " if ok else "FAIL")
            lines.append(f"  [{mark}] {name}: {detail}")
        return "\n".join(lines)


def _union_balance(d: RootDecomposition, m: int) -> tuple[bool | None, str]:
    rels = d.internal_union_relations
    if not rels:
        return None, "no internal union relations on the root cycle"
    rh = sum(1 for _, o in rels if o == CW)
    ra = len(rels) - rh
    ok = (rh - ra) % m == 0
    return ok, f"{rh} clockwise vs {ra} counterclockwise internal union relations, modulo {m}"


def is_m_cluster_tilted_atilde(bq: BoundQuiver, m: int) -> Verdict:
    conds: dict[str, tuple[bool | None, str]] = {}
    gentle = is_gentle(bq)
    conds["gentle"] = (bool(gentle), "; ".join(gentle.violations) or "G1-G3 hold")
    if not gentle or not is_connected(bq):
        if gentle:
            conds["gentle"] = (False, "not connected")
        return Verdict(False, conds)

    root_ok = is_algebra_with_root(bq, m)
    chi = euler_characteristic(bq)
    n_sat = len(find_saturated_cycles(bq, m))
    conds["(a) algebra with root"] = (root_ok, f"chi={chi}, {n_sat} {m}-saturated cycles")
    if root_ok:
        conds["(b) only saturated cycles"] = (None, "root cycle present")
    else:
        cycles = list(underlying_cycles(bq))
        sat = {frozenset(c) for c in find_saturated_cycles(bq, m)}
        bad = [c for c in cycles if frozenset(c) not in sat]
        conds["(b) only saturated cycles"] = (not bad, f"{len(bad)} cycles that are not {m}-saturated")
    longest = max_consecutive_relations_outside(bq, m)
    conds["(c) consecutive relations"] = (longest <= m - 1, f"longest chain {longest}, allowed {m - 1}")
    if root_ok:
        conds["(d) internal relation balance"] = _union_balance(decompose(bq, m), m)
    else:
        conds["(d) internal relation balance"] = (None, "no root cycle")
    holds = (root_ok or bool(conds["(b) only saturated cycles"][0])) and conds["(c) consecutive relations"][0]
    holds = holds and conds["(d) internal relation balance"][0] is not False
    return Verdict(bool(holds), conds)


def is_atilde_branched(bq: BoundQuiver, m: int) -> Verdict:
    conds: dict[str, tuple[bool | None, str]] = {}
    root_ok = is_algebra_with_root(bq, m)
    conds["(a) algebra with root"] = (root_ok, "gentle, connected, loop-free, chi-1 saturated cycles" if root_ok
                                      else "not an algebra with root")
    if not root_ok:
        conds["(b) relation balance"] = (None, "no root cycle")
        conds["(c) free arrows"] = (None, "no root cycle")
        return Verdict(False, conds)
    d = decompose(bq, m)
    conds["(b) relation balance"] = _union_balance(d, m)
    rh = sum(1 for _, o in d.internal_relations if o == CW)
    ra = len(d.internal_relations) - rh
    r = abs(rh - ra)
    if r == 0:
        conds["(c) free arrows"] = (None, "equal numbers of clockwise and counterclockwise internal relations")
    else:
        free = free_arrows(bq, m, d)
        have, where = (free.cw, "clockwise") if rh > ra else (free.ccw, "counterclockwise")
        need = required_free_arrows(r, m)
        conds["(c) free arrows"] = (have >= need, f"r={r} needs {need} free {where} arrows, found {have}")
    holds = all(ok is not False for ok, _ in conds.values())
    return Verdict(holds, conds)
