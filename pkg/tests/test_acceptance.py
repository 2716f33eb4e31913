"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or ``python3 tests/test_acceptance.py``. All comparisons are exact;
the only tolerances are the wall-clock limits below.
"""
from __future__ import annotations

import io
import json
import sys
import time
from pathlib import Path

import pytest

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from gentle_hh.ag import ag_equal, ag_invariant, format_ag  # noqa: E402
from gentle_hh.atilde import (  # noqa: E402
    BranchParams,
    extract_params,
    generate_normal_form,
    param_grid,
    phi_from_params,
    theorem_a_dims,
    theorem_a_dims_proof_faithful,
    theorem_a_discrepancy,
)
from gentle_hh.cli import run  # noqa: E402
from gentle_hh.gerstenhaber import gentle_pairs, gerstenhaber_nontrivial  # noqa: E402
from gentle_hh.hochschild import hh_sequence  # noqa: E402
from gentle_hh.quiver import euler_characteristic, load_bound_quiver  # noqa: E402

FIXTURES = HERE.parent / "fixtures"
FIXTURE_TIME_LIMIT = 1.0  # seconds, per fixture
GRID_TIME_LIMIT = 60.0  # seconds, whole grid
MIN_GRID_POINTS = 200
MAX_N = 24
SEEDS = range(50)
SIGN_SAMPLE = 20

RESULTS: list[str] = []


def _record(number: int, title: str, ok: bool, detail: str) -> None:
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}: {detail}")


def _load(name):
    return load_bound_quiver(FIXTURES / f"quiver{name}.bq")


_GRID = None


def grid():
    global _GRID
    if _GRID is None:
        _GRID = param_grid(ms=range(1, 5), bound=3, r_bound=3)
    return _GRID


def criterion_1():
    expected = {"A": "(0,4)* + (3,1)* + (3,3)*", "B": "(0,4)* + (2,2)* + (4,2)*"}
    problems = []
    timings = []
    for name, want in expected.items():
        t0 = time.perf_counter()
        got = format_ag(ag_invariant(_load(name)))
        dt = time.perf_counter() - t0
        timings.append(f"{name} {dt * 1000:.1f} ms")
        if got != want:
            problems.append(f"{name}: {got} != {want}")
        if dt >= FIXTURE_TIME_LIMIT:
            problems.append(f"{name}: {dt:.2f} s >= {FIXTURE_TIME_LIMIT} s")
    return not problems, "; ".join(problems) or ", ".join(timings)


def criterion_2():
    out, err = io.StringIO(), io.StringIO()
    argv = ["--json", "compare", str(FIXTURES / "quiverA.bq"), str(FIXTURES / "quiverB.bq"),
            "--m", "2", "--max", str(MAX_N)]
    code = run(argv, out, err)
    if code != 0:
        return False, f"exit code {code}: {err.getvalue().strip()}"
    data = json.loads(out.getvalue())
    v = data["verdicts"]
    hh_ok = all(data["hh"][str(k)]["equal"] and len(data["hh"][str(k)]["first"]) == MAX_N + 1 for k in (0, 2, 3))
    ok = v["q0_equal"] and hh_ok and not v["phi_equal"]
    return ok, f"|Q0| equal={v['q0_equal']}, HH equal (char 0,2,3; n<={MAX_N})={hh_ok}, phi equal={v['phi_equal']}"


def criterion_3():
    a = _load("A")
    dims = hh_sequence(ag_invariant(a), a.num_vertices, a.num_arrows, MAX_N, 0).dims
    want = [1, 2] + [1 if n % 4 in (0, 1) else 0 for n in range(2, MAX_N + 1)]
    dims_ok = list(dims) == want
    reported = [n for n, _, _ in theorem_a_discrepancy(extract_params(a, 2), 0, MAX_N)]
    expected = [n for n in range(4, MAX_N + 1) if n % 4 in (0, 1)]
    disc_ok = reported == expected
    detail = f"dimensions {'match' if dims_ok else 'differ: ' + str(dims)}; discrepancy degrees {reported}"
    if not disc_ok:
        detail += f" != expected {expected}"
    return dims_ok and disc_ok, detail


def criterion_4():
    problems = []
    if theorem_a_dims(BranchParams(2, 0, 3, 0, 0, 1), 0) != 2:
        problems.append("HH^0 != 2 at r=1, k1=s1=0")
    if theorem_a_dims(BranchParams(2, 1, 1, 0, 0), 1) != 3:
        problems.append("HH^1 != 3 at k1=k2=0, s1=s2=1")
    for k2 in range(4):
        for s2 in range(4):
            p = BranchParams(2, 1, s2, 0, k2, 0)
            if (s2, k2) == (1, 0) or (p.s1 + p.s2 + p.k1 + p.k2 == 0):
                continue
            if theorem_a_dims(p, 1) != p.k1 + p.k2 + 2:
                problems.append(f"HH^1 != k+2 at {p}")
    special = 0
    for p in grid():
        one_case = (p.k1 == p.k2 == 0 and p.s1 == p.s2 == 1) or (
            p.r == 0 and ((p.s1 == 1 and p.k1 == 0) or (p.s2 == 1 and p.k2 == 0)))
        if one_case:
            special += 1
        elif theorem_a_dims(p, 1) != p.k + 1:
            problems.append(f"HH^1 != k+1 at {p}")
    mismatch = {0: [], 1: []}
    m1 = []
    for p in grid():
        for n in (0, 1):
            if theorem_a_dims(p, n) != theorem_a_dims_proof_faithful(p, n):
                mismatch[n].append(p)
        if p.m == 1:
            for n in range(MAX_N + 1):
                if theorem_a_dims(p, n) != theorem_a_dims_proof_faithful(p, n):
                    m1.append((p, n))
    for n in (0, 1):
        if mismatch[n]:
            problems.append(f"n={n} disagrees at {len(mismatch[n])} grid points, e.g. {mismatch[n][0]}")
    if m1:
        problems.append(f"m=1 all-n disagreement at {len(m1)} (point, n), e.g. {m1[0][0]} n={m1[0][1]}")
    return not problems, "; ".join(problems) or f"spot checks and agreement hold on {len(grid())} grid points"


def criterion_5():
    points = grid()
    t0 = time.perf_counter()
    bad = [p for p in points if not ag_equal(ag_invariant(generate_normal_form(p)), phi_from_params(p))]
    dt = time.perf_counter() - t0
    ok = len(points) >= MIN_GRID_POINTS and not bad and dt < GRID_TIME_LIMIT
    detail = f"{len(points)} points, {len(bad)} mismatches, {dt:.2f} s (limit {GRID_TIME_LIMIT:.0f} s)"
    if bad:
        detail += f", first {bad[0]}"
    return ok, detail


def criterion_6():
    bad = [p for p in grid() if extract_params(generate_normal_form(p), p.m) != p]
    return not bad, f"{len(grid())} points, {len(bad)} round-trip failures" + (f", first {bad[0]}" if bad else "")


def criterion_7():
    points = grid()
    step = len(points) // SIGN_SAMPLE
    sample = points[::step][:SIGN_SAMPLE]
    unstable = []
    for p in sample:
        q = generate_normal_form(p)
        outputs = {format_ag(ag_invariant(q, seed)) for seed in SEEDS}
        if len(outputs) != 1:
            unstable.append(p)
    return len(sample) == SIGN_SAMPLE and not unstable, f"{len(sample)} quivers x {len(SEEDS)} seeds, {len(unstable)} unstable"


def criterion_8():
    a = _load("A")
    problems = []
    degrees = [n for n in range(2, 21) if gentle_pairs(a, n)]
    if degrees != [4, 8, 12, 16, 20]:
        problems.append(f"gentle pair degrees {degrees}")
    for k in (0, 2, 3, 5, 7):
        v = gerstenhaber_nontrivial(a, k, 20)
        if not v.cup or v.bracket != (k == 0):
            problems.append(f"char {k}: cup={v.cup} bracket={v.bracket}")
    zero_k = [p for p in grid() if p.k1 == p.k2 == 0]
    for p in zero_k:
        q = generate_normal_form(p)
        v = gerstenhaber_nontrivial(q, 0, 20)
        if any(gentle_pairs(q, n) for n in range(2, 21)) or v.cup or v.bracket:
            problems.append(f"pairs at {p}")
            break
    return not problems, "; ".join(problems) or f"quiver A degrees {degrees}; {len(zero_k)} k=0 grid points clean"


def criterion_9():
    bad = [p for p in grid() if p.k1 + p.k2 != euler_characteristic(generate_normal_form(p)) - 1]
    return not bad, f"{len(grid())} points, {len(bad)} violations"


CRITERIA = [
    (1, "fixture AG-invariants", criterion_1),
    (2, "counterexample via compare", criterion_2),
    (3, "Hochschild dimensions of quiver A and discrepancy report", criterion_3),
    (4, "closed-form spot checks and agreement", criterion_4),
    (5, "closed form equals algorithm on the grid", criterion_5),
    (6, "parameter round trip", criterion_6),
    (7, "sign independence", criterion_7),
    (8, "Gerstenhaber nontriviality", criterion_8),
    (9, "k1+k2 = chi-1", criterion_9),
]


@pytest.mark.parametrize("number, title, check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, check):
    ok, detail = check()
    _record(number, title, ok, detail)
    print(RESULTS[-1])
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for number, title, check in CRITERIA:
        ok, detail = check()
        _record(number, title, ok, detail)
        print(RESULTS[-1])
        failed += not ok
    sys.exit(1 if failed else 0)
