import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from gentle_hh.atilde import generate_normal_form
from gentle_hh.quiver import BoundQuiver
from gentle_hh.threads import (
    assign_signs,
    check_sign_assignment,
    dump_threads,
    forbidden_threads,
    permitted_threads,
)

from builders import random_params

EXPECTED_A = """\
permitted [e_v1] v1 -> v1
permitted [e_v3] v3 -> v3
permitted [a2] v7 -> v6
permitted [a3] v6 -> v4
permitted [b1 b2 b3 a1] v2 -> v7
permitted [b4 a0] v2 -> v5
forbidden [e_v6] v6 -> v6
forbidden [e_v7] v7 -> v7
forbidden [b1] v2 -> v1
forbidden [b2] v1 -> v3
forbidden [b3] v3 -> v5
forbidden [b4] v2 -> v4
critical [a0 a1 a2 a3]
"""


def test_thread_dump_quiver_a(quiver_a):
    assert dump_threads(quiver_a) == EXPECTED_A


def test_single_arrow():
    q = BoundQuiver.build(["x", "y"], [("a", "x", "y")])
    perm = permitted_threads(q)
    forb, crit = forbidden_threads(q)
    assert sorted(t.arrows for t in perm) == [(), (), ("a",)]
    assert sorted(t.arrows for t in forb) == [(), (), ("a",)]
    assert crit == []


def test_kronecker_threads(kronecker):
    assert sorted(t.arrows for t in permitted_threads(kronecker)) == [("a",), ("b",)]
    forb, _ = forbidden_threads(kronecker)
    assert sorted(t.arrows for t in forb) == [("a",), ("b",)]


def test_not_admissible_raises():
    q = BoundQuiver.build(["x", "y"], [("a", "x", "y"), ("b", "y", "x")])
    with pytest.raises(ValueError):
        permitted_threads(q)


def _check_partition(q):
    perm = permitted_threads(q)
    forb, crit = forbidden_threads(q)
    names = Counter(a.name for a in q.arrows)
    assert Counter(x for t in perm for x in t.arrows) == names
    assert Counter(x for t in forb for x in t.arrows) + Counter(x for c in crit for x in c) == names
    # each vertex is the end of as many permitted as forbidden threads
    for v in q.vertices:
        assert sum(t.end == v for t in perm) == sum(t.end == v for t in forb)
        assert sum(t.start == v for t in perm) == sum(t.start == v for t in forb)


def test_partition_on_fixtures(quiver_a, quiver_b):
    _check_partition(quiver_a)
    _check_partition(quiver_b)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 100_000))
def test_partition_and_signs_on_random_normal_forms(seed):
    rng = random.Random(seed)
    q = generate_normal_form(random_params(rng))
    _check_partition(q)
    assert check_sign_assignment(q, assign_signs(q, seed)) == []


@pytest.mark.parametrize("seed", range(10))
def test_sign_rules_on_fixture(quiver_a, seed):
    assert check_sign_assignment(quiver_a, assign_signs(quiver_a, seed)) == []
