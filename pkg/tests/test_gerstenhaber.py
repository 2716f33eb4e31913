import pytest

from gentle_hh.atilde import BranchParams, generate_normal_form
from gentle_hh.gerstenhaber import (
    CompletePair,
    complete_pairs,
    gamma_n,
    gentle_pairs,
    gerstenhaber_nontrivial,
    is_gentle_pair,
)
from gentle_hh.quiver import BoundQuiver


def test_gamma_n(quiver_a):
    assert gamma_n(quiver_a, 2) == [("a0", "a1"), ("a1", "a2"), ("a2", "a3"), ("a3", "a0")]
    assert len(gamma_n(quiver_a, 9)) == 4
    with pytest.raises(ValueError):
        gamma_n(quiver_a, 1)


def test_pairs_on_quiver_a(quiver_a):
    assert [n for n in range(2, 21) if gentle_pairs(quiver_a, n)] == [4, 8, 12, 16, 20]
    pairs = complete_pairs(quiver_a, 4)
    assert len(pairs) == 4
    assert CompletePair(("a0", "a1", "a2", "a3"), "v4") in pairs
    assert pairs[0].rotate(quiver_a) in pairs


@pytest.mark.parametrize("k, bracket", [(0, True), (2, False), (3, False), (5, False)])
def test_verdict_by_characteristic(quiver_a, k, bracket):
    v = gerstenhaber_nontrivial(quiver_a, k, 20)
    assert v.cup and v.bracket is bracket
    assert v.witness == CompletePair(("a0", "a1", "a2", "a3"), "v4") and v.degree == 4


def test_no_pairs_without_relation_cycles(kronecker):
    v = gerstenhaber_nontrivial(kronecker)
    assert (v.cup, v.bracket, v.witness) == (False, False, None)
    nf = generate_normal_form(BranchParams(3, 1, 4, 0, 0, 2))
    assert all(not gentle_pairs(nf, n) for n in range(2, 21))


def test_extra_relation_breaks_gentle_pair():
    # an arrow leaving the cycle composes into I with a cycle arrow
    q = BoundQuiver.build(
        ["x", "y", "z", "w"],
        [("a", "x", "y"), ("b", "y", "z"), ("c", "z", "x"), ("d", "w", "x")],
        [("a", "b"), ("b", "c"), ("c", "a")],
    )
    assert complete_pairs(q, 3)
    q2 = BoundQuiver.build(
        ["x", "y", "z", "w"],
        [("a", "x", "y"), ("b", "y", "z"), ("c", "z", "x"), ("d", "y", "w")],
        [("a", "b"), ("b", "c"), ("c", "a")],
    )
    assert all(is_gentle_pair(q2, p) for p in complete_pairs(q2, 3))
    assert gerstenhaber_nontrivial(q).cup and gerstenhaber_nontrivial(q2).cup
