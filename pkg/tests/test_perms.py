import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_force_closure
from surfmono.perms import (
    GroupHandle,
    Permutation,
    PermutationError,
    centralizer_in_sd,
    compose,
    cycle_type,
    group_order_and_classify,
    inverse,
    is_transitive,
    jordan_symmetric_check,
    parity,
)


def cyc(text, d):
    return Permutation.parse(text, d)


def perm_strategy(d):
    return st.permutations(list(range(d))).map(lambda p: Permutation(tuple(p)))


def test_basic_operations():
    t = cyc("(1 2)", 3)
    assert compose(t, t).is_identity()
    assert cycle_type(cyc("(1 2 3)", 3)) == [3]
    assert parity(cyc("(1 2 3)", 3)) == 1
    assert parity(t) == -1
    assert compose(cyc("(1 2 3)", 3), inverse(cyc("(1 2 3)", 3))).is_identity()
    with pytest.raises(PermutationError):
        Permutation((0, 0, 1))
    with pytest.raises(PermutationError):
        Permutation.parse("(1 4)", 3)


def test_transitivity_examples():
    assert is_transitive([cyc("(1 2)", 3), cyc("(2 3)", 3)])
    assert not is_transitive([cyc("(1 2)", 3)])
    assert is_transitive([], 1)


def test_jordan_examples():
    assert jordan_symmetric_check([cyc("(1 2)", 4), cyc("(1 3)", 4), cyc("(1 4)", 4)])
    assert not jordan_symmetric_check([cyc("(1 2 3)", 3)])
    assert not jordan_symmetric_check([cyc("(1 2)", 4), cyc("(3 4)", 4)])


def test_classification_examples():
    c = group_order_and_classify([cyc("(1 2 3)", 3)])
    assert (c.kind, c.order) == ("Alternating", 3)
    c = group_order_and_classify([cyc("(1 2)", 3), cyc("(2 3)", 3)])
    assert (c.kind, c.order) == ("Symmetric", 6)
    c = group_order_and_classify([cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)])
    assert (c.kind, c.order, str(c)) == ("Other", 4, "Other(4)")
    assert len(brute_force_closure([cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)], 4)) == 4


def test_centralizer_examples():
    assert centralizer_in_sd([cyc("(1 2 3)", 3)]).order == 3
    assert centralizer_in_sd([cyc("(1 2)", 3), cyc("(1 2 3)", 3)]).order == 1
    assert centralizer_in_sd([Permutation.identity(3)]).order == 6


def test_membership():
    G = GroupHandle([cyc("(1 2 3)", 3)])
    assert G.contains(cyc("(1 3 2)", 3))
    assert not G.contains(cyc("(1 2)", 3))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(lambda d: st.tuples(st.just(d), st.lists(perm_strategy(d), max_size=3))))
def test_chain_matches_brute_force(args):
    d, gens = args
    G = GroupHandle(gens, d)
    closure = brute_force_closure(gens, d)
    assert G.order == len(closure)
    assert {g.images for g in G.elements()} == closure


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8).flatmap(lambda d: st.tuples(perm_strategy(d), perm_strategy(d))))
def test_parity_homomorphism(ab):
    a, b = ab
    assert parity(compose(a, b)) == parity(a) * parity(b)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6).flatmap(lambda d: st.tuples(st.lists(perm_strategy(d), min_size=1, max_size=3),
                                                     perm_strategy(d), st.randoms())))
def test_classification_invariance(args):
    gens, h, rnd = args
    base = group_order_and_classify(gens)
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert group_order_and_classify(shuffled) == base
    conj = [compose(compose(h, g), inverse(h)) for g in gens]
    assert group_order_and_classify(conj) == base


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.integers(0, 2**32 - 1))
def test_jordan_implies_symmetric(d, seed):
    rng = np.random.default_rng(seed)
    gens = []
    for _ in range(rng.integers(1, 2 * d)):
        i, j = rng.choice(d, 2, replace=False)
        gens.append(Permutation.from_cycles([(i + 1, j + 1)], d))
    if jordan_symmetric_check(gens):
        c = group_order_and_classify(gens)
        assert c.kind == "Symmetric" and c.order == math.factorial(d)
