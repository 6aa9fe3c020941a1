import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from toricext import (AffineSemigroup, Binomial, BinomialIdeal, TermOrder, buchberger,
                      ideal_equal, make_extension, minimal_generators, projective_closure_ideal,
                      projective_extension, toric_groebner, toric_ideal)
from toricext.algebra import is_s_homogeneous, s_degree
from toricext.ideals import ProjectiveExtensionError, is_groebner, is_reduced

from strategies import random_semigroup


def kernel_binomials(S, max_deg):
    """All x^a - x^b with equal S-degree and total degree <= max_deg."""
    monos = [e for e in itertools.product(range(max_deg + 1), repeat=S.n) if sum(e) <= max_deg]
    by_deg = {}
    for e in monos:
        by_deg.setdefault(s_degree(e, S.generators), []).append(e)
    for group in by_deg.values():
        for a, b in itertools.combinations(group, 2):
            yield Binomial(a, b)


@pytest.mark.parametrize("gens", [(2, 3), (3, 4, 5), ((1, 0), (1, 1), (1, 2)), ((2, 0), (1, 1), (0, 2))])
def test_toric_ideal_against_brute_force_kernel(gens):
    S = AffineSemigroup.of(*gens)
    gb = toric_groebner(S)
    for g in gb:
        assert is_s_homogeneous(g, S.generators)
    for f in kernel_binomials(S, 6):
        assert gb.contains(f)


def test_numerical_semigroup_two_generators():
    I = toric_ideal(AffineSemigroup.of(2, 3))
    assert [g.canonical() for g in I.generators] == [Binomial((3, 0), (0, 2)).canonical()]


def test_free_semigroup_has_zero_ideal():
    assert toric_ideal(AffineSemigroup.of((1, 0), (0, 1))).is_zero()
    assert toric_ideal(AffineSemigroup.of(5)).is_zero()


def test_reduced_basis_properties():
    S = AffineSemigroup.of(3, 5, 7)
    for order in (TermOrder.degrevlex(3), TermOrder.lex(3), TermOrder.lex(3, (2, 1, 0))):
        gb = toric_groebner(S, order)
        assert is_groebner(gb.elements, order)
        assert is_reduced(gb.elements, order)
        assert ideal_equal(gb.elements, toric_ideal(S).generators, order)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_reduced_basis_is_canonical_under_shuffling(seed):
    rnd = random.Random(seed)
    S = random_semigroup(rnd, min_n=3, max_n=4, max_entry=6)
    order = TermOrder.degrevlex(S.n)
    gens = list(toric_ideal(S, minimal=False).generators)
    ref = buchberger(gens, order).canonical()
    extra = [buchberger(gens, order).elements[0]] if gens else []
    shuffled = [Binomial(g.minus, g.plus) if rnd.random() < 0.5 else g for g in gens + extra]
    rnd.shuffle(shuffled)
    assert buchberger(shuffled, order).canonical() == ref


def test_local_orders_are_rejected():
    with pytest.raises(ValueError):
        buchberger([Binomial((1, 0), (0, 1))], TermOrder.negdegrevlex(2))


def test_ideal_validation():
    with pytest.raises(ValueError):
        BinomialIdeal((Binomial((1, 0), (0, 1)),), 3)
    with pytest.raises(ValueError):
        BinomialIdeal((Binomial((1, 0), (0, 1)),), 2, AffineSemigroup.of(2, 3))
    I = BinomialIdeal((None, Binomial((1, 0), (0, 1))), 2)
    assert len(I.generators) == 1
    assert len((I + Binomial.mono((2, 0))).generators) == 2


def test_minimal_generators_of_redundant_input():
    S = AffineSemigroup.of((3, 0), (2, 1), (1, 2), (0, 3))
    gb = toric_groebner(S, TermOrder.lex(4))
    shifted = [Binomial(tuple(a + 1 for a in g.plus), tuple(b + 1 for b in g.minus)) for g in gb]
    kept, mu = minimal_generators(BinomialIdeal(tuple(shifted) + gb.elements, 4, S))
    assert mu == 3
    assert {g.canonical() for g in kept} == gb.canonical()
    with pytest.raises(ValueError):
        minimal_generators(BinomialIdeal((Binomial((2, 0), (0, 1)),), 2))


def test_projective_closure_dehomogenizes_to_affine_basis():
    S = AffineSemigroup.of(3, 4, 5)
    gb = projective_closure_ideal(toric_ideal(S, minimal=False))
    order = TermOrder.degrevlex(4, (1, 2, 3, 0))
    assert gb.canonical() == toric_groebner(S.projective_closure(), order).canonical()
    assert all(g.is_homogeneous() for g in gb)


def test_projective_extension_refuses_small_l():
    S = AffineSemigroup.of(1, 4, 5)
    gbar = projective_closure_ideal(toric_ideal(S, minimal=False))
    with pytest.raises(ProjectiveExtensionError):
        projective_extension(gbar, make_extension(S, 1, 10))
    built = projective_extension(gbar, make_extension(S, 2, 9))
    scratch = toric_groebner(make_extension(S, 2, 9).semigroup.projective_closure(), built.order)
    assert built.canonical() == scratch.canonical()


def test_projective_order_guard():
    S = AffineSemigroup.of(1, 4, 5)
    with pytest.raises(ValueError):
        projective_closure_ideal(toric_ideal(S), TermOrder.degrevlex(4))
