import itertools
import random

import pytest

from toricext import (AffineSemigroup, Binomial, TermOrder, extend_standard_basis,
                      leading_ideal, make_extension, mora_nf, standard_basis,
                      tangent_cone_ideal, toric_ideal)
from toricext.algebra import spoly
from toricext.local import NotNiceError, is_standard_basis, minimal_monomials

from strategies import random_semigroup

CI = AffineSemigroup.of((6, 0), (0, 2), (7, 0), (6, 4), (15, 0))


def test_mora_requires_local_order():
    with pytest.raises(ValueError):
        mora_nf(Binomial((1, 0), (0, 1)), [], TermOrder.degrevlex(2))


def test_mora_normal_form_of_member_is_zero():
    # x^2 - y^3 reduces to zero modulo itself and its multiples in the local ring
    order = TermOrder.negdegrevlex(2)
    f = Binomial((2, 0), (0, 3))
    assert mora_nf(f, [f], order) is None
    g = Binomial((3, 0), (1, 3))  # x * f
    assert mora_nf(g, [f], order) is None


def test_mora_appends_remainders():
    # x - x^2: the unit 1 - x kills it locally, which needs T to grow
    order = TermOrder.negdegrevlex(1)
    trace = []
    G = [Binomial((1,), (2,))]
    h = mora_nf(Binomial((2,), (4,)), G, order, trace=trace)
    assert h is None
    assert trace


def test_mora_measure_on_random_inputs():
    rng = random.Random(12)
    for _ in range(15):
        S = random_semigroup(rng, min_n=3, max_n=5, max_entry=7)
        order = TermOrder.negdegrevlex(S.n)
        gens = list(toric_ideal(S, minimal=False).generators)
        for f, g in itertools.combinations(gens, 2):
            trace = []
            mora_nf(spoly(f, g, order), gens, order, trace=trace)
            for prev, nxt in zip(trace, trace[1:]):
                assert prev.appended == (prev.reducer_ecart > prev.ecart)
                if not prev.appended:
                    assert nxt.degree <= prev.degree


def test_standard_basis_of_complete_intersection():
    order = TermOrder.negdegrevlex(5)
    G = standard_basis(toric_ideal(CI, minimal=False), order)
    assert is_standard_basis(G.elements, order)
    assert sorted(leading_ideal(G)) == sorted([(0, 0, 0, 1, 0), (1, 0, 0, 0, 1), (0, 0, 0, 0, 2),
                                               (0, 0, 3, 0, 1), (0, 0, 6, 0, 0)])
    assert tangent_cone_ideal(G).is_monomial()


def test_homogeneous_ideal_is_its_own_tangent_cone():
    S = AffineSemigroup.of((3, 0), (2, 1), (1, 2), (0, 3))
    I = toric_ideal(S)
    cone = tangent_cone_ideal(standard_basis(I, TermOrder.negdegrevlex(4)))
    assert cone.groebner().canonical() == frozenset(
        g.canonical() for g in cone.groebner().elements)
    from toricext import buchberger
    assert cone.groebner().canonical() == buchberger(I, TermOrder.degrevlex(4)).canonical()
    with pytest.raises(ValueError):
        cone.monomials()


@pytest.mark.parametrize("ell,m", [(1, (6, 4)), (3, (6, 4)), (1, (15, 0))])
def test_extended_standard_basis_matches_scratch(ell, m):
    order = TermOrder.negdegrevlex(5)
    ext = make_extension(CI, ell, m)
    G = standard_basis(toric_ideal(CI, minimal=False), order)
    built = extend_standard_basis(G, ext)
    scratch = standard_basis(toric_ideal(ext.semigroup, minimal=False), built.order)
    assert (tangent_cone_ideal(built).groebner().canonical()
            == tangent_cone_ideal(scratch).groebner().canonical())
    assert leading_ideal(built) == leading_ideal(scratch)


def test_extend_refuses_non_nice():
    ext = make_extension(CI, 2, (15, 0))
    assert not ext.nice
    G = standard_basis(toric_ideal(CI, minimal=False), TermOrder.negdegrevlex(5))
    with pytest.raises(NotNiceError):
        extend_standard_basis(G, ext)


def test_minimal_monomials():
    assert minimal_monomials([(2, 0), (1, 1), (3, 0), (1, 2), (0, 4)]) == [(1, 1), (2, 0), (0, 4)]
