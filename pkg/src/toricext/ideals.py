"""Binomial ideals: Buchberger's algorithm, toric ideals by elimination,
minimal generators, projective closures and projective extensions.

Every polynomial handled here is zero, a monomial or a pure difference
``x^a - x^b``; that class is closed under S-polynomials and reduction, so
coefficients never appear.  Monomials of a binomial are reduced
independently through the kernel reducer (see :mod:`toricext.kernels`).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from . import _pykernels, kernels
from .algebra import (Binomial, TermOrder, coprime, divides, homogenize,
                      is_s_homogeneous, mono_lcm, s_degree, spoly)
from .semigroup import AffineSemigroup, ExtensionSpec

log = logging.getLogger(__name__)


class ProjectiveExtensionError(ValueError):
    pass


@dataclass(frozen=True)
class BinomialIdeal:
    generators: tuple
    nvars: int
    grading: Optional[AffineSemigroup] = None

    def __post_init__(self):
        gens = tuple(g for g in self.generators if g is not None)
        object.__setattr__(self, "generators", gens)
        if any(g.nvars != self.nvars for g in gens):
            raise ValueError("generator outside the ambient ring")
        if self.grading is not None:
            if self.grading.n != self.nvars:
                raise ValueError("grading semigroup must have one generator per variable")
            bad = [g for g in gens if not is_s_homogeneous(g, self.grading.generators)]
            if bad:
                raise ValueError(f"generators {bad} are not S-homogeneous")

    def __add__(self, other) -> "BinomialIdeal":
        """Ideal sum by concatenating generators."""
        if isinstance(other, Binomial):
            other = (other,)
        if isinstance(other, BinomialIdeal):
            other = other.generators
        return BinomialIdeal(self.generators + tuple(other), self.nvars)

    def is_zero(self) -> bool:
        return not self.generators


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple
    order: TermOrder
    reduced: bool = True

    @property
    def nvars(self) -> int:
        return self.order.nvars

    def leading_monomials(self) -> list:
        return [g.plus for g in self.elements]

    def reducer(self, backend=None):
        red = kernels.make_reducer(self.nvars, backend)
        for g in self.elements:
            red.add(g.plus, None if g.monomial else g.minus)
        return red

    def normal_form(self, f: Optional[Binomial], backend=None) -> Optional[Binomial]:
        if f is None:
            return None
        try:
            return _full_nf(f, self.reducer(backend), self.order)
        except OverflowError:
            return _full_nf(f, self.reducer("python"), self.order)

    def contains(self, f: Optional[Binomial]) -> bool:
        return self.normal_form(f) is None

    def ideal(self) -> BinomialIdeal:
        return BinomialIdeal(self.elements, self.nvars)

    def canonical(self) -> frozenset:
        return frozenset(g.canonical() for g in self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _difference(a, b, order) -> Optional[Binomial]:
    if a is None and b is None:
        return None
    if a is None:
        return Binomial.mono(b)
    if b is None:
        return Binomial.mono(a)
    if a == b:
        return None
    return Binomial(a, b).oriented(order)


def _full_nf(f: Binomial, red, order: TermOrder) -> Optional[Binomial]:
    """Reduce both terms of ``f`` to normal form (global orders only)."""
    a = red.normal_form(f.plus)
    if f.monomial:
        return None if a is None else Binomial.mono(a)
    return _difference(a, red.normal_form(f.minus), order)


def _gm_update(leads, pairs, k):
    """Gebauer-Moeller update after appending the element with index ``k``."""
    h = leads[k]
    kept = {}
    for (i, j), lij in pairs.items():
        if divides(h, lij) and mono_lcm(leads[i], h) != lij and mono_lcm(leads[j], h) != lij:
            continue
        kept[(i, j)] = lij
    groups = {}
    for i in range(k):
        groups.setdefault(mono_lcm(leads[i], h), []).append(i)
    minimal = []
    for L in sorted(groups, key=lambda e: (sum(e), e)):
        if all(not divides(M, L) for M in minimal):
            minimal.append(L)
    for L in minimal:
        members = groups[L]
        if any(coprime(leads[i], h) for i in members):
            continue
        kept[(min(members), k)] = L
    return kept


def buchberger(gens, order: TermOrder, backend=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens`` (a list or BinomialIdeal)."""
    if order.is_local:
        raise ValueError("buchberger needs a global order; use local.standard_basis")
    if isinstance(gens, BinomialIdeal):
        gens = gens.generators
    gens = [g for g in gens if g is not None]
    try:
        return _buchberger(gens, order, kernels.get_backend(backend))
    except OverflowError:
        log.info("kernel overflow, retrying with the Python kernels")
        return _buchberger(gens, order, _pykernels)


def _buchberger(gens, order, kern) -> GroebnerBasis:
    n = order.nvars
    red = kern.BinomialReducer(n)
    G = []
    leads = []
    pairs = {}

    def add(f):
        G.append(f)
        leads.append(f.plus)
        red.add(f.plus, None if f.monomial else f.minus)
        return _gm_update(leads, pairs, len(G) - 1)

    for g in gens:
        if g.nvars != n:
            raise ValueError("generator outside the ambient ring")
        f = _full_nf(g.oriented(order), red, order)
        if f is not None:
            pairs = add(f)

    while pairs:
        i, j = min(pairs, key=lambda p: (sum(pairs[p]), p[1], p[0]))
        del pairs[(i, j)]
        s = spoly(G[i], G[j], order)
        if s is None:
            continue
        r = _full_nf(s, red, order)
        if r is not None:
            pairs = add(r)
    return _interreduce(_minimalize(G, order), order, kern)


def _minimalize(G, order):
    out = []
    for g in sorted(G, key=lambda f: order.key(f.plus)):
        if all(not divides(h.plus, g.plus) for h in out):
            out.append(g)
    return out


def _interreduce(G, order, kern) -> GroebnerBasis:
    red = kern.BinomialReducer(order.nvars)
    for g in G:
        red.add(g.plus, None if g.monomial else g.minus)
    out = []
    for i, g in enumerate(G):
        if g.monomial:
            out.append(g)
            continue
        t = red.normal_form(g.minus, i)
        out.append(Binomial.mono(g.plus) if t is None else Binomial(g.plus, t))
    out.sort(key=lambda f: order.key(f.plus))
    return GroebnerBasis(tuple(out), order, True)


def is_groebner(elements: Sequence[Binomial], order: TermOrder) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    elements = [e.oriented(order) for e in elements if e is not None]
    red = kernels.make_reducer(order.nvars, "python")
    for e in elements:
        red.add(e.plus, None if e.monomial else e.minus)
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            s = spoly(elements[i], elements[j], order)
            if s is not None and _full_nf(s, red, order) is not None:
                return False
    return True


def is_reduced(elements: Sequence[Binomial], order: TermOrder) -> bool:
    elements = [e.oriented(order) for e in elements]
    for i, f in enumerate(elements):
        for j, g in enumerate(elements):
            if i == j:
                continue
            if divides(g.plus, f.plus):
                return False
            if not f.monomial and divides(g.plus, f.minus):
                return False
    return True


def ideal_equal(I, J, order: TermOrder) -> bool:
    """Equality of ideals through their reduced Groebner bases."""
    return buchberger(I, order).canonical() == buchberger(J, order).canonical()


def ideal_contains(I, f: Binomial, order: TermOrder) -> bool:
    return buchberger(I, order).contains(f)


def toric_ideal(S: AffineSemigroup, order: Optional[TermOrder] = None,
                minimal: bool = True, backend=None) -> BinomialIdeal:
    """Toric ideal of ``S`` by eliminating ``t`` from ``<x_i - t^{m_i}>``.

    ``order`` is a global order on the n semigroup variables used to
    present the answer (default degrevlex x1 > ... > xn).  The returned
    ideal carries the S-grading; with ``minimal`` its generators are a
    minimal generating set, otherwise the reduced Groebner basis.
    """
    gb = toric_groebner(S, order, backend)
    gens = gb.elements
    if minimal:
        gens, _ = minimal_generators(BinomialIdeal(gens, S.n, S))
    return BinomialIdeal(tuple(gens), S.n, S)


def toric_groebner(S: AffineSemigroup, order: Optional[TermOrder] = None, backend=None) -> GroebnerBasis:
    """Reduced Groebner basis of the toric ideal of ``S`` under ``order``."""
    n, d = S.n, S.dim
    if order is None:
        order = TermOrder.degrevlex(n)
    if order.nvars != n:
        raise ValueError("order must be on the semigroup variables")
    if order.kind not in ("degrevlex", "lex"):
        raise ValueError("toric_groebner needs a global degrevlex or lex order")
    # variables: x_1..x_n at 0..n-1, t_1..t_d at n..n+d-1; t block is eliminated
    elim = TermOrder.elimination(n + d, d, tuple(range(n, n + d)) + order.priority)
    gens = []
    for i, m in enumerate(S.generators):
        x = tuple(int(j == i) for j in range(n)) + (0,) * d
        gens.append(Binomial((0,) * n + tuple(m), x))
    gb = buchberger(gens, elim, backend)
    kept = []
    for g in gb.elements:
        if any(g.plus[n:]) or (not g.monomial and any(g.minus[n:])):
            continue
        kept.append(Binomial(g.plus[:n], g.minus[:n]))
    if order.kind == "degrevlex" and order.priority == elim.priority[d:]:
        # the elimination basis restricted to x is already reduced for this order
        return GroebnerBasis(tuple(sorted((k.oriented(order) for k in kept), key=lambda f: order.key(f.plus))), order)
    return buchberger(kept, order, backend)


def _weight(f: Binomial, grading: Optional[AffineSemigroup]) -> tuple:
    if grading is not None:
        return (sum(s_degree(f.plus, grading.generators)), sum(f.plus))
    return (sum(f.plus),)


def minimal_generators(I: BinomialIdeal, order: Optional[TermOrder] = None) -> tuple:
    """Greedy irredundant generating set ``(generators, mu)`` of a graded ideal.

    Generators are visited by ascending degree (S-degree when the ideal
    carries an S-grading) and dropped when they lie in the ideal of the
    others.  By graded Nakayama the surviving count is ``mu(I)``.
    """
    order = order or TermOrder.degrevlex(I.nvars)
    graded_std = all(g.is_homogeneous() for g in I.generators)
    if not graded_std and I.grading is None:
        raise ValueError("minimal_generators needs a homogeneous or S-graded ideal")
    grading = None if graded_std else I.grading
    gens = []
    seen = set()
    for g in I.generators:
        if g.canonical() not in seen:
            seen.add(g.canonical())
            gens.append(g.oriented(order))
    gens.sort(key=lambda f: (_weight(f, grading), order.key(f.plus)))
    kept = list(gens)
    for g in gens:
        others = [h for h in kept if h is not g]
        if others and buchberger(others, order).contains(g):
            kept = others
    return kept, len(kept)


def _check_projective_order(order: TermOrder):
    if order.kind != "degrevlex":
        raise ValueError("projective closure needs a degree-refining (degrevlex) order")
    if order.priority[-1] != 0:
        raise ValueError("x0 (variable 0) must be the smallest variable")


def projective_closure_ideal(I: BinomialIdeal, order: Optional[TermOrder] = None) -> GroebnerBasis:
    """Reduced Groebner basis of the homogenization of ``I`` with x0 at index 0.

    ``order`` lives on ``I.nvars + 1`` variables; its restriction to the
    affine variables is used to compute the affine basis that is then
    homogenized.
    """
    n = I.nvars
    order = order or TermOrder.degrevlex(n + 1, tuple(range(1, n + 1)) + (0,))
    if order.nvars != n + 1:
        raise ValueError("order must include x0")
    _check_projective_order(order)
    affine = order.restrict(range(1, n + 1))
    gb = buchberger(I, affine)
    homog = [homogenize(g.embed(n + 1, range(1, n + 1)), 0) for g in gb.elements]
    return buchberger(homog, order)


def projective_extension(Gbar: GroebnerBasis, ext: ExtensionSpec) -> GroebnerBasis:
    """Reduced basis ``Gbar ∪ {F}`` of the projective extension (x_{n+1} biggest).

    ``Gbar`` is the reduced basis of the closure ideal in variables
    ``x0, x1..xn``; the result lives on ``x0, x1..xn, x_{n+1}`` with
    ``F = x_{n+1}^l - x0^{l-delta} x^s`` tail-reduced by ``Gbar``.
    """
    if not ext.projective_good:
        raise ProjectiveExtensionError(
            f"l = {ext.ell} < delta(m) = {ext.delta}: I(closure of extension) need not be "
            "I(closure) + <F>; minimal generating sets may fail to extend")
    n = ext.n
    if Gbar.nvars != n + 1:
        raise ValueError("Gbar must live on x0, x1..xn")
    _check_projective_order(Gbar.order)
    order = Gbar.order.extend(biggest=True)
    lifted = [g.pad() for g in Gbar.elements]
    F = projective_join(ext)
    red = kernels.make_reducer(n + 2, "python")
    for g in lifted:
        red.add(g.plus, None if g.monomial else g.minus)
    tail = red.normal_form(F.minus)
    F = Binomial.mono(F.plus) if tail is None else Binomial(F.plus, tail)
    elements = lifted + [F]
    if not is_groebner(elements, order):
        raise AssertionError("G ∪ {F} failed the Buchberger criterion")
    if not is_reduced(elements, order):
        raise AssertionError("G ∪ {F} is not reduced")
    elements.sort(key=lambda f: order.key(f.plus))
    return GroebnerBasis(tuple(elements), order, True)


def projective_join(ext: ExtensionSpec) -> Binomial:
    """``x_{n+1}^l - x0^{l-delta} x^s`` on ``x0, x1..xn, x_{n+1}``."""
    n = ext.n
    plus = (0,) * (n + 1) + (ext.ell,)
    minus = (ext.ell - ext.delta,) + tuple(ext.delta_witness) + (0,)
    return Binomial(plus, minus)

