"""Standard bases under the local negative-degrevlex order, via Mora's
normal form, and the tangent cone ideals they present."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import _pykernels, kernels
from .algebra import (Binomial, TermOrder, coprime, divides, ecart,
                      lowest_form, mono_lcm, reduce_lead_once, spoly)
from .ideals import BinomialIdeal, GroebnerBasis, buchberger
from .semigroup import ExtensionSpec


class NotNiceError(ValueError):
    pass


@dataclass(frozen=True)
class MoraStep:
    lead: tuple
    ecart: int
    degree: int
    reducer: int
    reducer_ecart: int
    appended: bool


@dataclass(frozen=True)
class StandardBasis:
    elements: tuple
    order: TermOrder
    minimal: bool = True

    @property
    def nvars(self) -> int:
        return self.order.nvars

    def leading_monomials(self) -> list:
        return [g.plus for g in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class TangentConeIdeal:
    generators: tuple
    nvars: int
    _gb: list = field(default_factory=list, compare=False, repr=False)

    def groebner(self) -> GroebnerBasis:
        if not self._gb:
            self._gb.append(buchberger(list(self.generators), TermOrder.degrevlex(self.nvars)))
        return self._gb[0]

    def is_monomial(self) -> bool:
        return all(g.monomial for g in self.generators)

    def monomials(self) -> list:
        """Minimal monomial generators (only when every generator is a monomial)."""
        if not self.is_monomial():
            raise ValueError("tangent cone ideal has binomial generators")
        return minimal_monomials(g.plus for g in self.generators)

    def ideal(self) -> BinomialIdeal:
        return BinomialIdeal(self.generators, self.nvars)


def _check_local(order: TermOrder):
    if not order.is_local:
        raise ValueError("a local (negdegrevlex) order is required")


def mora_nf(f: Optional[Binomial], G: Sequence[Binomial], order: TermOrder,
            trace: Optional[list] = None, max_steps: int = 1_000_000, backend=None) -> Optional[Binomial]:
    """Weak normal form of ``f`` with respect to ``G`` under a local order.

    Reducers are chosen with minimal ecart; whenever the chosen reducer has
    larger ecart than the current remainder, the remainder itself joins the
    reducer set.  The result is None or has a leading monomial that no
    element of ``G`` divides.  Steps are appended to ``trace`` if given.
    """
    _check_local(order)
    if f is None:
        return None
    try:
        return _mora(f, G, order, kernels.get_backend(backend), trace, max_steps)
    except OverflowError:
        if trace is not None:
            trace.clear()
        return _mora(f, G, order, _pykernels, trace, max_steps)


def _mora(f, G, order, kern, trace, max_steps):
    T = [g.oriented(order) for g in G]
    red = kern.BinomialReducer(order.nvars)
    ecarts = []
    for g in T:
        red.add(g.plus, None if g.monomial else g.minus)
        ecarts.append(ecart(g, order))
    h = f.oriented(order)
    steps = 0
    while h is not None:
        cands = red.divisors(h.plus)
        if not cands:
            break
        i = min(cands, key=lambda k: (ecarts[k], k))
        eh = ecart(h, order)
        appended = ecarts[i] > eh
        if appended:
            T.append(h)
            red.add(h.plus, None if h.monomial else h.minus)
            ecarts.append(eh)
        if trace is not None:
            trace.append(MoraStep(h.plus, eh, h.degree(), i, ecarts[i], appended))
        h = reduce_lead_once(h, T[i], order)
        steps += 1
        if steps > max_steps:
            raise RuntimeError("Mora normal form exceeded the step limit")
    return h


def is_standard_basis(elements: Sequence[Binomial], order: TermOrder) -> bool:
    """Every S-polynomial has weak normal form zero."""
    elements = [e.oriented(order) for e in elements]
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if coprime(elements[i].plus, elements[j].plus):
                continue
            if mora_nf(spoly(elements[i], elements[j], order), elements, order) is not None:
                return False
    return True


def _minimalize(elements, order):
    ordered = sorted(elements, key=lambda f: (order.key(f.plus), f.canonical()), reverse=True)
    kept = []
    for g in ordered:
        if all(not divides(h.plus, g.plus) for h in kept):
            kept.append(g)
    kept.sort(key=lambda f: order.key(f.plus), reverse=True)
    return kept


def standard_basis(I, order: TermOrder, backend=None) -> StandardBasis:
    """Minimal standard basis of ``I`` (BinomialIdeal or list) by Mora's algorithm."""
    _check_local(order)
    gens = I.generators if isinstance(I, BinomialIdeal) else [g for g in I if g is not None]
    G = []
    pairs = {}

    def add(h):
        k = len(G)
        G.append(h)
        for i in range(k):
            if not coprime(G[i].plus, h.plus):
                pairs[(i, k)] = mono_lcm(G[i].plus, h.plus)

    for g in gens:
        h = mora_nf(g, G, order, backend=backend)
        if h is not None:
            add(h)
    while pairs:
        i, j = min(pairs, key=lambda p: (sum(pairs[p]), p[1], p[0]))
        del pairs[(i, j)]
        h = mora_nf(spoly(G[i], G[j], order), G, order, backend=backend)
        if h is not None:
            add(h)
    return StandardBasis(tuple(_minimalize(G, order)), order, True)


def extend_standard_basis(G: StandardBasis, ext: ExtensionSpec, check: bool = True) -> StandardBasis:
    """``G ∪ {F}`` on one more variable, which becomes the biggest one.

    ``F`` is the join binomial built from a representation of ``m`` with
    coefficient sum ``Delta(m)``, so its leading monomial is ``x_{n+1}^l``.
    """
    if not ext.nice:
        raise NotNiceError(f"l = {ext.ell} > Delta(m) = {ext.Delta}: G ∪ {{F}} is not a standard basis")
    if G.nvars != ext.n:
        raise ValueError("standard basis and extension live in different rings")
    order = G.order.extend(biggest=True)
    F = ext.F_local.oriented(order)
    if F.plus != (0,) * ext.n + (ext.ell,):
        raise AssertionError("leading monomial of F is not x_{n+1}^l")
    elements = [g.pad().oriented(order) for g in G.elements] + [F]
    if check:
        if not is_standard_basis(elements, order):
            raise AssertionError("G ∪ {F} failed the standard basis criterion")
        if _minimalize(elements, order) != sorted(elements, key=lambda f: order.key(f.plus), reverse=True):
            raise AssertionError("G ∪ {F} is not minimal")
    return StandardBasis(tuple(elements), order, True)


def tangent_cone_ideal(G: StandardBasis) -> TangentConeIdeal:
    """Lowest-degree forms of a standard basis, generating ``I*``."""
    if not G.order.is_local:
        raise ValueError("tangent cones come from standard bases under a local degree order")
    gens = []
    seen = set()
    for g in G.elements:
        s = lowest_form(g)
        if s.canonical() not in seen:
            seen.add(s.canonical())
            gens.append(s)
    return TangentConeIdeal(tuple(gens), G.nvars)


def minimal_monomials(monos) -> list:
    """Minimal generators of a monomial ideal, sorted by (degree, exponent)."""
    monos = sorted(set(tuple(m) for m in monos), key=lambda e: (sum(e), e))
    out = []
    for m in monos:
        if all(not divides(k, m) for k in out):
            out.append(m)
    return out


def leading_ideal(G, order: Optional[TermOrder] = None) -> list:
    """Minimal monomial generators of the leading ideal of a basis."""
    if isinstance(G, (StandardBasis, GroebnerBasis)):
        order = G.order
        elements = G.elements
    else:
        elements = list(G)
        if order is None:
            raise ValueError("order required for a plain list of elements")
    return minimal_monomials(g.lead(order) for g in elements)
