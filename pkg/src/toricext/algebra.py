"""Exponent vectors, pure-difference binomials, term orders and a small
rational polynomial layer used for cross-checks.

Exponent vectors are plain tuples of Python ints, so exponents never
overflow.  A :class:`Binomial` always stands for ``x^plus - x^minus`` with
coefficients +1/-1; the zero element is represented by ``None`` wherever an
operation may produce it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Exponent = tuple

ORDER_KINDS = ("lex", "degrevlex", "elimination", "negdegrevlex")


def exponent(entries: Iterable[int]) -> Exponent:
    """Validate and freeze an exponent vector."""
    e = tuple(int(v) for v in entries)
    if any(v < 0 for v in e):
        raise ValueError(f"negative exponent in {e}")
    return e


def zero_exponent(n: int) -> Exponent:
    return (0,) * n


def degree(e: Sequence[int]) -> int:
    return sum(e)


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True if x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b) -> Exponent:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_gcd(a, b) -> Exponent:
    return tuple(x if x < y else y for x, y in zip(a, b))


def mono_mul(a, b) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b) -> Exponent:
    """x^a / x^b, assuming x^b divides x^a."""
    return tuple(x - y for x, y in zip(a, b))


def coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@dataclass(frozen=True)
class TermOrder:
    """A monomial order on ``nvars`` variables.

    ``priority`` lists variable indices from biggest to smallest.  For the
    ``elimination`` kind the first ``block`` entries of ``priority`` form
    the eliminated block; each block is ordered by degrevlex.
    ``negdegrevlex`` is the local order (lower degree is bigger, ties
    broken by reverse lexicographic comparison).
    """

    kind: str
    nvars: int
    priority: tuple
    block: int = 0

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if sorted(self.priority) != list(range(self.nvars)):
            raise ValueError(f"priority {self.priority} is not a permutation of range({self.nvars})")
        if self.kind == "elimination" and not 0 < self.block < self.nvars:
            raise ValueError("elimination block must split the variables")

    @classmethod
    def _make(cls, kind, nvars, priority=None, block=0):
        if priority is None:
            priority = tuple(range(nvars))
        return cls(kind, nvars, tuple(priority), block)

    @classmethod
    def lex(cls, nvars, priority=None):
        return cls._make("lex", nvars, priority)

    @classmethod
    def degrevlex(cls, nvars, priority=None):
        return cls._make("degrevlex", nvars, priority)

    @classmethod
    def negdegrevlex(cls, nvars, priority=None):
        return cls._make("negdegrevlex", nvars, priority)

    @classmethod
    def elimination(cls, nvars, block, priority=None):
        return cls._make("elimination", nvars, priority, block)

    @property
    def is_local(self) -> bool:
        return self.kind == "negdegrevlex"

    @property
    def is_degree_compatible(self) -> bool:
        return self.kind in ("degrevlex", "negdegrevlex")

    def key(self, e: Sequence[int]) -> tuple:
        """Sort key: ``key(a) > key(b)`` iff ``x^a`` is bigger than ``x^b``."""
        p = self.priority
        if self.kind == "degrevlex":
            return (sum(e),) + tuple(-e[i] for i in reversed(p))
        if self.kind == "negdegrevlex":
            return (-sum(e),) + tuple(-e[i] for i in reversed(p))
        if self.kind == "lex":
            return tuple(e[i] for i in p)
        first, second = p[: self.block], p[self.block:]
        return ((sum(e[i] for i in first),) + tuple(-e[i] for i in reversed(first))
                + (sum(e[i] for i in second),) + tuple(-e[i] for i in reversed(second)))

    def compare(self, a, b) -> int:
        """Return -1, 0 or 1 as x^a is smaller, equal or bigger than x^b."""
        if len(a) != self.nvars or len(b) != self.nvars:
            raise ValueError(f"exponent length mismatch: {len(a)}, {len(b)} vs {self.nvars}")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def greater(self, a, b) -> bool:
        return self.key(a) > self.key(b)

    def extend(self, biggest: bool = True) -> "TermOrder":
        """Same kind on one more variable appended at index ``nvars``.

        The new variable becomes the biggest (``biggest=True``) or the
        smallest variable; the relative order of the old ones is kept.
        """
        new = self.nvars
        prio = (new,) + self.priority if biggest else self.priority + (new,)
        block = self.block + 1 if (self.kind == "elimination" and biggest) else self.block
        return TermOrder(self.kind, self.nvars + 1, prio, block)

    def restrict(self, keep: Sequence[int]) -> "TermOrder":
        """Induced order on the variables ``keep`` (renumbered 0..k-1)."""
        index = {v: i for i, v in enumerate(keep)}
        prio = tuple(index[v] for v in self.priority if v in index)
        if self.kind == "elimination":
            raise ValueError("restriction of elimination orders is not supported")
        return TermOrder(self.kind, len(keep), prio)


@dataclass(frozen=True)
class Binomial:
    """``x^plus - x^minus``, or the monomial ``x^plus`` when ``monomial`` is set.

    Monomials are degenerate binomials whose ``minus`` is the zero vector.
    """

    plus: Exponent
    minus: Exponent
    monomial: bool = False

    def __post_init__(self):
        if len(self.plus) != len(self.minus):
            raise ValueError("binomial terms live in different rings")
        if not self.monomial and self.plus == self.minus:
            raise ValueError("x^a - x^a is the zero element; use None")

    @classmethod
    def mono(cls, e) -> "Binomial":
        e = exponent(e)
        return cls(e, zero_exponent(len(e)), True)

    @classmethod
    def make(cls, a, b) -> Optional["Binomial"]:
        """``x^a - x^b`` or None when it vanishes."""
        a, b = exponent(a), exponent(b)
        if a == b:
            return None
        return cls(a, b)

    @property
    def nvars(self) -> int:
        return len(self.plus)

    def terms(self) -> tuple:
        return (self.plus,) if self.monomial else (self.plus, self.minus)

    def oriented(self, order: TermOrder) -> "Binomial":
        """Put the leading term in ``plus``."""
        if self.monomial or order.greater(self.plus, self.minus):
            return self
        return Binomial(self.minus, self.plus)

    def lead(self, order: TermOrder) -> Exponent:
        return self.oriented(order).plus

    def tail(self, order: TermOrder) -> Optional[Exponent]:
        return None if self.monomial else self.oriented(order).minus

    def degree(self) -> int:
        return max(sum(t) for t in self.terms())

    def is_homogeneous(self) -> bool:
        return self.monomial or sum(self.plus) == sum(self.minus)

    def same_ideal_element(self, other: "Binomial") -> bool:
        """Equality up to sign."""
        if self.monomial or other.monomial:
            return self.monomial == other.monomial and self.plus == other.plus
        return {self.plus, self.minus} == {other.plus, other.minus}

    def to_polynomial(self) -> "Polynomial":
        if self.monomial:
            return Polynomial({self.plus: Fraction(1)}, self.nvars)
        return Polynomial({self.plus: Fraction(1), self.minus: Fraction(-1)}, self.nvars)

    def canonical(self) -> tuple:
        """Order-free hashable form (sign forgotten)."""
        if self.monomial:
            return ("m", self.plus)
        return ("b",) + tuple(sorted((self.plus, self.minus)))

    def embed(self, nvars: int, positions: Sequence[int]) -> "Binomial":
        """Move variable i to index ``positions[i]`` in a ring of ``nvars`` variables."""
        def move(e):
            out = [0] * nvars
            for i, v in enumerate(e):
                out[positions[i]] += v
            return tuple(out)
        if self.monomial:
            return Binomial.mono(move(self.plus))
        return Binomial(move(self.plus), move(self.minus))

    def pad(self, extra: int = 1) -> "Binomial":
        """Append ``extra`` variables with exponent 0."""
        return self.embed(self.nvars + extra, range(self.nvars))


def spoly(f: Binomial, g: Binomial, order: TermOrder) -> Optional[Binomial]:
    """S-polynomial of two binomials (zero, a monomial or a binomial).

    Signs are dropped: the result generates the same principal ideal as the
    true S-polynomial.
    """
    f, g = f.oriented(order), g.oriented(order)
    lcm = mono_lcm(f.plus, g.plus)
    # lcm/LM(f) * f - lcm/LM(g) * g = -u*tail(f) + v*tail(g)
    ft = None if f.monomial else mono_mul(mono_div(lcm, f.plus), f.minus)
    gt = None if g.monomial else mono_mul(mono_div(lcm, g.plus), g.minus)
    return _difference(ft, gt, order)


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


def reduce_lead_once(f: Binomial, g: Binomial, order: TermOrder) -> Optional[Binomial]:
    """One reduction of the leading term of ``f`` by ``g`` (LM(g) must divide LM(f))."""
    f, g = f.oriented(order), g.oriented(order)
    if not divides(g.plus, f.plus):
        raise ValueError("leading monomial of g does not divide that of f")
    new = None if g.monomial else mono_mul(mono_div(f.plus, g.plus), g.minus)
    rest = None if f.monomial else f.minus
    return _difference(new, rest, order)


def homogenize(f: Binomial, homvar: int) -> Binomial:
    """Balance total degrees of both terms with powers of variable ``homvar``."""
    if f.plus[homvar] or f.minus[homvar]:
        raise ValueError(f"variable {homvar} already occurs in {f}")
    if f.monomial:
        return f
    da, db = sum(f.plus), sum(f.minus)
    top = max(da, db)
    a, b = list(f.plus), list(f.minus)
    a[homvar] += top - da
    b[homvar] += top - db
    return Binomial(tuple(a), tuple(b))


def dehomogenize(f: Binomial, homvar: int) -> Optional[Binomial]:
    a = f.plus[:homvar] + (0,) + f.plus[homvar + 1:]
    if f.monomial:
        return Binomial.mono(a)
    b = f.minus[:homvar] + (0,) + f.minus[homvar + 1:]
    return Binomial.make(a, b)


def lowest_form(f: Binomial) -> Binomial:
    """The homogeneous summand of smallest degree (``f*``)."""
    if f.monomial:
        return f
    da, db = sum(f.plus), sum(f.minus)
    if da == db:
        return f
    return Binomial.mono(f.plus if da < db else f.minus)


def ecart(f: Binomial, order: TermOrder) -> int:
    return f.degree() - sum(f.lead(order))


def s_degree(e: Sequence[int], generators: Sequence[Sequence[int]]) -> tuple:
    """``sum e_i * m_i`` for a semigroup with generators ``m_i``."""
    d = len(generators[0])
    out = [0] * d
    for c, m in zip(e, generators):
        if c:
            for j in range(d):
                out[j] += c * m[j]
    return tuple(out)


def is_s_homogeneous(f: Binomial, generators) -> bool:
    if f.monomial:
        return True
    return s_degree(f.plus, generators) == s_degree(f.minus, generators)


def format_monomial(e: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for v, name in zip(e, names):
        if v == 1:
            parts.append(name)
        elif v > 1:
            parts.append(f"{name}^{v}")
    return "*".join(parts) if parts else "1"


def format_binomial(f: Optional[Binomial], names: Sequence[str], order: Optional[TermOrder] = None) -> str:
    if f is None:
        return "0"
    if order is not None:
        f = f.oriented(order)
    if f.monomial:
        return format_monomial(f.plus, names)
    return f"{format_monomial(f.plus, names)} - {format_monomial(f.minus, names)}"


class Polynomial:
    """Sparse polynomial with exact rational coefficients.

    Only used on verification paths, never inside the basis kernels.
    """

    __slots__ = ("terms", "nvars")

    def __init__(self, terms=None, nvars: int = 0):
        self.nvars = nvars
        self.terms = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[tuple(e)] = c

    @classmethod
    def monomial(cls, e, coeff=1) -> "Polynomial":
        return cls({tuple(e): coeff}, len(e))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Binomial):
            other = other.to_polynomial()
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(out, self.nvars or other.nvars)

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial({e: c * other for e, c in self.terms.items()}, self.nvars)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(out, self.nvars or other.nvars)

    __rmul__ = __mul__

    def leading(self, order: TermOrder):
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def spoly(self, other: "Polynomial", order: TermOrder) -> "Polynomial":
        (a, ca), (b, cb) = self.leading(order), other.leading(order)
        lcm = mono_lcm(a, b)
        return (Polynomial.monomial(mono_div(lcm, a), 1 / ca) * self
                - Polynomial.monomial(mono_div(lcm, b), 1 / cb) * other)

    def is_binomial_class(self) -> bool:
        """Zero, a monomial (any coefficient) or c*(x^a - x^b)."""
        if len(self.terms) <= 1:
            return True
        if len(self.terms) > 2:
            return False
        c1, c2 = self.terms.values()
        return c1 == -c2

    def as_binomial(self, order: TermOrder) -> Optional[Binomial]:
        """Convert a member of the binomial class, forgetting the scalar."""
        if not self.is_binomial_class():
            raise ValueError("polynomial is not a monomial or pure difference")
        if not self.terms:
            return None
        if len(self.terms) == 1:
            return Binomial.mono(next(iter(self.terms)))
        a, b = self.terms
        return Binomial(a, b).oriented(order)

    def __repr__(self):
        return f"Polynomial({self.terms!r})"
