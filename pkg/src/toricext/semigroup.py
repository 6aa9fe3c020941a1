"""Affine semigroups, representations, extensions and gluing certificates."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from . import kernels, lattice
from .algebra import Binomial

log = logging.getLogger(__name__)


class InvalidExtension(ValueError):
    """Raised when (l, m) does not define an extension; ``guard`` names the failed check."""

    def __init__(self, guard: str, message: str):
        super().__init__(f"{guard}: {message}")
        self.guard = guard


class GluingError(ValueError):
    pass


def _point(p) -> tuple:
    if isinstance(p, int):
        p = (p,)
    p = tuple(int(v) for v in p)
    if any(v < 0 for v in p):
        raise ValueError(f"point {p} is not in N^d")
    return p


@dataclass(frozen=True)
class AffineSemigroup:
    """Subsemigroup of N^d generated by ``generators`` (one variable per generator)."""

    generators: tuple
    allow_duplicates: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        gens = tuple(_point(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("a semigroup needs at least one generator")
        d = len(gens[0])
        if d == 0 or any(len(g) != d for g in gens):
            raise ValueError("generators must share a positive dimension")
        for g in gens:
            if not any(g):
                raise ValueError("generators must be nonzero")
        if not self.allow_duplicates and len(set(gens)) != len(gens):
            dup = sorted({g for g in gens if gens.count(g) > 1})
            log.warning("duplicate generators %s rejected", dup)
            raise ValueError(f"duplicate generators {dup}")

    @classmethod
    def of(cls, *gens) -> "AffineSemigroup":
        return cls(tuple(gens))

    @property
    def dim(self) -> int:
        return len(self.generators[0])

    @property
    def n(self) -> int:
        return len(self.generators)

    def representations(self, m) -> list:
        return representations(self, m)

    def contains(self, m) -> bool:
        return bool(representations(self, m))

    def lattice_rank(self) -> int:
        return lattice_rank(self)

    def projective_closure(self) -> "AffineSemigroup":
        """Semigroup of the projective closure; generator 0 belongs to ``x0``.

        With D the largest total degree of a generator, ``x0`` maps to
        ``(0,..,0,D)`` and ``x_i`` to ``(m_i, D - |m_i|)``.
        """
        D = max(sum(g) for g in self.generators)
        zero = (0,) * self.dim
        gens = [zero + (D,)] + [g + (D - sum(g),) for g in self.generators]
        return AffineSemigroup(tuple(gens), allow_duplicates=self.allow_duplicates)


def representations(S: AffineSemigroup, m) -> list:
    """Every ``s`` with ``sum s_i m_i == m``, lexicographically increasing; empty iff m not in S."""
    m = _point(m)
    if len(m) != S.dim:
        raise ValueError(f"point {m} has dimension {len(m)}, semigroup has {S.dim}")
    return kernels.representations(S.generators, m)


def delta(S: AffineSemigroup, m) -> tuple:
    """Smallest coefficient sum of a representation and the lexicographically first witness."""
    reps = representations(S, m)
    if not reps:
        raise ValueError(f"{_point(m)} is not in the semigroup")
    best = min(sum(r) for r in reps)
    return best, next(r for r in reps if sum(r) == best)


def Delta(S: AffineSemigroup, m) -> tuple:
    """Largest coefficient sum of a representation and the lexicographically first witness."""
    reps = representations(S, m)
    if not reps:
        raise ValueError(f"{_point(m)} is not in the semigroup")
    best = max(sum(r) for r in reps)
    return best, next(r for r in reps if sum(r) == best)


def lattice_rank(S: AffineSemigroup) -> int:
    """Rank of the group generated by S, i.e. dim V_S."""
    return lattice.rank(S.generators)


@dataclass(frozen=True)
class ExtensionSpec:
    base: AffineSemigroup
    ell: int
    m: tuple
    delta: int
    Delta: int
    delta_witness: tuple
    Delta_witness: tuple
    coprime_component: int

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def nice(self) -> bool:
        return self.ell <= self.Delta

    @property
    def projective_good(self) -> bool:
        return self.ell >= self.delta

    @property
    def semigroup(self) -> AffineSemigroup:
        gens = tuple(tuple(self.ell * v for v in g) for g in self.base.generators) + (self.m,)
        return AffineSemigroup(gens, allow_duplicates=True)

    def join_binomial(self, witness: Optional[Sequence[int]] = None) -> Binomial:
        """``x_{n+1}^l - x^s`` in n+1 variables (the new variable is last)."""
        s = self.delta_witness if witness is None else tuple(witness)
        return Binomial((0,) * self.n + (self.ell,), tuple(s) + (0,))

    @property
    def F(self) -> Binomial:
        """Join binomial built from the delta witness."""
        return self.join_binomial(self.delta_witness)

    @property
    def F_local(self) -> Binomial:
        """Join binomial built from the Delta witness (used under local orders)."""
        return self.join_binomial(self.Delta_witness)

    def to_dict(self) -> dict:
        return {
            "generators": [list(g) for g in self.base.generators],
            "l": self.ell,
            "m": list(self.m),
            "delta": self.delta,
            "Delta": self.Delta,
            "delta_witness": list(self.delta_witness),
            "Delta_witness": list(self.Delta_witness),
            "coprime_component": self.coprime_component,
            "nice": self.nice,
            "projective_good": self.projective_good,
        }


def coprime_component(ell: int, m) -> int:
    """Index of the first component of ``m`` coprime to ``ell`` (gcd(l, 0) = l), or -1."""
    for j, v in enumerate(m):
        if gcd(ell, v) == 1:
            return j
    return -1


def make_extension(S: AffineSemigroup, ell: int, m) -> ExtensionSpec:
    m = _point(m)
    if ell < 1:
        raise InvalidExtension("positive-l", f"l = {ell} must be a positive integer")
    if len(m) != S.dim:
        raise InvalidExtension("dimension", f"m = {m} is not in N^{S.dim}")
    j = coprime_component(ell, m)
    if j < 0:
        raise InvalidExtension("coprimality", f"l = {ell} shares a factor with every component of m = {m}")
    reps = representations(S, m)
    if not reps:
        raise InvalidExtension("membership", f"m = {m} is not in the semigroup")
    lo = min(sum(r) for r in reps)
    hi = max(sum(r) for r in reps)
    return ExtensionSpec(
        base=S, ell=ell, m=m, delta=lo, Delta=hi,
        delta_witness=next(r for r in reps if sum(r) == lo),
        Delta_witness=next(r for r in reps if sum(r) == hi),
        coprime_component=j,
    )


@dataclass(frozen=True)
class GluingCertificate:
    T1: tuple
    T2: tuple
    alpha: tuple
    intersection_basis: tuple
    witness1: tuple
    witness2: tuple

    def to_dict(self) -> dict:
        return {
            "T1": [list(t) for t in self.T1],
            "T2": [list(t) for t in self.T2],
            "alpha": list(self.alpha),
            "intersection_basis": [list(b) for b in self.intersection_basis],
            "witness1": list(self.witness1),
            "witness2": list(self.witness2),
        }


def check_gluing(T1, T2, alpha) -> GluingCertificate:
    """Certify that N(T1 ∪ T2) glues N T1 and N T2 along ``alpha``.

    Raises :class:`GluingError` naming the failing condition.
    """
    T1 = tuple(_point(t) for t in T1)
    T2 = tuple(_point(t) for t in T2)
    alpha = _point(alpha)
    if not T1 or not T2:
        raise GluingError("both parts must be nonempty")
    # T1 and T2 are indexed families, disjoint by index even if a point repeats
    if not any(alpha):
        raise GluingError("alpha must be nonzero")
    basis = lattice.intersection(T1, T2)
    if len(basis) != 1:
        raise GluingError(f"ZT1 ∩ ZT2 has rank {len(basis)}, expected 1")
    gen = basis[0]
    if alpha != gen and alpha != tuple(-v for v in gen):
        if lattice.in_lattice(alpha, basis):
            raise GluingError(f"alpha = {alpha} is a proper multiple of the generator {gen} of ZT1 ∩ ZT2")
        raise GluingError(f"alpha = {alpha} is not in ZT1 ∩ ZT2 = Z{gen}")
    w1 = kernels.representations(T1, alpha)
    w2 = kernels.representations(T2, alpha)
    if not w1 or not w2:
        raise GluingError(f"alpha = {alpha} is not in both N-spans")
    return GluingCertificate(T1, T2, alpha, tuple(basis), w1[0], w2[0])


def extension_gluing(ext: ExtensionSpec) -> GluingCertificate:
    T1 = tuple(tuple(ext.ell * v for v in g) for g in ext.base.generators)
    return check_gluing(T1, (ext.m,), tuple(ext.ell * v for v in ext.m))
