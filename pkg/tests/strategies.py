"""Seeded random objects shared by the property and acceptance tests."""

import random

from toricext import AffineSemigroup, InvalidExtension, make_extension
from toricext.semigroup import Delta


def random_semigroup(rng, max_dim=2, max_n=4, max_entry=8, min_n=1):
    d = rng.randint(1, max_dim)
    n = rng.randint(min_n, max_n)
    gens = set()
    while len(gens) < n:
        g = tuple(rng.randint(0, max_entry) for _ in range(d))
        if any(g):
            gens.add(g)
    return AffineSemigroup(tuple(sorted(gens)))


def random_point(rng, S, max_coeff=2):
    while True:
        coeffs = [rng.randint(0, max_coeff) for _ in range(S.n)]
        if any(coeffs):
            return tuple(sum(c * g[j] for c, g in zip(coeffs, S.generators)) for j in range(S.dim))


def random_extension(rng, max_ell=4, **kw):
    """``(S, ExtensionSpec)`` for a random valid extension."""
    while True:
        S = random_semigroup(rng, **kw)
        m = random_point(rng, S)
        ell = rng.randint(1, max_ell)
        try:
            return S, make_extension(S, ell, m)
        except InvalidExtension:
            continue


def random_extension_with(rng, pick_ell, max_coeff=2, **kw):
    """Random extension whose ``l`` is ``pick_ell(Delta)``; retries until valid."""
    while True:
        S = random_semigroup(rng, **kw)
        m = random_point(rng, S, max_coeff)
        hi, _ = Delta(S, m)
        ell = pick_ell(hi)
        if ell < 1:
            continue
        try:
            return S, make_extension(S, ell, m)
        except InvalidExtension:
            continue


def random_monomials(rng, n, count, max_deg):
    out = []
    for _ in range(count):
        deg = rng.randint(1, max_deg)
        e = [0] * n
        for _ in range(deg):
            e[rng.randrange(n)] += 1
        out.append(tuple(e))
    return out


def rng_for(seed):
    return random.Random(seed)
