import random

import pytest
from sympy import Matrix

from toricext import lattice


def sympy_rank(rows):
    return Matrix(rows).rank() if rows else 0


def spans_equal(a, b):
    return (all(lattice.in_lattice(v, lattice.hnf(b)) for v in a)
            and all(lattice.in_lattice(v, lattice.hnf(a)) for v in b))


def random_rows(rng, m, n, lo=-6, hi=6):
    return [tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(m)]


def test_hnf_shape_and_rank_against_sympy():
    rng = random.Random(1)
    for _ in range(100):
        rows = random_rows(rng, rng.randint(1, 5), rng.randint(1, 4))
        H = lattice.hnf(rows)
        assert len(H) == sympy_rank(rows)
        pivots = [next(c for c, x in enumerate(r) if x) for r in H]
        assert pivots == sorted(set(pivots))
        assert all(r[p] > 0 for r, p in zip(H, pivots))
        assert spans_equal(rows, H)


def test_left_kernel_against_sympy():
    rng = random.Random(2)
    for _ in range(100):
        rows = random_rows(rng, rng.randint(1, 5), rng.randint(1, 4))
        K = lattice.left_kernel(rows)
        M = Matrix(rows)
        assert len(K) == len(rows) - M.rank()
        for w in K:
            assert all(v == 0 for v in Matrix([list(w)]) * M)


def test_kernel_is_saturated():
    # 2x - 2y = 0 has kernel generated by (1, 1), not (2, 2)
    assert spans_equal(lattice.kernel([[2, -2]]), [(1, 1)])


@pytest.mark.parametrize("a,b,expected", [
    ([(2, 0), (0, 3)], [(1, 1)], [(6, 6)]),
    ([(4,)], [(6,)], [(12,)]),
    ([(1, 0)], [(0, 1)], []),
])
def test_intersection_examples(a, b, expected):
    got = lattice.intersection(a, b)
    assert spans_equal(got, expected) if expected else got == []


def test_intersection_membership_oracle():
    rng = random.Random(4)
    for _ in range(60):
        a = random_rows(rng, 2, 2, 0, 6)
        b = random_rows(rng, 1, 2, 0, 6)
        if sympy_rank(a) < 2 or not any(b[0]):
            continue
        inter = lattice.intersection(a, b)
        Ha, Hb = lattice.hnf(a), lattice.hnf(b)
        for v in inter:
            assert lattice.in_lattice(v, Ha) and lattice.in_lattice(v, Hb)
        # brute force: multiples k*b in ZA for small k
        ks = [k for k in range(1, 80) if lattice.in_lattice(tuple(k * x for x in b[0]), Ha)]
        assert inter and spans_equal(inter, [tuple(ks[0] * x for x in b[0])])
