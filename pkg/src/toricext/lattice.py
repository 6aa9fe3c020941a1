"""Exact integer lattice algebra: Hermite normal form, kernels, intersections."""

from __future__ import annotations


def _echelon(rows, aug=None):
    """Row-reduce ``rows`` over the integers with unimodular row operations.

    Returns ``(rows, aug, rank)``; the first ``rank`` rows are in Hermite
    normal form (positive pivots, entries above a pivot reduced into
    ``[0, pivot)``) and the remaining rows are zero.  ``aug`` receives the
    same operations.
    """
    rows = [list(r) for r in rows]
    aug = [list(r) for r in aug] if aug is not None else [[] for _ in rows]
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    piv_row = 0
    pivots = []
    for col in range(ncols):
        if piv_row == m:
            break
        while True:
            nz = [r for r in range(piv_row, m) if rows[r][col] != 0]
            if not nz:
                break
            best = min(nz, key=lambda r: abs(rows[r][col]))
            rows[piv_row], rows[best] = rows[best], rows[piv_row]
            aug[piv_row], aug[best] = aug[best], aug[piv_row]
            p = rows[piv_row][col]
            done = True
            for r in range(piv_row + 1, m):
                q = rows[r][col] // p
                if q:
                    rows[r] = [a - q * b for a, b in zip(rows[r], rows[piv_row])]
                    aug[r] = [a - q * b for a, b in zip(aug[r], aug[piv_row])]
                if rows[r][col]:
                    done = False
            if done:
                break
        if all(rows[r][col] == 0 for r in range(piv_row, m)):
            continue
        if rows[piv_row][col] < 0:
            rows[piv_row] = [-a for a in rows[piv_row]]
            aug[piv_row] = [-a for a in aug[piv_row]]
        p = rows[piv_row][col]
        for r in range(piv_row):
            q = rows[r][col] // p
            if q:
                rows[r] = [a - q * b for a, b in zip(rows[r], rows[piv_row])]
                aug[r] = [a - q * b for a, b in zip(aug[r], aug[piv_row])]
        pivots.append(col)
        piv_row += 1
    return rows, aug, piv_row


def hnf(rows):
    """Hermite normal form basis (list of rows) of the lattice spanned by ``rows``."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    reduced, _, rank = _echelon(rows)
    return [tuple(r) for r in reduced[:rank]]


def rank(rows) -> int:
    return len(hnf(rows))


def left_kernel(rows):
    """Basis of ``{w in Z^m : sum_i w_i rows[i] == 0}``."""
    m = len(rows)
    ident = [[int(i == j) for j in range(m)] for i in range(m)]
    if not rows:
        return []
    _, aug, r = _echelon(rows, ident)
    return [tuple(a) for a in aug[r:]]


def kernel(matrix):
    """Basis of the integer kernel ``{u : matrix @ u == 0}`` (matrix given by rows)."""
    if not matrix:
        return []
    cols = [list(c) for c in zip(*matrix)]
    return left_kernel(cols)


def intersection(a_rows, b_rows):
    """HNF basis of ``ZA ∩ ZB`` for lattices spanned by the given rows."""
    if not a_rows or not b_rows:
        return []
    stacked = [list(r) for r in a_rows] + [[-v for v in r] for r in b_rows]
    na = len(a_rows)
    gens = []
    for w in left_kernel(stacked):
        u = w[:na]
        gens.append([sum(ui * r[c] for ui, r in zip(u, a_rows)) for c in range(len(a_rows[0]))])
    gens = [g for g in gens if any(g)]
    return hnf(gens) if gens else []


def in_lattice(v, basis) -> bool:
    """Membership of ``v`` in the lattice with HNF ``basis``."""
    v = list(v)
    for row in basis:
        col = next(c for c, x in enumerate(row) if x)
        if any(v[:col]):
            return False
        q, r = divmod(v[col], row[col])
        if r:
            return False
        v = [a - q * b for a, b in zip(v, row)]
    return not any(v)
