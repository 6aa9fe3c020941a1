"""Hilbert series and Hilbert functions of quotients by monomial ideals."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

from .local import minimal_monomials


# -- integer polynomials as ascending coefficient lists ---------------------

def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [0]


def poly_add(p, q):
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _divide_one_minus_t(p):
    """Exact quotient p / (1 - t); caller checks p(1) == 0."""
    # p = (1 - t) q  =>  q_i = p_0 + ... + p_i
    q, acc = [], 0
    for c in p[:-1]:
        acc += c
        q.append(acc)
    return _trim(q or [0])


# -- numerator by pivot splitting -------------------------------------------

def _pairwise_coprime(gens) -> bool:
    seen = set()
    for g in gens:
        for v, e in enumerate(g):
            if e:
                if v in seen:
                    return False
                seen.add(v)
    return True


@lru_cache(maxsize=65536)
def _numerator(gens: tuple) -> tuple:
    """K-polynomial of R/<gens> (numerator over (1-t)^n); ``gens`` minimal and sorted."""
    if not gens:
        return (1,)
    if _pairwise_coprime(gens):
        out = [1]
        for g in gens:
            d = sum(g)
            out = poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return tuple(out)
    n = len(gens[0])
    counts = [0] * n
    for g in gens:
        for v, e in enumerate(g):
            if e:
                counts[v] += 1
    top = max(counts)
    v = counts.index(top)
    e = min(g[v] for g in gens if g[v])
    pivot = tuple(e if i == v else 0 for i in range(n))
    # N(I) = N(I + <p>) + t^deg(p) N(I : p)
    plus = _canonical([g for g in gens if g[v] < e] + [pivot])
    colon = _canonical([tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens])
    return tuple(poly_add(_numerator(plus), [0] * e + list(_numerator(colon))))


def _canonical(monos) -> tuple:
    return tuple(minimal_monomials(monos))


def krull_dimension(monos, n: int) -> int:
    """dim R/I from minimal primes: n minus the smallest variable set meeting every support."""
    gens = minimal_monomials(monos)
    if not gens:
        return n
    supports = [frozenset(v for v, e in enumerate(g) if e) for g in gens]
    if any(not s for s in supports):
        return -1  # unit ideal
    for size in range(1, n + 1):
        for cover in combinations(range(n), size):
            c = set(cover)
            if all(s & c for s in supports):
                return n - size
    return 0


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator / (1-t)^nvars == reduced / (1-t)^dim``."""

    numerator: tuple
    nvars: int
    reduced: tuple
    dim: int

    @classmethod
    def from_numerator(cls, numerator: Sequence[int], nvars: int) -> "HilbertSeries":
        num = _trim(numerator)
        red, D = list(num), nvars
        while D > 0 and any(red) and poly_eval(red, 1) == 0:
            red = _divide_one_minus_t(red)
            D -= 1
        return cls(tuple(num), nvars, tuple(red), D)

    @classmethod
    def from_reduced(cls, reduced: Sequence[int], dim: int, nvars: Optional[int] = None) -> "HilbertSeries":
        nvars = dim if nvars is None else nvars
        if nvars < dim:
            raise ValueError("ambient variable count below the dimension")
        num = list(reduced)
        for _ in range(nvars - dim):
            num = poly_mul(num, [1, -1])
        return cls.from_numerator(num, nvars)

    def coefficients(self, up_to: int) -> list:
        """Power-series coefficients of degrees 0..up_to (direct expansion)."""
        h, D = self.reduced, self.dim
        out = []
        for k in range(up_to + 1):
            total = 0
            for j, c in enumerate(h):
                if j <= k:
                    total += c * (math.comb(k - j + D - 1, D - 1) if D > 0 else int(k == j))
            out.append(total)
        return out

    def to_dict(self) -> dict:
        return {"numerator": list(self.numerator), "nvars": self.nvars,
                "reduced": list(self.reduced), "dim": self.dim}

    @classmethod
    def from_dict(cls, d) -> "HilbertSeries":
        return cls(tuple(d["numerator"]), d["nvars"], tuple(d["reduced"]), d["dim"])

    def format(self, reduced: bool = True) -> str:
        num, D = (self.reduced, self.dim) if reduced else (self.numerator, self.nvars)
        return f"({format_poly(num)}) / (1-t)^{D}"


def hilbert_series(monos, n: int) -> HilbertSeries:
    """Hilbert series of ``K[x_1..x_n] / <monos>``."""
    monos = [tuple(m) for m in monos]
    if any(len(m) != n for m in monos):
        raise ValueError("monomial outside the ambient ring")
    return HilbertSeries.from_numerator(_numerator(_canonical(monos)), n)


def format_poly(p) -> str:
    parts = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        mag = abs(c)
        body = str(mag) if (mono == "" or mag != 1) else ""
        body += mono
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(t(?:\^(\d+))?)?")


def parse_series(text: str) -> tuple:
    """Parse ``"(1 + 3t - t^8) / (1-t)^2"`` into ``(coefficients, D)``."""
    m = re.fullmatch(r"\s*\((.*)\)\s*/\s*\(\s*1\s*-\s*t\s*\)\s*(?:\^\s*(\d+))?\s*", text)
    if not m:
        raise ValueError(f"not a rational series: {text!r}")
    body, D = m.group(1), int(m.group(2) or 1)
    coeffs = {}
    pos = 0
    body = body.strip()
    while pos < len(body):
        tm = _TERM.match(body, pos)
        if not tm or tm.end() == pos:
            raise ValueError(f"cannot parse numerator near {body[pos:]!r}")
        sign, digits, tpart, power = tm.groups()
        if not digits and not tpart:
            raise ValueError(f"empty term in {body!r}")
        c = int(digits) if digits else 1
        e = (int(power) if power else 1) if tpart else 0
        coeffs[e] = coeffs.get(e, 0) + (-c if sign == "-" else c)
        pos = tm.end()
        while pos < len(body) and body[pos] == " ":
            pos += 1
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] += c
    return _trim(out), D


# -- Hilbert functions ------------------------------------------------------

def _binomial_poly(shift: int, r: int) -> list:
    """C(k + shift, r) as a polynomial in k (Fraction coefficients, ascending)."""
    out = [Fraction(1)]
    for i in range(r):
        # multiply by (k + shift - i)
        c = shift - i
        nxt = [Fraction(0)] * (len(out) + 1)
        for j, a in enumerate(out):
            nxt[j] += a * c
            nxt[j + 1] += a
        out = nxt
    fact = math.factorial(r)
    return [a / fact for a in out]


def _qpoly_eval(p, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _qtrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


@dataclass(frozen=True)
class HilbertFunction:
    """Values ``b_0..`` and the polynomial ``P`` with ``b_k = P(k)`` for ``k >= tail_start``."""

    values: tuple
    polynomial: tuple
    tail_start: int

    def __call__(self, k: int) -> int:
        if k < len(self.values):
            return self.values[k]
        if k < self.tail_start:
            raise ValueError(f"value at {k} not recorded")
        v = _qpoly_eval(self.polynomial, k)
        return int(v)

    def polynomial_str(self, var: str = "k") -> str:
        parts = []
        for i in range(len(self.polynomial) - 1, -1, -1):
            c = self.polynomial[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}" if mag.denominator != 1 else f"{mag}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append(("-" + body if sign == "-" else body) if not parts else f" {sign} {body}")
        return "".join(parts) or "0"

    def to_dict(self) -> dict:
        return {"values": list(self.values),
                "polynomial": [str(c) for c in self.polynomial],
                "tail_start": self.tail_start}

    @classmethod
    def from_dict(cls, d) -> "HilbertFunction":
        return cls(tuple(d["values"]), tuple(Fraction(c) for c in d["polynomial"]), d["tail_start"])


def hilbert_polynomial(HS: HilbertSeries) -> list:
    """Coefficients (ascending in k) of the Hilbert polynomial."""
    D = HS.dim
    if D == 0:
        return []
    out = [Fraction(0)] * D
    for j, c in enumerate(HS.reduced):
        if c:
            for i, a in enumerate(_binomial_poly(D - 1 - j, D - 1)):
                out[i] += c * a
    return _qtrim(out)


def hilbert_function(HS: HilbertSeries, up_to: int = 10) -> HilbertFunction:
    poly = hilbert_polynomial(HS)
    bound = max(0, len(HS.reduced) - 1 - HS.dim + 1)
    vals = HS.coefficients(max(up_to, bound + 1))
    k_star = bound
    while k_star > 0 and vals[k_star - 1] == _qpoly_eval(poly, k_star - 1):
        k_star -= 1
    return HilbertFunction(tuple(vals[: max(up_to, k_star) + 1]), tuple(poly), k_star)


def cauchy_bound(p) -> Fraction:
    """Every complex root of ``p`` has modulus below this value."""
    p = _qtrim(p)
    lead = p[-1]
    return 1 + max((abs(Fraction(c) / lead) for c in p[:-1]), default=Fraction(0))


def is_nondecreasing(HF: HilbertFunction) -> tuple:
    """``(True, None)`` or ``(False, k)`` with k the first index where ``b_k > b_{k+1}``."""
    k_star = HF.tail_start
    for k in range(k_star):
        if HF(k) > HF(k + 1):
            return False, k
    P = list(HF.polynomial)
    shifted = [Fraction(0)] * len(P)
    for i, c in enumerate(P):
        # P(k + 1) = sum c_i (k + 1)^i
        for j in range(i + 1):
            shifted[j] += c * math.comb(i, j)
    diff = _qtrim([a - b for a, b in zip(shifted, P)])
    if not diff:
        return True, None
    limit = max(k_star, math.ceil(cauchy_bound(diff)) + 1)
    for k in range(k_star, limit + 1):
        if _qpoly_eval(diff, k) < 0:
            return False, k
    return True, None


def window_values(a: Sequence[int], ell: int) -> list:
    """``b_k = a_k + a_{k-1} + ... + a_{k-l+1}`` (terms with negative index vanish)."""
    return [sum(a[k - j] for j in range(ell) if k - j >= 0) for k in range(len(a))]


def verify_product_identity(base: HilbertSeries, ell: int, ext: HilbertSeries) -> bool:
    """ext numerator == (1 - t)(1 + t + ... + t^{l-1}) * base numerator."""
    if ext.nvars != base.nvars + 1:
        raise ValueError(f"extension has {ext.nvars} variables, expected {base.nvars + 1}")
    expected = poly_mul(poly_mul([1, -1], [1] * ell), list(base.numerator))
    return _trim(ext.numerator) == expected
