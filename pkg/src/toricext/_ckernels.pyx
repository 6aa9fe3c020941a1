# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels (same API as ``_pykernels``).

Exponents are stored as int64.  Any value that would leave the safe range
raises ``OverflowError`` so callers can fall back to the Python kernels,
which use unbounded integers.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.stdint cimport int64_t

BACKEND = "cython"

cdef int64_t LIMIT = (<int64_t>1) << 60


cdef inline int64_t _checked(object v) except? -1:
    if v < 0 or v >= LIMIT:
        raise OverflowError("exponent outside int64 kernel range")
    return <int64_t>v


cdef class BinomialReducer:
    cdef int64_t* leads
    cdef int64_t* tails
    cdef char* is_mono
    cdef Py_ssize_t size
    cdef Py_ssize_t cap
    cdef readonly int nvars

    def __cinit__(self, int nvars):
        self.nvars = nvars
        self.size = 0
        self.cap = 16
        self.leads = <int64_t*>malloc(self.cap * max(nvars, 1) * sizeof(int64_t))
        self.tails = <int64_t*>malloc(self.cap * max(nvars, 1) * sizeof(int64_t))
        self.is_mono = <char*>malloc(self.cap)
        if not self.leads or not self.tails or not self.is_mono:
            raise MemoryError()

    def __dealloc__(self):
        free(self.leads)
        free(self.tails)
        free(self.is_mono)

    def __len__(self):
        return self.size

    cdef void _grow(self) except *:
        cdef Py_ssize_t cap = self.cap * 2
        cdef int n = max(self.nvars, 1)
        cdef int64_t* l = <int64_t*>realloc(self.leads, cap * n * sizeof(int64_t))
        if not l:
            raise MemoryError()
        self.leads = l
        cdef int64_t* t = <int64_t*>realloc(self.tails, cap * n * sizeof(int64_t))
        if not t:
            raise MemoryError()
        self.tails = t
        cdef char* m = <char*>realloc(self.is_mono, cap)
        if not m:
            raise MemoryError()
        self.is_mono = m
        self.cap = cap

    def add(self, lead, tail=None):
        cdef int n = self.nvars
        cdef int j
        if len(lead) != n or (tail is not None and len(tail) != n):
            raise ValueError("exponent length mismatch")
        # validate before touching storage
        cdef list lv = [_checked(v) for v in lead]
        cdef list tv = [0] * n if tail is None else [_checked(v) for v in tail]
        if self.size == self.cap:
            self._grow()
        cdef Py_ssize_t off = self.size * n
        for j in range(n):
            self.leads[off + j] = lv[j]
            self.tails[off + j] = tv[j]
        self.is_mono[self.size] = 1 if tail is None else 0
        self.size += 1
        return self.size - 1

    cdef inline bint _divides(self, Py_ssize_t i, int64_t* mono) nogil:
        cdef int n = self.nvars
        cdef int64_t* lead = self.leads + i * n
        cdef int j
        for j in range(n):
            if lead[j] > mono[j]:
                return False
        return True

    cdef Py_ssize_t _first(self, int64_t* mono, Py_ssize_t skip) nogil:
        cdef Py_ssize_t i
        for i in range(self.size):
            if i != skip and self._divides(i, mono):
                return i
        return -1

    cdef int _load(self, object mono, int64_t* buf) except -1:
        cdef int j
        if len(mono) != self.nvars:
            raise ValueError("exponent length mismatch")
        for j in range(self.nvars):
            buf[j] = _checked(mono[j])
        return 0

    def divisor(self, mono, Py_ssize_t skip=-1):
        cdef int64_t* buf = <int64_t*>malloc(max(self.nvars, 1) * sizeof(int64_t))
        try:
            self._load(mono, buf)
            return self._first(buf, skip)
        finally:
            free(buf)

    def divisors(self, mono):
        cdef int64_t* buf = <int64_t*>malloc(max(self.nvars, 1) * sizeof(int64_t))
        cdef Py_ssize_t i
        try:
            self._load(mono, buf)
            return [i for i in range(self.size) if self._divides(i, buf)]
        finally:
            free(buf)

    def normal_form(self, mono, Py_ssize_t skip=-1, long long max_steps=10000000):
        cdef int n = self.nvars
        cdef int64_t* cur = <int64_t*>malloc(max(n, 1) * sizeof(int64_t))
        cdef Py_ssize_t i, off
        cdef long long steps = 0
        cdef int j
        cdef int64_t v
        try:
            self._load(mono, cur)
            while True:
                i = self._first(cur, skip)
                if i < 0:
                    return tuple([cur[j] for j in range(n)])
                if self.is_mono[i]:
                    return None
                off = i * n
                for j in range(n):
                    v = cur[j] - self.leads[off + j] + self.tails[off + j]
                    if v >= LIMIT:
                        raise OverflowError("exponent outside int64 kernel range")
                    cur[j] = v
                steps += 1
                if steps > max_steps:
                    raise RuntimeError("monomial reduction did not terminate")
        finally:
            free(cur)


cdef void _dfs(int i, int n, int d, int64_t* gens, int64_t* residual,
               char* covered, int64_t* coeffs, list out) except *:
    cdef int c
    cdef int64_t s, bound, q
    cdef bint done = True
    if i == n:
        for c in range(d):
            if residual[c]:
                done = False
                break
        if done:
            out.append(tuple([coeffs[c] for c in range(n)]))
        return
    for c in range(d):
        if residual[c] and not covered[i * d + c]:
            return
    bound = -1
    for c in range(d):
        if gens[i * d + c] > 0:
            q = residual[c] // gens[i * d + c]
            if bound < 0 or q < bound:
                bound = q
    s = 0
    while s <= bound:
        coeffs[i] = s
        _dfs(i + 1, n, d, gens, residual, covered, coeffs, out)
        for c in range(d):
            residual[c] -= gens[i * d + c]
        s += 1
    for c in range(d):
        residual[c] += (bound + 1) * gens[i * d + c]
    coeffs[i] = 0


def representations(gens, m):
    cdef int n = len(gens)
    cdef int d = len(m)
    cdef int i, c
    if any(v < 0 for v in m):
        return []
    cdef int64_t* g = <int64_t*>malloc(max(n * d, 1) * sizeof(int64_t))
    cdef int64_t* residual = <int64_t*>malloc(max(d, 1) * sizeof(int64_t))
    cdef int64_t* coeffs = <int64_t*>malloc(max(n, 1) * sizeof(int64_t))
    cdef char* covered = <char*>malloc(max((n + 1) * d, 1))
    cdef list out = []
    try:
        for i in range(n):
            for c in range(d):
                g[i * d + c] = _checked(gens[i][c])
        for c in range(d):
            residual[c] = _checked(m[c])
            covered[n * d + c] = 0
        for i in range(n):
            coeffs[i] = 0
        for i in range(n - 1, -1, -1):
            for c in range(d):
                covered[i * d + c] = covered[(i + 1) * d + c] or g[i * d + c] > 0
        _dfs(0, n, d, g, residual, covered, coeffs, out)
        return out
    finally:
        free(g)
        free(residual)
        free(coeffs)
        free(covered)
