"""Pure-Python hot kernels.

Reference implementation of the routines compiled in ``_ckernels.pyx``.
Both modules expose the same names and must return identical results.
"""

BACKEND = "python"


class BinomialReducer:
    """Growable set of reducers ``lead -> tail`` (``tail=None`` for monomials).

    ``normal_form`` rewrites a monomial with the first reducer whose lead
    divides it until none applies.  For a global order every rewrite makes
    the monomial strictly smaller, so the loop terminates; ``max_steps``
    guards misuse with local orders.
    """

    def __init__(self, nvars):
        self.nvars = nvars
        self.leads = []
        self.tails = []

    def __len__(self):
        return len(self.leads)

    def add(self, lead, tail=None):
        if len(lead) != self.nvars or (tail is not None and len(tail) != self.nvars):
            raise ValueError("exponent length mismatch")
        self.leads.append(tuple(lead))
        self.tails.append(None if tail is None else tuple(tail))
        return len(self.leads) - 1

    def divisor(self, mono, skip=-1):
        for i, lead in enumerate(self.leads):
            if i != skip and all(x <= y for x, y in zip(lead, mono)):
                return i
        return -1

    def divisors(self, mono):
        return [i for i, lead in enumerate(self.leads)
                if all(x <= y for x, y in zip(lead, mono))]

    def normal_form(self, mono, skip=-1, max_steps=10_000_000):
        cur = tuple(mono)
        leads, tails = self.leads, self.tails
        steps = 0
        while True:
            for i, lead in enumerate(leads):
                if i != skip and all(x <= y for x, y in zip(lead, cur)):
                    break
            else:
                return cur
            tail = tails[i]
            if tail is None:
                return None
            cur = tuple(c - a + b for c, a, b in zip(cur, lead, tail))
            steps += 1
            if steps > max_steps:
                raise RuntimeError("monomial reduction did not terminate")


def representations(gens, m):
    """All coefficient vectors ``s >= 0`` with ``sum s_i gens[i] == m``.

    Returned in increasing lexicographic order.
    """
    n = len(gens)
    d = len(m)
    if any(v < 0 for v in m):
        return []
    # covered[i][c]: some generator with index >= i is positive at coordinate c
    covered = [[False] * d for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        covered[i] = [covered[i + 1][c] or gens[i][c] > 0 for c in range(d)]
    out = []
    coeffs = [0] * n
    residual = list(m)

    def dfs(i):
        if i == n:
            if not any(residual):
                out.append(tuple(coeffs))
            return
        cov = covered[i]
        for c in range(d):
            if residual[c] and not cov[c]:
                return
        g = gens[i]
        bound = min(residual[c] // g[c] for c in range(d) if g[c] > 0)
        for s in range(bound + 1):
            coeffs[i] = s
            dfs(i + 1)
            for c in range(d):
                residual[c] -= g[c]
        for c in range(d):
            residual[c] += (bound + 1) * g[c]
        coeffs[i] = 0

    dfs(0)
    return out
