"""Verifiers that run the extension results end to end and emit reports.

Each verifier checks the hypotheses, computes the conclusion along two
independent routes where possible (construction versus from-scratch
elimination), and records every value it used.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Optional, Sequence

from . import __version__
from .algebra import Binomial, TermOrder, format_binomial, lowest_form
from .hilbert import (hilbert_function, hilbert_series, is_nondecreasing,
                      verify_product_identity, window_values)
from .ideals import (BinomialIdeal, buchberger, is_reduced, minimal_generators,
                     projective_closure_ideal, projective_extension, toric_groebner,
                     toric_ideal)
from .local import (extend_standard_basis, leading_ideal, standard_basis,
                    tangent_cone_ideal)
from .semigroup import (AffineSemigroup, ExtensionSpec, GluingError, InvalidExtension,
                        coprime_component, extension_gluing, lattice_rank, make_extension)


def variable_names(n: int, projective: bool = False) -> list:
    """``x1..xn`` (affine) or ``x0, x1..xn`` (projective layout)."""
    names = [f"x{i}" for i in range(1, n + 1)]
    return ["x0"] + names if projective else names


def object_hash(obj) -> str:
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


@dataclass
class TheoremReport:
    theorem: str
    hypotheses: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    artifacts: dict = field(default_factory=dict)
    tags: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def check(self, name: str, ok) -> bool:
        self.checks[name] = bool(ok)
        return bool(ok)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "passed": self.passed,
            "hypotheses": self.hypotheses,
            "checks": self.checks,
            "artifacts": self.artifacts,
            "hashes": {k: object_hash(v) for k, v in sorted(self.artifacts.items())},
            "tags": list(self.tags),
            "notes": list(self.notes),
            "version": __version__,
        }

    @classmethod
    def from_dict(cls, d) -> "TheoremReport":
        return cls(d["theorem"], dict(d["hypotheses"]), dict(d["checks"]),
                   dict(d["artifacts"]), list(d["tags"]), list(d["notes"]))


@dataclass(frozen=True)
class BettiVector:
    """Betti numbers beta_1..beta_d of a quotient ring (beta_0 = 1 implicit)."""

    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals or any(v < 1 for v in vals):
            raise ValueError(f"malformed Betti vector {vals}")

    @property
    def pd(self) -> int:
        return len(self.values)

    def alternating_sum(self) -> int:
        """sum_{i>=0} (-1)^i beta_i with beta_0 = 1."""
        return 1 + sum((-1) ** i * b for i, b in enumerate(self.values, start=1))


def betti_recurrence(base: BettiVector) -> BettiVector:
    """Betti numbers after gluing on one nonzerodivisor (mapping cone)."""
    b = base.values
    d = len(b)
    out = [b[0] + 1] + [b[i] + b[i - 1] for i in range(1, d)] + [b[d - 1]]
    return BettiVector(tuple(out))


def _resolve(S: AffineSemigroup, ext, report: TheoremReport) -> Optional[ExtensionSpec]:
    if isinstance(ext, ExtensionSpec):
        spec = ext
    else:
        ell, m = ext
        try:
            spec = make_extension(S, ell, m)
        except InvalidExtension as err:
            report.hypotheses.update({"l": ell, "m": list(m) if not isinstance(m, int) else [m]})
            report.check(f"hypothesis: valid extension ({err.guard})", False)
            report.notes.append(str(err))
            return None
    report.hypotheses.update({
        "l": spec.ell, "m": list(spec.m), "delta": spec.delta, "Delta": spec.Delta,
        "delta_witness": list(spec.delta_witness), "Delta_witness": list(spec.Delta_witness),
        "coprime_component": spec.coprime_component,
        "gcd_witness": [spec.ell, spec.m[spec.coprime_component]],
    })
    report.check("hypothesis: valid extension", True)
    return spec


def _fmt(elements, names, order=None):
    return [format_binomial(g, names, order) for g in elements]


def verify_prop_affine(S: AffineSemigroup, ext) -> TheoremReport:
    """Gluing certificate and ``I_ext = I_S + <F>`` through an independent elimination."""
    report = TheoremReport("prop-affine")
    spec = _resolve(S, ext, report)
    if spec is None:
        return report
    n = S.n
    try:
        cert = extension_gluing(spec)
        report.check("gluing certificate (alpha = l*m)", True)
        report.artifacts["gluing"] = cert.to_dict()
    except GluingError as err:
        report.check("gluing certificate (alpha = l*m)", False)
        report.notes.append(str(err))
    order = TermOrder.degrevlex(n + 1)
    scratch = toric_groebner(spec.semigroup, order)
    base = toric_groebner(S, TermOrder.degrevlex(n))
    built = buchberger([g.pad() for g in base.elements] + [spec.F], order)
    report.check("I_ext == I_S + <F>", scratch.canonical() == built.canonical())
    names = variable_names(n + 1)
    report.artifacts["F"] = format_binomial(spec.F, names, order)
    report.artifacts["gb_ext"] = _fmt(scratch.elements, names)
    return report


def verify_prop_bad(S: AffineSemigroup, ext) -> TheoremReport:
    """Projective extension basis ``G ∪ {F}`` against the from-scratch closure ideal."""
    report = TheoremReport("prop-bad")
    spec = _resolve(S, ext, report)
    if spec is None:
        return report
    n = S.n
    names = ["x0"] + variable_names(n + 1)
    base_order = TermOrder.degrevlex(n + 1, tuple(range(1, n + 1)) + (0,))
    Gbar = projective_closure_ideal(toric_ideal(S, minimal=False), base_order)
    scratch_base = toric_groebner(S.projective_closure(), base_order)
    report.check("closure basis: homogenization == elimination", Gbar.canonical() == scratch_base.canonical())
    report.artifacts["gb_closure"] = _fmt(Gbar.elements, names)
    if not spec.projective_good:
        report.check("hypothesis: l >= delta(m)", False)
        order = TermOrder.degrevlex(n + 2, tuple(range(1, n + 2)) + (0,))
        ext_gb = toric_groebner(spec.semigroup.projective_closure(), order)
        _, mu_base = minimal_generators(Gbar.ideal(), base_order)
        _, mu_ext = minimal_generators(ext_gb.ideal(), order)
        report.artifacts.update({
            "gb_closure_ext": _fmt(ext_gb.elements, names),
            "mu_closure": mu_base, "mu_closure_ext": mu_ext,
            "no_minimal_generating_set_extends": mu_ext <= mu_base,
        })
        report.notes.append(
            f"l = {spec.ell} < delta(m) = {spec.delta}; mu = {mu_base} for the closure and "
            f"{mu_ext} for its extension")
        return report
    report.check("hypothesis: l >= delta(m)", True)
    built = projective_extension(Gbar, spec)
    scratch = toric_groebner(spec.semigroup.projective_closure(), built.order)
    report.check("G ∪ {F} == reduced GB of closure of extension", built.canonical() == scratch.canonical())
    report.check("G ∪ {F} reduced", is_reduced(built.elements, built.order))
    F = next(g for g in built.elements if g.plus == (0,) * (n + 1) + (spec.ell,))
    report.artifacts["F"] = format_binomial(F, names, built.order)
    report.artifacts["gb_closure_ext"] = _fmt(built.elements, names)
    return report


def _local_bases(S: AffineSemigroup, spec: ExtensionSpec):
    n = S.n
    order = TermOrder.negdegrevlex(n)
    base = standard_basis(toric_ideal(S, minimal=False), order)
    scratch = standard_basis(toric_ideal(spec.semigroup, minimal=False), order.extend(biggest=True))
    return base, scratch


def verify_prop_stdbasis_and_cone(S: AffineSemigroup, ext, base_tags: Sequence[str] = ()) -> TheoremReport:
    """``G ∪ {F}`` is a minimal standard basis and ``I*_ext = I*_S + <F*>``."""
    report = TheoremReport("thm-cone")
    spec = _resolve(S, ext, report)
    if spec is None:
        return report
    if not report.check("hypothesis: l <= Delta(m)", spec.nice):
        report.notes.append(f"l = {spec.ell} > Delta(m) = {spec.Delta}")
        return report
    n = S.n
    names = variable_names(n + 1)
    base, scratch = _local_bases(S, spec)
    extended = extend_standard_basis(base, spec)
    report.check("G ∪ {F} minimal standard basis", True)
    F_star = lowest_form(spec.F_local)
    branch = "monomial" if F_star.monomial else "binomial"
    expected = "monomial" if spec.ell < spec.Delta else "binomial"
    report.check(f"F* is {expected} (l {'<' if expected == 'monomial' else '='} Delta)", branch == expected)
    cone_built = tangent_cone_ideal(extended)
    cone_scratch = tangent_cone_ideal(scratch)
    report.check("I*_ext == I*_S + <F*>",
                 cone_built.groebner().canonical() == cone_scratch.groebner().canonical())
    base_cone = tangent_cone_ideal(base)
    monic = (F_star.lead(extended.order) == (0,) * n + (spec.ell,)
             and all(g.plus[-1] == 0 and (g.monomial or g.minus[-1] == 0) for g in
                     (h.pad() for h in base_cone.generators)))
    report.check("F* monic in the fresh variable (nonzerodivisor)", monic)
    report.tags.append("cm-transfer-applies")
    for tag in base_tags:
        report.tags.append(f"inherited:{tag}")
    report.artifacts.update({
        "F": format_binomial(spec.F_local, names, extended.order),
        "F_star": format_binomial(F_star, names, extended.order),
        "standard_basis_ext": _fmt(extended.elements, names),
        "tangent_cone_base": _fmt(base_cone.generators, names),
        "tangent_cone_ext": _fmt(cone_built.generators, names),
    })
    return report


def verify_prop_hom(S: AffineSemigroup, ext, base_betti) -> TheoremReport:
    """Homogeneous type transfers exactly to the nice extensions."""
    if not isinstance(base_betti, BettiVector):
        base_betti = BettiVector(tuple(base_betti))
    report = TheoremReport("prop-hom")
    spec = _resolve(S, ext, report)
    if spec is None:
        return report
    report.hypotheses["base_betti"] = list(base_betti.values)
    n = S.n
    ext_order = TermOrder.degrevlex(n + 1)
    mu_base = minimal_generators(toric_ideal(S, minimal=False))[1]
    report.check("mu(I_S) == beta_1(base)", mu_base == base_betti.values[0])
    order = TermOrder.negdegrevlex(n)
    base_cone = tangent_cone_ideal(standard_basis(toric_ideal(S, minimal=False), order))
    mu_cone_base = minimal_generators(base_cone.ideal())[1]
    report.check("mu(I*_S) == beta_1(base) (homogeneous type input)", mu_cone_base == base_betti.values[0])
    scratch = standard_basis(toric_ideal(spec.semigroup, minimal=False), order.extend(biggest=True))
    cone_ext = tangent_cone_ideal(scratch)
    mu_cone_ext = minimal_generators(cone_ext.ideal(), ext_order)[1]
    report.artifacts.update({"mu_I_S": mu_base, "mu_Istar_S": mu_cone_base, "mu_Istar_ext": mu_cone_ext})
    if spec.nice:
        report.hypotheses["direction"] = "forward"
        cone = verify_prop_stdbasis_and_cone(S, spec)
        report.check("I*_ext == I*_S + <F*>", cone.passed)
        local = betti_recurrence(base_betti)
        graded = betti_recurrence(base_betti)
        report.check("beta(K[[S_ext]]) == beta(GR[S_ext])", local == graded)
        mu_ext = minimal_generators(toric_ideal(spec.semigroup, minimal=False))[1]
        report.check("mu(I_ext) == beta_1(base) + 1", mu_ext == local.values[0])
        report.check("mu(I*_ext) == beta_1(base) + 1", mu_cone_ext == graded.values[0])
        report.artifacts.update({"betti_ext": list(local.values), "mu_I_ext": mu_ext})
        report.tags.append("homogeneous-type")
    else:
        report.hypotheses["direction"] = "converse"
        report.check("beta_1 mismatch: mu(I*_ext) != mu(I*_S) + 1", mu_cone_ext != mu_cone_base + 1)
        report.notes.append(f"l = {spec.ell} > Delta(m) = {spec.Delta}: extension is not of homogeneous type")
    return report


def embedding_codimension(S: AffineSemigroup) -> int:
    return S.n - lattice_rank(S)


def verify_thm_hf(S: AffineSemigroup, ext, up_to: int = 12) -> TheoremReport:
    """Hilbert series product identity and transfer of non-decreasing Hilbert functions."""
    report = TheoremReport("thm-hf")
    spec = _resolve(S, ext, report)
    if spec is None:
        return report
    if not report.check("hypothesis: l <= Delta(m)", spec.nice):
        report.notes.append(f"l = {spec.ell} > Delta(m) = {spec.Delta}")
        return report
    n = S.n
    base, scratch = _local_bases(S, spec)
    lm_base = leading_ideal(base)
    lm_ext = leading_ideal(scratch)
    expected_lm = sorted([m + (0,) for m in lm_base] + [(0,) * n + (spec.ell,)], key=lambda e: (sum(e), e))
    report.check("LM(I*_ext) == LM(I*_S) + <x_{n+1}^l>", lm_ext == expected_lm)
    hs_base = hilbert_series(lm_base, n)
    hs_ext = hilbert_series(lm_ext, n + 1)
    report.check("Hilbert series product identity", verify_product_identity(hs_base, spec.ell, hs_ext))
    hf_base = hilbert_function(hs_base, up_to)
    hf_ext = hilbert_function(hs_ext, up_to)
    a = [hf_base(k) for k in range(up_to + 1)]
    b = [hf_ext(k) for k in range(up_to + 1)]
    report.check("window identity b_k = a_k + ... + a_{k-l+1}", b == window_values(a, spec.ell))
    base_ok, base_w = is_nondecreasing(hf_base)
    ext_ok, ext_w = is_nondecreasing(hf_ext)
    report.check("hypothesis: base Hilbert function non-decreasing", base_ok)
    report.check("extension Hilbert function non-decreasing", ext_ok)
    codim_base = embedding_codimension(S)
    codim_ext = embedding_codimension(spec.semigroup)
    report.check("embedding codimension grows by one", codim_ext == codim_base + 1)
    report.check("dimension preserved", lattice_rank(spec.semigroup) == lattice_rank(S) == hs_ext.dim == hs_base.dim)
    report.artifacts.update({
        "series_base": hs_base.to_dict(), "series_ext": hs_ext.to_dict(),
        "hf_base": a, "hf_ext": b,
        "hf_polynomial_base": hf_base.polynomial_str(), "hf_polynomial_ext": hf_ext.polynomial_str(),
        "dimension": hs_ext.dim, "embedding_codimension": codim_ext,
        "violation_base": base_w, "violation_ext": ext_w,
    })
    return report


def next_chain_point(S: AffineSemigroup, ell: int, exclude=()) -> tuple:
    """Smallest point of ``S`` giving a valid nice extension with ``l`` that is not a generator.

    Candidates are sums of ``c`` generators with ``c >= max(l, 2)``, so
    ``Delta >= l`` holds by construction; they are ranked by coordinate
    sum, then lexicographically.
    """
    gens = set(S.generators) | set(exclude)
    for c in range(max(ell, 2), max(ell, 2) + 4):
        points = set()
        for combo in combinations_with_replacement(S.generators, c):
            p = tuple(sum(col) for col in zip(*combo))
            if p not in gens and coprime_component(ell, p) >= 0:
                points.add(p)
        if points:
            return min(points, key=lambda p: (sum(p), p))
    raise InvalidExtension("chain", f"no valid nice extension point found for l = {ell}")


def chain_extensions(S: AffineSemigroup, ell: int, m, depth: int) -> list:
    """``depth`` successive nice extensions; the first uses ``m``, later ones pick points automatically."""
    out = []
    current = S
    for step in range(depth):
        point = m if step == 0 else next_chain_point(current, ell)
        spec = make_extension(current, ell, point)
        if not spec.nice:
            raise InvalidExtension("nice", f"l = {ell} > Delta(m) = {spec.Delta} at chain step {step + 1}")
        out.append(spec)
        current = spec.semigroup
    return out


VERIFIERS = {
    "affine": verify_prop_affine,
    "bad": verify_prop_bad,
    "std": verify_prop_stdbasis_and_cone,
    "cone": verify_prop_stdbasis_and_cone,
    "hf": verify_thm_hf,
}
