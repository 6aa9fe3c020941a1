"""Command-line interface: ``toricext <command> FILE [options]``.

Exit status: 0 success, 1 a verification failed, 2 invalid input,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .algebra import TermOrder, format_binomial
from .documents import (DocumentError, IdealDocument, SemigroupDocument, binomial_to_dict,
                        canonical_json, format_order, parse_any, parse_order, parse_semigroup)
from .hilbert import hilbert_function, hilbert_series, is_nondecreasing
from .ideals import (BinomialIdeal, ProjectiveExtensionError, buchberger, minimal_generators,
                     projective_closure_ideal, toric_groebner, toric_ideal)
from .local import NotNiceError, leading_ideal, standard_basis, tangent_cone_ideal
from .semigroup import Delta, InvalidExtension, delta, make_extension, representations
from .theorems import (VERIFIERS, BettiVector, TheoremReport, betti_recurrence, chain_extensions,
                       embedding_codimension, variable_names, verify_prop_hom)

log = logging.getLogger("toricext")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3
VERIFY_CHOICES = ("all", "affine", "bad", "std", "cone", "hom", "hf")


class UsageError(ValueError):
    pass


# -- helpers ----------------------------------------------------------------

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as err:
        raise UsageError(f"cannot read {path}: {err.strerror}") from None


def _int_list(text: str) -> list:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected integers, got {text!r}") from None


def _fmt(elements, names, order=None) -> list:
    return [format_binomial(g, names, order) for g in elements]


def _semigroup_doc(doc):
    if not isinstance(doc, SemigroupDocument):
        raise UsageError("this command needs a semigroup document")
    return doc


def _ideal_of(doc, order=None):
    """``(ideal, names)`` for either kind of document."""
    if isinstance(doc, IdealDocument):
        return doc.ideal(), list(doc.names)
    S = doc.semigroup()
    return toric_ideal(S, minimal=False), variable_names(S.n)


def report_status(report: TheoremReport) -> str:
    """``pass``, ``hypothesis-unmet`` (a negative case recorded as such) or ``fail``."""
    if report.passed:
        return "pass"
    bad = [k for k, v in report.checks.items() if not v]
    if all(k.startswith("hypothesis") for k in bad):
        return "hypothesis-unmet"
    return "fail"


# -- commands ---------------------------------------------------------------

def cmd_ideal(doc, args) -> dict:
    doc = _semigroup_doc(doc)
    S = doc.semigroup()
    n = S.n
    out = {"command": "ideal", "generators_of_S": [list(g) for g in S.generators]}
    if args.projective:
        names = ["x0"] + variable_names(n)
        default = "degrevlex " + ">".join(names[1:] + ["x0"])
        order = parse_order(args.order or default, names)
        gb = projective_closure_ideal(toric_ideal(S, minimal=False), order)
        gens, mu = minimal_generators(gb.ideal(), order)
        out.update({"names": names, "order": format_order(order, names),
                    "groebner_basis": _fmt(gb.elements, names, order),
                    "generators": _fmt(gens, names, order), "mu": mu})
    else:
        names = variable_names(n)
        order = parse_order(args.order, names)
        gb = toric_groebner(S, order)
        gens, mu = minimal_generators(BinomialIdeal(gb.elements, n, S), order) if gb.elements else ([], 0)
        out.update({"names": names, "order": format_order(order, names),
                    "generators": _fmt(gens, names, order),
                    "binomials": [binomial_to_dict(g) for g in gens], "mu": mu})
    out["zero_ideal"] = out["mu"] == 0
    return out


def cmd_gb(doc, args) -> dict:
    I, names = _ideal_of(doc)
    order = parse_order(args.order or (doc.order if isinstance(doc, IdealDocument) else None), names)
    if order.is_local:
        raise UsageError("gb needs a global order; use stdbasis for local orders")
    gb = buchberger(I, order)
    return {"command": "gb", "names": names, "order": format_order(order, names),
            "groebner_basis": _fmt(gb.elements, names, order),
            "binomials": [binomial_to_dict(g.oriented(order)) for g in gb.elements]}


def _local_order(args, names):
    order = parse_order(args.order or "negdegrevlex", names)
    if not order.is_local:
        raise UsageError("a local order (negdegrevlex) is required")
    return order


def cmd_stdbasis(doc, args) -> dict:
    I, names = _ideal_of(doc)
    order = _local_order(args, names)
    G = standard_basis(I, order)
    return {"command": "stdbasis", "names": names, "order": format_order(order, names),
            "standard_basis": _fmt(G.elements, names, order),
            "leading_ideal": [list(m) for m in leading_ideal(G)]}


def cmd_tangent_cone(doc, args) -> dict:
    I, names = _ideal_of(doc)
    order = _local_order(args, names)
    cone = tangent_cone_ideal(standard_basis(I, order))
    return {"command": "tangent-cone", "names": names,
            "generators": _fmt(cone.generators, names, TermOrder.degrevlex(len(names))),
            "monomial_ideal": cone.is_monomial()}


def cmd_hilbert(doc, args) -> dict:
    I, names = _ideal_of(doc)
    n = len(names)
    order = _local_order(args, names)
    lm = leading_ideal(standard_basis(I, order)) if not I.is_zero() else []
    hs = hilbert_series(lm, n)
    hf = hilbert_function(hs, args.up_to)
    ok, witness = is_nondecreasing(hf)
    return {"command": "hilbert", "names": names,
            "leading_ideal": [list(m) for m in lm],
            "series": hs.to_dict(), "series_text": hs.format(reduced=False),
            "reduced_text": hs.format(reduced=True), "dimension": hs.dim,
            "hf": [hf(k) for k in range(args.up_to + 1)],
            "hilbert_polynomial": hf.polynomial_str(), "tail_start": hf.tail_start,
            "nondecreasing": ok, "violation": witness}


def cmd_delta(doc, args) -> dict:
    S = _semigroup_doc(doc).semigroup()
    m = _int_list(args.m)
    if len(m) != S.dim:
        raise UsageError(f"m must have {S.dim} entries")
    reps = representations(S, m)
    if not reps:
        raise UsageError(f"m = {tuple(m)} is not in the semigroup")
    lo, w_lo = delta(S, m)
    hi, w_hi = Delta(S, m)
    return {"command": "delta", "m": m, "delta": lo, "Delta": hi,
            "delta_witness": list(w_lo), "Delta_witness": list(w_hi),
            "representations": len(reps)}


def _run_verifiers(S, spec, which, betti, tags, up_to=12) -> list:
    names = ["affine", "bad", "cone", "hf", "hom"] if "all" in which else list(dict.fromkeys(which))
    reports = []
    for name in names:
        if name == "hom":
            if betti is None:
                if "all" in which:
                    continue
                raise UsageError("--verify hom needs --betti")
            reports.append(verify_prop_hom(S, spec, betti))
        elif name in ("std", "cone"):
            reports.append(VERIFIERS[name](S, spec, base_tags=tags))
        elif name == "hf":
            reports.append(VERIFIERS[name](S, spec, up_to=up_to))
        else:
            reports.append(VERIFIERS[name](S, spec))
    return reports


def _extension_summary(spec) -> dict:
    n = spec.n
    names = variable_names(n + 1)
    d = spec.to_dict()
    d.update({"F": format_binomial(spec.F, names, TermOrder.degrevlex(n + 1)),
              "embedding_codimension": embedding_codimension(spec.semigroup),
              "generators_ext": [list(g) for g in spec.semigroup.generators]})
    return d


def _extend(S, ell, m, which, betti, tags, chain) -> dict:
    if chain:
        specs = chain_extensions(S, ell, m, chain)
        which = which or ["hf"]
    else:
        specs = [make_extension(S, ell, m)]
    steps = []
    current = S
    for spec in specs:
        reports = _run_verifiers(current, spec, which, betti, tags) if which else []
        steps.append({"extension": _extension_summary(spec),
                      "reports": [r.to_dict() for r in reports],
                      "status": [report_status(r) for r in reports]})
        current = spec.semigroup
        if betti is not None:
            betti = betti_recurrence(BettiVector(tuple(betti))).values
    return {"command": "extend", "steps": steps}


def cmd_extend(doc, args) -> dict:
    S = _semigroup_doc(doc).semigroup()
    betti = _int_list(args.betti) if args.betti else None
    tags = args.tags.split(",") if args.tags else []
    return _extend(S, args.l, _int_list(args.m), args.verify, betti, tags, args.chain)


def _job(path: str) -> dict:
    """One batch job: read, run, and fold errors into the result."""
    try:
        doc = parse_semigroup(_read(path))
        extra = doc.extra
        if "l" not in extra or "m" not in extra:
            raise UsageError("job documents need 'l' and 'm'")
        m = extra["m"] if isinstance(extra["m"], list) else [extra["m"]]
        res = _extend(doc.semigroup(), extra["l"], m, extra.get("verify", ["all"]),
                      extra.get("betti"), extra.get("tags", []), 0)
        res["exit"] = _exit_for(res)
    except (DocumentError, UsageError, InvalidExtension, NotNiceError, ProjectiveExtensionError) as err:
        res = {"error": str(err), "exit": EXIT_INPUT}
        if isinstance(err, InvalidExtension):
            res["guard"] = err.guard
    except Exception as err:  # noqa: BLE001 - reported as internal error
        res = {"error": f"{type(err).__name__}: {err}", "exit": EXIT_INTERNAL}
    res["input"] = path
    return res


def cmd_verify(args) -> dict:
    if args.jobs > 1 and len(args.files) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_job, args.files))
    else:
        results = [_job(p) for p in args.files]
    return {"command": "verify", "results": results}


COMMANDS = {
    "ideal": cmd_ideal, "gb": cmd_gb, "stdbasis": cmd_stdbasis,
    "tangent-cone": cmd_tangent_cone, "hilbert": cmd_hilbert,
    "delta": cmd_delta, "extend": cmd_extend,
}


def _exit_for(result: dict) -> int:
    if result.get("command") == "verify":
        return max((r["exit"] for r in result["results"]), default=EXIT_OK)
    if result.get("command") == "extend":
        statuses = [s for step in result["steps"] for s in step["status"]]
        return EXIT_FAIL if "fail" in statuses else EXIT_OK
    return EXIT_OK


# -- caching ----------------------------------------------------------------

def _cache_dir(args):
    d = args.cache_dir or os.environ.get("TORICEXT_CACHE_DIR")
    return Path(d) if d else None


def cache_key(doc, args) -> str:
    options = {k: v for k, v in sorted(vars(args).items())
               if k not in ("file", "json", "cache_dir", "func", "verbose")}
    blob = json.dumps({"input": doc.to_dict(), "options": options, "version": __version__},
                      sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def _cached(doc, args, fn) -> dict:
    root = _cache_dir(args)
    if root is None:
        return fn(doc, args)
    path = root / f"{cache_key(doc, args)}.json"
    if path.exists():
        log.debug("cache hit %s", path.name)
        return json.loads(path.read_text())
    result = fn(doc, args)
    root.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(canonical_json(result))
    tmp.replace(path)
    return result


# -- rendering --------------------------------------------------------------

def _render_report(r: dict, status: str) -> list:
    lines = [f"  [{status}] {r['theorem']}"]
    for k, v in r["checks"].items():
        lines.append(f"    {'ok  ' if v else 'FAIL'} {k}")
    for note in r["notes"]:
        lines.append(f"    note: {note}")
    for key in ("F", "F_star", "hf_ext", "hf_polynomial_ext", "mu_closure", "mu_closure_ext", "betti_ext"):
        if key in r["artifacts"]:
            lines.append(f"    {key}: {r['artifacts'][key]}")
    if r["tags"]:
        lines.append(f"    tags: {', '.join(r['tags'])}")
    return lines


def render_text(res: dict) -> str:
    cmd = res["command"]
    out = []
    if cmd == "ideal":
        if res["zero_ideal"]:
            out.append("zero ideal (the semigroup is free on its generators)")
        else:
            out.append(f"order: {res['order']}")
            if "groebner_basis" in res:
                out.append("reduced Groebner basis of the closure ideal:")
                out += [f"  {g}" for g in res["groebner_basis"]]
            out.append(f"minimal generators (mu = {res['mu']}):")
            out += [f"  {g}" for g in res["generators"]]
    elif cmd in ("gb", "stdbasis"):
        key = "groebner_basis" if cmd == "gb" else "standard_basis"
        out.append(f"order: {res['order']}")
        out += [f"  {g}" for g in res[key]] or ["  (zero ideal)"]
    elif cmd == "tangent-cone":
        kind = "monomial" if res["monomial_ideal"] else "binomial"
        out.append(f"tangent cone ideal ({kind} generators):")
        out += [f"  {g}" for g in res["generators"]] or ["  (zero ideal)"]
    elif cmd == "hilbert":
        out.append(f"HS(t) = {res['series_text']}")
        out.append(f"      = {res['reduced_text']}")
        out.append(f"dimension: {res['dimension']}")
        out.append("HF: " + ", ".join(map(str, res["hf"])))
        out.append(f"HF(k) = {res['hilbert_polynomial']} for k >= {res['tail_start']}")
        verdict = "yes" if res["nondecreasing"] else f"no (first drop at k = {res['violation']})"
        out.append(f"non-decreasing: {verdict}")
    elif cmd == "delta":
        out.append(f"m = {res['m']}: {res['representations']} representation(s)")
        out.append(f"delta = {res['delta']} via {res['delta_witness']}")
        out.append(f"Delta = {res['Delta']} via {res['Delta_witness']}")
    elif cmd == "extend":
        for i, step in enumerate(res["steps"], start=1):
            e = step["extension"]
            out.append(f"extension {i}: l = {e['l']}, m = {e['m']}")
            out.append(f"  delta = {e['delta']}, Delta = {e['Delta']}, nice = {e['nice']}, "
                       f"embedding codimension = {e['embedding_codimension']}")
            out.append(f"  F = {e['F']}")
            for r, s in zip(step["reports"], step["status"]):
                out += _render_report(r, s)
    elif cmd == "verify":
        for r in res["results"]:
            if "error" in r:
                out.append(f"{r['input']}: error: {r['error']}")
                continue
            statuses = [s for step in r["steps"] for s in step["status"]]
            out.append(f"{r['input']}: " + ", ".join(
                f"{rep['theorem']}={s}" for step in r["steps"] for rep, s in zip(step["reports"], step["status"])))
            if not statuses:
                out.append("  (no verifiers ran)")
    return "\n".join(out) + "\n"


# -- entry point ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", help="term order, e.g. 'degrevlex x1>x2>x3>x0' or 'negdegrevlex'")
    common.add_argument("--json", action="store_true", help="print canonical JSON")
    common.add_argument("--cache-dir", help="result cache directory (default $TORICEXT_CACHE_DIR)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="toricext", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"toricext {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("file", help="document path, or - for stdin")
        return sp

    sp = add("ideal", "toric ideal of a semigroup")
    sp.add_argument("--projective", action="store_true", help="projective closure ideal")
    add("gb", "reduced Groebner basis")
    add("stdbasis", "standard basis under a local order")
    add("tangent-cone", "tangent cone ideal")
    sp = add("hilbert", "Hilbert series and function of the associated graded ring")
    sp.add_argument("--up-to", type=int, default=10)
    sp = add("delta", "delta(m) and Delta(m) with witnesses")
    sp.add_argument("--m", required=True)
    sp = add("extend", "build an extension and optionally verify it")
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--m", required=True)
    sp.add_argument("--verify", action="append", choices=VERIFY_CHOICES)
    sp.add_argument("--chain", type=int, default=0, help="number of successive extensions")
    sp.add_argument("--betti", help="Betti numbers of the base ring, e.g. 3,2")
    sp.add_argument("--tags", help="comma-separated properties of the base (inherited by thm-cone)")
    sp = sub.add_parser("verify", parents=[common], help="batch-verify extension job documents")
    sp.add_argument("files", nargs="+")
    sp.add_argument("--jobs", type=int, default=1)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "verify":
            result = cmd_verify(args)
        else:
            doc = parse_any(_read(args.file))
            result = _cached(doc, args, COMMANDS[args.command])
    except InvalidExtension as err:
        print(f"error: invalid extension, guard '{err.guard}' violated: {err}", file=sys.stderr)
        return EXIT_INPUT
    except (DocumentError, UsageError, NotNiceError, ProjectiveExtensionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as err:  # noqa: BLE001
        log.debug("internal error", exc_info=True)
        print(f"internal error: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(canonical_json(result) if args.json else render_text(result))
    return _exit_for(result)


if __name__ == "__main__":
    sys.exit(main())
