"""Text and JSON documents for semigroups, ideals and extension jobs.

Text grammar (one ``key: value`` per line, ``#`` starts a comment)::

    dim: 2
    generators: [3, 0] [2, 1] [1, 2]
    generators: [0, 3]              # repeated keys append
    labels: a b c d                 # optional

    type: ideal
    names: x0 x1 x2 x3
    order: degrevlex x1>x2>x3>x0    # optional
    generator: x1^4 - x0^3*x2       # or [0,4,0,0] - [3,0,1,0]
    generator: x1*x2                # a monomial

Extension jobs are semigroup documents with extra keys ``l``, ``m``
(an array, or a bare integer when dim is 1) and optionally ``verify``,
``betti`` and ``tags``.  For ``dim: 1`` generators may be bare integers.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Optional

from .algebra import Binomial, TermOrder
from .ideals import BinomialIdeal
from .semigroup import AffineSemigroup


class DocumentError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, key: Optional[str] = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if key is not None:
            where.append(f"field {key!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.line = line
        self.key = key


_ARRAY = re.compile(r"\[([^\]]*)\]")


def _int(text, line, key) -> int:
    try:
        return int(text)
    except ValueError:
        raise DocumentError(f"expected an integer, got {text!r}", line, key) from None


def _arrays(text: str, line: int, key: str) -> list:
    text = text.strip()
    if "[" not in text:
        return [[_int(t, line, key)] for t in text.replace(",", " ").split()]
    out = []
    rest = _ARRAY.sub("", text).strip(" ,")
    if rest:
        raise DocumentError(f"unexpected text {rest!r}", line, key)
    for m in _ARRAY.finditer(text):
        out.append([_int(t, line, key) for t in m.group(1).replace(",", " ").split()])
    return out


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if ":" not in body:
            raise DocumentError("expected 'key: value'", no)
        key, value = body.split(":", 1)
        yield no, key.strip().lower(), value.strip()


@dataclass
class SemigroupDocument:
    dim: int
    generators: list
    labels: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def semigroup(self) -> AffineSemigroup:
        try:
            return AffineSemigroup(tuple(tuple(g) for g in self.generators))
        except ValueError as err:
            raise DocumentError(str(err), key="generators") from None

    def to_dict(self) -> dict:
        d = {"dim": self.dim, "generators": [list(g) for g in self.generators]}
        if self.labels:
            d["labels"] = list(self.labels)
        d.update(self.extra)
        return d

    def to_text(self) -> str:
        out = [f"dim: {self.dim}",
               "generators: " + " ".join("[" + ", ".join(map(str, g)) + "]" for g in self.generators)]
        if self.labels:
            out.append("labels: " + " ".join(self.labels))
        for k, v in self.extra.items():
            if isinstance(v, list):
                v = "[" + ", ".join(map(str, v)) + "]" if k == "m" else " ".join(map(str, v))
            out.append(f"{k}: {v}")
        return "\n".join(out) + "\n"


def _validate_semigroup(dim, gens, labels, line_of):
    if dim is None:
        raise DocumentError("missing 'dim'", key="dim")
    if dim < 1:
        raise DocumentError("dim must be positive", line_of.get("dim"), "dim")
    if not gens:
        raise DocumentError("no generators", key="generators")
    for g in gens:
        if len(g) != dim:
            raise DocumentError(f"generator {g} has length {len(g)}, expected {dim}",
                                line_of.get("generators"), "generators")
        if any(v < 0 for v in g):
            raise DocumentError(f"generator {g} has a negative entry", line_of.get("generators"), "generators")
        if not any(g):
            raise DocumentError(f"generator {g} is zero", line_of.get("generators"), "generators")
    if labels and len(labels) != len(gens):
        raise DocumentError("labels and generators differ in number", line_of.get("labels"), "labels")


EXTRA_KEYS = ("l", "m", "verify", "betti", "tags")


def parse_semigroup(text: str) -> SemigroupDocument:
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as err:
            raise DocumentError(f"invalid JSON: {err.msg}", err.lineno) from None
        return semigroup_from_dict(data)
    dim, gens, labels, extra, line_of = None, [], [], {}, {}
    for no, key, value in _lines(text):
        line_of.setdefault(key, no)
        if key == "dim":
            dim = _int(value, no, key)
        elif key in ("generators", "generator"):
            line_of.setdefault("generators", no)
            gens.extend(_arrays(value, no, "generators"))
        elif key == "labels":
            labels.extend(value.split())
        elif key == "l":
            extra["l"] = _int(value, no, key)
        elif key == "m":
            arr = _arrays(value, no, key)
            extra["m"] = [v for a in arr for v in a] if "[" not in value else arr[0]
        elif key == "betti":
            extra["betti"] = [_int(t, no, key) for t in value.replace(",", " ").split()]
        elif key in ("verify", "tags"):
            extra[key] = value.replace(",", " ").split()
        else:
            raise DocumentError(f"unknown key {key!r}", no, key)
    _validate_semigroup(dim, gens, labels, line_of)
    return SemigroupDocument(dim, gens, labels, extra)


def semigroup_from_dict(data: dict) -> SemigroupDocument:
    if not isinstance(data, dict):
        raise DocumentError("document must be an object")
    try:
        dim = int(data["dim"])
        gens = [[int(v) for v in g] for g in data["generators"]]
    except KeyError as err:
        raise DocumentError(f"missing {err.args[0]!r}", key=err.args[0]) from None
    except (TypeError, ValueError):
        raise DocumentError("generators must be integer arrays", key="generators") from None
    labels = list(data.get("labels", []))
    _validate_semigroup(dim, gens, labels, {})
    extra = {k: data[k] for k in EXTRA_KEYS if k in data}
    return SemigroupDocument(dim, gens, labels, extra)


# -- ideals -----------------------------------------------------------------

_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")


def parse_monomial(text: str, names, line=None, key="generator") -> tuple:
    e = [0] * len(names)
    index = {nm: i for i, nm in enumerate(names)}
    text = text.strip()
    if text == "1":
        return tuple(e)
    for factor in text.split("*"):
        m = _FACTOR.match(factor.strip())
        if not m or m.group(1) not in index:
            raise DocumentError(f"bad factor {factor.strip()!r}", line, key)
        e[index[m.group(1)]] += int(m.group(2) or 1)
    return tuple(e)


def parse_generator(text: str, names, line=None) -> Optional[Binomial]:
    n = len(names)
    if "[" in text:
        parts = [p.strip() for p in text.split("-")]
        arrs = [_arrays(p, line, "generator") for p in parts]
        if len(parts) > 2 or any(len(a) != 1 or len(a[0]) != n for a in arrs):
            raise DocumentError(f"expected [a] - [b] or [a] with {n} entries", line, "generator")
        if len(arrs) == 1:
            return Binomial.mono(arrs[0][0])
        return Binomial.make(arrs[0][0], arrs[1][0])
    parts = text.split(" - ")
    if len(parts) == 1 and "-" not in text:
        return Binomial.mono(parse_monomial(text, names, line))
    if len(parts) != 2:
        raise DocumentError(f"expected 'monomial - monomial', got {text!r}", line, "generator")
    return Binomial.make(parse_monomial(parts[0], names, line), parse_monomial(parts[1], names, line))


def parse_order(text: Optional[str], names) -> TermOrder:
    """``"degrevlex"``, ``"lex x2>x1"``, ``"negdegrevlex x4>x1>x2>x3"``..."""
    n = len(names)
    if not text:
        return TermOrder.degrevlex(n)
    bits = text.replace(":", " ").split()
    kind = bits[0].lower()
    aliases = {"dp": "degrevlex", "ds": "negdegrevlex", "lp": "lex", "local": "negdegrevlex"}
    kind = aliases.get(kind, kind)
    priority = None
    if len(bits) > 1:
        index = {nm: i for i, nm in enumerate(names)}
        chain = "".join(bits[1:]).split(">")
        try:
            priority = tuple(index[v] for v in chain)
        except KeyError as err:
            raise DocumentError(f"unknown variable {err.args[0]!r} in order", key="order") from None
        if sorted(priority) != list(range(n)):
            raise DocumentError("order priority must list every variable once", key="order")
    if kind not in ("degrevlex", "lex", "negdegrevlex"):
        raise DocumentError(f"unknown order {kind!r}", key="order")
    return TermOrder._make(kind, n, priority)


def format_order(order: TermOrder, names) -> str:
    return f"{order.kind} " + ">".join(names[i] for i in order.priority)


@dataclass
class IdealDocument:
    names: list
    generators: list
    order: Optional[str] = None

    def ideal(self) -> BinomialIdeal:
        return BinomialIdeal(tuple(self.generators), len(self.names))

    def to_dict(self) -> dict:
        d = {"type": "ideal", "names": list(self.names),
             "generators": [binomial_to_dict(g) for g in self.generators]}
        if self.order:
            d["order"] = self.order
        return d

    def to_text(self) -> str:
        out = ["type: ideal", "names: " + " ".join(self.names)]
        if self.order:
            out.append(f"order: {self.order}")
        for g in self.generators:
            if g.monomial:
                out.append("generator: [" + ", ".join(map(str, g.plus)) + "]")
            else:
                out.append("generator: [" + ", ".join(map(str, g.plus)) + "] - ["
                           + ", ".join(map(str, g.minus)) + "]")
        return "\n".join(out) + "\n"


def binomial_to_dict(g: Binomial) -> dict:
    if g.monomial:
        return {"monomial": list(g.plus)}
    return {"plus": list(g.plus), "minus": list(g.minus)}


def binomial_from_dict(d: dict) -> Optional[Binomial]:
    if "monomial" in d:
        return Binomial.mono(d["monomial"])
    return Binomial.make(d["plus"], d["minus"])


def parse_ideal(text: str) -> IdealDocument:
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as err:
            raise DocumentError(f"invalid JSON: {err.msg}", err.lineno) from None
        return ideal_from_dict(data)
    names, raw, order = None, [], None
    for no, key, value in _lines(text):
        if key == "type":
            if value != "ideal":
                raise DocumentError(f"unexpected type {value!r}", no, key)
        elif key == "names":
            names = value.split()
        elif key == "nvars":
            names = names or [f"x{i}" for i in range(1, _int(value, no, key) + 1)]
        elif key == "order":
            order = value
        elif key in ("generator", "generators"):
            raw.append((no, value))
        else:
            raise DocumentError(f"unknown key {key!r}", no, key)
    if not names:
        raise DocumentError("missing 'names'", key="names")
    gens = [g for no, v in raw if (g := parse_generator(v, names, no)) is not None]
    if order:
        parse_order(order, names)
    return IdealDocument(names, gens, order)


def ideal_from_dict(data: dict) -> IdealDocument:
    try:
        names = list(data["names"])
        gens = [binomial_from_dict(g) for g in data["generators"]]
    except (KeyError, TypeError) as err:
        raise DocumentError(f"malformed ideal document ({err})") from None
    if any(g is not None and g.nvars != len(names) for g in gens):
        raise DocumentError("generator length differs from names", key="generators")
    return IdealDocument(names, [g for g in gens if g is not None], data.get("order"))


def parse_any(text: str):
    """Semigroup or ideal document, whichever ``text`` is."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as err:
            raise DocumentError(f"invalid JSON: {err.msg}", err.lineno) from None
        return ideal_from_dict(data) if data.get("type") == "ideal" else semigroup_from_dict(data)
    for _, key, value in _lines(text):
        if key == "type" and value == "ideal":
            return parse_ideal(text)
        if key in ("names", "nvars", "generator") :
            return parse_ideal(text)
    return parse_semigroup(text)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
