"""A YAML text format for categories, bicategories, enriched categories and weights.

A document is a mapping from block kinds (``monoidal``, ``category``,
``bicategory``, ``enriched``, ``functor``, ``nat``, ``weight``) to named
blocks. Blocks refer to each other by name. Tables are lists of rows whose
last entry is the value, so identifiers may be any scalar or nested list.
Lists read back as tuples; ``{fn: [dom, cod, images]}`` is a function of
finite sets, ``{over: [src, tgt, onecell, leg]}`` a slice 1-cell and
``{arrow: [src, tgt, cell]}`` a slice 2-cell.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any

import yaml

from .bicat import (Bicategory, ExplicitBicategory, Fn, MonoidalCategory, SigmaFinSet, chaotic, free_quantaloid,
                    from_monoidal, monoidal_poset, terminal_bicategory, validate_bicategory)
from .connect import FinTwoCategory, Weight, locally_chaotic, locally_discrete, strict_two_category, weight
from .enriched import (BCategory, BFunctor, BNatTrans, encode_category, validate_bcategory, validate_bfunctor,
                       validate_bnat)
from .fincat import FinCategory, Functor, NatTransformation, validate_category, validate_functor, validate_nat
from .slice import SliceArrow, SliceBicategory, SliceCell

KINDS = ("monoidal", "category", "bicategory", "enriched", "functor", "nat", "weight")


class DocumentError(ValueError):
    """A syntax, reference or validation problem, with a position when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None, kind: str = "input"):
        self.line, self.column, self.kind = line, column, kind
        where = f"line {line}" + (f", column {column}" if column is not None else "") + ": " if line else ""
        super().__init__(where + message)


@dataclass
class Document:
    blocks: dict = field(default_factory=lambda: {k: {} for k in KINDS})

    def add(self, kind: str, name: str, obj) -> "Document":
        if kind not in KINDS:
            raise KeyError(kind)
        self.blocks.setdefault(kind, {})[name] = obj
        return self

    def get(self, kind: str, name: str | None = None):
        table = self.blocks.get(kind, {})
        if name is None:
            if not table:
                raise KeyError(f"no {kind} block")
            return next(iter(table.values()))
        return table[name]

    def names(self, kind: str) -> list:
        return list(self.blocks.get(kind, {}))

    def __iter__(self):
        for kind in KINDS:
            for name, obj in self.blocks.get(kind, {}).items():
                yield kind, name, obj


# -- values ------------------------------------------------------------------------------

def to_value(raw):
    if isinstance(raw, list):
        return tuple(to_value(x) for x in raw)
    if isinstance(raw, dict) and len(raw) == 1:
        (tag, body), = raw.items()
        if tag == "fn":
            d, c, i = (to_value(x) for x in body)
            return Fn(d, c, i)
        if tag == "over":
            return SliceCell(*(to_value(x) for x in body))
        if tag == "arrow":
            return SliceArrow(*(to_value(x) for x in body))
    if isinstance(raw, dict):
        raise ValueError(f"unexpected mapping {raw!r}")
    return raw


def from_value(v):
    if isinstance(v, tuple):
        return [from_value(x) for x in v]
    if isinstance(v, Fn):
        return {"fn": [from_value(v.dom), from_value(v.cod), from_value(v.images)]}
    if isinstance(v, SliceCell):
        return {"over": [from_value(v.src), from_value(v.tgt), from_value(v.onecell), from_value(v.leg)]}
    if isinstance(v, SliceArrow):
        return {"arrow": [from_value(v.src), from_value(v.tgt), from_value(v.cell)]}
    if isinstance(v, (str, int, bool)) or v is None:
        return v
    raise TypeError(f"cannot write {v!r}")


def _rows(raw, width: int) -> list[tuple]:
    out = []
    for row in raw or []:
        if not isinstance(row, list) or len(row) != width:
            raise ValueError(f"expected rows of length {width}, got {row!r}")
        out.append(tuple(to_value(x) for x in row))
    return out


def _table(raw, width: int) -> dict:
    out = {}
    for row in _rows(raw, width):
        key = row[0] if width == 2 else row[:-1]
        out[key] = row[-1]
    return out


def _write_table(d, flat: bool = False) -> list:
    rows = []
    for k, v in d.items():
        key = list(k) if (isinstance(k, tuple) and not flat) else [k]
        rows.append([from_value(x) for x in key] + [from_value(v)])
    return rows


# -- reading ---------------------------------------------------------------------------

def _positions(text: str) -> dict:
    """Line numbers of each ``kind/name`` block start."""
    try:
        node = yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.YAMLError:
        return {}
    out = {}
    if not isinstance(node, yaml.MappingNode):
        return out
    for k, v in node.value:
        if isinstance(v, yaml.MappingNode):
            for nk, _ in v.value:
                out[(k.value, nk.value)] = nk.start_mark.line + 1
    return out


class _Reader:
    def __init__(self, raw: dict, positions: dict, validate: bool):
        self.raw, self.pos, self.validate = raw, positions, validate
        self.doc = Document()
        self.busy: set = set()

    def fail(self, kind, name, msg, what="input"):
        raise DocumentError(f"{kind} {name!r}: {msg}", self.pos.get((kind, str(name))), kind=what)

    def ref(self, kind: str, name, by: tuple):
        table = self.doc.blocks[kind]
        if name in table:
            return table[name]
        if name not in (self.raw.get(kind) or {}):
            self.fail(by[0], by[1], f"refers to undefined {kind} {name!r}", "reference")
        if (kind, name) in self.busy:
            self.fail(by[0], by[1], f"circular reference to {kind} {name!r}", "reference")
        self.busy.add((kind, name))
        obj = self.build(kind, name, self.raw[kind][name])
        self.busy.discard((kind, name))
        self.doc.add(kind, name, obj)
        return obj

    def check(self, kind, name, problems):
        if self.validate and problems:
            self.fail(kind, name, "; ".join(problems[:5]), "validation")

    def run(self) -> Document:
        if not isinstance(self.raw, dict):
            raise DocumentError("document must be a mapping of blocks")
        for kind in self.raw:
            if kind not in KINDS:
                raise DocumentError(f"unknown block kind {kind!r}", self.pos.get((kind, None)))
        for kind in KINDS:
            for name in (self.raw.get(kind) or {}):
                self.ref(kind, name, (kind, name))
        # keep the order blocks were written in
        ordered = Document()
        for kind in KINDS:
            for name in (self.raw.get(kind) or {}):
                ordered.add(kind, name, self.doc.blocks[kind][name])
        return ordered

    def build(self, kind, name, body):
        try:
            return getattr(self, f"_{kind}")(name, body)
        except DocumentError:
            raise
        except (KeyError, ValueError, TypeError) as e:
            self.fail(kind, name, str(e).strip("'\""))

    # block readers

    def _category(self, name, body) -> FinCategory:
        C = _category_body(body, name)
        self.check("category", name, validate_category(C))
        return C

    def _monoidal(self, name, body) -> MonoidalCategory:
        poset = body["poset"]
        elements = to_value(poset["elements"])
        leq = set(_rows(poset.get("leq"), 2)) | {(a, a) for a in elements}
        ten = _table(body["tensor"], 3)
        return monoidal_poset(elements, lambda a, b: (a, b) in leq, lambda a, b: ten[(a, b)],
                              to_value(body["unit"]), name)

    def _bicategory(self, name, body) -> Bicategory:
        by = ("bicategory", name)
        if "builtin" in body:
            key = body["builtin"]
            if key == "sigma-finset":
                return SigmaFinSet()
            if key == "terminal":
                return terminal_bicategory()
            raise ValueError(f"unknown builtin {key!r}")
        if "monoidal" in body:
            return from_monoidal(self.ref("monoidal", body["monoidal"], by), obj=to_value(body.get("object", "*")))
        if "chaotic" in body:
            return chaotic(to_value(body["chaotic"]), name)
        if "free_quantaloid" in body:
            return free_quantaloid(self.ref("category", body["free_quantaloid"], by))
        if "slice" in body:
            base = self.ref("bicategory", body["slice"]["base"], by)
            return SliceBicategory(base, self.ref("enriched", body["slice"]["over"], by))
        objects = to_value(body["objects"])
        homs = {(to_value(a), to_value(b)): self._inline_category(c, by) for a, b, c in body["homs"]}
        B = ExplicitBicategory(objects, homs, _table(body["unit"], 2), _table(body["comp1"], 3),
                               _table(body["comp2"], 3), _table(body["assoc"], 4), _table(body["lunit"], 2),
                               _table(body["runit"], 2), name)
        self.check("bicategory", name, validate_bicategory(B))
        return B

    def _inline_category(self, c, by):
        return self.ref("category", c, by) if isinstance(c, str) else _category_body(c, "")

    def _enriched(self, name, body) -> BCategory:
        by = ("enriched", name)
        B = self.ref("bicategory", body["base"], by)
        if "encode" in body:
            if not isinstance(B, SigmaFinSet):
                raise ValueError("encode needs a base of finite sets")
            X = encode_category(self.ref("category", body["encode"], by), B)
            return BCategory(B, X.objects, X.extent, X.hom, X.unit, X.comp, name)
        X = BCategory(B, to_value(body["objects"]), _table(body["extent"], 2), _table(body["hom"], 3),
                      _table(body["unit"], 2), _table(body["comp"], 4), name)
        self.check("enriched", name, validate_bcategory(X))
        return X

    def _source_target(self, name, body, kind):
        by = (kind, name)
        for k in ("category", "enriched"):
            if body["source"] in (self.raw.get(k) or {}):
                return k, self.ref(k, body["source"], by), self.ref(k, body["target"], by)
        self.fail(kind, name, f"refers to undefined source {body['source']!r}", "reference")

    def _functor(self, name, body):
        kind, S, T = self._source_target(name, body, "functor")
        om = _table(body["objects"], 2)
        if kind == "category":
            F = Functor(S, T, om, _table(body["morphisms"], 2))
            self.check("functor", name, validate_functor(F))
        else:
            F = BFunctor(S, T, om, _table(body["cells"], 3))
            self.check("functor", name, validate_bfunctor(F))
        return F

    def _nat(self, name, body):
        by = ("nat", name)
        S = self.ref("functor", body["source"], by)
        T = self.ref("functor", body["target"], by)
        comps = _table(body["components"], 2)
        if isinstance(S, Functor):
            a = NatTransformation(S, T, comps)
            self.check("nat", name, validate_nat(a))
        else:
            a = BNatTrans(S, T, comps)
            self.check("nat", name, validate_bnat(a))
        return a

    def _weight(self, name, body) -> Weight:
        by = ("weight", name)
        shape = self._inline_category(body["shape"], by)
        local = body.get("locally", "discrete")
        if local == "discrete":
            D = locally_discrete(shape)
        elif local == "chaotic":
            D = locally_chaotic(shape)
        elif local == "explicit":
            homs = {(to_value(a), to_value(b)): _category_body(c, "") for a, b, c in body["homs"]}
            D = strict_two_category(shape, homs, _table(body.get("hcomp"), 3))
        else:
            raise ValueError(f"unknown locality {local!r}")
        obs = {k: self._inline_category(v, by) for k, v in _table(body["on_objects"], 2).items()}
        ones = {}
        for u, f in _table(body.get("on_1cells"), 2).items():
            ones[u] = self.ref("functor", f, by)
        twos = {al: dict(_rows_to_table(rows)) for al, rows in _table(body.get("on_2cells"), 2).items()}
        try:
            return weight(D, obs, ones, twos, name)
        except ValueError as e:
            self.fail("weight", name, str(e), "validation")


def _rows_to_table(rows):
    return {r[0]: r[1] for r in rows}


def _category_body(body, name) -> FinCategory:
    objects = to_value(body["objects"])
    morphisms = {m: (a, b) for m, a, b in _rows(body["morphisms"], 3)}
    if "identity" in body:
        return FinCategory(objects, morphisms, _table(body["identity"], 2), _table(body["composition"], 3), name)
    from .fincat import build_category
    return build_category(objects, morphisms, _table(body.get("composition"), 3), name)


def parse(text: str, validate: bool = True) -> Document:
    """Read a document; references are resolved and every block validated."""
    try:
        raw = yaml.safe_load(text)
    except yaml.MarkedYAMLError as e:
        mark = e.problem_mark
        raise DocumentError(f"syntax error: {e.problem}", mark.line + 1 if mark else None,
                            mark.column + 1 if mark else None, "syntax") from None
    if raw is None:
        raw = {}
    return _Reader(raw, _positions(text), validate).run()


def load(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


# -- writing -------------------------------------------------------------------------------

class _Writer:
    def __init__(self, doc: Document):
        self.doc = doc
        self.out = {k: {} for k in KINDS}
        self.names: dict = {}
        for kind, name, obj in doc:
            self.names[(kind, id(obj))] = name

    def name_of(self, kind, obj, hint: str = "") -> str:
        key = (kind, id(obj))
        if key in self.names:
            return self.names[key]
        for n, other in self.doc.blocks.get(kind, {}).items():
            if _same(other, obj):
                self.names[key] = n
                return n
        base = hint or getattr(obj, "name", "") or kind
        taken = set(self.doc.blocks.get(kind, {})) | set(self.out[kind])
        n = base
        for i in itertools.count(2):
            if n not in taken:
                break
            n = f"{base}{i}"
        self.names[key] = n
        self.emit(kind, n, obj)
        return n

    def emit(self, kind, name, obj):
        self.out[kind][name] = None  # reserve the slot before dependencies
        self.out[kind][name] = getattr(self, f"_{kind}")(obj)

    def run(self) -> dict:
        for kind, name, obj in self.doc:
            if name not in self.out[kind]:
                self.emit(kind, name, obj)
        return {k: v for k, v in self.out.items() if v}

    def _category(self, C: FinCategory) -> dict:
        return category_body(C)

    def _monoidal(self, V: MonoidalCategory) -> dict:
        C = V.category
        leq = [list(m) for m in C.morphisms if m[0] != m[1]]
        return {"poset": {"elements": [from_value(x) for x in C.objects], "leq": [[from_value(a), from_value(b)] for a, b in leq]},
                "tensor": _write_table(V.tensor), "unit": from_value(V.unit)}

    def _bicategory(self, B) -> dict:
        if isinstance(B, SigmaFinSet):
            return {"builtin": "sigma-finset"}
        if isinstance(B, SliceBicategory):
            return {"slice": {"base": self.name_of("bicategory", B.B), "over": self.name_of("enriched", B.X)}}
        if B == terminal_bicategory():
            return {"builtin": "terminal"}
        homs = [[from_value(a), from_value(b), category_body(H)] for (a, b), H in B.homs.items()]
        return {"objects": [from_value(x) for x in B.objects], "homs": homs, "unit": _write_table(B.unit, True),
                "comp1": _write_table(B.comp1_table), "comp2": _write_table(B.comp2_table),
                "assoc": _write_table(B.assoc_table), "lunit": _write_table(B.lunit_table, True),
                "runit": _write_table(B.runit_table, True)}

    def _enriched(self, X: BCategory) -> dict:
        return {"base": self.name_of("bicategory", X.base), "objects": [from_value(x) for x in X.objects],
                "extent": _write_table(X.extent, True), "hom": _write_table(X.hom),
                "unit": _write_table(X.unit, True), "comp": _write_table(X.comp)}

    def _functor(self, F) -> dict:
        if isinstance(F, Functor):
            return {"source": self.name_of("category", F.source), "target": self.name_of("category", F.target),
                    "objects": _write_table(F.object_map, True), "morphisms": _write_table(F.morphism_map, True)}
        return {"source": self.name_of("enriched", F.source), "target": self.name_of("enriched", F.target),
                "objects": _write_table(F.object_map, True), "cells": _write_table(F.hom_cells)}

    def _nat(self, a) -> dict:
        return {"source": self.name_of("functor", a.source), "target": self.name_of("functor", a.target),
                "components": _write_table(a.components, True)}

    def _weight(self, W: Weight) -> dict:
        D = W.domain
        shape = D.underlying
        body: dict = {"shape": self.name_of("category", shape)}
        if D == locally_discrete(shape):
            body["locally"] = "discrete"
        elif D == locally_chaotic(shape):
            body["locally"] = "chaotic"
        else:
            body["locally"] = "explicit"
            body["homs"] = [[from_value(a), from_value(b), category_body(H)] for (a, b), H in D.homs.items()]
            body["hcomp"] = _write_table(D.comp2_table)
        body["on_objects"] = [[from_value(d), self.name_of("category", C)] for d, C in W.on_objects.items()]
        ones = []
        for u, Fu in W.on_1cells.items():
            if u == D.id1(D.onecell_src(u)):
                continue
            ones.append([from_value(u), self.name_of("functor", Fu, f"{W.name or 'F'}_{_slug(u)}")])
        body["on_1cells"] = ones
        twos = []
        for (a, b), H in D.homs.items():
            for al in H.morphisms:
                if not H.is_identity(al):
                    twos.append([from_value(al), _write_table(W.on_2cells[al], True)])
        body["on_2cells"] = twos
        return body


def _slug(x) -> str:
    return "".join(ch for ch in str(x) if ch.isalnum() or ch in "_-") or "u"


def _same(a, b) -> bool:
    if a is b:
        return True
    try:
        return type(a) is type(b) and a == b
    except Exception:
        return False


def category_body(C: FinCategory) -> dict:
    return {"objects": [from_value(x) for x in C.objects],
            "morphisms": [[from_value(m), from_value(a), from_value(b)] for m, (a, b) in C.morphisms.items()],
            "identity": _write_table(C.identity, True),
            "composition": _write_table(C.composition)}


class _Dumper(yaml.SafeDumper):
    pass


def _tidy_list(dumper, data):
    # tables (lists of rows) in block style, everything else inline
    flow = not data or not all(isinstance(x, list) for x in data)
    return dumper.represent_sequence("tag:yaml.org,2002:seq", data, flow_style=flow)


_Dumper.add_representer(list, _tidy_list)


def dump_data(data) -> str:
    return yaml.dump(data, Dumper=_Dumper, sort_keys=False, allow_unicode=True, width=100)


def emit(doc: Document) -> str:
    """Canonical text: kinds in a fixed order, dependencies named and written out."""
    return dump_data(_Writer(doc).run())


def document_of(*items: tuple[str, str, Any]) -> Document:
    doc = Document()
    for kind, name, obj in items:
        doc.add(kind, name, obj)
    return doc
