"""JSON documents, text art, DOT and TikZ for diagrams, decorated diagrams and result tables.

Glyphs: white ○, grey ⊗, odd non-isotropic ◆, painted or black ●, white
painting of a double diagram ◐; a circled vertex is wrapped in parentheses.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .algebra_catalog import FamilyId, FamilyInfo, BilinearForm, Root, parse_family
from .double_vogan import (
    NOT_APPLICABLE,
    ClassificationTable,
    DoubleVoganSuperdiagram,
    HermitianTypeInfo,
    PairRow,
    SymmetricSuperpair,
)
from .dynkin import (
    GREY,
    KINDS,
    NO_ARROW,
    ODD_NONISO,
    TOWARD_FIRST,
    TOWARD_SECOND,
    WHITE,
    AffineDiagram,
    DiagramMap,
    DynkinDiagram,
    Edge,
    Vertex,
)
from .errors import ParseError, StructuralError, SuperVoganError
from .verify import CheckResult, VerifyReport
from .vogan import ClassSummary, RealFormLabel, VoganSuperdiagram

SCHEMA = "supervogan/1"

GLYPH = {WHITE: "○", GREY: "⊗", ODD_NONISO: "◆"}
FILLED = "●"
HALF = "◐"
_BOND = {1: "—", 2: "=", 3: "≡", 4: "≣"}
_ARROW_RIGHT = {2: "⇒", 3: "⇛", 4: "≣>"}
_ARROW_LEFT = {2: "⇐", 3: "⇚", 4: "<≣"}
_ANSI = {FILLED: "\x1b[31m", HALF: "\x1b[33m", GLYPH[GREY]: "\x1b[90m", GLYPH[ODD_NONISO]: "\x1b[35m"}


@dataclass(frozen=True)
class Collection:
    title: str
    items: tuple[Any, ...]


# encoding

def _frac(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _family(f: FamilyId) -> dict:
    return {"spec": str(f), "permissive": f.permissive}


def _root(r: Root) -> dict:
    return {"coords": {k: _frac(v) for k, v in r.coords}, "parity": r.parity, "isotropic": r.isotropic}


def _form(form: BilinearForm) -> dict:
    return {"basis": list(form.basis), "gram": [[_frac(x) for x in row] for row in form.gram]}


def _cycles(g: DiagramMap) -> list[list[int]]:
    return [list(c) for c in g.cycles()]


def _diagram_fields(d: DynkinDiagram, flags: dict[str, set[int]]) -> dict:
    verts = []
    for v, r in zip(d.vertices, d.roots):
        rec = {"id": v.id, "kind": v.kind, "mark": v.mark, "root": _root(r)}
        for name, ids in flags.items():
            rec[name] = v.id in ids
        verts.append(rec)
    out = {
        "family": _family(d.family),
        "form": _form(d.form),
        "vertices": verts,
        "edges": [{"a": e.a, "b": e.b, "bond": e.bond, "arrow": e.arrow} for e in d.edges],
        "cartan": [[_frac(x) for x in row] for row in d.cartan],
    }
    if isinstance(d, AffineDiagram):
        out["affine_vertex"] = d.affine_vertex_id
        out["marks"] = list(d.marks)
    return out


def encode(x: Any) -> dict:
    if isinstance(x, AffineDiagram):
        return {"kind": "affine", **_diagram_fields(x, {})}
    if isinstance(x, DynkinDiagram):
        return {"kind": "dynkin", **_diagram_fields(x, {})}
    if isinstance(x, VoganSuperdiagram):
        flags = {"painted": set(x.painted), "circled": set(x.circled)}
        return {"kind": "vogan", **_diagram_fields(x.diagram, flags), "involution": {"cycles": _cycles(x.involution)}}
    if isinstance(x, DoubleVoganSuperdiagram):
        flags = {"black": set(x.black), "circled": set(x.circled), "painted": set(x.white_painting)}
        return {"kind": "double", **_diagram_fields(x.affine, flags), "involution": {"cycles": _cycles(x.involution)}}
    if isinstance(x, ClassSummary):
        return {
            "kind": "vogan-class",
            "representative": encode(x.representative),
            "size": x.size,
            "label": {"display": x.label.display, "family": x.label.family, "params": list(x.label.params)},
        }
    if isinstance(x, SymmetricSuperpair):
        return {"kind": "superpair", "numerator": x.numerator, "denominator": x.denominator, "tag": x.tag}
    if isinstance(x, HermitianTypeInfo):
        return {
            "kind": "hermitian",
            "hermitian": x.hermitian,
            "black_action": x.black_action,
            "sign_on_z0": x.sign_on_z0,
            "sign_on_z1": x.sign_on_z1,
        }
    if isinstance(x, ClassificationTable):
        return {
            "kind": "table",
            "family": _family(x.family),
            "r": x.r,
            "rows": [
                {
                    "diagram": encode(row.representative),
                    "label": encode(row.label),
                    "hermitian": "n/a" if row.hermitian is NOT_APPLICABLE else encode(row.hermitian),
                    "black_marks": list(row.black_marks),
                }
                for row in x.rows
            ],
        }
    if isinstance(x, FamilyInfo):
        return {"kind": "family-info", "name": x.name, "spec": x.spec, "algebra": x.algebra, "rule": x.rule}
    if isinstance(x, VerifyReport):
        return {
            "kind": "report",
            "family": _family(x.family),
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in x.checks],
        }
    if isinstance(x, Collection):
        return {"kind": "collection", "title": x.title, "items": [encode(i) for i in x.items]}
    raise TypeError(f"cannot serialize {type(x).__name__}")


def to_json(x: Any) -> str:
    doc = {"schema": SCHEMA, **encode(x)}
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


# decoding

class _Obj:
    """A JSON object under strict validation, tracking its path for error messages."""

    def __init__(self, data: Any, path: str, allowed: set[str], optional: frozenset[str] = frozenset()):
        if not isinstance(data, dict):
            raise ParseError(f"expected an object", path)
        for k in sorted(data):
            if k not in allowed:
                raise ParseError(f"unknown field {k!r}", path)
        for k in sorted(allowed - optional):
            if k not in data:
                raise ParseError(f"missing field {k!r}", path)
        self.data = data
        self.path = path

    def get(self, key: str, typ=None, default=None):
        if key not in self.data:
            return default
        v = self.data[key]
        if typ is not None and not _is(v, typ):
            raise ParseError(f"field {key!r} has the wrong type", f"{self.path}.{key}")
        return v

    def sub(self, key: str) -> str:
        return f"{self.path}.{key}"


def _is(v, typ) -> bool:
    if typ is int:
        return isinstance(v, int) and not isinstance(v, bool)
    if typ is bool:
        return isinstance(v, bool)
    return isinstance(v, typ)


def _parse_frac(s: Any, path: str) -> Fraction:
    if not isinstance(s, str):
        raise ParseError("rationals must be encoded as 'p/q' strings", path)
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {s!r}", path) from None


def _parse_family(data: Any, path: str) -> FamilyId:
    o = _Obj(data, path, {"spec", "permissive"})
    try:
        return parse_family(o.get("spec", str), permissive=o.get("permissive", bool))
    except SuperVoganError as e:
        raise ParseError(str(e), o.sub("spec")) from None


def _parse_form(data: Any, path: str) -> BilinearForm:
    o = _Obj(data, path, {"basis", "gram"})
    basis = tuple(o.get("basis", list))
    gram = tuple(
        tuple(_parse_frac(x, f"{path}.gram[{i}][{j}]") for j, x in enumerate(row))
        for i, row in enumerate(o.get("gram", list))
    )
    return BilinearForm(basis, gram)


def _parse_root(data: Any, path: str) -> Root:
    o = _Obj(data, path, {"coords", "parity", "isotropic"})
    coords = o.get("coords", dict)
    items = tuple(sorted((k, _parse_frac(v, f"{path}.coords.{k}")) for k, v in coords.items()))
    return Root(items, o.get("parity", str), o.get("isotropic", bool))


_DIAGRAM_KEYS = {"kind", "family", "form", "vertices", "edges", "cartan"}


def _parse_diagram(o: _Obj, flags: tuple[str, ...], affine: bool):
    family = _parse_family(o.get("family"), o.sub("family"))
    form = _parse_form(o.get("form"), o.sub("form"))
    verts, roots = [], []
    flag_sets: dict[str, set[int]] = {f: set() for f in flags}
    for i, vd in enumerate(o.get("vertices", list)):
        p = f"{o.path}.vertices[{i}]"
        vo = _Obj(vd, p, {"id", "kind", "mark", "root", *flags})
        vid = vo.get("id", int)
        kind = vo.get("kind", str)
        if kind not in KINDS:
            raise ParseError(f"unknown vertex kind {kind!r}", f"{p}.kind")
        mark = vo.get("mark")
        if mark is not None and not _is(mark, int):
            raise ParseError("mark must be an integer or null", f"{p}.mark")
        verts.append(Vertex(vid, kind, mark))
        roots.append(_parse_root(vo.get("root"), f"{p}.root"))
        for f in flags:
            if vo.get(f, bool):
                flag_sets[f].add(vid)
    edges = []
    for i, ed in enumerate(o.get("edges", list)):
        p = f"{o.path}.edges[{i}]"
        eo = _Obj(ed, p, {"a", "b", "bond", "arrow"})
        arrow = eo.get("arrow", str)
        if arrow not in (NO_ARROW, TOWARD_FIRST, TOWARD_SECOND):
            raise ParseError(f"unknown arrow {arrow!r}", f"{p}.arrow")
        try:
            edges.append(Edge(eo.get("a", int), eo.get("b", int), eo.get("bond", int), arrow))
        except StructuralError as e:
            raise ParseError(str(e), p) from None
    cartan = tuple(
        tuple(_parse_frac(x, f"{o.path}.cartan[{i}][{j}]") for j, x in enumerate(row))
        for i, row in enumerate(o.get("cartan", list))
    )
    if [v.id for v in verts] != list(range(len(verts))):
        raise ParseError("vertex ids must be 0..n-1 in order", f"{o.path}.vertices")
    if affine:
        av = o.get("affine_vertex", int)
        marks = tuple(v.mark for v in verts)
        if any(mk is None for mk in marks):
            raise ParseError("affine vertices need marks", f"{o.path}.vertices")
        if o.get("marks", list) != list(marks):
            raise ParseError("marks disagree with the vertex records", o.sub("marks"))
        d = AffineDiagram(family, form, tuple(roots), cartan, tuple(verts), tuple(edges), av, marks)
    else:
        d = DynkinDiagram(family, form, tuple(roots), cartan, tuple(verts), tuple(edges))
    return d, flag_sets


def _parse_involution(data: Any, path: str, n: int) -> DiagramMap:
    o = _Obj(data, path, {"cycles"})
    perm = list(range(n))
    for i, c in enumerate(o.get("cycles", list)):
        if not isinstance(c, list) or not all(_is(x, int) and 0 <= x < n for x in c) or len(c) < 2:
            raise ParseError("cycle must list at least two vertex ids", f"{path}.cycles[{i}]")
        for a, b in zip(c, c[1:] + c[:1]):
            perm[a] = b
    return DiagramMap(tuple(perm))


def _parse_label(data: Any, path: str) -> RealFormLabel:
    o = _Obj(data, path, {"display", "family", "params"})
    fam = o.get("family")
    if fam is not None and not isinstance(fam, str):
        raise ParseError("label family must be a string or null", f"{path}.family")
    return RealFormLabel(o.get("display", str), fam, tuple(o.get("params", list)))


def decode(data: Any, path: str = "$") -> Any:
    if not isinstance(data, dict) or not isinstance(data.get("kind"), str):
        raise ParseError("document needs a string 'kind'", path)
    kind = data["kind"]
    try:
        return _decode(kind, data, path)
    except StructuralError as e:
        raise ParseError(str(e), path) from None


def _decode(kind: str, data: dict, path: str) -> Any:
    if kind in ("dynkin", "affine"):
        keys = _DIAGRAM_KEYS | ({"affine_vertex", "marks"} if kind == "affine" else set())
        d, _ = _parse_diagram(_Obj(data, path, keys), (), kind == "affine")
        return d
    if kind == "vogan":
        o = _Obj(data, path, _DIAGRAM_KEYS | {"involution"})
        d, fl = _parse_diagram(o, ("painted", "circled"), False)
        inv = _parse_involution(o.get("involution"), o.sub("involution"), d.size)
        return VoganSuperdiagram(d, inv, frozenset(fl["painted"]), frozenset(fl["circled"]))
    if kind == "double":
        o = _Obj(data, path, _DIAGRAM_KEYS | {"involution", "affine_vertex", "marks"})
        d, fl = _parse_diagram(o, ("black", "circled", "painted"), True)
        inv = _parse_involution(o.get("involution"), o.sub("involution"), d.size)
        return DoubleVoganSuperdiagram(d, inv, frozenset(fl["black"]), frozenset(fl["circled"]), frozenset(fl["painted"]))
    if kind == "vogan-class":
        o = _Obj(data, path, {"kind", "representative", "size", "label"})
        rep = decode(o.get("representative"), o.sub("representative"))
        if not isinstance(rep, VoganSuperdiagram):
            raise ParseError("representative must be a vogan document", o.sub("representative"))
        return ClassSummary(rep, o.get("size", int), _parse_label(o.get("label"), o.sub("label")))
    if kind == "superpair":
        o = _Obj(data, path, {"kind", "numerator", "denominator", "tag"})
        return SymmetricSuperpair(o.get("numerator", str), o.get("denominator", str), o.get("tag", str))
    if kind == "hermitian":
        o = _Obj(data, path, {"kind", "hermitian", "black_action", "sign_on_z0", "sign_on_z1"})
        return HermitianTypeInfo(
            o.get("hermitian", bool), o.get("black_action", str), o.get("sign_on_z0", int), o.get("sign_on_z1", int)
        )
    if kind == "table":
        o = _Obj(data, path, {"kind", "family", "r", "rows"})
        rows = []
        for i, rd in enumerate(o.get("rows", list)):
            p = f"{path}.rows[{i}]"
            ro = _Obj(rd, p, {"diagram", "label", "hermitian", "black_marks"})
            rep = decode(ro.get("diagram"), ro.sub("diagram"))
            label = decode(ro.get("label"), ro.sub("label"))
            h = ro.get("hermitian")
            herm = NOT_APPLICABLE if h == "n/a" else decode(h, ro.sub("hermitian"))
            rows.append(PairRow(rep, label, herm, tuple(ro.get("black_marks", list))))
        return ClassificationTable(_parse_family(o.get("family"), o.sub("family")), o.get("r", int), tuple(rows))
    if kind == "family-info":
        o = _Obj(data, path, {"kind", "name", "spec", "algebra", "rule"})
        return FamilyInfo(o.get("name", str), o.get("spec", str), o.get("algebra", str), o.get("rule", str))
    if kind == "report":
        o = _Obj(data, path, {"kind", "family", "checks"})
        checks = []
        for i, cd in enumerate(o.get("checks", list)):
            co = _Obj(cd, f"{path}.checks[{i}]", {"name", "passed", "detail"})
            passed = co.get("passed")
            if passed is not None and not isinstance(passed, bool):
                raise ParseError("passed must be a boolean or null", co.sub("passed"))
            checks.append(CheckResult(co.get("name", str), passed, co.get("detail", str)))
        return VerifyReport(_parse_family(o.get("family"), o.sub("family")), tuple(checks))
    if kind == "collection":
        o = _Obj(data, path, {"kind", "title", "items"})
        items = tuple(decode(it, f"{path}.items[{i}]") for i, it in enumerate(o.get("items", list)))
        return Collection(o.get("title", str), items)
    raise ParseError(f"unknown document kind {kind!r}", f"{path}.kind")


def from_json(text: str) -> Any:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f"line {e.lineno} column {e.colno}") from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", "$")
    schema = data.get("schema")
    if schema != SCHEMA:
        raise ParseError(f"unsupported schema version {schema!r}", "$.schema")
    body = {k: v for k, v in data.items() if k != "schema"}
    return decode(body, "$")


# text

def _color_on() -> bool:
    return os.environ.get("SUPERVOGAN_COLOR", "0") == "1"


def _paint(glyph: str) -> str:
    if _color_on() and glyph in _ANSI:
        return f"{_ANSI[glyph]}{glyph}\x1b[0m"
    return glyph


def _edge_glyph(e: Edge) -> str:
    if e.arrow == TOWARD_SECOND and e.bond in _ARROW_RIGHT:
        return _ARROW_RIGHT[e.bond]
    if e.arrow == TOWARD_FIRST and e.bond in _ARROW_LEFT:
        return _ARROW_LEFT[e.bond]
    return _BOND.get(e.bond, f"[{e.bond}]")


def _diagram_text(d: DynkinDiagram, title: str, filled=frozenset(), half=frozenset(), circled=frozenset(), inv=None) -> str:
    lines = [f"# {d.family} {title}"]
    if isinstance(d, AffineDiagram):
        lines.append("marks: " + " ".join(str(m) for m in d.marks) + f"  (affine vertex {d.affine_vertex_id})")
    extra = [e for e in d.edges if e.b != e.a + 1]
    for e in extra:
        lines.append(f"link: {e.a} {_edge_glyph(e)} {e.b}")
    if inv is not None and not inv.is_identity:
        lines.append("involution: " + " ".join("(" + " ".join(map(str, c)) + ")" for c in inv.cycles()))
    tokens = []
    for v in d.vertices:
        g = FILLED if v.id in filled else HALF if v.id in half else GLYPH[v.kind]
        g = _paint(g)
        tokens.append(f"{v.id}({g})" if v.id in circled else f"{v.id}{g}")
    chain = tokens[0]
    for i in range(1, d.size):
        e = d.edge(i - 1, i)
        chain += f" {_edge_glyph(e)} " if e is not None and e.b == i else "   "
        chain += tokens[i]
    lines.append(chain)
    return "\n".join(lines)


def to_text(x: Any) -> str:
    if isinstance(x, AffineDiagram):
        return _diagram_text(x, "affine")
    if isinstance(x, DynkinDiagram):
        return _diagram_text(x, "finite")
    if isinstance(x, VoganSuperdiagram):
        return _diagram_text(x.diagram, "vogan", filled=x.painted, circled=x.circled, inv=x.involution)
    if isinstance(x, DoubleVoganSuperdiagram):
        return _diagram_text(
            x.affine, "double", filled=x.black, half=x.white_painting, circled=x.circled, inv=x.involution
        )
    if isinstance(x, ClassSummary):
        return f"{to_text(x.representative)}\nclass size {x.size}, real form {x.label}"
    if isinstance(x, SymmetricSuperpair):
        return x.caption
    if isinstance(x, HermitianTypeInfo):
        return f"{x.black_action} ({x.sign_on_z0:+d}, {x.sign_on_z1:+d})"
    if isinstance(x, ClassificationTable):
        parts = [f"# classification {x.family} r={x.r}: {len(x.rows)} classes"]
        for row in x.rows:
            h = "n/a" if row.hermitian is NOT_APPLICABLE else to_text(row.hermitian)
            marks = ",".join(map(str, row.black_marks)) or "-"
            parts.append(f"{to_text(row.representative)}\nlabel: {row.label.caption} | hermitian: {h} | black marks: {marks}")
        return "\n\n".join(parts)
    if isinstance(x, FamilyInfo):
        return f"{x.spec:<14} {x.algebra:<14} {x.rule}"
    if isinstance(x, VerifyReport):
        lines = [f"# verify {x.family}: {'ok' if x.ok else 'FAILED'}"]
        lines += [f"{c.status:<4} {c.name}: {c.detail}" for c in x.checks]
        return "\n".join(lines)
    if isinstance(x, Collection):
        sep = "\n" if x.items and isinstance(x.items[0], FamilyInfo) else "\n\n"
        body = sep.join(_collection_item(i) for i in x.items)
        return f"# {x.title}\n{body}" if body else f"# {x.title}"
    raise TypeError(f"cannot render {type(x).__name__}")


def _collection_item(x: Any) -> str:
    if isinstance(x, DoubleVoganSuperdiagram):
        return f"{to_text(x)}\nblack mark sum {sum(x.black_marks)}"
    return to_text(x)


# DOT and TikZ

def _decorations(x: Any):
    if isinstance(x, VoganSuperdiagram):
        return x.diagram, x.painted, frozenset(), x.circled, x.involution
    if isinstance(x, DoubleVoganSuperdiagram):
        return x.affine, x.black, x.white_painting, x.circled, x.involution
    if isinstance(x, DynkinDiagram):
        return x, frozenset(), frozenset(), frozenset(), None
    raise TypeError(f"cannot draw {type(x).__name__}")


def _dot_quote(s: str) -> str:
    escaped = s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
    return f'"{escaped}"'


def to_dot(x: Any) -> str:
    d, filled, half, circled, inv = _decorations(x)
    lines = [f"graph {_dot_quote(str(d.family))} {{", "  node [fontname=\"DejaVu Sans\"];"]
    for v in d.vertices:
        glyph = FILLED if v.id in filled else HALF if v.id in half else GLYPH[v.kind]
        label = f"{v.id} {glyph}" + (f"\n{v.mark}" if v.mark is not None else "")
        shape = "doublecircle" if v.id in circled else "circle"
        lines.append(f"  {_dot_quote(f'v{v.id}')} [label={_dot_quote(label)}, shape={shape}];")
    for e in d.edges:
        attrs = [f"penwidth={e.bond}", f"label={_dot_quote(str(e.bond))}"]
        if e.arrow == TOWARD_SECOND:
            attrs.append("dir=forward")
        elif e.arrow == TOWARD_FIRST:
            attrs.append("dir=back")
        lines.append(f"  {_dot_quote(f'v{e.a}')} -- {_dot_quote(f'v{e.b}')} [{', '.join(attrs)}];")
    if inv is not None:
        for c in inv.cycles():
            a, b = c
            lines.append(
                f"  {_dot_quote(f'v{a}')} -- {_dot_quote(f'v{b}')} [style=dashed, dir=both, constraint=false];"
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_tikz(x: Any) -> str:
    d, filled, half, circled, inv = _decorations(x)
    lines = [f"% {d.family}", "\\begin{tikzpicture}[v/.style={draw, circle, minimum size=9pt, inner sep=0pt}]"]
    for v in d.vertices:
        style = ["v"]
        if v.id in filled:
            style.append("fill=black")
        elif v.id in half:
            style.append("fill=gray!50")
        elif v.kind == ODD_NONISO:
            style.append("fill=black, diamond")
        if v.id in circled:
            style.append("double, double distance=1.5pt")
        if v.mark is not None:
            style.append(f"label=above:{{${v.mark}$}}")
        body = "$\\times$" if v.kind == GREY else ""
        lines.append(f"  \\node[{', '.join(style)}] (v{v.id}) at ({1.2 * v.id:.1f},0) {{{body}}};")
    for e in d.edges:
        opts = {1: "", 2: "double", 3: "double, double distance=2pt", 4: "double, double distance=3pt"}[min(e.bond, 4)]
        if e.arrow == TOWARD_SECOND:
            opts = ", ".join(o for o in (opts, "->") if o)
        elif e.arrow == TOWARD_FIRST:
            opts = ", ".join(o for o in (opts, "<-") if o)
        if e.b != e.a + 1:
            opts = ", ".join(o for o in (opts, "bend right=30") if o)
        lines.append(f"  \\draw[{opts}] (v{e.a}) to (v{e.b});")
    if inv is not None:
        for a, b in inv.cycles():
            lines.append(f"  \\draw[<->, dashed, bend left=45] (v{a}) to (v{b});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
