from __future__ import annotations

import json
import re

import pytest
from hypothesis import given, strategies as st

from supervogan.algebra_catalog import A, B, C, D, D21, F4, FAMILY_INFO, G3
from supervogan.double_vogan import DoubleVoganSuperdiagram, enumerate_double, enumerate_pairs
from supervogan.dynkin import DiagramMap, affine_diagram, finite_diagram
from supervogan.errors import ParseError
from supervogan.render import SCHEMA, Collection, from_json, to_dot, to_json, to_text, to_tikz
from supervogan.verify import verify_family
from supervogan.vogan import VoganSuperdiagram, canonicalize, enumerate_vogan, summarize, vogan_classes

from conftest import sweep


@pytest.mark.parametrize("f", sweep(3), ids=str)
def test_diagram_roundtrip(f):
    for d in (finite_diagram(f), affine_diagram(f)):
        text = to_json(d)
        back = from_json(text)
        assert back == d and type(back) is type(d)
        assert to_json(back) == text


def test_rationals_are_strings():
    doc = json.loads(to_json(affine_diagram(D21(2))))
    flat = json.dumps(doc)
    assert "0.5" not in flat
    assert '"1/2"' in flat or '"-1/2"' in flat


def test_affine_json_carries_marks():
    doc = json.loads(to_json(affine_diagram(D21(1))))
    assert doc["marks"] == [1, 2, 1, 1]
    assert doc["schema"] == SCHEMA


def test_canonical_key_order():
    text = to_json(finite_diagram(A(2, 1)))
    doc = json.loads(text)
    assert list(doc) == sorted(doc)


def mutate(text, fn):
    doc = json.loads(text)
    fn(doc)
    return json.dumps(doc)


def test_unknown_field_rejected_with_location():
    base = to_json(finite_diagram(B(1, 1)))
    with pytest.raises(ParseError) as e:
        from_json(mutate(base, lambda d: d["vertices"][1].__setitem__("colour", "red")))
    assert "colour" in str(e.value) and e.value.location == "$.vertices[1]"
    with pytest.raises(ParseError, match="extra"):
        from_json(mutate(base, lambda d: d.__setitem__("extra", 1)))


@pytest.mark.parametrize(
    "fn,where",
    [
        (lambda d: d.__setitem__("schema", "supervogan/0"), "$.schema"),
        (lambda d: d.__delitem__("schema"), "$.schema"),
        (lambda d: d.__setitem__("kind", "teapot"), "$.kind"),
        (lambda d: d["vertices"][0].__setitem__("kind", "purple"), "$.vertices[0].kind"),
        (lambda d: d["cartan"][0].__setitem__(0, 2.0), "$.cartan[0][0]"),
        (lambda d: d["cartan"][0].__setitem__(0, "x/y"), "$.cartan[0][0]"),
        (lambda d: d["edges"][0].__delitem__("bond"), "$.edges[0]"),
        (lambda d: d["family"].__setitem__("spec", "Q(1)"), "$.family.spec"),
    ],
)
def test_malformed_documents(fn, where):
    base = to_json(finite_diagram(B(1, 1)))
    with pytest.raises(ParseError) as e:
        from_json(mutate(base, fn))
    assert e.value.location == where


def test_bad_json_text():
    with pytest.raises(ParseError):
        from_json("{not json")
    with pytest.raises(ParseError):
        from_json("[1, 2]")


def test_affine_marks_must_agree():
    base = to_json(affine_diagram(B(1, 1)))
    with pytest.raises(ParseError):
        from_json(mutate(base, lambda d: d.__setitem__("marks", [1, 1, 1])))


def test_structural_errors_become_parse_errors():
    ad = affine_diagram(D(3, 1))
    x = DoubleVoganSuperdiagram(ad, DiagramMap.identity(ad.size), frozenset({0}), frozenset())
    base = to_json(x)
    # paint a grey vertex black
    with pytest.raises(ParseError):
        from_json(mutate(base, lambda d: d["vertices"][1].__setitem__("black", True)))


ROUNDTRIP_OBJECTS = [
    lambda: enumerate_vogan(finite_diagram(D(3, 1)))[7],
    lambda: Collection("t", tuple(summarize(vogan_classes(finite_diagram(A(2, 1)))))),
    lambda: Collection("d", tuple(enumerate_double(affine_diagram(B(1, 1)))[:5])),
    lambda: enumerate_pairs(C(3)),
    lambda: enumerate_pairs(F4()),
    lambda: enumerate_pairs(A(2, 1)),
    lambda: verify_family(A(1, 0)),
    lambda: Collection("families", FAMILY_INFO),
]


@pytest.mark.parametrize("make", ROUNDTRIP_OBJECTS)
def test_object_roundtrip(make):
    obj = make()
    text = to_json(obj)
    back = from_json(text)
    assert back == obj
    assert to_json(back) == text


@given(st.sampled_from([D(3, 2), A(3, 1), D21(1), G3()]), st.data())
def test_vogan_roundtrip_property(f, data):
    v = data.draw(st.sampled_from(enumerate_vogan(finite_diagram(f))))
    assert from_json(to_json(v)) == v


def test_glyphs():
    assert to_text(finite_diagram(B(0, 2))).endswith("◆")
    d = finite_diagram(A(2, 1))
    plain = VoganSuperdiagram(d, DiagramMap.identity(d.size), frozenset(), frozenset())
    assert "●" not in to_text(plain)
    painted = VoganSuperdiagram(d, DiagramMap.identity(d.size), frozenset({1}), frozenset({0}))
    assert "1●" in to_text(painted) and "0(○)" in to_text(painted)
    assert "⊗" in to_text(d)


def test_colour_env(monkeypatch):
    d = finite_diagram(A(2, 1))
    v = VoganSuperdiagram(d, DiagramMap.identity(d.size), frozenset({1}), frozenset())
    monkeypatch.setenv("SUPERVOGAN_COLOR", "0")
    assert "\x1b[" not in to_text(v)
    monkeypatch.setenv("SUPERVOGAN_COLOR", "1")
    assert "\x1b[" in to_text(v)


def test_fork_swap_rendering():
    ad = affine_diagram(D(3, 2))
    n = ad.size
    x = DoubleVoganSuperdiagram(ad, DiagramMap(tuple(range(n - 2)) + (n - 1, n - 2)), frozenset(), frozenset())
    assert f"involution: ({n - 2} {n - 1})" in to_text(x)
    assert f'"v{n - 2}" -- "v{n - 1}" [style=dashed, dir=both' in to_dot(x)
    assert f"\\draw[<->, dashed, bend left=45] (v{n - 2}) to (v{n - 1});" in to_tikz(x)


def dot_is_well_formed(text):
    depth = 0
    for ch in re.sub(r'"(\\.|[^"\\])*"', '""', text):
        depth += ch == "{"
        depth -= ch == "}"
        assert depth >= 0
    assert depth == 0
    body = [ln.strip() for ln in text.strip().splitlines()[1:-1]]
    node = re.compile(r'^"[^"]+" \[.*\];$')
    edge = re.compile(r'^"[^"]+" -- "[^"]+" \[.*\];$')
    for ln in body:
        assert ln.startswith("node [") or node.match(ln) or edge.match(ln), ln


@pytest.mark.parametrize("f", sweep(2), ids=str)
def test_dot_grammar(f):
    dot_is_well_formed(to_dot(affine_diagram(f)))
    dot_is_well_formed(to_dot(finite_diagram(f)))


def test_tikz_balanced():
    t = to_tikz(affine_diagram(F4()))
    assert t.count("{") == t.count("}")
    assert t.startswith("% F(4)\n\\begin{tikzpicture}") and t.rstrip().endswith("\\end{tikzpicture}")


@pytest.mark.parametrize("f", [A(2, 1), B(2, 1), C(4), D(3, 2), D21(1)], ids=str)
def test_text_injective_on_canonical_reps(f):
    reps = [c.representative for c in vogan_classes(finite_diagram(f))]
    texts = [to_text(r) for r in reps]
    assert len(set(texts)) == len(texts)


def test_render_unsupported_type():
    with pytest.raises(TypeError):
        to_json(object())
    with pytest.raises(TypeError):
        to_dot(FAMILY_INFO[0])
