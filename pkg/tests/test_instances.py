"""Instance text format, deterministic generation and exhaustive
enumeration."""

from fractions import Fraction

import pytest

from ordkit import (
    FinitePoset,
    FinitePreorder,
    ParseError,
    canonical_candidate,
    emit_instance,
    enumerate_posets,
    enumerate_preorders,
    generate,
    parse_instance,
)

F = Fraction


def test_parse_poset():
    inst = parse_instance("poset 3 demo\n0 1\n1 2\n")
    assert inst.kind == "poset"
    assert inst.n == 3
    assert inst.name == "demo"
    assert inst.payload.up == (7, 6, 4)
    assert isinstance(inst.payload, FinitePoset)


def test_parse_skips_comments_and_blanks():
    text = "# leading comment\n\npreorder 2\n# middle\n0 1\n\n"
    inst = parse_instance(text)
    assert inst.payload.up == (0b11, 0b10)
    assert inst.name == ""


def test_parse_closes_pairs():
    inst = parse_instance("preorder 3\n0 1\n1 2\n")
    assert inst.payload.leq(0, 2)


def test_parse_poset_rejects_cycles():
    with pytest.raises(ParseError) as err:
        parse_instance("poset 2\n0 1\n1 0\n")
    assert "cycle" in str(err.value)


def test_parse_topology():
    inst = parse_instance("topology 3\nopen 0 1\nopen 1 2\n")
    assert inst.payload.opens == (0, 0b010, 0b011, 0b110, 0b111)


def test_parse_bitop():
    text = "bitop 2\nedge 0 1\nopen1 1\nopen2 0\n"
    inst = parse_instance(text)
    cand = inst.payload
    assert cand.order.up == (0b11, 0b10)
    assert cand.t1.opens == (0, 0b10, 0b11)
    assert cand.t2.opens == (0, 0b01, 0b11)
    cand.certify()


def test_parse_qpm():
    inst = parse_instance("qpm 2\n0 0\n1 0\n")
    assert inst.payload == ((F(0), F(0)), (F(1), F(0)))


def test_parse_qpm_validates_the_matrix():
    with pytest.raises(ParseError) as err:
        parse_instance("qpm 2\n0 1\n1 1\n")
    assert "diagonal" in str(err.value)
    with pytest.raises(ParseError):
        parse_instance("qpm 2\n0 0\n")


def test_parse_family():
    inst = parse_instance("family 2\n0 1/2\n1 1\n")
    assert inst.payload == ((F(0), F(1, 2)), (F(1), F(1)))
    with pytest.raises(ParseError):
        parse_instance("family 2\n0\n")


class TestParseErrors:
    def test_empty_text(self):
        with pytest.raises(ParseError):
            parse_instance("")

    def test_unknown_kind(self):
        with pytest.raises(ParseError) as err:
            parse_instance("graph 2\n")
        assert "line 1" in str(err.value)

    def test_missing_carrier(self):
        with pytest.raises(ParseError):
            parse_instance("poset\n")

    def test_bad_carrier(self):
        with pytest.raises(ParseError):
            parse_instance("poset x\n")
        with pytest.raises(ParseError):
            parse_instance("poset -1\n")

    def test_element_out_of_range_reports_position(self):
        with pytest.raises(ParseError) as err:
            parse_instance("poset 2\n0 5\n")
        assert err.value.line == 2
        assert err.value.col == 3
        assert "line 2, col 3" in str(err.value)

    def test_non_integer_element(self):
        with pytest.raises(ParseError):
            parse_instance("poset 2\n0 b\n")

    def test_bad_rational(self):
        with pytest.raises(ParseError):
            parse_instance("family 1\n1/0\n")

    def test_trailing_header_token(self):
        with pytest.raises(ParseError):
            parse_instance("poset 2 name extra\n")

    def test_bad_bitop_tag(self):
        with pytest.raises(ParseError):
            parse_instance("bitop 2\nvertex 0 1\n")


def test_emit_parse_roundtrip_each_kind():
    texts = {
        "poset": "poset 3 demo\n0 1\n1 2\n",
        "preorder": "preorder 3\n0 1\n1 0\n",
        "topology": "topology 3\nopen 0 1\nopen 1 2\n",
        "bitop": "bitop 2\nedge 0 1\nopen1 1\nopen2 0\n",
        "qpm": "qpm 2\n0 0\n1 0\n",
        "family": "family 2\n0 1/2\n1 1\n",
    }
    for kind, text in texts.items():
        inst = parse_instance(text)
        emitted = emit_instance(inst)
        again = parse_instance(emitted)
        assert again == inst
        # canonical form is a fixed point of emit
        assert emit_instance(again) == emitted


def test_emit_lists_nonreflexive_pairs_only():
    inst = parse_instance("poset 2\n0 1\n")
    assert emit_instance(inst) == "poset 2\n0 1\n"


def test_generate_is_deterministic():
    for kind in ("poset", "preorder", "topology", "bitop", "qpm", "family"):
        for n in (0, 1, 3):
            a = generate(kind, n, 7)
            b = generate(kind, n, 7)
            assert a == b
            assert a.name == "g7"
            assert emit_instance(a) == emit_instance(b)
        assert generate(kind, 3, 7) != generate(kind, 3, 8)


def test_generate_roundtrips_through_text():
    for kind in ("poset", "preorder", "topology", "bitop", "qpm", "family"):
        for n in (0, 1, 4):
            for seed in range(25):
                inst = generate(kind, n, seed)
                assert parse_instance(emit_instance(inst)) == inst


def test_generate_rejects_bad_arguments():
    with pytest.raises(ValueError):
        generate("widget", 2, 0)
    with pytest.raises(ValueError):
        generate("poset", -1, 0)


def test_generated_posets_are_posets():
    for seed in range(50):
        p = generate("poset", 6, seed).payload
        assert isinstance(p, FinitePoset)
        assert p.is_antisymmetric()


def test_canonical_candidate_certifies():
    for n in range(4):
        for q in enumerate_preorders(n):
            canonical_candidate(q).certify()


def test_enumeration_counts():
    assert [len(enumerate_preorders(n)) for n in range(5)] == [1, 1, 4, 29, 355]
    assert [len(enumerate_posets(n)) for n in range(5)] == [1, 1, 3, 19, 219]


def test_enumeration_is_sorted_and_distinct():
    for n in range(4):
        qs = enumerate_preorders(n)
        assert len(set(qs)) == len(qs)
        assert [q.up for q in qs] == sorted(q.up for q in qs)
        for q in qs:
            assert isinstance(q, FinitePreorder)
