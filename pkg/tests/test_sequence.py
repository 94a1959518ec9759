import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from seqmerit import Sequence, SymmetryElement, apply_symmetry, canonical_form, parse_pm_string
from seqmerit.autocorr import aperiodic_autocorrelation, max_sidelobe
from seqmerit.errors import DomainError, ParseError, UnsupportedAlphabetError
from seqmerit.sequence import (
    SYMMETRIES,
    Alphabet,
    dumps,
    from_json_obj,
    is_canonical,
    loads,
    orbit,
    render_pm,
)

binary_lists = st.lists(st.sampled_from([-1, 1]), min_size=1, max_size=24)


@pytest.mark.parametrize("text, expected", [
    ("+", (1,)),
    ("+++-", (1, 1, 1, -1)),
    ("+++++−−++−+−+", (1, 1, 1, 1, 1, -1, -1, 1, 1, -1, 1, -1, 1)),
])
def test_parse_pm_string(text, expected):
    assert parse_pm_string(text).entries == expected


def test_parse_reports_offending_index():
    with pytest.raises(ParseError) as exc:
        parse_pm_string("++a")
    assert exc.value.index == 2


def test_parse_rejects_empty():
    with pytest.raises(ParseError):
        parse_pm_string("")


@given(binary_lists)
def test_render_parse_roundtrip(values):
    s = Sequence.binary(values)
    assert parse_pm_string(render_pm(s)) == s


def test_binary_alphabet_is_enforced():
    with pytest.raises(DomainError):
        Sequence.binary([1, 0, -1])


def test_roots_alphabet_tolerance():
    w = complex(-0.5, 3 ** 0.5 / 2)
    Sequence.roots([1, w, w * w], 3)
    with pytest.raises(DomainError):
        Sequence.roots([1, 1j], 3)


@pytest.mark.parametrize("g, expected", [
    (SymmetryElement(negate=True), (-1, -1, -1, 1)),
    (SymmetryElement(reverse=True), (-1, 1, 1, 1)),
])
def test_apply_symmetry_examples(g, expected):
    assert apply_symmetry(Sequence.binary([1, 1, 1, -1]), g).entries == expected


def test_alternation_of_all_ones():
    s = apply_symmetry(Sequence.binary([1, 1, 1, 1]), SymmetryElement(alternate=True))
    assert s.entries == (1, -1, 1, -1)


def test_composition_order_is_reverse_alternate_negate():
    s = Sequence.binary([1, 1, -1])
    g = SymmetryElement(negate=True, reverse=True, alternate=True)
    # reverse -> (-1, 1, 1); alternate -> (-1, -1, 1); negate -> (1, 1, -1)
    assert apply_symmetry(s, g).entries == (1, 1, -1)


def test_canonical_examples():
    a = canonical_form(Sequence.binary([-1, -1, -1, 1]))
    b = canonical_form(Sequence.binary([1, 1, 1, -1]))
    assert a == b
    assert canonical_form(Sequence.binary([1])).entries == (-1,)
    # orbit of (1,1,1,1): itself, its negation, and the two alternating words
    assert canonical_form(Sequence.binary([1, -1, 1, -1])) == canonical_form(
        Sequence.binary([1, 1, 1, 1]))
    assert canonical_form(Sequence.binary([1, 1, 1, 1])).entries == (-1, -1, -1, -1)


def test_canonical_needs_binary():
    with pytest.raises(UnsupportedAlphabetError):
        canonical_form(Sequence.complex([1, 1j]))


@given(binary_lists)
def test_canonical_idempotent_and_orbit_constant(values):
    s = Sequence.binary(values)
    c = canonical_form(s)
    assert canonical_form(c) == c
    assert is_canonical(c)
    for g in SYMMETRIES:
        assert canonical_form(apply_symmetry(s, g)) == c


@given(binary_lists.filter(lambda v: len(v) >= 2))
def test_symmetries_preserve_max_sidelobe(values):
    s = Sequence.binary(values)
    rho = aperiodic_autocorrelation(s)
    for g in SYMMETRIES:
        t = apply_symmetry(s, g)
        assert max_sidelobe(t) == max_sidelobe(s)
        if g == SymmetryElement(alternate=True):
            rho_g = aperiodic_autocorrelation(t)
            assert all(rho_g[k] == (-1) ** k * rho[k] for k in range(len(rho)))


@given(binary_lists, st.sampled_from(SYMMETRIES), st.sampled_from(SYMMETRIES))
def test_compose_matches_sequential_application(values, g, h):
    s = Sequence.binary(values)
    composed = g.compose(h, s.n)
    assert apply_symmetry(s, composed) == apply_symmetry(apply_symmetry(s, h), g)


@given(st.integers(min_value=1, max_value=9))
def test_group_closure_and_involutions(n):
    for g in SYMMETRIES:
        assert g.compose(g, n) == SymmetryElement() or g.reverse and g.alternate and n % 2 == 0
        for h in SYMMETRIES:
            assert g.compose(h, n) in SYMMETRIES


def test_orbit_size_of_barker13_is_four():
    s = parse_pm_string("+++++--++-+-+")
    assert len(orbit(s)) == 4


def test_json_roundtrip_binary_and_complex():
    s = Sequence.binary([1, -1, 1])
    assert loads(dumps(s)) == s
    assert json.loads(dumps(s)) == {"alphabet": "pm1", "values": [1, -1, 1]}
    c = Sequence.roots([1, -1], 2)
    back = loads(dumps(c))
    assert back.alphabet == Alphabet("roots", 2)
    assert back.entries == (1 + 0j, -1 + 0j)
    assert loads("+-") == Sequence.binary([1, -1])


@pytest.mark.parametrize("obj", [
    {"alphabet": "pm1", "values": [1, 2]},
    {"alphabet": "roots:x", "values": []},
    {"values": [1]},
    {"alphabet": "complex", "values": [[1, 2, 3]]},
])
def test_json_rejects_malformed(obj):
    with pytest.raises(ParseError):
        from_json_obj(obj)
