from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quiverpaths.fock import (
    FockVector,
    ad_power,
    apply_word,
    cartan_inf,
    commutator,
    content_vector,
    e_op,
    f_generated,
    f_op,
    fock_from_json,
    fock_to_json,
    h_op,
    parse_word,
    weight_inf,
)
from quiverpaths.partitions import EMPTY, YoungDiagram, young_diagrams, young_diagrams_upto

VAC = FockVector.vacuum()


def corners(Y):
    """Addable and removable contents found by trying every cell."""
    rows = len(Y.parts)
    add, rem = [], []
    for i in range(rows + 1):
        length = Y.parts[i] if i < rows else 0
        above = Y.parts[i - 1] if i > 0 else float("inf")
        if length < above:
            add.append(length - i)
        below = Y.parts[i + 1] if i + 1 < rows else 0
        if i < rows and length > below:
            rem.append(length - 1 - i)
    return add, rem


def test_examples():
    assert f_op(0, VAC) == FockVector.basis(YoungDiagram((1,)))
    assert apply_word(parse_word("F-1 F1 F0")) == FockVector.basis(YoungDiagram((2, 1)))
    assert e_op(0, VAC) == 0
    assert h_op(0, VAC) == VAC
    assert h_op(1, VAC) == 0
    v = apply_word([("F", 0), ("F", 1), ("F", -1)], FockVector.basis(YoungDiagram((1,))))
    # [1] -> [1,1] -> [2,1] -> [2,2]
    assert v == FockVector.basis(YoungDiagram((2, 2)))


def test_parse_word():
    assert parse_word("F-1 F1,E0 h2") == [("F", -1), ("F", 1), ("E", 0), ("H", 2)]
    for bad in ("", "X1", "F", "F1.5", "E--1"):
        with pytest.raises(ValueError):
            parse_word(bad)


def test_contents_bookkeeping():
    for Y in young_diagrams_upto(7):
        for k in range(-8, 9):
            Z = f_op(k, FockVector.basis(Y))
            if not Z:
                continue
            (Zd,) = Z.support()
            cz, cy = content_vector(Zd), content_vector(Y)
            cy[k] = cy.get(k, 0) + 1
            assert cz == cy


def test_weight_is_addable_minus_removable():
    for Y in young_diagrams_upto(10):
        add, rem = corners(Y)
        expected = {}
        for k in add:
            expected[k] = expected.get(k, 0) + 1
        for k in rem:
            expected[k] = expected.get(k, 0) - 1
        assert weight_inf(Y) == {k: u for k, u in expected.items() if u}


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(0, 6))
def test_relations_on_random_diagrams(k, l, size):
    for Y in young_diagrams(size):
        v = FockVector.basis(Y)
        ef = commutator(lambda w: e_op(k, w), lambda w: f_op(l, w), v)
        assert ef == (h_op(k, v) if k == l else 0)
        he = commutator(lambda w: h_op(k, w), lambda w: e_op(l, w), v)
        assert he == cartan_inf(k, l) * e_op(l, v)


def test_serre_relations():
    for Y in young_diagrams_upto(6):
        v = FockVector.basis(Y)
        for op in (e_op, f_op):
            for k in range(-3, 4):
                for l in range(-3, 4):
                    power = 1 - cartan_inf(k, l)
                    if k != l:
                        assert ad_power(k, l, power, v, op) == 0


def test_f_generation_reaches_every_diagram():
    reached = set()
    for v in f_generated(5, range(-5, 6)):
        reached |= v.support()
    assert reached == set(young_diagrams_upto(5))


def test_vector_arithmetic_keeps_no_zeros():
    v = FockVector.basis(YoungDiagram((2,))) + FockVector.basis(EMPTY)
    assert len(v - v) == 0
    assert not (v - v)
    assert len(0 * v) == 0
    w = FockVector([(EMPTY, 1), (EMPTY, -1), (YoungDiagram((1,)), Fraction(1, 2))])
    assert w.support() == {YoungDiagram((1,))}
    assert repr(FockVector()) == "0"


def test_json_round_trip():
    v = 3 * f_op(1, f_op(0, VAC)) + Fraction(-1, 2) * f_op(-1, f_op(0, VAC))
    rows = fock_to_json(v)
    assert rows == [{"diagram": [1, 1], "coeff": "-1/2"}, {"diagram": [2], "coeff": "3/1"}]
    assert fock_from_json(rows) == v
