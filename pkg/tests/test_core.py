"""Types, semitypes, type sets, and the duality operations."""

from __future__ import annotations

import pytest

from tropom import (
    EmptyCoordinateError,
    OrderedPartition,
    OutOfRangeError,
    SemiType,
    TomTypeSet,
    Type,
    completion,
    constant_type,
    dual,
    elements_of,
    mask_from_elements,
    make_type,
    reduction,
    transpose,
)
from helpers import T, prism_tom, typeset


def test_mask_roundtrip():
    assert mask_from_elements([2, 3], 5) == 0b110
    assert elements_of(0b110) == (2, 3)
    assert elements_of(mask_from_elements([5, 1], 5)) == (1, 5)
    assert elements_of(0) == ()


def test_mask_rejects_out_of_range():
    with pytest.raises(OutOfRangeError):
        mask_from_elements([0], 3)
    with pytest.raises(OutOfRangeError):
        mask_from_elements([4], 3)


def test_type_literal_and_str():
    a = T(3, "23", "13")
    assert a.n == 2 and a.d == 3
    assert a.coords == (0b110, 0b101)
    assert str(a) == "(23,13)"
    assert a.coord_sets() == ((2, 3), (1, 3))


def test_type_rejects_empty_coordinate():
    with pytest.raises(EmptyCoordinateError) as exc:
        Type(2, 3, (0b1, 0))
    assert exc.value.position == 2


def test_type_obj_roundtrip():
    a = make_type(2, 4, [[4, 1], [2]])
    assert a.to_obj() == [[1, 4], [2]]
    assert Type.from_obj(a.to_obj(), 4) == a


def test_type_dimension_guard():
    with pytest.raises(ValueError):
        make_type(1, 65, [list(range(1, 66))])


def test_constant_type():
    assert constant_type(3, 4, 2) == T(4, "2", "2", "2")
    with pytest.raises(OutOfRangeError):
        constant_type(2, 3, 4)


def test_semitype_allows_and_reports_empties():
    s = SemiType(2, 3, (0b110, 0))
    assert not s.is_total()
    assert str(s) == "(23,-)"
    with pytest.raises(EmptyCoordinateError):
        s.to_type()
    t = SemiType(2, 3, (0b110, 0b1))
    assert t.is_total()
    assert t.to_type() == T(3, "23", "1")


def test_ordered_partition_validation():
    p = OrderedPartition.from_sets(3, [[2], [1, 3]])
    assert str(p) == "(2|13)"
    with pytest.raises(ValueError):
        OrderedPartition.from_sets(3, [[1, 2], [2, 3]])
    with pytest.raises(ValueError):
        OrderedPartition.from_sets(3, [[1], [2]])
    with pytest.raises(EmptyCoordinateError):
        OrderedPartition.from_sets(3, [[1, 2, 3], []])


def test_typeset_dedupes_and_sorts():
    a, b = T(2, "1", "2"), T(2, "12", "1")
    m = TomTypeSet.from_types([b, a, a])
    assert len(m) == 2
    assert list(m) == sorted([a, b], key=lambda t: t.coords)
    assert a in m
    assert m.has_coords((0b1, 0b10))
    assert T(2, "2", "2") not in m


def test_typeset_rejects_mixed_shapes():
    with pytest.raises(ValueError):
        TomTypeSet.from_types([T(2, "1", "2"), T(3, "1", "2")])
    with pytest.raises(ValueError):
        TomTypeSet.from_types([T(2, "1", "2"), T(2, "1", "2", "1")])


def test_typeset_obj_roundtrip():
    m = prism_tom()
    again = TomTypeSet.from_obj(m.to_obj())
    assert again == m
    assert again.to_obj() == m.to_obj()


def test_transpose_flips_incidences():
    t = transpose(T(3, "123", "1"))
    assert t == SemiType.from_sets(3, 2, [[1, 2], [1], [1]])
    back = transpose(t)
    assert back == T(3, "123", "1").to_semitype()


def test_completion_adds_every_erasure():
    m = prism_tom()
    comp = completion(m)
    expected = set()
    for t in m:
        for pattern in range(4):
            expected.add(
                SemiType(2, 3, tuple(
                    c if pattern >> i & 1 else 0 for i, c in enumerate(t.coords)
                ))
            )
    assert comp == expected
    assert len(comp) == 32


def test_reduction_inverts_completion():
    m = prism_tom()
    assert reduction(completion(m)) == m


def test_reduction_of_empty_pool_needs_shape():
    assert len(reduction([], n=2, d=2)) == 0
    with pytest.raises(ValueError):
        reduction([])


def test_dual_of_rank_one_set():
    m = typeset(3, [("1",), ("2",), ("3",), ("12",), ("13",), ("23",), ("123",)])
    assert dual(m) == typeset(1, [("1", "1", "1")])


def test_dual_is_an_involution_on_the_prism():
    m = prism_tom()
    dm = dual(m)
    assert (dm.n, dm.d) == (3, 2)
    assert dual(dm) == m
