"""Faces, topes, vertices, refinement order, reconstruction, and minors."""

from __future__ import annotations

import pytest

from tropom import (
    OrderedPartition,
    SearchSpaceTooLargeError,
    TomTypeSet,
    check_axioms,
    contract,
    contraction_relabeling,
    delete,
    dimension,
    direction_components,
    dual,
    is_refinement_of,
    is_tope,
    is_vertex,
    reconstruct_from_topes,
    refine,
    refinement_closure,
    topes,
    vertices,
)
from helpers import T, prism_tom, typeset, PRISM_TOPES, PRISM_VERTICES


def test_direction_components_literals():
    assert direction_components(T(3, "123", "1")) == (0b111,)
    assert direction_components(T(3, "2", "13")) == (0b101, 0b10)
    assert direction_components(T(3, "2", "3")) == (0b1, 0b10, 0b100)
    assert direction_components(T(3, "23", "13")) == (0b111,)


def test_dimension_and_predicates():
    assert dimension(T(3, "123", "1")) == 0
    assert is_vertex(T(3, "123", "1"))
    assert not is_tope(T(3, "123", "1"))
    assert dimension(T(3, "12", "1")) == 1
    assert dimension(T(3, "2", "3")) == 2
    assert is_tope(T(3, "2", "3"))
    assert not is_vertex(T(3, "2", "3"))


def test_prism_topes_and_vertices_are_frozen():
    m = prism_tom()
    assert topes(m) == {T(3, *p) for p in PRISM_TOPES}
    assert vertices(m) == {T(3, *p) for p in PRISM_VERTICES}


def test_refinement_witness_is_a_certificate():
    b, a = T(3, "23", "3"), T(3, "23", "13")
    w = is_refinement_of(b, a)
    assert w == OrderedPartition.from_sets(3, [[1], [2, 3]])
    assert refine(a, w) == b

    w2 = is_refinement_of(T(3, "3", "1"), a)
    assert w2 == OrderedPartition.from_sets(3, [[2], [3], [1]])
    assert refine(a, w2) == T(3, "3", "1")


def test_refinement_is_reflexive_and_detects_failure():
    a = T(3, "23", "13")
    assert is_refinement_of(a, a) == OrderedPartition.from_sets(3, [[1, 2, 3]])
    assert is_refinement_of(T(3, "3", "3"), T(3, "2", "123")) is None
    # subset in every coordinate is necessary but not sufficient: the two
    # restrictions of the square cell pull the partition both ways
    assert is_refinement_of(T(2, "1", "2"), T(2, "12", "12")) is None
    assert is_refinement_of(T(2, "1", "1"), T(2, "12", "12")) is not None


def test_refinement_closure_of_vertices_is_the_prism():
    m = prism_tom()
    assert refinement_closure(vertices(m)) == m
    assert refinement_closure(m) == m


def test_reconstruct_from_topes_recovers_the_prism():
    m = prism_tom()
    assert reconstruct_from_topes(TomTypeSet.from_types(topes(m))) == m


def test_reconstruct_rejects_non_topes():
    with pytest.raises(ValueError):
        reconstruct_from_topes(typeset(3, [("12", "1")]))


def test_reconstruct_caps_the_search_space():
    big = TomTypeSet.from_types(
        [T(6, *(str(j),) * 10) for j in range(1, 7)]
    )
    with pytest.raises(SearchSpaceTooLargeError):
        reconstruct_from_topes(big)


def test_delete_drops_a_hyperplane():
    m = prism_tom()
    for i in (1, 2):
        small = delete(m, i)
        assert (small.n, small.d) == (1, 3)
        assert small == typeset(
            3, [("1",), ("2",), ("3",), ("12",), ("13",), ("23",), ("123",)]
        )
    with pytest.raises(ValueError):
        delete(m, 3)


def test_contract_keeps_types_avoiding_a_direction():
    m = prism_tom()
    assert contract(m, 3) == typeset(
        2, [("1", "1"), ("2", "1"), ("12", "1"), ("2", "2"), ("2", "12")]
    )
    assert contract(m, 1) == typeset(
        2, [("1", "1"), ("1", "2"), ("1", "12"), ("12", "2"), ("2", "2")]
    )
    with pytest.raises(ValueError):
        contract(m, 4)


def test_contraction_relabeling():
    assert contraction_relabeling(3, 3) == {1: 1, 2: 2}
    assert contraction_relabeling(3, 1) == {2: 1, 3: 2}
    assert contraction_relabeling(4, 2) == {1: 1, 3: 2, 4: 3}


def test_minors_of_the_prism_satisfy_axioms():
    m = prism_tom()
    for i in (1, 2):
        assert check_axioms(delete(m, i)).ok
    for j in (1, 2, 3):
        assert check_axioms(contract(m, j)).ok


def test_duality_swaps_deletion_and_contraction():
    m = prism_tom()
    for i in (1, 2):
        assert dual(delete(m, i)) == contract(dual(m), i)
    for j in (1, 2, 3):
        assert dual(contract(m, j)) == delete(dual(m), j)
