import random

import pytest

from garside import (atom_classes, delta_of_simple, free_abelian_germ,
                     is_delta_pure, quasi_center_basis)
from garside.quasicenter import _compute_delta


def test_delta_of_simple_examples(wreath):
    s = wreath.simple
    assert delta_of_simple(wreath, s("a")) == s("ab")
    assert delta_of_simple(wreath, s("b")) == s("ab")
    assert delta_of_simple(wreath, s("c")) == s("c")
    assert delta_of_simple(wreath, wreath.unit) == wreath.unit


def test_is_delta_pure(wreath, b3, b4, ab2):
    assert is_delta_pure(b3)
    assert is_delta_pure(b4)
    assert not is_delta_pure(wreath)
    assert not is_delta_pure(ab2)


def test_is_delta_pure_needs_atoms():
    trivial = free_abelian_germ(0)
    with pytest.raises(ValueError):
        is_delta_pure(trivial)


def test_atom_classes(wreath, b3, ab3):
    part = atom_classes(wreath)
    blocks = [tuple(wreath.names[a] for a in c) for c in part.classes]
    assert blocks == [("a", "b"), ("c",)]
    assert [wreath.names[d] for d in part.class_delta] == ["ab", "c"]

    assert len(atom_classes(b3)) == 1
    part3 = atom_classes(ab3)
    assert len(part3) == 3
    assert all(len(c) == 1 for c in part3.classes)
    assert list(part3.class_delta) == list(ab3.atoms)


def test_quasi_center_basis(wreath, b3):
    assert sorted(wreath.names[d] for d in quasi_center_basis(wreath)) == ["ab", "c"]
    assert [d for d in quasi_center_basis(b3)] == [b3.delta]
    assert quasi_center_basis(free_abelian_germ(0)) == ()


def test_closure_bounds(wreath, b3, ab3):
    for g in (wreath, b3, ab3):
        for a in g.atoms:
            d = delta_of_simple(g, a)
            assert g.left_divides(a, d)
            assert g.left_divides(d, g.delta)


def test_join_compatibility_exhaustive(wreath, b3, ab3):
    for g in (wreath, b3, ab3):
        for s in range(len(g)):
            for t in range(len(g)):
                assert delta_of_simple(g, g.join(s, t)) == \
                    g.join(delta_of_simple(g, s), delta_of_simple(g, t))


def test_basis_elements_balanced(wreath, b3):
    for g in (wreath, b3):
        for c in atom_classes(g).class_delta:
            for s in range(len(g)):
                assert g.left_divides(s, c) == g.right_divides(s, c)


def test_closure_independent_of_atom_order(wreath, b4):
    rng = random.Random(3)
    for g in (wreath, b4):
        for s in range(len(g)):
            expected = delta_of_simple(g, s)
            for _ in range(4):
                order = list(g.atoms)
                rng.shuffle(order)
                assert _compute_delta(g, s, tuple(order)) == expected
