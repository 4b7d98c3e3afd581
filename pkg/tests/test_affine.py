"""Affine diagram construction, Kac labels and the white-node rules."""

import pytest

from kacvmrt.affine import (
    MarkedKacDiagram,
    affine_diagram,
    kac_labels,
    validate_kac_marking,
)
from kacvmrt.diagrams import classify
from kacvmrt.roots import CartanType, highest_root


def test_a1_untwisted():
    a = affine_diagram(CartanType("A", 1), 1)
    assert a.labels == (1, 1)
    (e,) = a.edges
    assert e.mult == 4 and e.short is None  # the (-2,-2) bond


def test_a2_twisted():
    a = affine_diagram(CartanType("A", 2), 2)
    (e,) = a.edges
    assert e.mult == 4 and e.short == 1
    # the label-1 node is the long (arrow-tail) end, label 2 the short end
    assert a.labels == (1, 2)


def test_e6_untwisted_labels():
    a = affine_diagram(CartanType("E", 6), 1)
    assert a.labels == (1, 1, 2, 2, 3, 2, 1)
    theta = highest_root(CartanType("E", 6))
    assert a.labels[1:] == theta.coeffs


@pytest.mark.parametrize("n", range(2, 9))
def test_untwisted_labels_extend_highest_root(n):
    for fam in "BCD":
        if fam == "D" and n < 3:
            continue
        t = CartanType(fam, n)
        a = affine_diagram(t, 1)
        assert a.labels[0] == 1
        assert a.labels[1:] == highest_root(t).coeffs


def test_cn_labels():
    assert affine_diagram(CartanType("C", 4), 1).labels == (1, 2, 2, 2, 1)


def test_twisted_label_tables():
    cases = [
        (("A", 4), 2, (1, 2, 2)),
        (("A", 6), 2, (1, 2, 2, 2)),
        (("A", 5), 2, (1, 1, 2, 1)),
        (("A", 7), 2, (1, 1, 2, 2, 1)),
        (("A", 3), 2, (1, 1, 1)),
        (("D", 5), 2, (1, 1, 1, 1, 1)),
        (("E", 6), 2, (1, 1, 2, 3, 2)),
        (("D", 4), 3, (1, 2, 1)),
    ]
    for (fam, r), tw, want in cases:
        assert affine_diagram(CartanType(fam, r), tw).labels == want


def test_labels_are_null_vector():
    for base, tw in [(CartanType("A", 8), 1), (CartanType("B", 6), 1),
                     (CartanType("A", 10), 2), (CartanType("D", 7), 2),
                     (CartanType("E", 8), 1), (CartanType("G", 2), 1),
                     (CartanType("D", 4), 3)]:
        a = affine_diagram(base, tw)
        m = a.cartan_matrix()
        n = a.num_nodes
        for j in range(n):
            assert sum(a.labels[i] * m[i][j] for i in range(n)) == 0
        assert kac_labels(a) == a.labels


def test_untwisted_finite_part_is_base():
    for t in [CartanType("A", 5), CartanType("B", 4), CartanType("C", 5),
              CartanType("D", 6), CartanType("E", 7), CartanType("F", 4),
              CartanType("G", 2)]:
        a = affine_diagram(t, 1)
        ((got, _),) = classify(a.finite_part())
        assert got == t


def test_twisted_finite_parts():
    cases = [
        (("A", 8), 2, CartanType("B", 4)),
        (("A", 7), 2, CartanType("C", 4)),
        (("D", 6), 2, CartanType("B", 5)),
        (("E", 6), 2, CartanType("F", 4)),
        (("D", 4), 3, CartanType("G", 2)),
    ]
    for (fam, r), tw, want in cases:
        a = affine_diagram(CartanType(fam, r), tw)
        ((got, _),) = classify(a.finite_part())
        assert got == want


def test_inadmissible_twists_rejected():
    for base, tw in [(CartanType("B", 3), 2), (CartanType("C", 4), 2),
                     (CartanType("A", 2), 3), (CartanType("D", 5), 3),
                     (CartanType("F", 4), 2), (CartanType("A", 4), 5)]:
        with pytest.raises(ValueError, match="twisted"):
            affine_diagram(base, tw)


class TestMarkingRules:
    def test_group_rule(self):
        bn = affine_diagram(CartanType("B", 5), 1)
        assert validate_kac_marking(MarkedKacDiagram(bn, frozenset({0})), "group")
        assert validate_kac_marking(MarkedKacDiagram(bn, frozenset({1})), "group")
        # white on a label-2 node violates the rule
        assert not validate_kac_marking(MarkedKacDiagram(bn, frozenset({3})), "group")
        # two whites are Hermitian, not group
        assert not validate_kac_marking(MarkedKacDiagram(bn, frozenset({0, 1})), "group")

    def test_simple_rule_twist1(self):
        cn = affine_diagram(CartanType("C", 4), 1)
        assert validate_kac_marking(MarkedKacDiagram(cn, frozenset({2})), "simple")
        assert not validate_kac_marking(MarkedKacDiagram(cn, frozenset({0})), "simple")

    def test_simple_rule_twist2(self):
        a = affine_diagram(CartanType("A", 4), 2)
        assert validate_kac_marking(MarkedKacDiagram(a, frozenset({0})), "simple")
        assert not validate_kac_marking(MarkedKacDiagram(a, frozenset({1})), "simple")

    def test_hermitian_rule(self):
        cn = affine_diagram(CartanType("C", 4), 1)
        m = MarkedKacDiagram(cn, frozenset({0, 4}))
        assert validate_kac_marking(m, "hermitian-nonexceptional")
        assert validate_kac_marking(m, "hermitian")
        assert not validate_kac_marking(m, "group")
        bad = MarkedKacDiagram(cn, frozenset({0, 2}))
        assert not validate_kac_marking(bad, "hermitian-nonexceptional")

    def test_unknown_kind(self):
        a = affine_diagram(CartanType("A", 3), 1)
        with pytest.raises(ValueError):
            validate_kac_marking(MarkedKacDiagram(a, frozenset({0})), "weird")
