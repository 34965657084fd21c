import pytest

from garside import (GermError, GermSyntaxError, GermValidationError,
                     format_germ, parse_germ, validate_germ)
from garside.germ import make_germ

WREATH_FILE = """\
germ v1
# two commuting generators swapped by a third
simples: 1 a b c ab ac bc abc
delta: abc
prod a b ab
prod b a ab
prod a c ac
prod c b ac
prod b c bc
prod c a bc
prod a bc abc
prod b ac abc
prod c ab abc
prod ab c abc
prod ac a abc
prod bc b abc
"""

TRIVIAL_FILE = """\
germ v1
simples: 1
delta: 1
"""


def test_parse_wreath_file():
    g = parse_germ(WREATH_FILE)
    assert len(g) == 8
    assert sorted(g.names[a] for a in g.atoms) == ["a", "b", "c"]
    assert g.names[g.delta] == "abc"
    assert validate_germ(g).ok


def test_parse_trivial_file():
    g = parse_germ(TRIVIAL_FILE)
    assert len(g) == 1
    assert g.delta == g.unit
    assert g.atoms == ()


def test_parse_missing_completion_names_complement_axiom():
    # a.b = delta exists but c has no left completion t.c = delta
    text = """\
germ v1
simples: 1 a b c d
delta: d
prod a b d
prod c a d
"""
    with pytest.raises(GermValidationError) as exc:
        parse_germ(text)
    failed = {c.axiom for c in exc.value.report.failures()}
    assert "complements" in failed


def test_parse_errors_carry_line_numbers():
    with pytest.raises(GermSyntaxError) as exc:
        parse_germ("germ v2\n")
    assert exc.value.line == 1

    with pytest.raises(GermSyntaxError) as exc:
        parse_germ("germ v1\nsimples: 1 a\ndelta: a\nprod a a z\n")
    assert exc.value.line == 4 and "unknown" in str(exc.value)

    with pytest.raises(GermSyntaxError) as exc:
        parse_germ("germ v1\nsimples: 1 a b\ndelta: b\nprod a a b\nprod a a b\n")
    assert "duplicate product" in str(exc.value)

    with pytest.raises(GermSyntaxError):
        parse_germ("germ v1\nsimples: a b\ndelta: b\n")  # no unit

    with pytest.raises(GermSyntaxError):
        parse_germ("germ v1\nsimples: 1 a.b\ndelta: 1\n")  # bad name


def test_format_round_trip(wreath):
    g2 = parse_germ(format_germ(wreath))
    assert g2.names == wreath.names
    assert g2.delta == wreath.delta
    assert g2.product_rows == wreath.product_rows


def test_validate_b3_and_abelian_pass(b3, ab2):
    assert validate_germ(b3).ok
    assert validate_germ(ab2).ok


def test_validate_idempotent_fails_cancellativity():
    g = make_germ(["1", "a"], "a", [("a", "a", "a")])
    report = validate_germ(g)
    assert not report.ok
    assert any(c.axiom == "cancellativity" and not c.passed for c in report.checks)


def test_left_divides(wreath):
    s = wreath.simple
    assert wreath.left_divides(s("a"), s("ab"))
    assert wreath.left_divides(wreath.unit, s("bc"))
    assert not wreath.left_divides(s("b"), s("ac"))
    assert sorted(wreath.names[d] for d in wreath.left_divisors(s("ac"))) == \
        ["1", "a", "ac", "c"]


def test_meet_join(wreath):
    s = wreath.simple
    assert wreath.meet(s("ab"), s("ac")) == s("a")
    assert wreath.join(s("a"), wreath.unit) == s("a")
    assert wreath.join(s("a"), s("c")) == s("ac")


def test_lcomp(wreath):
    s = wreath.simple
    assert wreath.lcomp(s("c"), s("a")) == s("b")
    assert wreath.lcomp(wreath.unit, s("bc")) == s("bc")
    assert wreath.lcomp(s("a"), s("c")) == s("c")


def test_complement(wreath):
    s = wreath.simple
    assert wreath.complement(s("a")) == s("bc")
    assert wreath.complement(s("c")) == s("ab")
    assert wreath.complement(wreath.delta) == wreath.unit
    assert wreath.complement(wreath.unit) == wreath.delta
    for x in range(len(wreath)):
        assert wreath.product(x, wreath.complement(x)) == wreath.delta
        assert wreath.product(wreath.rcomplement(x), x) == wreath.delta
        assert wreath.rcomplement(wreath.complement(x)) == x


def test_opposite(wreath, ab2):
    op = wreath.opposite()
    s = wreath.simple
    assert sorted(wreath.names[d] for d in op.left_divisors(s("ac"))) == \
        ["1", "ac", "b", "c"]
    opop = op.opposite()
    assert opop is wreath
    # commutative germ is its own opposite
    ab_op = ab2.opposite()
    assert ab_op.product_rows == ab2.product_rows


def test_tau_duality_exhaustive(wreath, b3):
    for g in (wreath, b3):
        op = g.opposite()
        for s in range(len(g)):
            for t in range(len(g)):
                assert op.meet(s, t) == g.rmeet(s, t)
                assert op.join(s, t) == g.rjoin(s, t)
                assert op.lcomp(s, t) == g.rcomp(s, t)
                assert op.left_divides(s, t) == g.right_divides(s, t)


def test_lattice_laws_exhaustive(wreath, b3, ab3):
    for g in (wreath, b3, ab3):
        for s in range(len(g)):
            for t in range(len(g)):
                assert g.meet(s, t) == g.meet(t, s)
                assert g.join(s, t) == g.join(t, s)
                assert g.meet(s, g.join(s, t)) == s
                assert g.join(s, g.meet(s, t)) == s
                assert g.product(s, g.lcomp(s, t)) == g.join(s, t)


CYCLIC_FILE = """\
germ v1
# three atoms whose pairwise products all equal delta, cyclically
simples: 1 a b c d
delta: d
prod a b d
prod b c d
prod c a d
"""


def test_cyclic_complement_germ_from_file():
    # a valid non-builtin germ: five simples, complement permutes the atoms
    from garside import automata, delta_of_simple, is_delta_pure, quasi_center_basis
    from oracles import RelationModel, model_check

    g = parse_germ(CYCLIC_FILE)
    assert sorted(g.names[a] for a in g.atoms) == ["a", "b", "c"]
    assert is_delta_pure(g)
    assert [g.names[d] for d in quasi_center_basis(g)] == ["d"]
    for a in g.atoms:
        assert delta_of_simple(g, a) == g.delta
    acceptor = automata.build_nf_automaton(g, "proper")
    assert [automata.count_accepted(acceptor, n) for n in range(5)] == \
        [1, 3, 6, 12, 24]
    # the presented monoid: ab = bc = ca, nothing else
    model = RelationModel(3, ["a", "b", "c"],
                          [[(0, 1), (1, 2), (2, 0)]])
    model_check(g, model, 5)


def test_make_germ_rejects_bad_input():
    with pytest.raises(GermError):
        make_germ(["1", "a", "a"], "a", [])  # duplicate name
    with pytest.raises(GermError):
        make_germ(["a"], "a", [])  # missing unit
    with pytest.raises(GermError):
        make_germ(["1", "a"], "b", [])  # unknown delta
    with pytest.raises(GermError):
        make_germ(["1", "a|b"], "1", [])  # reserved character
