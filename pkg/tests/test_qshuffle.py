import pytest

from gvbraid.braided import builtin_algebras, hoffman_stuffle, qpoly
from gvbraid.qshuffle import (
    Tensor,
    act_word,
    act_word_sum,
    delete_units,
    hat_tuples,
    quantum_shuffle,
    quasi_shuffle_inductive,
    quasi_shuffle_section,
    verify_quasi_shuffle,
    verify_shuffle_specialization,
)
from gvbraid.scalars import ONE, parse_scalar, rational, variable
from gvbraid.section import shuffle_lift_sum
from gvbraid.words import parse_word

q = variable("q")


@pytest.fixture
def stuffle():
    return hoffman_stuffle(6)


def pure(algebra, *labels):
    return Tensor.from_labels(algebra, labels)


# -- Tensor basics ------------------------------------------------------------------


def test_tensor_arithmetic(stuffle):
    a = pure(stuffle, "z1", "z2")
    b = pure(stuffle, "z3")
    mixed = a + b  # mixed arity is a feature, not an error
    assert mixed.arities() == (1, 2)
    assert mixed.graded_part(1) == b
    assert (mixed - a - b).is_zero()
    assert a.scale(rational(0)).is_zero()
    assert str(b.scale(q - 1)) == "(q - 1)*z3"
    assert str(pure(stuffle, "z1") - pure(stuffle, "z2")) == "z1 - z2"
    with pytest.raises(ValueError):
        Tensor.pure(stuffle, (99,))
    with pytest.raises(TypeError):
        hash(a)
    with pytest.raises(ValueError):
        a + pure(hoffman_stuffle(6), "z1")  # distinct instances never mix


def test_act_word_and_delete_units(stuffle):
    vw = pure(stuffle, "z1", "z2")
    flipped = act_word(parse_word("s1", 2), vw)
    assert flipped == pure(stuffle, "z2", "z1")
    contracted = act_word(parse_word("x1", 2), vw)
    assert contracted == pure(stuffle, "1", "z3")
    assert delete_units(contracted) == pure(stuffle, "z3")
    with pytest.raises(ValueError):
        act_word(parse_word("s1", 3), vw)
    summed = act_word_sum(shuffle_lift_sum(1, 1), vw)
    assert delete_units(summed) == (
        vw + pure(stuffle, "z2", "z1") + pure(stuffle, "z3")
    )


def test_delete_units_merges_colliding_terms(stuffle):
    t = Tensor(stuffle, {(0, 1): ONE, (1, 0): ONE, (1,): ONE})
    slim = delete_units(t)
    assert slim.terms == {(1,): rational(3)}


# -- frozen small products -----------------------------------------------------------


def test_one_one_products_frozen(stuffle):
    # z1 * z2 = z1(x)z2 + z2(x)z1 + z3  (flip braiding, stuffle contraction)
    out = quasi_shuffle_inductive(pure(stuffle, "z1"), pure(stuffle, "z2"))
    assert out == (
        pure(stuffle, "z1", "z2") + pure(stuffle, "z2", "z1") + pure(stuffle, "z3")
    )
    # in the q-polynomial algebra the braiding contributes a q-power:
    # x1 * x1 = (1 + q) x1(x)x1 + x2
    algebra = qpoly(4)
    out = quasi_shuffle_inductive(pure(algebra, "x1"), pure(algebra, "x1"))
    expected = Tensor(
        algebra, {(1, 1): parse_scalar("1 + q"), (2,): ONE}
    )
    assert out == expected
    # truncation kills the contraction at the top degree
    out = quasi_shuffle_inductive(pure(algebra, "x2"), pure(algebra, "x3"))
    assert out == Tensor(algebra, {(2, 3): ONE, (3, 2): q ** 6})


def test_empty_factors_are_scalar_multiplication(stuffle):
    empty = Tensor.pure(stuffle, ())
    v = pure(stuffle, "z1", "z4")
    assert quasi_shuffle_inductive(empty, v) == v
    assert quasi_shuffle_inductive(v, empty) == v
    assert quasi_shuffle_section(empty, v) == v


def test_bilinearity_across_mixed_arities(stuffle):
    u = pure(stuffle, "z1")
    v = pure(stuffle, "z2", "z1")
    w = pure(stuffle, "z3")
    lhs = quasi_shuffle_inductive(u + v, w.scale(q))
    rhs = (
        quasi_shuffle_inductive(u, w).scale(q)
        + quasi_shuffle_inductive(v, w).scale(q)
    )
    assert lhs == rhs


def test_unit_legs_are_rejected(stuffle):
    with pytest.raises(ValueError):
        quasi_shuffle_inductive(pure(stuffle, "1"), pure(stuffle, "z1"))
    with pytest.raises(ValueError):
        quasi_shuffle_section(pure(stuffle, "z1"), pure(stuffle, "1", "z1"))
    with pytest.raises(ValueError):
        quantum_shuffle(pure(stuffle, "1"), pure(stuffle, "z1"))


def test_leaky_algebras_are_rejected():
    algebra = hoffman_stuffle(2)
    algebra.braiding[(1, 1)] = {(0, 1): ONE}
    algebra.clear_cache()
    with pytest.raises(ValueError):
        quasi_shuffle_inductive(pure(algebra, "z1"), pure(algebra, "z1"))


# -- the two definitions agree --------------------------------------------------------


@pytest.mark.parametrize("name", ["stuffle:6", "qpoly:4", "diag:3"])
@pytest.mark.parametrize("degrees", [(1, 1), (2, 1), (2, 2), (1, 3)])
def test_inductive_equals_section_small(name, degrees):
    algebra = builtin_algebras()[name]
    p, q_deg = degrees
    for ta in hat_tuples(algebra, p):
        for tb in hat_tuples(algebra, q_deg):
            left, right = Tensor.pure(algebra, ta), Tensor.pure(algebra, tb)
            assert quasi_shuffle_inductive(left, right) == quasi_shuffle_section(
                left, right
            )


def test_verify_quasi_shuffle_reports(stuffle):
    report = verify_quasi_shuffle(stuffle, 2, 2)
    assert report.ok
    assert report.mode == "exhaustive"
    assert report.checked == 6 ** 4
    assert report.first_counterexample is None
    doc = report.to_json()
    assert doc["ok"] and doc["passed"] == doc["checked"]


def test_verify_quasi_shuffle_samples_beyond_cap():
    big = hoffman_stuffle(12)
    report = verify_quasi_shuffle(big, 3, 3, cap=100_000, sample=60, seed=7)
    assert report.ok
    assert report.mode == "sampled(60)"
    assert report.checked == 60


def test_agreement_is_combinatorial_not_axiomatic():
    # the recursion/section match is an identity of formal word sums, so it
    # survives tables that violate every braided-algebra axiom; the axioms
    # buy associativity and lift-independence, not this equality
    algebra = qpoly(3)
    algebra.braiding[(1, 1)] = {(1, 1): q ** 5}  # breaks the exchange laws
    algebra.clear_cache()
    for degrees in [(1, 1), (2, 1), (2, 2)]:
        report = verify_quasi_shuffle(algebra, *degrees)
        assert report.ok, report.summary_line()


def test_quantum_shuffle_drops_contractions(stuffle):
    u, v = pure(stuffle, "z1"), pure(stuffle, "z1")
    assert quantum_shuffle(u, v) == pure(stuffle, "z1", "z1").scale(rational(2))
    full = quasi_shuffle_inductive(u, v)
    assert full == quantum_shuffle(u, v) + pure(stuffle, "z2")


def test_zero_product_collapses_to_quantum_shuffle():
    algebra = builtin_algebras()["diag:3"]
    for p, q_deg in [(1, 1), (2, 1), (2, 2), (3, 1)]:
        report = verify_shuffle_specialization(algebra, p, q_deg)
        assert report.ok, report.summary_line()
    with pytest.raises(ValueError):
        verify_shuffle_specialization(hoffman_stuffle(3), 1, 1)


def test_associativity_spot_check(stuffle):
    u = pure(stuffle, "z1")
    v = pure(stuffle, "z2", "z1")
    w = pure(stuffle, "z1", "z3")
    lhs = quasi_shuffle_inductive(quasi_shuffle_inductive(u, v), w)
    rhs = quasi_shuffle_inductive(u, quasi_shuffle_inductive(v, w))
    assert lhs == rhs
