"""Acceptance battery: one test per promised behavior, each with an explicit
wall-clock budget measured around the exact arithmetic (no tolerances anywhere
— every comparison is on exact rationals or Laurent coefficients).

The battery only uses fresh algebra instances so no cross-test memoization can
flatter the timings.
"""

import json
import random
from fractions import Fraction
from itertools import product as iproduct
from time import perf_counter

from oracles import (
    OMITTED_OPERATOR_22,
    QQS_22_WORDS,
    QUOTED_OPERATORS_22,
    SECTION_22,
    stuffle_oracle,
    weight_words,
)
from gvbraid.braided import acts_as_gvb, builtin_algebras, hoffman_stuffle
from gvbraid.cli import main
from gvbraid.qshuffle import (
    Tensor,
    act_word_sum,
    delete_units,
    hat_tuples,
    quasi_shuffle_inductive,
    verify_quasi_shuffle,
    verify_shuffle_specialization,
)
from gvbraid.rmatrix import (
    check_gvb_matrix_relations,
    check_twist_axioms,
    gvb_generator_tables,
    is_involutive,
    with_entry,
)
from gvbraid.scalars import ONE, rational
from gvbraid.section import lift_sum_block_identities, lift_sum_recursion_holds
from gvbraid.symgroup import profile_law_violations
from gvbraid.words import WordSum, equivalent_bounded, parse_word

DEGREE_PAIRS_6 = [(p, d - p) for d in range(2, 7) for p in range(1, d)]
DEGREE_PAIRS_7 = [(p, d - p) for d in range(2, 8) for p in range(1, d)]


def word_sum(words: list[str], strands: int) -> WordSum:
    return WordSum(
        strands, {parse_word(text, strands): ONE for text in words}
    )


def apply_operators(algebra, operators: WordSum, ta: tuple, tb: tuple) -> Tensor:
    state = Tensor.pure(algebra, ta + tb)
    return delete_units(act_word_sum(operators, state))


# -- 1. the canonical section at bidegree (2,2) -------------------------------------


def test_criterion_1_section_table(capsys):
    t0 = perf_counter()
    code = main(["section", "2", "2"])
    elapsed = perf_counter() - t0
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["word_count"] == 13
    assert len(doc["rows"]) == 6
    for row, (images, profile, components, _, lift_words) in zip(
        doc["rows"], SECTION_22
    ):
        assert tuple(row["images"]) == images
        assert tuple(row["profile"]) == profile
        assert row["components"] == components
        assert row["words"] == lift_words
    # the shuffle sending (1,2,3,4) to positions (2,4,1,3) carries the
    # four-word lift
    four = [r for r in doc["rows"] if r["images"] == [2, 4, 1, 3]]
    assert len(four) == 1 and len(four[0]["words"]) == 4
    assert elapsed < 1.0, f"section table took {elapsed:.3f}s"


# -- 2. low-degree product expansions ------------------------------------------------


def test_criterion_2_operator_expansions():
    t0 = perf_counter()
    algebras = builtin_algebras()
    ops_11 = word_sum(["e", "s1", "x1"], 2)
    ops_22 = word_sum(QQS_22_WORDS, 4)

    # (1,1): u * v = u(x)v + braided swap + contraction, for every hat pair
    for algebra in algebras.values():
        for ta in hat_tuples(algebra, 1):
            for tb in hat_tuples(algebra, 1):
                got = quasi_shuffle_inductive(
                    Tensor.pure(algebra, ta), Tensor.pure(algebra, tb)
                )
                assert got == apply_operators(algebra, ops_11, ta, tb), (
                    algebra.name,
                    ta,
                    tb,
                )

    # (2,2): the product is the thirteen-operator sum, exhaustively
    for algebra in algebras.values():
        for ta in hat_tuples(algebra, 2):
            for tb in hat_tuples(algebra, 2):
                got = quasi_shuffle_inductive(
                    Tensor.pure(algebra, ta), Tensor.pure(algebra, tb)
                )
                assert got == apply_operators(algebra, ops_22, ta, tb), (
                    algebra.name,
                    ta,
                    tb,
                )

    # every word of the quoted twelve-term expansion names one of the
    # thirteen operators up to the monoid relations
    lift_words = [parse_word(w, 4) for w in QQS_22_WORDS]
    for text in QUOTED_OPERATORS_22:
        quoted = parse_word(text, 4)
        matches = [
            w for w in lift_words if equivalent_bounded(quoted, w) == "equivalent"
        ]
        assert len(matches) == 1, text

    # the quoted list misses exactly the lone middle contraction: adding it
    # restores the product, leaving it out loses terms
    stuffle = algebras["stuffle:6"]
    ta = tb = (1, 1)
    omitted = word_sum([OMITTED_OPERATOR_22], 4)
    full = apply_operators(stuffle, ops_22, ta, tb)
    quoted12 = apply_operators(
        stuffle, word_sum(QUOTED_OPERATORS_22, 4), ta, tb
    )
    missing = apply_operators(stuffle, omitted, ta, tb)
    assert quoted12 + missing == full
    assert quoted12 != full
    assert full - quoted12 == missing

    elapsed = perf_counter() - t0
    assert elapsed < 1.0, f"operator expansions took {elapsed:.3f}s"


# -- 3. the two definitions agree on every basis tensor ------------------------------


def test_criterion_3_inductive_equals_section_sweep():
    t0 = perf_counter()
    for name in ("stuffle:6", "qpoly:4"):
        algebra = builtin_algebras()[name]
        for p, q in DEGREE_PAIRS_6:
            report = verify_quasi_shuffle(
                algebra, p, q, cap=100_000, sample=100, seed=0
            )
            assert report.ok, report.summary_line()
            assert report.mode == "exhaustive"
            assert report.checked == (algebra.dim - 1) ** (p + q)
    elapsed = perf_counter() - t0
    assert elapsed < 600.0, f"definition sweep took {elapsed:.1f}s"


# -- 4. the recursion satisfied by the lift sums -------------------------------------


def test_criterion_4_lift_sum_recursion():
    t0 = perf_counter()
    for p, q in DEGREE_PAIRS_7:
        assert lift_sum_recursion_holds(p, q), (p, q)
    elapsed = perf_counter() - t0
    assert elapsed < 60.0, f"lift-sum recursion took {elapsed:.1f}s"


# -- 5. the two degenerations --------------------------------------------------------


def test_criterion_5_degenerations():
    t0 = perf_counter()

    # zero hat product: the quasi-shuffle collapses to the quantum shuffle
    diag = builtin_algebras()["diag:3"]
    for p, q in DEGREE_PAIRS_6:
        report = verify_shuffle_specialization(diag, p, q)
        assert report.ok, report.summary_line()

    # flip braiding: the product is the classical stuffle, checked against
    # an independent recursion on integer compositions
    stuffle = builtin_algebras()["stuffle:6"]

    def as_rational_dict(tensor: Tensor) -> dict:
        return {tup: coeff.constant_value() for tup, coeff in tensor.terms.items()}

    words = weight_words(6)
    assert len(words) == 63
    for u in words:
        for v in words:
            got = quasi_shuffle_inductive(
                Tensor.pure(stuffle, u), Tensor.pure(stuffle, v)
            )
            expected = {
                tup: Fraction(c) for tup, c in stuffle_oracle(u, v, 6).items()
            }
            assert as_rational_dict(got) == expected, (u, v)

    # same statement read over the full alphabet with short words
    labels = range(1, 7)
    short = [t for n in (1, 2) for t in iproduct(labels, repeat=n)]
    for u in short:
        for v in short:
            got = quasi_shuffle_inductive(
                Tensor.pure(stuffle, u), Tensor.pure(stuffle, v)
            )
            expected = {
                tup: Fraction(c) for tup, c in stuffle_oracle(u, v, 6).items()
            }
            assert as_rational_dict(got) == expected, (u, v)

    elapsed = perf_counter() - t0
    assert elapsed < 300.0, f"degenerations took {elapsed:.1f}s"


# -- 6. combinatorial laws of bubble profiles and lift blocks ------------------------


def test_criterion_6_profile_and_block_laws():
    t0 = perf_counter()
    for p, q in DEGREE_PAIRS_7:
        assert profile_law_violations(p, q) == [], (p, q)
        blocks = lift_sum_block_identities(p, q)
        assert all(blocks.values()), (p, q, blocks)
        assert set(blocks) == {
            "block1_fixes_first_point",
            "block1_identity",
            "block2_identity",
            "block3_identity",
            "partition_is_exhaustive",
        }
    elapsed = perf_counter() - t0
    assert elapsed < 60.0, f"profile laws took {elapsed:.1f}s"


# -- 7. every relation, in every representation --------------------------------------


def test_criterion_7_all_relations_hold():
    t0 = perf_counter()
    for algebra in builtin_algebras().values():
        for strands in (3, 4):
            ok, failures = acts_as_gvb(algebra, strands)
            assert ok, (algebra.name, strands, failures[:1])

    checks = check_twist_axioms(3)
    assert all(ok for _, ok, _ in checks), checks
    names = [name for name, _, _ in checks]
    assert "involutive_braided_twist" in names
    assert "exchange_rff" in names and "exchange_ffr" in names

    tables = gvb_generator_tables(3)
    assert is_involutive(tables["crossing"], 3)
    report = check_gvb_matrix_relations(
        tables["crossing"], tables["virtual"], 3, strands=3
    )
    assert report.ok and report.checked == 4
    assert report.details["involutive_families"] == ["crossing"]

    elapsed = perf_counter() - t0
    assert elapsed < 120.0, f"relation battery took {elapsed:.1f}s"


# -- 8. negative controls ------------------------------------------------------------


def test_criterion_8_negative_controls():
    t0 = perf_counter()

    # mutating one structure constant breaks a reported relation with a
    # concrete basis counterexample
    broken = hoffman_stuffle(3)
    broken.product[(1, 2)] = {1: ONE}
    del broken.product[(2, 1)]
    broken.clear_cache()
    ok, failures = acts_as_gvb(broken, strands=3)
    assert not ok
    assert len(failures) >= 1
    assert failures[0] == "virtual_braid_1 fails on z1(x)z1(x)z1"

    # perturbing one R-matrix entry breaks a reported relation likewise
    tables = gvb_generator_tables(3)
    perturbed = with_entry(tables["virtual"], (0, 1), (1, 0), rational(2))
    report = check_gvb_matrix_relations(tables["crossing"], perturbed, 3, strands=3)
    assert report.failed >= 1
    assert report.first_counterexample == "virtual_braid_1 on input e[1, 0, 0]"

    elapsed = perf_counter() - t0
    assert elapsed < 60.0, f"negative controls took {elapsed:.1f}s"


# -- 9. associativity on random triples ----------------------------------------------


def test_criterion_9_associativity():
    t0 = perf_counter()
    for name, algebra in builtin_algebras().items():
        rng = random.Random(f"assoc:{name}")
        hat = sorted(algebra.hat_basis)
        triples = 0
        while triples < 50:
            arities = [rng.randint(1, 3) for _ in range(3)]
            if sum(arities) > 5:
                continue
            triples += 1
            u, v, w = (
                Tensor.pure(
                    algebra, tuple(rng.choice(hat) for _ in range(arity))
                )
                for arity in arities
            )
            lhs = quasi_shuffle_inductive(quasi_shuffle_inductive(u, v), w)
            rhs = quasi_shuffle_inductive(u, quasi_shuffle_inductive(v, w))
            assert lhs == rhs, (name, u, v, w)
    elapsed = perf_counter() - t0
    assert elapsed < 300.0, f"associativity battery took {elapsed:.1f}s"
