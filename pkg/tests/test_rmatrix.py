import pytest

from gvbraid.rmatrix import (
    FUNDAMENTAL_WEIGHTS,
    apply_at,
    braided_r_matrix,
    braided_twist,
    check_gvb_matrix_relations,
    check_twist_axioms,
    compose,
    flip_table,
    fundamental_twist,
    gvb_generator_tables,
    hecke_relation_holds,
    is_involutive,
    pair_table_dense,
    r_matrix,
    twist_exchange_identities,
    twist_table,
    with_entry,
    yang_baxter_holds,
)
from gvbraid.scalars import ONE, rational, variable

q = variable("q")
t = variable("t")
QDIFF = q - q ** -1


# -- stock tables ------------------------------------------------------------------


def test_braided_r_matrix_dim2_frozen():
    table = braided_r_matrix(2)
    assert table[(0, 0)] == {(0, 0): q}
    assert table[(1, 1)] == {(1, 1): q}
    assert table[(0, 1)] == {(1, 0): ONE}
    assert table[(1, 0)] == {(0, 1): ONE, (1, 0): QDIFF}


def test_fundamental_twist_dim2_is_plain_flip():
    # the built-in dimension-2 weights pair to zero, so the twist is trivial
    assert fundamental_twist(2) == flip_table(2)


def test_fundamental_twist_dim3_carries_t_powers():
    table = fundamental_twist(3)
    assert table[(0, 0)] == {(0, 0): ONE}
    assert table[(0, 1)] == {(1, 0): t}
    assert table[(1, 0)] == {(0, 1): t ** -1}
    assert table[(1, 2)] == {(2, 1): t}


def test_fundamental_twist_unknown_dimension():
    with pytest.raises(ValueError):
        fundamental_twist(4)


def test_compose_is_matrix_product():
    f = flip_table(2)
    assert compose(f, f) == {
        (a, b): {(a, b): ONE} for a in range(2) for b in range(2)
    }
    assert compose(f, r_matrix(2)) == braided_r_matrix(2)


def test_pair_table_dense_frozen():
    assert pair_table_dense(flip_table(2), 2) == [
        ["1", "0", "0", "0"],
        ["0", "0", "1", "0"],
        ["0", "1", "0", "0"],
        ["0", "0", "0", "1"],
    ]


def test_with_entry_overrides_and_drops_zeros():
    table = flip_table(2)
    bumped = with_entry(table, (0, 1), (1, 0), rational(2))
    assert bumped[(0, 1)] == {(1, 0): rational(2)}
    assert table[(0, 1)] == {(1, 0): ONE}  # original untouched
    erased = with_entry(table, (0, 1), (1, 0), rational(0))
    assert (0, 1) not in erased


# -- kernels -----------------------------------------------------------------------


def test_apply_at_non_adjacent_slots():
    state = {(5, 6, 7): ONE}
    swapped = apply_at(flip_table(8), state, 1, 3)
    assert swapped == {(7, 6, 5): ONE}
    # slots are 1-based and ordered independently of adjacency
    assert apply_at(flip_table(8), state, 2, 3) == {(5, 7, 6): ONE}


def test_apply_at_accumulates_and_cancels():
    table = {(0, 0): {(0, 0): ONE, (1, 1): q}, (1, 1): {(1, 1): -q}}
    state = {(0, 0): ONE, (1, 1): ONE}
    assert apply_at(table, state, 1, 2) == {(0, 0): ONE}


# -- identity checks ---------------------------------------------------------------


@pytest.mark.parametrize("dim", [2, 3])
def test_braided_r_matrix_is_hecke(dim):
    table = braided_r_matrix(dim)
    assert yang_baxter_holds(table, dim)
    assert hecke_relation_holds(table, dim)
    assert not is_involutive(table, dim)


def test_flip_is_involutive_but_not_hecke():
    f = flip_table(2)
    assert yang_baxter_holds(f, 2)
    assert is_involutive(f, 2)
    assert not hecke_relation_holds(f, 2)


@pytest.mark.parametrize("dim", [2, 3])
def test_braided_twist_is_involutive(dim):
    table = fundamental_twist(dim)
    assert is_involutive(table, dim)
    assert yang_baxter_holds(table, dim)


def test_twist_exchange_identities_hold():
    results = twist_exchange_identities(
        r_matrix(3), twist_table(FUNDAMENTAL_WEIGHTS[3]), 3
    )
    assert [name for name, _, _ in results] == ["exchange_rff", "exchange_ffr"]
    assert all(ok for _, ok, _ in results)
    assert all(witness is None for _, _, witness in results)


@pytest.mark.parametrize("dim", [2, 3])
def test_check_twist_axioms_all_pass(dim):
    checks = check_twist_axioms(dim)
    assert [name for name, _, _ in checks] == [
        "twist_braid_identity",
        "pairing_bilinear",
        "involutive_braided_twist",
        "braid_relation_r",
        "braid_relation_f",
        "hecke_r",
        "exchange_rff",
        "exchange_ffr",
    ]
    assert all(ok for _, ok, _ in checks)


def test_check_twist_axioms_weight_count_mismatch():
    with pytest.raises(ValueError):
        check_twist_axioms(3, weights=((1, 0), (0, 1)))


# -- the monoid relations ----------------------------------------------------------


@pytest.mark.parametrize("strands,expected_count", [(3, 4), (4, 12)])
def test_generator_tables_satisfy_every_relation(strands, expected_count):
    tables = gvb_generator_tables(3)
    report = check_gvb_matrix_relations(
        tables["crossing"], tables["virtual"], 3, strands=strands
    )
    assert report.ok
    assert report.checked == expected_count
    assert report.failed == 0
    # only the crossing family squares to the identity, so the
    # representation factors through the quotient killing squared crossings
    assert report.details["involutive_families"] == ["crossing"]


def test_swapped_orientation_is_a_frozen_negative_control():
    # putting the Hecke operator on the crossings and the twist on the
    # virtual letters breaks both mixed relations already in dimension 3
    report = check_gvb_matrix_relations(
        braided_r_matrix(3), fundamental_twist(3), 3, strands=3
    )
    assert not report.ok
    assert report.failed == 2
    assert report.first_counterexample == "mixed_low_1 on input e[1, 0, 0]"
    assert report.details["involutive_families"] == ["virtual"]


def test_perturbed_entry_breaks_a_relation():
    tables = gvb_generator_tables(3)
    perturbed = with_entry(tables["virtual"], (0, 1), (1, 0), rational(2))
    report = check_gvb_matrix_relations(
        tables["crossing"], perturbed, 3, strands=3
    )
    assert report.failed >= 1
    assert report.first_counterexample == "virtual_braid_1 on input e[1, 0, 0]"


def test_custom_weights_flow_through():
    weights = ((0, 0), (0, 0), (0, 0))
    tables = gvb_generator_tables(3, weights=weights)
    assert tables["crossing"] == flip_table(3)
    report = check_gvb_matrix_relations(
        tables["crossing"], tables["virtual"], 3, strands=3
    )
    assert report.ok
