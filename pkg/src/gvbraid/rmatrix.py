"""Braided R-matrices and diagonal twists on a finite-dimensional vector space.

This is the matrix side of the story: finite-dimensional representations of
the generalized virtual braid monoid built from a quantum R-matrix R and an
involutive diagonal twist F on K^d (x) K^d.  Writing P for the flip and
putting a check on the flip-composed operators (R-check = P o R,
F-check = P o F), the assignment that satisfies every defining relation is

    crossing s_i |-> F-check at slots (i, i+1)   (involutive)
    virtual  x_i |-> R-check at slots (i, i+1)   (Hecke type).

The orientation matters and is the opposite of what a first glance
suggests.  The monoid's mixed relations read  x_i s_{i+1} s_i =
s_{i+1} s_i x_{i+1}; pulling the flips out converts them exactly into the
two exchange identities

    R12 F13 F23 = F23 F13 R12,      F12 F13 R23 = R23 F13 F12

(plain R and F, leg subscripts, rightmost factor acts first) — note one R
and two F's, so the *twist* must sit on the doubled family, the crossings.
Assigning R-check to the crossings instead violates both mixed relations
already in dimension 3 (kept as a frozen negative control in the test
suite).  With the assignment above, the crossing family is involutive
because F-check squares to the identity, so the representation factors
through the quotient by squared crossings — the virtual braid group — as
the factorization claim wants.

Two-site operators are stored as sparse column tables
``{(a, b): {(c, e): coeff}}`` mapping an input basis pair to its output
combination — the same encoding :mod:`gvbraid.braided` uses for braidings,
so the kernels compose.  n-site operators never materialize: identities are
checked by acting on every basis tuple and comparing sparse states exactly.

Stock data:

* :func:`braided_r_matrix` — flip o (the standard Hecke-type solution of
  the quantum Yang-Baxter equation for the vector representation in
  dimension d), satisfying (T - q)(T + 1/q) = 0;
* :func:`fundamental_twist` — flip o (the diagonal twist t^{<a,b>} built
  from an antisymmetric pairing of weight vectors); dimensions 2 and 3 are
  built in, and dimension 2 has trivial pairing, so its twist is the plain
  flip.

:func:`check_twist_axioms` verifies the twist laws and exchange
identities; :func:`check_gvb_matrix_relations` grinds through every
defining monoid relation on any number of strands.
"""

from __future__ import annotations

from itertools import product as iproduct
from time import perf_counter
from typing import Iterable

from .report import VerificationReport
from .scalars import ONE, Scalar, variable
from .words import BRAID, GvbWord, relation_instances

__all__ = [
    "PairTable",
    "braided_r_matrix",
    "braided_twist",
    "check_gvb_matrix_relations",
    "check_twist_axioms",
    "flip_table",
    "fundamental_twist",
    "gvb_generator_tables",
    "hecke_relation_holds",
    "is_involutive",
    "pair_table_dense",
    "r_matrix",
    "twist_exchange_identities",
    "twist_table",
    "with_entry",
    "yang_baxter_holds",
]

PairTable = dict[tuple[int, int], dict[tuple[int, int], Scalar]]
State = dict[tuple[int, ...], Scalar]


# -- stock operators ---------------------------------------------------------------


def flip_table(dim: int) -> PairTable:
    return {(a, b): {(b, a): ONE} for a in range(dim) for b in range(dim)}


def r_matrix(dim: int) -> PairTable:
    """The standard quantum R-matrix on K^dim (x) K^dim:

    e_a(x)e_b |-> q e_a(x)e_b                       if a = b
    e_a(x)e_b |-> e_a(x)e_b                          if a < b
    e_a(x)e_b |-> e_a(x)e_b + (q - 1/q) e_b(x)e_a    if a > b
    """
    q = variable("q")
    qdiff = q - q ** -1
    table: PairTable = {}
    for a in range(dim):
        for b in range(dim):
            if a == b:
                table[(a, b)] = {(a, b): q}
            elif a < b:
                table[(a, b)] = {(a, b): ONE}
            else:
                table[(a, b)] = {(a, b): ONE, (b, a): qdiff}
    return table


def braided_r_matrix(dim: int) -> PairTable:
    """Flip composed with the R-matrix: the Yang-Baxter operator of Hecke
    type, (T - q)(T + 1/q) = 0."""
    return compose(flip_table(dim), r_matrix(dim))


def antisymmetric_pairing(weights: tuple[tuple[int, int], ...]) -> list[list[int]]:
    return [
        [la[0] * lb[1] - la[1] * lb[0] for lb in weights] for la in weights
    ]


def twist_table(weights: tuple[tuple[int, int], ...], variable_name: str = "t") -> PairTable:
    """Diagonal twist F(e_a (x) e_b) = t^{<a,b>} e_a (x) e_b from an
    antisymmetric pairing of rank-two weight vectors."""
    t = variable(variable_name)
    pairing = antisymmetric_pairing(weights)
    dim = len(weights)
    table: PairTable = {}
    for a in range(dim):
        for b in range(dim):
            e = pairing[a][b]
            table[(a, b)] = {(a, b): ONE if e == 0 else t ** e}
    return table


def braided_twist(weights: tuple[tuple[int, int], ...], variable_name: str = "t") -> PairTable:
    """Flip composed with the diagonal twist; involutive because the
    pairing is antisymmetric."""
    return compose(flip_table(len(weights)), twist_table(weights, variable_name))


FUNDAMENTAL_WEIGHTS: dict[int, tuple[tuple[int, int], ...]] = {
    2: ((1, 0), (-1, 0)),
    3: ((1, 0), (-1, 1), (0, -1)),
}


def fundamental_twist(dim: int) -> PairTable:
    """The braided twist for the vector representation in dimension 2 or 3."""
    try:
        weights = FUNDAMENTAL_WEIGHTS[dim]
    except KeyError:
        raise ValueError(f"no built-in weights in dimension {dim}") from None
    return braided_twist(weights)


# -- table algebra -----------------------------------------------------------------


def compose(outer: PairTable, inner: PairTable) -> PairTable:
    """(outer o inner) as a pair table; inner acts first."""
    result: PairTable = {}
    for col, mid in inner.items():
        acc: dict[tuple[int, int], Scalar] = {}
        for pair, c1 in mid.items():
            for out_pair, c2 in outer.get(pair, {}).items():
                c = c1 if c2 is ONE else c1 * c2
                prev = acc.get(out_pair)
                acc[out_pair] = c if prev is None else prev + c
        result[col] = {k: v for k, v in acc.items() if not v.is_zero()}
    return result


def with_entry(
    table: PairTable, col: tuple[int, int], row: tuple[int, int], value: Scalar
) -> PairTable:
    """Copy of the table with one matrix entry overridden (zero drops it) —
    used to build perturbed operators for negative controls."""
    copy = {pair: dict(outputs) for pair, outputs in table.items()}
    outputs = copy.setdefault(col, {})
    if value.is_zero():
        outputs.pop(row, None)
    else:
        outputs[row] = value
    return {pair: outputs for pair, outputs in copy.items() if outputs}


def pair_table_dense(table: PairTable, dim: int) -> list[list[str]]:
    """Dense dim^2 x dim^2 matrix of coefficient strings, for export.
    Row/column index of e_a (x) e_b is a*dim + b."""
    size = dim * dim
    zero = "0"
    rows = [[zero] * size for _ in range(size)]
    for (a, b), outputs in table.items():
        col = a * dim + b
        for (c, e), coeff in outputs.items():
            rows[c * dim + e][col] = str(coeff)
    return rows


# -- state kernels -----------------------------------------------------------------


def apply_at(table: PairTable, terms: State, pos1: int, pos2: int) -> State:
    """Apply a two-site operator at an arbitrary (1-based) pair of slots."""
    i, j = pos1 - 1, pos2 - 1
    out: State = {}
    for tup, coeff in terms.items():
        outputs = table.get((tup[i], tup[j]))
        if not outputs:
            continue
        for (c, e), s in outputs.items():
            lst = list(tup)
            lst[i], lst[j] = c, e
            key = tuple(lst)
            value = coeff if s is ONE else coeff * s
            prev = out.get(key)
            if prev is None:
                out[key] = value
            else:
                prev = prev + value
                if prev.is_zero():
                    del out[key]
                else:
                    out[key] = prev
    return out


def _apply_program(
    program: Iterable[tuple[PairTable, int, int]], start: State
) -> State:
    """Apply (table, pos1, pos2) steps left to right (so list order = the
    order operators act, i.e. the *reverse* of the written composition)."""
    state = start
    for table, pos1, pos2 in program:
        state = apply_at(table, state, pos1, pos2)
    return state


def _programs_equal(
    lhs: list[tuple[PairTable, int, int]],
    rhs: list[tuple[PairTable, int, int]],
    dim: int,
    sites: int,
) -> tuple[bool, str | None]:
    for tup in iproduct(range(dim), repeat=sites):
        start: State = {tup: ONE}
        if _apply_program(lhs, start) != _apply_program(rhs, start):
            return False, f"input e{list(tup)}"
    return True, None


# -- identity checks ---------------------------------------------------------------


def yang_baxter_holds(table: PairTable, dim: int) -> bool:
    lhs = [(table, 1, 2), (table, 2, 3), (table, 1, 2)]
    rhs = [(table, 2, 3), (table, 1, 2), (table, 2, 3)]
    return _programs_equal(lhs, rhs, dim, 3)[0]


def is_involutive(table: PairTable, dim: int) -> bool:
    for a in range(dim):
        for b in range(dim):
            if apply_at(table, apply_at(table, {(a, b): ONE}, 1, 2), 1, 2) != {
                (a, b): ONE
            }:
                return False
    return True


def hecke_relation_holds(table: PairTable, dim: int) -> bool:
    """(T - q)(T + 1/q) = 0, checked as T^2 = (q - 1/q) T + id."""
    q = variable("q")
    qdiff = q - q ** -1
    for a in range(dim):
        for b in range(dim):
            start: State = {(a, b): ONE}
            once = apply_at(table, start, 1, 2)
            twice = apply_at(table, once, 1, 2)
            expected = dict(start)
            for pair, c in once.items():
                prev = expected.get(pair, None)
                scaled = c * qdiff
                expected[pair] = scaled if prev is None else prev + scaled
            expected = {k: v for k, v in expected.items() if not v.is_zero()}
            if twice != expected:
                return False
    return True


def twist_exchange_identities(
    r_plain: PairTable, f_plain: PairTable, dim: int
) -> list[tuple[str, bool, str | None]]:
    """The two R/F exchange identities on three sites, for the *plain*
    (not flip-composed) operators (written composition, rightmost factor
    acts first):

        R12 F13 F23 = F23 F13 R12
        F12 F13 R23 = R23 F13 F12

    These are exactly equivalent to the monoid's two mixed relations under
    crossing -> flip o F, virtual -> flip o R.
    """
    first = _programs_equal(
        [(f_plain, 2, 3), (f_plain, 1, 3), (r_plain, 1, 2)],
        [(r_plain, 1, 2), (f_plain, 1, 3), (f_plain, 2, 3)],
        dim,
        3,
    )
    second = _programs_equal(
        [(r_plain, 2, 3), (f_plain, 1, 3), (f_plain, 1, 2)],
        [(f_plain, 1, 2), (f_plain, 1, 3), (r_plain, 2, 3)],
        dim,
        3,
    )
    return [
        ("exchange_rff", first[0], first[1]),
        ("exchange_ffr", second[0], second[1]),
    ]


def _pairing_is_bilinear(weights: tuple[tuple[int, int], ...]) -> bool:
    """Weight additivity of the pairing: the representation-level shadow of
    the twist's coproduct identities, trivially true for a bilinear form
    but checked on the stored data."""

    def pairing(la: tuple[int, int], lb: tuple[int, int]) -> int:
        return la[0] * lb[1] - la[1] * lb[0]

    def add(la: tuple[int, int], lb: tuple[int, int]) -> tuple[int, int]:
        return (la[0] + lb[0], la[1] + lb[1])

    for la in weights:
        for lb in weights:
            for lc in weights:
                if pairing(add(la, lb), lc) != pairing(la, lc) + pairing(lb, lc):
                    return False
                if pairing(la, add(lb, lc)) != pairing(la, lb) + pairing(la, lc):
                    return False
    return True


def check_twist_axioms(
    dim: int, weights: tuple[tuple[int, int], ...] | None = None
) -> list[tuple[str, bool, str | None]]:
    """Everything the (R-matrix, twist) pair must satisfy to represent the
    monoid, in dimension ``dim`` with the given (default: fundamental)
    weights: the twist's own braid-type identity, weight additivity (the
    diagonal shadow of the coproduct identities), involutivity of the
    braided twist, both Yang-Baxter equations for the braided operators,
    the Hecke property of the braided R-matrix, and the two exchange
    identities for the plain operators."""
    if weights is None:
        weights = FUNDAMENTAL_WEIGHTS[dim]
    if len(weights) != dim:
        raise ValueError("need one weight vector per basis vector")
    r_plain, f_plain = r_matrix(dim), twist_table(weights)
    r_check, f_check = braided_r_matrix(dim), braided_twist(weights)
    f_braid = _programs_equal(
        [(f_plain, 2, 3), (f_plain, 1, 3), (f_plain, 1, 2)],
        [(f_plain, 1, 2), (f_plain, 1, 3), (f_plain, 2, 3)],
        dim,
        3,
    )
    checks = [
        ("twist_braid_identity", f_braid[0], f_braid[1]),
        ("pairing_bilinear", _pairing_is_bilinear(weights), None),
        ("involutive_braided_twist", is_involutive(f_check, dim), None),
        ("braid_relation_r", yang_baxter_holds(r_check, dim), None),
        ("braid_relation_f", yang_baxter_holds(f_check, dim), None),
        ("hecke_r", hecke_relation_holds(r_check, dim), None),
    ]
    checks.extend(twist_exchange_identities(r_plain, f_plain, dim))
    return checks


def gvb_generator_tables(
    dim: int, weights: tuple[tuple[int, int], ...] | None = None
) -> dict[str, PairTable]:
    """The two-site operators representing the monoid generators: crossing
    letters act by the braided twist, virtual letters by the braided
    R-matrix (see the module docstring for why this orientation is the
    one that satisfies the mixed relations)."""
    if weights is None:
        weights = FUNDAMENTAL_WEIGHTS[dim]
    return {
        "crossing": braided_twist(weights),
        "virtual": braided_r_matrix(dim),
    }


def check_gvb_matrix_relations(
    crossing_table: PairTable,
    virtual_table: PairTable,
    dim: int,
    strands: int = 3,
) -> VerificationReport:
    """Check every defining monoid relation on the given strand count with
    crossing letters acting by ``crossing_table`` and virtual letters by
    ``virtual_table``, on every basis tuple of (K^dim)^(x)strands.

    The report's details name which generator families act involutively,
    i.e. through which square-killing quotient the representation factors.
    """
    t0 = perf_counter()

    def program(w: GvbWord) -> list[tuple[PairTable, int, int]]:
        return [
            (crossing_table if g.kind == BRAID else virtual_table, g.index, g.index + 1)
            for g in reversed(w.letters)
        ]

    checked = failed = 0
    first = None
    for rel in relation_instances(strands):
        ok, witness = _programs_equal(program(rel.lhs), program(rel.rhs), dim, strands)
        checked += 1
        if not ok:
            failed += 1
            if first is None:
                first = f"{rel.name} on {witness}"
    involutive = [
        name
        for name, table in (("crossing", crossing_table), ("virtual", virtual_table))
        if is_involutive(table, dim)
    ]
    return VerificationReport(
        subject=f"matrix representation satisfies monoid relations "
        f"(dim {dim}, {strands} strands)",
        checked=checked,
        failed=failed,
        first_counterexample=first,
        seconds=perf_counter() - t0,
        details={"involutive_families": involutive},
    )
