"""Lifting shuffles through the symmetric-group quotient.

A (p,q)-shuffle sigma with bubble profile t_1..t_{n-1} (n = p+q) lifts to the
generalized virtual braid monoid algebra as the descending product

    lift(sigma) = prod_{k = n-1 .. 1, t_k != 0}
                      (s_{t_k} + c_k x_{t_k}) s_{t_k+1} s_{t_k+2} ... s_k

with binary weight c_k = 0 when t_k + 1 = t_{k+1} and c_k = 1 otherwise
(reading t_n = 0, and t_{k+1} from the profile).  Factors concatenate left to
right as k descends, so expanding the product gives 2^z words of equal
length, z being the number of levels whose weight is 1.

Projecting a lift to the braid-monoid algebra (virtual letters -> 0) keeps
exactly one word: the reduced crossing word of the bubble decomposition,
a section of the symmetric-group quotient.  Projecting to the involutive
quotient (s_i^2 -> 1) yields the analogous section with all square-free
words.

The lift sum ``sum over all (p,q)-shuffles of lift(sigma)`` obeys an exact
three-part recursion mirroring the shuffle recursion (checked here word for
word, no relations applied):

    L(p, q) = up(L(p-1, q))
            + up(L(p, q-1)) * (s1 s2 ... sp)
            + up2(L(p-1, q-1)) * (x1 s2 ... sp)

where ``up``/``up2`` shift all generator indices by one resp. two.  The three
parts line up with the staircase blocks of :func:`gvbraid.symgroup.shuffle_partition`.
"""

from __future__ import annotations

from functools import lru_cache

from .scalars import ONE
from .symgroup import (
    Permutation,
    bubble_decompose,
    enumerate_shuffles,
    is_pq_shuffle,
    shift_embed,
    shuffle_partition,
)
from .words import (
    GvbWord,
    WordSum,
    braid_gen,
    drop_virtual_terms,
    cancel_double_crossings,
    empty_word,
    virtual_gen,
    word,
)

__all__ = [
    "braid_lift",
    "involutive_lift",
    "lift_shuffle",
    "lift_sum_block_identities",
    "lift_sum_recursion_holds",
    "section_table",
    "shuffle_lift_sum",
]


def lift_shuffle(sigma: Permutation, left: int, right: int) -> WordSum:
    """The two-generator lift of a (left,right)-shuffle described above.

    Raises ValueError when ``sigma`` is not a (left,right)-shuffle.
    """
    if not is_pq_shuffle(sigma, left, right):
        raise ValueError(f"{sigma} is not a ({left},{right})-shuffle")
    n = left + right
    profile = bubble_decompose(sigma).profile
    result = WordSum.unit(n)
    for k in range(n - 1, 0, -1):
        t = profile[k - 1]
        if t == 0:
            continue
        t_above = profile[k] if k < n - 1 else 0
        tail = tuple(braid_gen(i) for i in range(t + 1, k + 1))
        factor_terms = {word(n, (braid_gen(t),) + tail): ONE}
        if t + 1 != t_above:
            factor_terms[word(n, (virtual_gen(t),) + tail)] = ONE
        result = result * WordSum(n, factor_terms)
    return result


def braid_lift(sigma: Permutation, left: int, right: int) -> GvbWord:
    """The crossing-only section: the unique virtual-free word of the lift."""
    projected = drop_virtual_terms(lift_shuffle(sigma, left, right))
    if len(projected) != 1:
        raise AssertionError("crossing projection of a lift must be a single word")
    ((w, coeff),) = projected.terms.items()
    if not coeff.is_one():
        raise AssertionError("crossing projection of a lift must have coefficient 1")
    return w


def involutive_lift(sigma: Permutation, left: int, right: int) -> WordSum:
    """The lift pushed to the involutive-crossing quotient (s_i^2 = 1)."""
    return cancel_double_crossings(lift_shuffle(sigma, left, right))


@lru_cache(maxsize=None)
def shuffle_lift_sum(left: int, right: int) -> WordSum:
    """Sum of the lifts of every (left,right)-shuffle."""
    n = left + right
    total = WordSum.zero(n)
    for sigma in enumerate_shuffles(left, right):
        total = total + lift_shuffle(sigma, left, right)
    return total


def _staircase_word(n: int, left: int) -> GvbWord:
    return word(n, tuple(braid_gen(i) for i in range(1, left + 1)))


def _virtual_staircase_word(n: int, left: int) -> GvbWord:
    letters = (virtual_gen(1),) + tuple(braid_gen(i) for i in range(2, left + 1))
    return word(n, letters)


def lift_sum_recursion_holds(left: int, right: int) -> bool:
    """Exact word-for-word check of the three-part recursion for the lift sum."""
    if left < 1 or right < 1:
        raise ValueError("recursion needs left >= 1 and right >= 1")
    n = left + right
    lhs = shuffle_lift_sum(left, right)
    rhs = shuffle_lift_sum(left - 1, right).reindexed(1, n)
    rhs = rhs + shuffle_lift_sum(left, right - 1).reindexed(1, n) * _staircase_word(n, left)
    rhs = rhs + shuffle_lift_sum(left - 1, right - 1).reindexed(2, n) * _virtual_staircase_word(n, left)
    return lhs == rhs


def lift_sum_block_identities(left: int, right: int) -> dict[str, bool]:
    """Blockwise refinement of the recursion along the staircase partition.

    - block 1 (t_p != 1): lifts are reindexed (left-1, right) lifts;
    - block 2 (t_p = 1, t_{p+1} = 2): lifts are reindexed (left, right-1)
      lifts of the non-fixing shuffles, times the staircase word;
    - block 3 (t_p = 1, t_{p+1} != 2): lifts are reindexed (left-1, right-1)
      lifts times (s1 + x1) s2 ... sp.
    """
    if left < 1 or right < 1:
        raise ValueError("block identities need left >= 1 and right >= 1")
    n = left + right
    block1, block2, block3 = shuffle_partition(left, right)
    stairs = _staircase_word(n, left)

    lhs1 = WordSum.zero(n)
    for sigma in block1:
        lhs1 = lhs1 + lift_shuffle(sigma, left, right)
    rhs1 = shuffle_lift_sum(left - 1, right).reindexed(1, n)

    lhs2 = WordSum.zero(n)
    for sigma in block2:
        lhs2 = lhs2 + lift_shuffle(sigma, left, right)
    rhs2 = WordSum.zero(n)
    for tau in enumerate_shuffles(left, right - 1):
        if tau(1) == 1:
            continue  # those factor through the two-step shift instead
        rhs2 = rhs2 + lift_shuffle(tau, left, right - 1).reindexed(1, n) * stairs

    lhs3 = WordSum.zero(n)
    for sigma in block3:
        lhs3 = lhs3 + lift_shuffle(sigma, left, right)
    mixed = WordSum(
        n,
        {
            stairs: ONE,
            _virtual_staircase_word(n, left): ONE,
        },
    )
    rhs3 = WordSum.zero(n)
    for rho in enumerate_shuffles(left - 1, right - 1):
        rhs3 = rhs3 + lift_shuffle(rho, left - 1, right - 1).reindexed(2, n) * mixed

    return {
        "block1_fixes_first_point": all(sigma(1) == 1 for sigma in block1)
        and all(sigma(1) != 1 for sigma in block2 + block3),
        "block1_identity": lhs1 == rhs1,
        "block2_identity": lhs2 == rhs2,
        "block3_identity": lhs3 == rhs3,
        "partition_is_exhaustive": len(block1) + len(block2) + len(block3)
        == len(enumerate_shuffles(left, right)),
    }


def section_table(left: int, right: int, kind: str = "full") -> list[dict]:
    """Tabulate every (left,right)-shuffle with its profile, staircase
    components and lift.  ``kind``: "full", "braid" or "involutive"."""
    if kind not in ("full", "braid", "involutive"):
        raise ValueError(f"unknown table kind {kind!r}")
    rows = []
    for sigma in enumerate_shuffles(left, right):
        decomposition = bubble_decompose(sigma)
        if kind == "full":
            value: object = lift_shuffle(sigma, left, right)
        elif kind == "braid":
            value = braid_lift(sigma, left, right)
        else:
            value = involutive_lift(sigma, left, right)
        rows.append(
            {
                "shuffle": sigma,
                "profile": decomposition.profile,
                "components": [
                    " ".join(f"s{i}" for i in decomposition.component_word(k)) or "e"
                    for k in range(len(decomposition.profile), 0, -1)
                ],
                "value": value,
            }
        )
    return rows
