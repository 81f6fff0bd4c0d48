"""Quantum (quasi-)shuffle products on the tensor module of a braided algebra.

Two independent constructions of the same product are implemented, and their
agreement is the headline fact this package machine-checks.

*Inductive definition* (:func:`quasi_shuffle_inductive`).  For pure tensors
``a = a1(x)...(x)ap`` and ``b = b1(x)...(x)bq`` over the non-unit span:

    a * b = a1 (x) (a2..ap * b)                                     [keep a1]
          + sum over the rotation word moving b1 to the front        [keep b1]
          + sum over the rotation word stopping at slot two,
            then multiplying the first two legs                      [contract]

with ``a * b = a (x) b`` when either side is empty.  The rotation words are
the braiding letters s1..sp (resp. s2..sp) applied rightmost first, so b1 is
braided leftwards past a1..ap.  Setting the algebra product to zero on the
non-unit span kills the third branch and leaves the quantum shuffle.

*Section definition* (:func:`quasi_shuffle_section`).  Act on ``a (x) b``
by the canonical word-sum section of all (p,q)-shuffles (one or two monoid
words per shuffle, see :mod:`gvbraid.section`), reading crossing letters as
the braiding and virtual letters as the product braiding
``v (x) w -> 1 (x) m(v(x)w)``, then delete the unit legs so introduced.

Both constructions require the product and braiding to preserve the non-unit
span (no built-in algebra violates this; custom tables are checked lazily).

States are stored sparsely as ``{index tuple: Scalar}`` with exact
coefficients; :class:`Tensor` is a thin arithmetic wrapper that tolerates
mixed arities, since quasi-shuffle output is spread over several arities.
"""

from __future__ import annotations

import random
from itertools import product as iproduct
from time import perf_counter
from typing import Iterable, Iterator

from .braided import BraidedAlgebra, State, apply_two_site
from .report import VerificationReport
from .scalars import ONE, Scalar
from .section import shuffle_lift_sum
from .words import GvbWord, WordSum, drop_virtual_terms

__all__ = [
    "Tensor",
    "act_word",
    "act_word_sum",
    "delete_units",
    "hat_tuples",
    "quantum_shuffle",
    "quasi_shuffle_inductive",
    "quasi_shuffle_section",
    "verify_quasi_shuffle",
    "verify_shuffle_specialization",
]


class Tensor:
    """Exact linear combination of pure basis tensors, mixed arities allowed."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: BraidedAlgebra, terms: dict[tuple[int, ...], Scalar]):
        self.algebra = algebra
        self.terms = {tup: c for tup, c in terms.items() if not c.is_zero()}

    @classmethod
    def zero(cls, algebra: BraidedAlgebra) -> "Tensor":
        return cls(algebra, {})

    @classmethod
    def pure(
        cls, algebra: BraidedAlgebra, indices: Iterable[int], coeff: Scalar = ONE
    ) -> "Tensor":
        tup = tuple(indices)
        for i in tup:
            if not 0 <= i < algebra.dim:
                raise ValueError(f"basis index {i} out of range")
        return cls(algebra, {tup: coeff})

    @classmethod
    def from_labels(cls, algebra: BraidedAlgebra, labels: Iterable[str]) -> "Tensor":
        return cls.pure(algebra, (algebra.label_index(s) for s in labels))

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check_compatible(other)
        terms = dict(self.terms)
        for tup, c in other.terms.items():
            acc = terms.get(tup)
            terms[tup] = c if acc is None else acc + c
        return Tensor(self.algebra, terms)

    def __sub__(self, other: "Tensor") -> "Tensor":
        self._check_compatible(other)
        terms = dict(self.terms)
        for tup, c in other.terms.items():
            acc = terms.get(tup)
            terms[tup] = -c if acc is None else acc - c
        return Tensor(self.algebra, terms)

    def scale(self, coeff: Scalar) -> "Tensor":
        if coeff.is_zero():
            return Tensor.zero(self.algebra)
        if coeff.is_one():
            return self
        return Tensor(self.algebra, {t: c * coeff for t, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        raise TypeError("tensors are mutable accumulators; not hashable")

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def arities(self) -> tuple[int, ...]:
        return tuple(sorted({len(t) for t in self.terms}))

    def graded_part(self, arity: int) -> "Tensor":
        return Tensor(
            self.algebra, {t: c for t, c in self.terms.items() if len(t) == arity}
        )

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Scalar]]:
        return sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        labels = self.algebra.labels
        chunks = []
        for tup, coeff in self.sorted_terms():
            body = "(x)".join(labels[i] for i in tup) if tup else "()"
            text = str(coeff)
            if text == "1":
                chunks.append(body)
            elif text == "-1":
                chunks.append(f"-{body}")
            elif coeff.is_monomial():
                chunks.append(f"{text}*{body}")
            else:
                chunks.append(f"({text})*{body}")
        out = chunks[0]
        for chunk in chunks[1:]:
            out += f" - {chunk[1:]}" if chunk.startswith("-") else f" + {chunk}"
        return out

    def __repr__(self) -> str:
        return f"Tensor({self.algebra.name}: {self})"

    def _check_compatible(self, other: "Tensor") -> None:
        if self.algebra is not other.algebra:
            raise ValueError("tensors over different algebra instances")


def hat_tuples(algebra: BraidedAlgebra, degree: int) -> Iterator[tuple[int, ...]]:
    """All pure basis tuples of the given degree over the non-unit span."""
    return iproduct(algebra.hat_basis, repeat=degree)


def _require_hat(algebra: BraidedAlgebra, tup: tuple[int, ...]) -> None:
    if algebra.unit_index in tup:
        raise ValueError(
            "quasi-shuffle inputs must avoid the unit basis vector; "
            f"got {'(x)'.join(algebra.labels[i] for i in tup)}"
        )


def _require_hat_closed(algebra: BraidedAlgebra) -> None:
    if not algebra.preserves_hat_span():
        raise ValueError(
            "quasi-shuffle needs product and braiding to preserve the "
            "non-unit span; this algebra's tables leak into the unit"
        )


# -- generator-word actions --------------------------------------------------------


def _act_letters_state(algebra: BraidedAlgebra, letters, state: State) -> State:
    for g in reversed(letters):
        state = apply_two_site(algebra.two_site_table(g.kind), state, g.index)
    return state


def act_word(w: GvbWord, t: Tensor) -> Tensor:
    """Act by one monoid word; every term must have arity equal to the strand
    count (crossing -> braiding, virtual -> product braiding, rightmost first).
    """
    for tup in t.terms:
        if len(tup) != w.strands:
            raise ValueError(f"word on {w.strands} strands, term of arity {len(tup)}")
    return Tensor(t.algebra, _act_letters_state(t.algebra, w.letters, dict(t.terms)))


def act_word_sum(ws: WordSum, t: Tensor) -> Tensor:
    """Act by a formal sum of words, bilinearly."""
    out: State = {}
    for w, coeff in ws.terms.items():
        moved = act_word(w, t if coeff.is_one() else t.scale(coeff))
        for tup, c in moved.terms.items():
            acc = out.get(tup)
            out[tup] = c if acc is None else acc + c
    return Tensor(t.algebra, out)


def delete_units(t: Tensor) -> Tensor:
    """Strike every unit leg from every term (the canonical identification
    of K.1 (x) W with W)."""
    unit = t.algebra.unit_index
    out: State = {}
    for tup, coeff in t.terms.items():
        slim = tuple(i for i in tup if i != unit)
        acc = out.get(slim)
        out[slim] = coeff if acc is None else acc + coeff
    return Tensor(t.algebra, out)


# -- the inductive product ---------------------------------------------------------


def _scaled_merge(out: State, add: State, coeff: Scalar) -> None:
    if coeff is ONE:
        for tup, c in add.items():
            acc = out.get(tup)
            out[tup] = c if acc is None else acc + c
    else:
        for tup, c in add.items():
            acc = out.get(tup)
            c = c * coeff
            out[tup] = c if acc is None else acc + c


def _qqs_pure(
    algebra: BraidedAlgebra,
    ta: tuple[int, ...],
    tb: tuple[int, ...],
    cache_this: bool = True,
) -> State:
    """Quasi-shuffle of two pure basis tensors by the three-branch recursion.

    Results are memoized on the algebra instance; pass ``cache_this=False``
    at sweep top level to keep the cache bounded by the smaller sub-pairs.
    """
    cache = algebra._shuffle_cache
    key = (ta, tb)
    hit = cache.get(key)
    if hit is not None:
        return hit

    p, q = len(ta), len(tb)
    if p == 0 or q == 0:
        out: State = {ta + tb: ONE}
        if cache_this:
            cache[key] = out
        return out

    out = {}

    # branch 1: keep a1 in front
    sub = _qqs_pure(algebra, ta[1:], tb)
    head = ta[:1]
    for tup, c in sub.items():
        out[head + tup] = c

    # rotation of b1 leftwards past a1..ap, shared by branches 2 and 3
    state: State = {ta + tb[:1]: ONE}
    sigma = algebra.braiding
    for slot in range(p, 1, -1):
        state = apply_two_site(sigma, state, slot)
    # branch 3: contract the first two legs once b1 sits in slot two
    m = algebra.product
    tail = tb[1:]
    for tup, coeff in state.items():
        outputs = m.get((tup[0], tup[1]))
        if outputs:
            sub = _qqs_pure(algebra, tup[2:], tail)
            for k, s in outputs.items():
                head = (k,)
                c0 = coeff if s is ONE else coeff * s
                for t2, c in sub.items():
                    key2 = head + t2
                    acc = out.get(key2)
                    c = c if c0 is ONE else c * c0
                    out[key2] = c if acc is None else acc + c
    # branch 2: finish the rotation, keep b1 in front
    state = apply_two_site(sigma, state, 1)
    for tup, coeff in state.items():
        sub = _qqs_pure(algebra, tup[1:], tail)
        head = tup[:1]
        for t2, c in sub.items():
            key2 = head + t2
            acc = out.get(key2)
            c = c if coeff is ONE else c * coeff
            out[key2] = c if acc is None else acc + c

    out = {tup: c for tup, c in out.items() if not c.is_zero()}
    if cache_this:
        cache[key] = out
    return out


def quasi_shuffle_inductive(left: Tensor, right: Tensor) -> Tensor:
    """The quantum quasi-shuffle product, by its inductive definition,
    extended bilinearly over mixed-arity operands."""
    left._check_compatible(right)
    algebra = left.algebra
    _require_hat_closed(algebra)
    out: State = {}
    for ta, ca in left.terms.items():
        _require_hat(algebra, ta)
        for tb, cb in right.terms.items():
            _require_hat(algebra, tb)
            coeff = ca if cb.is_one() else (cb if ca.is_one() else ca * cb)
            _scaled_merge(out, _qqs_pure(algebra, ta, tb), coeff)
    return Tensor(algebra, out)


# -- the section-based product -----------------------------------------------------


def _prepared_lift(ws: WordSum) -> list[tuple[tuple, Scalar]]:
    return [(tuple(reversed(w.letters)), c) for w, c in ws.sorted_terms()]


def _section_pure(
    algebra: BraidedAlgebra,
    ta: tuple[int, ...],
    tb: tuple[int, ...],
    prepared: list[tuple[tuple, Scalar]],
) -> State:
    unit = algebra.unit_index
    start = ta + tb
    out: State = {}
    for letters_reversed, wcoeff in prepared:
        state: State = {start: ONE}
        for g in letters_reversed:
            state = apply_two_site(algebra.two_site_table(g.kind), state, g.index)
            if not state:
                break
        for tup, c in state.items():
            slim = tuple(i for i in tup if i != unit)
            acc = out.get(slim)
            c = c if wcoeff is ONE else c * wcoeff
            out[slim] = c if acc is None else acc + c
    return {tup: c for tup, c in out.items() if not c.is_zero()}


def quasi_shuffle_section(left: Tensor, right: Tensor) -> Tensor:
    """The quantum quasi-shuffle product, by the shuffle-section definition:
    act by the canonical word-sum lift of all (p,q)-shuffles, delete units."""
    left._check_compatible(right)
    algebra = left.algebra
    _require_hat_closed(algebra)
    out: State = {}
    for ta, ca in left.terms.items():
        _require_hat(algebra, ta)
        for tb, cb in right.terms.items():
            _require_hat(algebra, tb)
            prepared = _prepared_lift(shuffle_lift_sum(len(ta), len(tb)))
            coeff = ca if cb.is_one() else (cb if ca.is_one() else ca * cb)
            _scaled_merge(out, _section_pure(algebra, ta, tb, prepared), coeff)
    return Tensor(algebra, out)


def quantum_shuffle(left: Tensor, right: Tensor) -> Tensor:
    """The plain quantum shuffle product: only the braiding lift of each
    shuffle acts, so no legs are ever contracted (no virtual letters)."""
    left._check_compatible(right)
    algebra = left.algebra
    out: State = {}
    for ta, ca in left.terms.items():
        _require_hat(algebra, ta)
        for tb, cb in right.terms.items():
            _require_hat(algebra, tb)
            braid_only = drop_virtual_terms(shuffle_lift_sum(len(ta), len(tb)))
            prepared = _prepared_lift(braid_only)
            coeff = ca if cb.is_one() else (cb if ca.is_one() else ca * cb)
            _scaled_merge(out, _section_pure(algebra, ta, tb, prepared), coeff)
    return Tensor(algebra, out)


# -- verification -------------------------------------------------------------------


def _label_tuple(algebra: BraidedAlgebra, tup: tuple[int, ...]) -> str:
    return "(x)".join(algebra.labels[i] for i in tup) if tup else "()"


def verify_quasi_shuffle(
    algebra: BraidedAlgebra,
    left_degree: int,
    right_degree: int,
    *,
    cap: int = 100_000,
    sample: int = 100,
    seed: int = 0,
) -> VerificationReport:
    """Compare the inductive and section definitions on pure basis tensors.

    All ``|hat basis|**(p+q)`` pairs are checked when that count is at most
    ``cap``; beyond the cap, ``sample`` pairs are drawn from a seeded RNG so
    runs stay reproducible.  Comparison is exact coefficient equality.
    """
    t0 = perf_counter()
    _require_hat_closed(algebra)
    hat = algebra.hat_basis
    p, q = left_degree, right_degree
    total = len(hat) ** (p + q)
    prepared = _prepared_lift(shuffle_lift_sum(p, q))

    if total <= cap:
        mode = "exhaustive"
        pairs: Iterable[tuple[tuple[int, ...], tuple[int, ...]]] = (
            (ta, tb) for ta in hat_tuples(algebra, p) for tb in hat_tuples(algebra, q)
        )
    else:
        mode = f"sampled({sample})"
        rng = random.Random(seed)
        pairs = (
            (
                tuple(rng.choice(hat) for _ in range(p)),
                tuple(rng.choice(hat) for _ in range(q)),
            )
            for _ in range(sample)
        )

    checked = failed = 0
    first = None
    for ta, tb in pairs:
        inductive = _qqs_pure(algebra, ta, tb, cache_this=False)
        sectioned = _section_pure(algebra, ta, tb, prepared)
        checked += 1
        if inductive != sectioned:
            failed += 1
            first = f"{_label_tuple(algebra, ta)} * {_label_tuple(algebra, tb)}"
            break

    return VerificationReport(
        subject=f"{algebra.name}: quasi-shuffle definitions agree at ({p},{q})",
        checked=checked,
        failed=failed,
        first_counterexample=first,
        seconds=perf_counter() - t0,
        mode=mode,
    )


def verify_shuffle_specialization(
    algebra: BraidedAlgebra,
    left_degree: int,
    right_degree: int,
    *,
    cap: int = 100_000,
    sample: int = 100,
    seed: int = 0,
) -> VerificationReport:
    """For an algebra with zero product on the non-unit span, the
    quasi-shuffle must collapse to the plain quantum shuffle; compare the
    inductive product against the braiding-only section on basis pairs."""
    hat = algebra.hat_basis
    for a in hat:
        for b in hat:
            if algebra.product.get((a, b)):
                raise ValueError(
                    "specialization check needs a zero product on the "
                    f"non-unit span; m({algebra.labels[a]}, {algebra.labels[b]}) != 0"
                )
    t0 = perf_counter()
    p, q = left_degree, right_degree
    total = len(hat) ** (p + q)
    prepared = _prepared_lift(drop_virtual_terms(shuffle_lift_sum(p, q)))

    if total <= cap:
        mode = "exhaustive"
        pairs: Iterable[tuple[tuple[int, ...], tuple[int, ...]]] = (
            (ta, tb) for ta in hat_tuples(algebra, p) for tb in hat_tuples(algebra, q)
        )
    else:
        mode = f"sampled({sample})"
        rng = random.Random(seed)
        pairs = (
            (
                tuple(rng.choice(hat) for _ in range(p)),
                tuple(rng.choice(hat) for _ in range(q)),
            )
            for _ in range(sample)
        )

    checked = failed = 0
    first = None
    for ta, tb in pairs:
        inductive = _qqs_pure(algebra, ta, tb, cache_this=False)
        shuffled = _section_pure(algebra, ta, tb, prepared)
        checked += 1
        if inductive != shuffled:
            failed += 1
            first = f"{_label_tuple(algebra, ta)} * {_label_tuple(algebra, tb)}"
            break

    return VerificationReport(
        subject=f"{algebra.name}: zero product collapses quasi-shuffle to "
        f"quantum shuffle at ({p},{q})",
        checked=checked,
        failed=failed,
        first_counterexample=first,
        seconds=perf_counter() - t0,
        mode=mode,
    )
