"""Symmetric-group machinery: permutations, reduced words, (p,q)-shuffles and
their staircase ("bubble") decomposition.

Conventions, fixed once and used across the whole library:

- One-line notation: ``images[i]`` is the image of ``i + 1``, values 1-based.
- Products compose like functions: ``(a * b)(x) = a(b(x))``.  In a word of
  generators the *rightmost* letter therefore acts first.
- ``s_i`` is the adjacent transposition ``(i, i+1)``.
- A (p,q)-shuffle of n = p + q letters is a permutation whose one-line
  notation carries an increasing run on the first p positions and an
  increasing run on the last q positions.  There are binomial(n, p) of them.

The bubble decomposition writes any permutation as a descending product

    sigma = sigma^(n-1) * ... * sigma^(2) * sigma^(1)

where the level-k component ``sigma^(k)`` is either the identity or the
cycle ``s_t s_{t+1} ... s_k`` (1 <= t <= k), the unique (k,1)-shuffle of the
first k+1 letters sending k+1 to t.  The algorithm peels components off the
top, exactly like one pass of bubble sort: the level n-1 component is read
off from sigma(n), then the residue is decomposed recursively.  The profile
``t_1..t_{n-1}`` records each level's starting index, with 0 marking an
identity component.  Concatenating the component words yields a reduced
expression, so Coxeter lengths add across levels.

>>> p = from_word(4, [2, 3, 1, 2])
>>> p.images
(3, 4, 1, 2)
>>> bubble_decompose(p).profile
(0, 1, 2)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _all_permutations

__all__ = [
    "BubbleDecomposition",
    "Permutation",
    "bubble_decompose",
    "enumerate_shuffles",
    "from_word",
    "identity",
    "is_pq_shuffle",
    "profile_law_violations",
    "reconstruct",
    "shift_embed",
    "shuffle_partition",
    "shuffles_with_profiles",
    "transposition",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images!r}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise ValueError(f"argument {x} out of range 1..{self.n}")
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Function composition: (a * b)(x) = a(b(x))."""
        if other.n != self.n:
            raise ValueError("size mismatch")
        return Permutation(tuple(self.images[y - 1] for y in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images, start=1))

    def coxeter_length(self) -> int:
        """Number of inversions, i.e. length of any reduced s_i-word."""
        images = self.images
        n = len(images)
        return sum(
            1
            for i in range(n)
            for j in range(i + 1, n)
            if images[i] > images[j]
        )

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


def identity(n: int) -> Permutation:
    if n < 0:
        raise ValueError("negative size")
    return Permutation(tuple(range(1, n + 1)))


def transposition(n: int, i: int) -> Permutation:
    """The adjacent transposition s_i = (i, i+1) inside S_n."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"transposition index {i} out of range 1..{n - 1}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def from_word(n: int, indices: list[int] | tuple[int, ...]) -> Permutation:
    """Evaluate a word s_{i1} s_{i2} ... s_{ik}; the rightmost letter acts first.

    >>> from_word(4, [2, 3, 1, 2]).images
    (3, 4, 1, 2)
    """
    acc = identity(n)
    for i in indices:
        acc = acc * transposition(n, i)
    return acc


def shift_embed(p: Permutation, by: int = 1) -> Permutation:
    """Embed S_{n} into S_{n+by} fixing the first ``by`` letters (s_i -> s_{i+by})."""
    if by < 0:
        raise ValueError("negative shift")
    images = tuple(range(1, by + 1)) + tuple(y + by for y in p.images)
    return Permutation(images)


# -- shuffles -----------------------------------------------------------------


def is_pq_shuffle(p: Permutation, left: int, right: int) -> bool:
    """True iff the one-line notation increases along the first ``left``
    positions and along the last ``right`` positions."""
    if left < 0 or right < 0:
        raise ValueError("block sizes must be nonnegative")
    if left + right != p.n:
        raise ValueError(f"block sizes {left}+{right} do not match size {p.n}")
    images = p.images
    head_ok = all(images[i] < images[i + 1] for i in range(left - 1))
    tail_ok = all(images[i] < images[i + 1] for i in range(left, left + right - 1))
    return head_ok and tail_ok


@lru_cache(maxsize=None)
def enumerate_shuffles(left: int, right: int) -> tuple[Permutation, ...]:
    """All (left,right)-shuffles of S_{left+right}, sorted by one-line notation.

    Built by the recursion

        Sh(p, q) = embed(Sh(p-1, q)) | embed(Sh(p, q-1)) * (s_1 s_2 ... s_p)

    where ``embed`` shifts every generator index up by one (fixing letter 1).
    """
    if left < 0 or right < 0:
        raise ValueError("block sizes must be nonnegative")
    n = left + right
    if left == 0 or right == 0:
        return (identity(n),)
    out = [shift_embed(p) for p in enumerate_shuffles(left - 1, right)]
    stairs = from_word(n, range(1, left + 1))
    out.extend(shift_embed(p) * stairs for p in enumerate_shuffles(left, right - 1))
    out.sort(key=lambda p: p.images)
    return tuple(out)


# -- bubble decomposition ------------------------------------------------------


@dataclass(frozen=True)
class BubbleDecomposition:
    """Profile t_1..t_{n-1} of the staircase decomposition of a permutation.

    ``profile[k-1]`` is the starting index t_k of the level-k component
    ``s_{t_k} s_{t_k+1} ... s_k``, or 0 when that component is the identity.
    """

    n: int
    profile: tuple[int, ...]

    def __post_init__(self):
        if len(self.profile) != max(self.n - 1, 0):
            raise ValueError("profile length must be n - 1")
        for k, t in enumerate(self.profile, start=1):
            if not 0 <= t <= k:
                raise ValueError(f"profile entry t_{k}={t} out of range 0..{k}")

    def component(self, k: int) -> Permutation:
        """The level-k component as an element of S_n."""
        t = self.profile[k - 1]
        if t == 0:
            return identity(self.n)
        return from_word(self.n, range(t, k + 1))

    def component_word(self, k: int) -> tuple[int, ...]:
        """The reduced word s_{t_k}..s_k of the level-k component (empty if trivial)."""
        t = self.profile[k - 1]
        return tuple(range(t, k + 1)) if t else ()

    def reduced_word(self) -> tuple[int, ...]:
        """Concatenation of component words, highest level leftmost: a reduced word."""
        out: list[int] = []
        for k in range(self.n - 1, 0, -1):
            out.extend(self.component_word(k))
        return tuple(out)

    def length(self) -> int:
        return sum(k - t + 1 for k, t in enumerate(self.profile, start=1) if t)


def bubble_decompose(p: Permutation) -> BubbleDecomposition:
    """Peel off staircase components from the top: t_{n-1} = sigma(n) when
    sigma moves n, else 0; then recurse on the residue fixing n.

    >>> bubble_decompose(from_word(4, [3, 2])).profile
    (0, 2, 3)
    """
    images = list(p.images)
    n = len(images)
    profile = [0] * (n - 1)
    for k in range(n, 1, -1):
        v = images[k - 1]
        if v != k:
            profile[k - 2] = v
            # multiply by the inverse component: v -> k, y -> y-1 for v < y <= k
            images = [y - 1 if v < y <= k else y for y in images[: k - 1]]
        else:
            images = images[: k - 1]
    return BubbleDecomposition(n, tuple(profile))


def reconstruct(d: BubbleDecomposition) -> Permutation:
    """Multiply the components back together (level n-1 leftmost)."""
    acc = identity(d.n)
    for k in range(1, d.n):
        acc = d.component(k) * acc
    return acc


@lru_cache(maxsize=None)
def shuffles_with_profiles(left: int, right: int) -> tuple[tuple[Permutation, tuple[int, ...]], ...]:
    """(shuffle, bubble profile) pairs computed by the shuffle-specialised
    recursion, independently of :func:`bubble_decompose`.

    Embedding a shuffle (fixing letter 1) shifts every nontrivial component up
    one level and one index; appending the staircase s_1..s_p sets t_p = 1.
    """
    n = left + right
    if left == 0 or right == 0:
        return ((identity(n), (0,) * max(n - 1, 0)),)
    out = []
    for p, t in shuffles_with_profiles(left - 1, right):
        shifted = (0,) + tuple(tk + 1 if tk else 0 for tk in t)
        out.append((shift_embed(p), shifted))
    stairs = from_word(n, range(1, left + 1))
    for p, t in shuffles_with_profiles(left, right - 1):
        shifted = list((0,) + tuple(tk + 1 if tk else 0 for tk in t))
        if shifted[left - 1] != 0:
            raise AssertionError("staircase level already occupied")
        shifted[left - 1] = 1
        out.append((shift_embed(p) * stairs, tuple(shifted)))
    out.sort(key=lambda pair: pair[0].images)
    return tuple(out)


def shuffle_partition(
    left: int, right: int
) -> tuple[list[Permutation], list[Permutation], list[Permutation]]:
    """Split the (left,right)-shuffles into the three staircase blocks

    - block 1: t_p != 1 (equivalently sigma(1) = 1),
    - block 2: t_p = 1 and t_{p+1} = 2,
    - block 3: t_p = 1 and t_{p+1} != 2,

    where p = ``left`` and t_{p+1} reads as 0 when out of range.
    """
    if left < 1 or right < 1:
        raise ValueError("partition needs left >= 1 and right >= 1")
    n = left + right
    blocks: tuple[list[Permutation], ...] = ([], [], [])
    for p in enumerate_shuffles(left, right):
        t = bubble_decompose(p).profile
        t_p = t[left - 1]
        t_next = t[left] if left < n - 1 else 0
        if t_p != 1:
            blocks[0].append(p)
        elif t_next == 2:
            blocks[1].append(p)
        else:
            blocks[2].append(p)
    return blocks


def profile_law_violations(left: int, right: int) -> list[str]:
    """Check every structural law of shuffle bubble profiles at one block
    size; returns human-readable violations (empty list = all laws hold).

    Laws, for each (left,right)-shuffle sigma with profile t and p = left:

    1. levels below p are trivial: t_k = 0 for k < p;
    2. levels above p clear the staircase or are trivial:
       t_s = 0 or t_s > s - p for p < s <= n-1;
    3. once level p misses index 1, no level does: t_p != 1 implies
       t_s != 1 for p <= s <= n-1;
    4. the decomposition is reduced: its length is the inversion count;
    5. components multiply back to sigma;
    6. the shuffle-specialised profile recursion agrees with peeling;
    7. the three-block split is consistent with sigma(1) = 1 iff t_p != 1.
    """
    if left < 1 or right < 1:
        raise ValueError("laws are about blocks with left >= 1 and right >= 1")
    n = left + right
    bad: list[str] = []
    profiles: dict[Permutation, tuple[int, ...]] = {}
    for sigma in enumerate_shuffles(left, right):
        d = bubble_decompose(sigma)
        t = d.profile
        profiles[sigma] = t
        if any(t[k - 1] for k in range(1, left)):
            bad.append(f"low level nontrivial: {sigma} profile {t}")
        for s in range(left + 1, n):
            if t[s - 1] != 0 and not t[s - 1] > s - left:
                bad.append(f"staircase clearance fails at level {s}: {sigma} profile {t}")
        if t[left - 1] != 1 and any(t[s - 1] == 1 for s in range(left, n)):
            bad.append(f"index-1 level above a non-1 base: {sigma} profile {t}")
        if d.length() != sigma.coxeter_length():
            bad.append(f"decomposition not reduced: {sigma} profile {t}")
        if reconstruct(d) != sigma:
            bad.append(f"components do not multiply back: {sigma} profile {t}")
        if (t[left - 1] != 1) != (sigma(1) == 1):
            bad.append(f"block-1 test mismatch: {sigma} profile {t}")
    recursed = dict(shuffles_with_profiles(left, right))
    if recursed != profiles:
        bad.append("profile recursion disagrees with peeling")
    block1, block2, block3 = shuffle_partition(left, right)
    combined = block1 + block2 + block3
    if len(combined) != len(profiles) or set(combined) != set(profiles):
        bad.append("three-block split is not a partition")
    return bad


def brute_force_shuffles(left: int, right: int) -> tuple[Permutation, ...]:
    """Filter all of S_{left+right} by the shuffle predicate (test oracle)."""
    n = left + right
    found = [
        Permutation(images)
        for images in _all_permutations(range(1, n + 1))
        if is_pq_shuffle(Permutation(images), left, right)
    ]
    found.sort(key=lambda p: p.images)
    return tuple(found)
