"""Left-greedy Garside normal form in the braid group B_n.

Every braid is written uniquely as ``Delta^p A_1 ... A_l`` where each ``A_t`` is a
proper simple braid (a positive braid in which any two strands cross at most once,
identified with its permutation) and consecutive factors are left-weighted:
the starting set of ``A_{t+1}`` lies inside the finishing set of ``A_t``.

Permutations are handled internally as 0-based tuples; the public types use
:class:`~braidforge.braid.Permutation`.
"""

from __future__ import annotations

import dataclasses
import functools

from .braid import BraidWord, Permutation, delta_word, exponent_sum, permutation_of
from .errors import IncompatibleWords, NotAProperSimple

Perm = tuple[int, ...]



def _inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def _swap_positions(p: Perm, i: int) -> Perm:
    # p o tau_i
    q = list(p)
    q[i], q[i + 1] = q[i + 1], q[i]
    return tuple(q)


def _swap_values(p: Perm, i: int) -> Perm:
    # tau_i o p
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)


def _finishing_set(p: Perm) -> frozenset[int]:
    return frozenset(i for i in range(len(p) - 1) if p[i] > p[i + 1])


def _starting_set(p: Perm) -> frozenset[int]:
    return _finishing_set(_inverse(p))


@functools.lru_cache(maxsize=None)
def _reduced_word(p: Perm) -> tuple[int, ...]:
    """A positive word of minimal length (1-based letters) whose permutation is ``p``."""
    letters: list[int] = []
    q = list(p)
    # peel right descents: q = q' o tau_i  ->  word(q) = word(q') + [i]
    while True:
        for i in range(len(q) - 1):
            if q[i] > q[i + 1]:
                q[i], q[i + 1] = q[i + 1], q[i]
                letters.append(i + 1)
                break
        else:
            break
    letters.reverse()
    return tuple(letters)


@functools.lru_cache(maxsize=1 << 16)
def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Move generators from the front of ``b`` onto ``a`` until the pair is left-weighted."""
    while True:
        b_inv = _inverse(b)
        for i in range(len(a) - 1):
            # i in S(b) and i not in F(a)
            if b_inv[i] > b_inv[i + 1] and a[i] < a[i + 1]:
                a = _swap_positions(a, i)
                b = _swap_values(b, i)
                break
        else:
            return a, b


@dataclasses.dataclass(frozen=True)
class SimpleElement:
    """A proper simple braid, determined by its (nonidentity) permutation."""

    perm: Permutation
    word: BraidWord = dataclasses.field(compare=False)

    @property
    def strands(self) -> int:
        return self.perm.degree


def permutation_to_simple(p: Permutation) -> SimpleElement:
    if p.is_identity():
        raise NotAProperSimple("the identity permutation is not a proper simple element")
    key = tuple(v - 1 for v in p.images)
    return SimpleElement(p, BraidWord(p.degree, _reduced_word(key)))


@dataclasses.dataclass(frozen=True)
class NormalForm:
    """``Delta^delta_power`` followed by left-weighted simple factors."""

    strands: int
    delta_power: int
    factors: tuple[SimpleElement, ...]

    def to_word(self) -> BraidWord:
        """Flatten back to a braid word (``Delta^p`` spelled with the ascending-stacks word)."""
        n = self.strands
        if n == 1:
            return BraidWord(1)
        out = delta_word(n) ** self.delta_power
        for f in self.factors:
            out = out * f.word
        return out

    def canonical_length(self) -> int:
        return len(self.factors)

    def to_text(self) -> str:
        return f"p={self.delta_power}; factors=" + ";".join(
            f.perm.one_line() for f in self.factors)

    def __str__(self) -> str:
        return self.to_text()


class _NormalFormBuilder:
    """Accumulates ``Delta^p A_1 .. A_l`` in normal form while letters are appended."""

    def __init__(self, n: int):
        self.n = n
        self.p = 0
        self.factors: list[Perm] = []
        self.identity: Perm = tuple(range(n))
        self.delta: Perm = tuple(range(n - 1, -1, -1))

    def _tau(self, a: Perm) -> Perm:
        # Delta a Delta^-1
        d = self.delta
        return tuple(d[a[d[x]]] for x in range(self.n))

    def append_simple(self, b: Perm) -> None:
        factors = self.factors
        factors.append(b)
        j = len(factors) - 1
        while j > 0:
            a, b2 = _left_weight(factors[j - 1], factors[j])
            if a == factors[j - 1]:
                break
            factors[j - 1], factors[j] = a, b2
            j -= 1
        while factors and factors[-1] == self.identity:
            factors.pop()
        while factors and factors[0] == self.delta:
            factors.pop(0)
            self.p += 1

    def append_letter(self, e: int) -> None:
        i = abs(e) - 1
        if e > 0:
            self.append_simple(_swap_positions(self.identity, i))
        else:
            # sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); push Delta^-1 to the front
            self.p -= 1
            self.factors = [self._tau(a) for a in self.factors]
            self.append_simple(_swap_positions(self.delta, i))

    def result(self) -> NormalForm:
        factors = tuple(
            permutation_to_simple(Permutation(tuple(v + 1 for v in f))) for f in self.factors)
        return NormalForm(self.n, self.p, factors)


def normal_form(w: BraidWord) -> NormalForm:
    builder = _NormalFormBuilder(w.strands)
    for e in w.letters:
        builder.append_letter(e)
    return builder.result()


def braids_equal(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands:
        raise IncompatibleWords(f"strand counts differ: {u.strands} vs {v.strands}")
    if exponent_sum(u) != exponent_sum(v) or permutation_of(u) != permutation_of(v):
        return False
    return normal_form(u) == normal_form(v)


def is_pure(w: BraidWord) -> bool:
    return permutation_of(w).is_identity()


def is_left_weighted(a: SimpleElement, b: SimpleElement) -> bool:
    """Whether the pair ``(a, b)`` satisfies the left-greedy condition."""
    pa = tuple(v - 1 for v in a.perm.images)
    pb = tuple(v - 1 for v in b.perm.images)
    return _starting_set(pb) <= _finishing_set(pa)
