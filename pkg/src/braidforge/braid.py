"""Braid words in the Artin generators and the generator families built from them.

A word on ``n`` strands is a flat tuple of nonzero signed integers: the letter
``e`` stands for ``sigma_|e|`` raised to ``sign(e)``.  Indices are 1-based, so a
word on ``n`` strands uses letters with ``1 <= |e| <= n - 1``.  Construction never
reduces a word; rewriting is always an explicit call.
"""

from __future__ import annotations

import dataclasses
import enum
from typing import Iterable

from .errors import FormatError, IncompatibleWords, InvalidStrandCount, ShiftOutOfRange


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..n}`` in one-line image notation.

    ``images[p - 1]`` is the image of ``p``.  Products compose as functions:
    ``(p * q)(x) == p(q(x))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        """The order-reversing permutation ``i -> n + 1 - i``."""
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse one-line notation: ``"231"`` or, for more than 9 points, ``"2:3:1"``."""
        text = text.strip()
        parts = text.split(":") if ":" in text else list(text)
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise FormatError(f"bad permutation {text!r}: {exc}") from None

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise ValueError("permutations of different degrees")
        return Permutation(tuple(self.images[v - 1] for v in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def inversions(self) -> int:
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im)) if im[a] > im[b])

    def one_line(self) -> str:
        if self.degree <= 9:
            return "".join(str(v) for v in self.images)
        return ":".join(str(v) for v in self.images)

    def __str__(self) -> str:
        return self.one_line()


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A word in ``sigma_1 .. sigma_{strands-1}`` and their inverses."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise InvalidStrandCount(f"strand count must be >= 1, got {self.strands}")
        letters = tuple(int(e) for e in self.letters)
        for e in letters:
            if e == 0 or abs(e) >= self.strands:
                raise InvalidStrandCount(
                    f"letter {e} is not a generator of B_{self.strands}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        _check_same_strands(self, other)
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-e for e in reversed(self.letters)))

    def embed(self, strands: int) -> BraidWord:
        """The same letters read in a braid group with more strands."""
        if strands < self.strands:
            raise InvalidStrandCount(f"cannot embed B_{self.strands} into B_{strands}")
        return BraidWord(strands, self.letters)

    def to_text(self) -> str:
        return f"n={self.strands}\n" + " ".join(str(e) for e in self.letters) + "\n"

    @classmethod
    def from_text(cls, text: str) -> BraidWord:
        lines = text.splitlines()
        if not lines or not lines[0].startswith("n="):
            raise FormatError("braid file must start with a line 'n=<strands>'")
        try:
            strands = int(lines[0][2:])
            letters = tuple(int(tok) for tok in (lines[1].split() if len(lines) > 1 else ()))
        except ValueError as exc:
            raise FormatError(f"bad braid word: {exc}") from None
        if any(line.strip() for line in lines[2:]):
            raise FormatError("braid file has trailing content after the word line")
        return cls(strands, letters)

    def __str__(self) -> str:
        return " ".join(str(e) for e in self.letters) or "<id>"


def _check_same_strands(u: BraidWord, v: BraidWord) -> None:
    if u.strands != v.strands:
        raise IncompatibleWords(f"strand counts differ: {u.strands} vs {v.strands}")


def word(strands: int, letters: Iterable[int] = ()) -> BraidWord:
    return BraidWord(strands, tuple(letters))


def concat(strands: int, words: Iterable[BraidWord]) -> BraidWord:
    out: list[int] = []
    for w in words:
        if w.strands != strands:
            raise IncompatibleWords(f"strand counts differ: {strands} vs {w.strands}")
        out.extend(w.letters)
    return BraidWord(strands, tuple(out))


@dataclasses.dataclass(frozen=True)
class PureGenerator:
    """``alpha_ij``: strand ``j`` travels once around strand ``i``."""

    i: int
    j: int
    strands: int

    def __post_init__(self):
        if not 1 <= self.i < self.j <= self.strands:
            raise InvalidStrandCount(
                f"need 1 <= i < j <= strands, got i={self.i}, j={self.j}, strands={self.strands}")


def free_reduce(w: BraidWord) -> BraidWord:
    stack: list[int] = []
    for e in w.letters:
        if stack and stack[-1] == -e:
            stack.pop()
        else:
            stack.append(e)
    return BraidWord(w.strands, tuple(stack))


def permutation_of(w: BraidWord) -> Permutation:
    """Image of ``w`` in the symmetric group.

    The homomorphism sends ``sigma_i`` to the transposition ``(i, i+1)`` and
    satisfies ``permutation_of(u * v) == permutation_of(u) * permutation_of(v)``.
    Read on a braid diagram, ``images[p - 1]`` is the starting position of the
    strand that ends at position ``p``.
    """
    images = list(range(1, w.strands + 1))
    for e in w.letters:
        a = abs(e)
        images[a - 1], images[a] = images[a], images[a - 1]
    return Permutation(tuple(images))


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if e > 0 else -1 for e in w.letters)


def expand_pure_generator(g: PureGenerator) -> BraidWord:
    """``sigma_{j-1} .. sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 .. sigma_{j-1}^-1``."""
    down = list(range(g.j - 1, g.i, -1))
    letters = down + [g.i, g.i] + [-e for e in reversed(down)]
    return BraidWord(g.strands, tuple(letters))


def alpha(i: int, j: int, strands: int) -> BraidWord:
    return expand_pure_generator(PureGenerator(i, j, strands))


class DeltaVariant(enum.Enum):
    """The four displayed words for the half twist, in display order."""

    ASCENDING_STACKS = "ascending-stacks"
    DESCENDING_STACKS = "descending-stacks"
    REVERSE_STACKS = "reverse-stacks"
    TAIL_STACKS = "tail-stacks"

    @classmethod
    def coerce(cls, value) -> DeltaVariant:
        if isinstance(value, cls):
            return value
        if isinstance(value, int) or (isinstance(value, str) and value.isdigit()):
            return list(cls)[int(value) - 1]
        return cls(value)


class FullTwistVariant(enum.Enum):
    """The seven displayed words for the full twist, in display order."""

    A = "A"
    B = "B"
    C = "C"
    D = "D"
    D_PRIME = "D'"
    E = "E"
    F = "F"

    @classmethod
    def coerce(cls, value) -> FullTwistVariant:
        if isinstance(value, cls):
            return value
        if isinstance(value, int):
            return list(cls)[value - 1]
        text = str(value).strip().upper()
        if text in ("D'", "DP", "D_PRIME", "DPRIME"):
            return cls.D_PRIME
        return cls(text)


def _up(a: int, b: int) -> list[int]:
    return list(range(a, b + 1))


def _down(a: int, b: int) -> list[int]:
    return list(range(a, b - 1, -1))


def _check_n(n: int) -> None:
    if n < 2:
        raise InvalidStrandCount(f"need n >= 2, got {n}")


def delta_word(n: int, variant=DeltaVariant.ASCENDING_STACKS) -> BraidWord:
    """A positive word for the half twist on ``n`` strands."""
    _check_n(n)
    variant = DeltaVariant.coerce(variant)
    letters: list[int] = []
    if variant is DeltaVariant.ASCENDING_STACKS:
        # s1 (s2 s1) ... (s_{n-1} .. s1)
        for m in range(1, n):
            letters += _down(m, 1)
    elif variant is DeltaVariant.DESCENDING_STACKS:
        # (s1 .. s_{n-1}) ... (s1 s2) s1
        for m in range(n - 1, 0, -1):
            letters += _up(1, m)
    elif variant is DeltaVariant.REVERSE_STACKS:
        # (s_{n-1} .. s1)(s_{n-1} .. s2) ... s_{n-1}
        for low in range(1, n):
            letters += _down(n - 1, low)
    else:
        # s_{n-1} (s_{n-2} s_{n-1}) ... (s1 .. s_{n-1})
        for low in range(n - 1, 0, -1):
            letters += _up(low, n - 1)
    return BraidWord(n, tuple(letters))


def full_twist_word(n: int, variant=FullTwistVariant.A) -> BraidWord:
    """A word for the full twist on ``n`` strands."""
    _check_n(n)
    variant = FullTwistVariant.coerce(variant)
    V = FullTwistVariant
    if variant in (V.A, V.B):
        # bracket m: s_m .. s2 s1^2 s2 .. s_m
        brackets = [_down(m, 2) + [1, 1] + _up(2, m) for m in range(1, n)]
        if variant is V.B:
            brackets.reverse()
        return BraidWord(n, tuple(e for b in brackets for e in b))
    if variant is V.C:
        return delta_word(n, DeltaVariant.DESCENDING_STACKS) * delta_word(n, DeltaVariant.ASCENDING_STACKS)
    if variant is V.D:
        return BraidWord(n, tuple(_up(1, n - 1) * n))
    if variant is V.D_PRIME:
        return BraidWord(n, tuple(_down(n - 1, 1) * n))
    if variant is V.E:
        groups = [[alpha(i, j, n) for i in range(1, j)] for j in range(n, 1, -1)]
    else:
        groups = [[alpha(i, j, n) for i in range(1, j)] for j in range(2, n + 1)]
    return concat(n, (w for g in groups for w in g))


def shift(w: BraidWord) -> BraidWord:
    """Raise every generator index by one, keeping the strand count."""
    if any(abs(e) > w.strands - 2 for e in w.letters):
        raise ShiftOutOfRange(f"shifting {w} leaves B_{w.strands}")
    return BraidWord(w.strands, tuple(e + (1 if e > 0 else -1) for e in w.letters))


def conjugate_by_delta(w: BraidWord) -> BraidWord:
    """The word for ``Delta w Delta^-1``: each ``sigma_i`` becomes ``sigma_{n-i}``."""
    n = w.strands
    return BraidWord(n, tuple((n - e) if e > 0 else -(n + e) for e in w.letters))


def ascending(n: int, a: int, b: int) -> BraidWord:
    """``sigma_a sigma_{a+1} .. sigma_b`` (empty when ``b < a``)."""
    return BraidWord(n, tuple(_up(a, b)))


def descending(n: int, a: int, b: int) -> BraidWord:
    """``sigma_a sigma_{a-1} .. sigma_b`` (empty when ``a < b``)."""
    return BraidWord(n, tuple(_down(a, b)))

