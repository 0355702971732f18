"""Free-group words and group presentations.

A free word is a tuple of nonzero signed integers indexing a generator list
(1-based): ``3`` is the third generator, ``-3`` its inverse.  A
:class:`Presentation` keeps its relators cyclically reduced, drops empty ones
and removes duplicates up to cyclic rotation and inversion, keeping the first
occurrence in the order given.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Sequence

from ..errors import FormatError

FreeWord = tuple[int, ...]


def free_reduce(w: Iterable[int]) -> FreeWord:
    stack: list[int] = []
    for e in w:
        if stack and stack[-1] == -e:
            stack.pop()
        else:
            stack.append(e)
    return tuple(stack)


def inverse(w: Sequence[int]) -> FreeWord:
    return tuple(-e for e in reversed(w))


def multiply(*words: Sequence[int]) -> FreeWord:
    return free_reduce(e for w in words for e in w)


def cyclic_reduce(w: Sequence[int]) -> FreeWord:
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def split_conjugate(w: Sequence[int]) -> tuple[FreeWord, FreeWord]:
    """Write a freely reduced ``w`` as ``u c u^-1`` with ``c`` cyclically reduced."""
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[:i], w[i:j]


def rotations(w: Sequence[int]) -> list[FreeWord]:
    w = tuple(w)
    return [w[k:] + w[:k] for k in range(len(w))] or [()]


def cyclic_key(w: Sequence[int]) -> FreeWord:
    """Canonical representative of ``w`` up to rotation and inversion."""
    c = cyclic_reduce(w)
    return min(rotations(c) + rotations(inverse(c)))


def commutator(x: Sequence[int], y: Sequence[int]) -> FreeWord:
    """``[x, y] = x y x^-1 y^-1``."""
    return multiply(x, y, inverse(x), inverse(y))


def power(w: Sequence[int], k: int) -> FreeWord:
    if k < 0:
        return multiply(*([inverse(w)] * -k))
    return multiply(*([tuple(w)] * k))


def exponent_vector(w: Sequence[int], ngens: int) -> list[int]:
    v = [0] * ngens
    for e in w:
        v[abs(e) - 1] += 1 if e > 0 else -1
    return v


def occurrences(w: Sequence[int], gen: int) -> int:
    return sum(1 for e in w if abs(e) == gen)


@dataclasses.dataclass(frozen=True)
class Presentation:
    """``< generators | relators >`` with relators in canonical storage."""

    generators: tuple[str, ...]
    relators: tuple[FreeWord, ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise ValueError(f"duplicate generator names: {gens}")
        stored: list[FreeWord] = []
        seen: set[FreeWord] = set()
        for r in self.relators:
            r = tuple(int(e) for e in r)
            for e in r:
                if e == 0 or abs(e) > len(gens):
                    raise ValueError(f"letter {e} outside a {len(gens)}-generator alphabet")
            c = cyclic_reduce(r)
            if not c:
                continue
            key = cyclic_key(c)
            if key in seen:
                continue
            seen.add(key)
            stored.append(c)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(stored))

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        """1-based index of a generator."""
        try:
            return self.generators.index(name) + 1
        except ValueError:
            raise KeyError(f"no generator named {name!r}") from None

    def word(self, *tokens: str) -> FreeWord:
        """Build a word from tokens such as ``"a"`` or ``"a'"`` (inverse)."""
        return parse_word(" ".join(tokens), self.generators)

    def format_word(self, w: Sequence[int]) -> str:
        return format_word(w, self.generators)

    def relator_keys(self) -> set[FreeWord]:
        return {cyclic_key(r) for r in self.relators}

    def with_relators(self, extra: Iterable[Sequence[int]]) -> Presentation:
        return Presentation(self.generators, self.relators + tuple(tuple(r) for r in extra))

    def to_text(self) -> str:
        lines = ["gens: " + " ".join(self.generators)]
        lines += ["rel: " + self.format_word(r) for r in self.relators]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Presentation:
        gens: tuple[str, ...] | None = None
        rels: list[FreeWord] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("gens:"):
                if gens is not None:
                    raise FormatError(f"line {lineno}: second 'gens:' line")
                gens = tuple(line[5:].split())
                for g in gens:
                    _check_name(g)
            elif line.startswith("rel:"):
                if gens is None:
                    raise FormatError(f"line {lineno}: 'rel:' before 'gens:'")
                rels.append(parse_word(line[4:], gens))
            else:
                raise FormatError(f"line {lineno}: expected 'gens:' or 'rel:'")
        if gens is None:
            raise FormatError("presentation has no 'gens:' line")
        return cls(gens, tuple(rels))

    def __str__(self) -> str:
        rels = ", ".join(self.format_word(r) for r in self.relators)
        return f"< {' '.join(self.generators)} | {rels} >"


def _check_name(name: str) -> None:
    if not name or "'" in name or name != name.lower() or not name[0].isalpha():
        raise FormatError(f"bad generator name {name!r}")


def parse_word(text: str, generators: Sequence[str]) -> FreeWord:
    lookup = {g: i for i, g in enumerate(generators, start=1)}
    out: list[int] = []
    for tok in text.split():
        inv = tok.endswith("'")
        name = tok[:-1] if inv else tok
        if name not in lookup:
            raise FormatError(f"unknown generator {name!r}")
        out.append(-lookup[name] if inv else lookup[name])
    return tuple(out)


def format_word(w: Sequence[int], generators: Sequence[str]) -> str:
    return " ".join(generators[abs(e) - 1] + ("'" if e < 0 else "") for e in w)
