"""Todd-Coxeter coset enumeration (HLT strategy with lookahead).

Cosets are numbered from 0; coset 0 is the subgroup itself.  The finished table
is renumbered in order of first appearance when rows are read in order and
columns in generator order, so two runs on the same input give identical tables.
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

from ..errors import EnumerationOverflow
from .words import FreeWord, Presentation, free_reduce

DEFAULT_MAX_COSETS = 100_000


@dataclasses.dataclass(frozen=True)
class CosetTable:
    """Closed coset table: ``action[g][c]`` is the coset ``c * generator_g``."""

    generators: tuple[str, ...]
    cosets: int
    action: tuple[tuple[int, ...], ...]
    subgroup: tuple[FreeWord, ...] = ()

    def apply(self, coset: int, w: Sequence[int]) -> int:
        """Right action of a free word on a coset."""
        for e in w:
            if e > 0:
                coset = self.action[e - 1][coset]
            else:
                coset = self._inverse_action[-e - 1][coset]
        return coset

    @property
    def _inverse_action(self) -> tuple[tuple[int, ...], ...]:
        inv = self.__dict__.get("_inv")
        if inv is None:
            rows = []
            for perm in self.action:
                r = [0] * self.cosets
                for c, d in enumerate(perm):
                    r[d] = c
                rows.append(tuple(r))
            inv = tuple(rows)
            object.__setattr__(self, "_inv", inv)
        return inv

    @property
    def index(self) -> int:
        return self.cosets


class _Enumerator:
    def __init__(self, ngens: int, max_cosets: int):
        self.ncols = 2 * ngens
        self.max_cosets = max_cosets
        self.table: list[list[int]] = [[-1] * self.ncols]
        self.parent: list[int] = [0]
        self.live = 1

    # column of letter e: generator g -> 2(g-1), inverse -> 2(g-1)+1
    @staticmethod
    def col(e: int) -> int:
        return 2 * (abs(e) - 1) + (e < 0)

    @staticmethod
    def inv_col(c: int) -> int:
        return c ^ 1

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def define(self, c: int, x: int) -> None:
        if self.live >= self.max_cosets:
            raise _Full
        d = len(self.table)
        self.table.append([-1] * self.ncols)
        self.parent.append(d)
        self.live += 1
        self.table[c][x] = d
        self.table[d][x ^ 1] = c

    def merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            self.parent[hi] = lo
            self.live -= 1
            queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            row = self.table[g]
            for x in range(self.ncols):
                d = row[x]
                if d < 0:
                    continue
                self.table[d][x ^ 1] = -1
                mu, nu = self.rep(g), self.rep(d)
                if self.table[mu][x] >= 0:
                    self.merge(nu, self.table[mu][x], queue)
                elif self.table[nu][x ^ 1] >= 0:
                    self.merge(mu, self.table[nu][x ^ 1], queue)
                else:
                    self.table[mu][x] = nu
                    self.table[nu][x ^ 1] = mu

    def scan(self, c: int, word: Sequence[int], fill: bool) -> None:
        table = self.table
        f, i = c, 0
        b, j = c, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] >= 0:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != c:
                    self.coincidence(f, c)
                return
            while j >= i and table[b][word[j] ^ 1] >= 0:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            if not fill:
                return
            self.define(f, word[i])

    def lookahead(self, relators: list[list[int]]) -> None:
        c = 0
        while c < len(self.table):
            if self.alive(c):
                for r in relators:
                    if not self.alive(c):
                        break
                    self.scan(c, r, fill=False)
            c += 1


class _Full(Exception):
    pass


def coset_enumerate(
    p: Presentation,
    subgroup_gens: Sequence[Sequence[int]] = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> CosetTable:
    """Enumerate the cosets of ``<subgroup_gens>`` in the group presented by ``p``."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    en = _Enumerator(p.ngens, max_cosets)
    relators = [[en.col(e) for e in r] for r in p.relators]
    subgroup = tuple(free_reduce(h) for h in subgroup_gens)
    subwords = [[en.col(e) for e in h] for h in subgroup if h]

    def guarded(action):
        while True:
            try:
                action()
                return
            except _Full:
                before = en.live
                en.lookahead(relators)
                for h in subwords:
                    en.scan(0, h, fill=False)
                if en.live >= before:
                    raise EnumerationOverflow(
                        f"coset enumeration exceeded {max_cosets} cosets") from None

    for h in subwords:
        guarded(lambda h=h: en.scan(0, h, fill=True))
    c = 0
    while c < len(en.table):
        if en.alive(c):
            for r in relators:
                if not en.alive(c):
                    break
                guarded(lambda r=r: en.alive(c) and en.scan(c, r, fill=True))
            if en.alive(c):
                for x in range(en.ncols):
                    if en.table[c][x] < 0:
                        guarded(lambda x=x: not en.alive(c) or en.table[c][x] >= 0
                                or en.define(c, x))
                    if not en.alive(c):
                        break
        c += 1
    return _standardize(p, en, subgroup)


def _standardize(p: Presentation, en: _Enumerator, subgroup) -> CosetTable:
    order = [0]
    number = {0: 0}
    k = 0
    while k < len(order):
        c = order[k]
        k += 1
        for x in range(0, en.ncols, 2):
            d = en.table[c][x]
            if d not in number:
                number[d] = len(order)
                order.append(d)
    action = tuple(
        tuple(number[en.table[c][2 * g]] for c in order) for g in range(p.ngens))
    return CosetTable(p.generators, len(order), action, subgroup)
