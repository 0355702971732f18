"""Finite groups given by multiplication tables: regular representation and isomorphism."""

from __future__ import annotations

import collections
import dataclasses
import itertools
from typing import Sequence

from ..errors import NotRegular, TooLarge
from .cosets import CosetTable
from .words import Presentation

MAX_ISOMORPHISM_ORDER = 64


@dataclasses.dataclass(frozen=True)
class MultiplicationTable:
    """``table[a][b]`` is the index of the product ``a * b``."""

    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        n = len(table)
        if any(len(row) != n or any(not 0 <= x < n for x in row) for row in table):
            raise ValueError("multiplication table must be square with entries in range")
        object.__setattr__(self, "table", table)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @property
    def identity(self) -> int:
        for e in range(self.order):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(self.order)):
                return e
        raise ValueError("table has no two-sided identity")

    def inverse(self, a: int) -> int:
        e = self.identity
        for b in range(self.order):
            if self.table[a][b] == e and self.table[b][a] == e:
                return b
        raise ValueError(f"element {a} has no inverse")

    def element_order(self, a: int) -> int:
        e = self.identity
        k, x = 1, a
        while x != e:
            x = self.table[x][a]
            k += 1
            if k > self.order:
                raise ValueError("element of infinite order in a finite table")
        return k

    def order_profile(self) -> collections.Counter:
        return collections.Counter(self.element_order(a) for a in range(self.order))

    def is_associative(self) -> bool:
        t = self.table
        r = range(self.order)
        return all(t[t[a][b]][c] == t[a][t[b][c]] for a in r for b in r for c in r)

    def is_group(self) -> bool:
        try:
            e = self.identity
        except ValueError:
            return False
        r = range(self.order)
        has_inverses = all(any(self.table[a][b] == e for b in r) for a in r)
        return has_inverses and self.is_associative()

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))


def _coset_words(t: CosetTable) -> list[tuple[int, ...]]:
    """A spanning-tree word from coset 0 to each coset (positive generators only)."""
    words: list[tuple[int, ...] | None] = [None] * t.cosets
    words[0] = ()
    queue = collections.deque([0])
    while queue:
        c = queue.popleft()
        for g, perm in enumerate(t.action, start=1):
            d = perm[c]
            if words[d] is None:
                words[d] = words[c] + (g,)
                queue.append(d)
    return words  # type: ignore[return-value]


def multiplication_table(t: CosetTable, p: Presentation | None = None) -> MultiplicationTable:
    """Regular-representation multiplication table of a coset table over the trivial subgroup.

    Element ``c`` is the group element carrying coset 0 to coset ``c``; the
    identity is element 0.  Raises :class:`NotRegular` unless the point
    stabiliser acts trivially, which is checked through Schreier generators.
    """
    if p is not None and p.generators != t.generators:
        raise ValueError("coset table and presentation have different generators")
    words = _coset_words(t)
    for c in range(t.cosets):
        for g, perm in enumerate(t.action, start=1):
            d = perm[c]
            # Schreier generator words[c] g words[d]^-1 fixes coset 0
            schreier = words[c] + (g,) + tuple(-e for e in reversed(words[d]))
            if any(t.apply(x, schreier) != x for x in range(t.cosets)):
                raise NotRegular("the subgroup of the coset table is not trivial")
    rows = []
    for c in range(t.cosets):
        rows.append(tuple(t.apply(c, words[d]) for d in range(t.cosets)))
    return MultiplicationTable(tuple(rows))


def _generating_set(g: MultiplicationTable) -> list[int]:
    """Greedy small generating set, preferring elements of large order."""
    e = g.identity
    reached = {e}
    gens: list[int] = []
    candidates = sorted(range(g.order), key=lambda a: (-g.element_order(a), a))
    for a in candidates:
        if a in reached:
            continue
        gens.append(a)
        frontier = list(reached)
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = g.mul(x, s)
                    if y not in reached:
                        reached.add(y)
                        nxt.append(y)
            frontier = nxt
        if len(reached) == g.order:
            break
    return gens


def _extend(g1: MultiplicationTable, g2: MultiplicationTable, gens: Sequence[int],
            images: Sequence[int]) -> dict[int, int] | None:
    phi = {g1.identity: g2.identity}
    queue = collections.deque([g1.identity])
    while queue:
        x = queue.popleft()
        for s, t in zip(gens, images):
            y, fy = g1.mul(x, s), g2.mul(phi[x], t)
            if y in phi:
                if phi[y] != fy:
                    return None
            else:
                phi[y] = fy
                queue.append(y)
    if len(set(phi.values())) != g1.order:
        return None
    return phi


def isomorphic_small_groups(t1: MultiplicationTable, t2: MultiplicationTable) -> bool:
    """Brute-force isomorphism test over images of a generating set."""
    if max(t1.order, t2.order) > MAX_ISOMORPHISM_ORDER:
        raise TooLarge(f"isomorphism test limited to order <= {MAX_ISOMORPHISM_ORDER}")
    if t1.order != t2.order or t1.order_profile() != t2.order_profile():
        return False
    gens = _generating_set(t1)
    by_order: dict[int, list[int]] = collections.defaultdict(list)
    for b in range(t2.order):
        by_order[t2.element_order(b)].append(b)
    choices = [by_order[t1.element_order(s)] for s in gens]
    for images in itertools.product(*choices):
        if _extend(t1, t2, gens, images) is not None:
            return True
    return False
