"""Smith normal form over the integers and abelian invariants of presentations."""

from __future__ import annotations

import dataclasses
import math
from typing import Sequence

from .words import Presentation, exponent_vector


@dataclasses.dataclass(frozen=True)
class AbelianInvariants:
    """``Z^free_rank + Z_{d_1} + ... + Z_{d_m}`` with ``d_1 | d_2 | ... | d_m``."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        torsion = tuple(int(d) for d in self.torsion)
        if self.free_rank < 0 or any(d < 2 for d in torsion):
            raise ValueError(f"invalid invariants {self.free_rank}, {torsion}")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ValueError(f"torsion {torsion} is not a divisibility chain")
        object.__setattr__(self, "torsion", torsion)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z_{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[list[int], int]:
    """Invariant factors ``d_1 | d_2 | ... | d_r`` (all positive) and the rank ``r``.

    Exact arithmetic on Python integers; the input is not modified.
    """
    a = [[int(x) for x in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag: list[int] = []
    t = 0
    while t < rows and t < cols:
        # pivot: smallest nonzero absolute value in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ai, at = a[i], a[t]
                        for j in range(t, cols):
                            ai[j] -= q * at[j]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a[t:]:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        dirty = True
            if not dirty:
                # pivot must divide the whole remaining block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                i, _ = bad
                at, ai = a[t], a[i]
                for j in range(t, cols):
                    at[j] += ai[j]
                continue
            # bring the smallest remainder of row/column t into the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, i, j = min(cands)
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    # the elimination above already enforces divisibility; normalise defensively
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            g = math.gcd(diag[i], diag[j])
            l = diag[i] * diag[j] // g
            diag[i], diag[j] = g, l
    return diag, len(diag)


def relation_matrix(p: Presentation) -> list[list[int]]:
    return [exponent_vector(r, p.ngens) for r in p.relators]


def abelianization(p: Presentation) -> AbelianInvariants:
    factors, rank = smith_normal_form(relation_matrix(p))
    return AbelianInvariants(p.ngens - rank, tuple(d for d in factors if d > 1))
