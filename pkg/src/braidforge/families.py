"""Presentation factories for braid groups and configuration-space strata.

Equality chains ``u = v = w`` compile to the relators ``u v^-1`` and
``v w^-1`` in that order.  Generator names: ``a12`` for the pure braid
generator alpha_12, ``s1`` for sigma_1, ``b12`` and ``bp12`` for the two
families of pure generators on the Pappus configuration.  Two-digit indices
are separated by an underscore (``a3_12``).

For the strata, ``k_points`` is the number of configuration points.  The
exceptional families use the internal ``k = k_points - 1``, so the pure
generators are alpha_ij with ``1 <= i < j <= k``.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Sequence

from .braid import BraidWord, delta_word
from .errors import EmptyStratum
from .fpgroup.words import FreeWord, Presentation, commutator, inverse, multiply, power


def _pair_name(prefix: str, i: int, j: int) -> str:
    return f"{prefix}{i}{j}" if i < 10 and j < 10 else f"{prefix}{i}_{j}"


def pure_generator_names(n: int, prefix: str = "a") -> tuple[str, ...]:
    return tuple(_pair_name(prefix, i, j) for j in range(2, n + 1) for i in range(1, j))


class _PairAlphabet:
    """Maps ``(i, j)`` to the 1-based index of the named pure generator."""

    def __init__(self, names: Sequence[str], n: int, prefix: str):
        self.lookup = {(i, j): names.index(_pair_name(prefix, i, j)) + 1
                       for i in range(1, n + 1) for j in range(i + 1, n + 1)}

    def __call__(self, i: int, j: int) -> FreeWord:
        return (self.lookup[(i, j)],)


def _yb3(a: _PairAlphabet, i: int, j: int, k: int) -> list[FreeWord]:
    x, y, z = a(i, j), a(i, k), a(j, k)
    first = multiply(x, y, z)
    second = multiply(y, z, x)
    third = multiply(z, x, y)
    return [multiply(first, inverse(second)), multiply(second, inverse(third))]


def _yb4(a: _PairAlphabet, i: int, j: int, k: int, l: int) -> list[FreeWord]:
    return [
        commutator(a(k, l), a(i, j)),
        commutator(a(i, l), a(j, k)),
        commutator(a(j, l), multiply(inverse(a(j, k)), a(i, k), a(j, k))),
        commutator(a(j, l), multiply(a(k, l), a(i, k), inverse(a(k, l)))),
    ]


def _yang_baxter(a: _PairAlphabet, n: int) -> list[FreeWord]:
    rels: list[FreeWord] = []
    for i, j, k in itertools.combinations(range(1, n + 1), 3):
        rels += _yb3(a, i, j, k)
    for i, j, k, l in itertools.combinations(range(1, n + 1), 4):
        rels += _yb4(a, i, j, k, l)
    return rels


def triple_relators(p: Presentation, prefix: str = "a") -> list[FreeWord]:
    """The two relators for ``x12 x13 x23 = x13 x23 x12 = x23 x12 x13`` in ``p``'s alphabet."""
    return _yb3(_PairAlphabet(p.generators, 3, prefix), 1, 2, 3)


def _twist(a: _PairAlphabet, k: int) -> FreeWord:
    return multiply(*(a(i, j) for j in range(2, k + 1) for i in range(1, j)))


def full_twist_pure_word(p: Presentation, k: int, prefix: str = "a") -> FreeWord:
    """``x12 (x13 x23) ... (x1k ... x{k-1,k})`` in the alphabet of ``p``."""
    return _twist(_PairAlphabet(p.generators, k, prefix), k)


def pure_braid_presentation(n: int) -> Presentation:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    names = pure_generator_names(n)
    return Presentation(names, tuple(_yang_baxter(_PairAlphabet(names, n, "a"), n)))


def artin_presentation(n: int) -> Presentation:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    names = tuple(f"s{i}" for i in range(1, n))
    rels: list[FreeWord] = []
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(commutator((i,), (j,)))
    for i in range(1, n - 1):
        j = i + 1
        rels.append((i, j, i, -j, -i, -j))
    return Presentation(names, tuple(rels))


def sphere_relator(k: int) -> FreeWord:
    """``sigma_1 ... sigma_{k-1} sigma_k^2 sigma_{k-1} ... sigma_1``."""
    return tuple(range(1, k + 1)) + tuple(range(k, 0, -1))


def sphere_pure_presentation(k: int) -> Presentation:
    """Pure braids of ``k`` strands with the square of the full twist killed."""
    p = pure_braid_presentation(k)
    if k < 2:
        return p
    d = full_twist_pure_word(p, k)
    return p.with_relators([power(d, 2)])


def sphere_braid_presentation(k: int) -> Presentation:
    """Artin presentation of ``B_{k+1}`` plus the sphere relator on sigma_1..sigma_k."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    return artin_presentation(k + 1).with_relators([sphere_relator(k)])


def coxeter_presentation(n: int) -> Presentation:
    """The symmetric group on ``n`` letters: Artin relators plus ``s_i^2``."""
    p = artin_presentation(n)
    return p.with_relators([(i, i) for i in range(1, n)])


def trivial_presentation() -> Presentation:
    return Presentation((), ())


@dataclasses.dataclass(frozen=True)
class StratumParams:
    """``k_points`` points spanning an ``i_dim``-plane inside projective ``n_dim``-space."""

    k_points: int
    i_dim: int
    n_dim: int

    def __post_init__(self):
        if min(self.k_points, self.i_dim, self.n_dim) < 1:
            raise ValueError(f"stratum parameters must be positive: {self}")

    @property
    def k(self) -> int:
        return self.k_points - 1


def stratum_dimension(params: StratumParams) -> int:
    """Complex dimension ``k i + (i + 1)(n - i)``."""
    k, i, n = params.k_points, params.i_dim, params.n_dim
    return k * i + (i + 1) * (n - i)


def stratum_nonempty(params: StratumParams) -> bool:
    """The published nonemptiness predicate ``i <= min(k + 1, n)``, with ``k = k_points``."""
    return params.i_dim <= min(params.k_points + 1, params.n_dim)


def spanning_consistent(params: StratumParams) -> bool:
    """``i <= min(k_points - 1, n)``: ``k_points`` points span at most a ``(k_points - 1)``-plane."""
    return params.i_dim <= min(params.k_points - 1, params.n_dim)


def _require_stratum(params: StratumParams) -> None:
    if not spanning_consistent(params):
        raise EmptyStratum(
            f"{params.k_points} points cannot span dimension {params.i_dim} "
            f"in dimension {params.n_dim}")


def f_stratum_presentation(params: StratumParams) -> Presentation:
    """Fundamental group of ordered configurations in the given stratum."""
    _require_stratum(params)
    k = params.k
    if params.i_dim == 1 and params.n_dim == 1:
        return sphere_pure_presentation(k)
    if params.i_dim == 1 and k >= 3:
        p = pure_braid_presentation(k)
        d = full_twist_pure_word(p, k)
        return p.with_relators([d])
    return trivial_presentation()


def c_stratum_presentation(params: StratumParams) -> Presentation:
    """Fundamental group of unordered configurations in the given stratum."""
    _require_stratum(params)
    k = params.k
    if params.i_dim == 1 and params.n_dim == 1:
        return sphere_braid_presentation(k)
    if params.i_dim == 1 and k >= 3:
        half = delta_word(k).embed(k + 1)
        return sphere_braid_presentation(k).with_relators([(half * half).letters])
    return coxeter_presentation(params.k_points)


def _pappus_generators() -> tuple[str, ...]:
    return pure_generator_names(3, "b") + pure_generator_names(3, "bp")


def pappus_pi_presentation() -> Presentation:
    """Six pure generators: YB3 for each triple, all cross commutators, equal products."""
    names = _pappus_generators()
    b = _PairAlphabet(names, 3, "b")
    bp = _PairAlphabet(names, 3, "bp")
    rels = _yb3(b, 1, 2, 3) + _yb3(bp, 1, 2, 3)
    pairs = list(itertools.combinations(range(1, 4), 2))
    for x in pairs:
        for y in pairs:
            rels.append(commutator(b(*x), bp(*y)))
    rels.append(multiply(_twist(bp, 3), inverse(_twist(b, 3))))
    return Presentation(names, tuple(rels))


def pappus_p_presentation() -> Presentation:
    """:func:`pappus_pi_presentation` with the product ``b12 b13 b23`` killed."""
    p = pappus_pi_presentation()
    return p.with_relators([full_twist_pure_word(p, 3, "b")])


def alpha_to_sigma(p: Presentation, word: Sequence[int], strands: int) -> BraidWord:
    """Expand a word in the ``a`` generators of ``p`` into Artin generators."""
    from .braid import alpha

    out: list[int] = []
    for e in word:
        name = p.generators[abs(e) - 1]
        body = name[1:]
        i, j = (int(x) for x in body.split("_")) if "_" in body else (int(body[0]), int(body[1]))
        w = alpha(i, j, strands)
        out += list(w.letters if e > 0 else w.inverse().letters)
    return BraidWord(strands, tuple(out))


FAMILIES = ("pb", "artin", "sphere-pure", "sphere", "f-stratum", "c-stratum",
            "pappus-pi", "pappus-p")


def family_presentation(family: str, k: int | None = None, i: int | None = None,
                        n: int | None = None) -> Presentation:
    """Dispatch by family name; ``k`` is the strand count, sphere ``k`` or ``k_points``."""
    if family in ("pappus-pi", "pappus-p"):
        return pappus_pi_presentation() if family == "pappus-pi" else pappus_p_presentation()
    if k is None:
        raise ValueError(f"family {family!r} needs --k")
    if family == "pb":
        return pure_braid_presentation(k)
    if family == "artin":
        return artin_presentation(k)
    if family == "sphere-pure":
        return sphere_pure_presentation(k)
    if family == "sphere":
        return sphere_braid_presentation(k)
    if family in ("f-stratum", "c-stratum"):
        if i is None or n is None:
            raise ValueError(f"family {family!r} needs --i and --n")
        params = StratumParams(k, i, n)
        if family == "f-stratum":
            return f_stratum_presentation(params)
        return c_stratum_presentation(params)
    raise ValueError(f"unknown family {family!r}")
