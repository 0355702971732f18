"""Tietze moves with machine-checkable witnesses.

Generator elimination is a pure substitution followed by free and cyclic
reduction.  Relator removal requires a :class:`ConsequenceCertificate`: a list
of conjugates ``u r_j^{+-1} u^-1`` of the remaining relators whose product
freely reduces to the relator being removed.
"""

from __future__ import annotations

import dataclasses
import heapq
import itertools
from typing import Iterable, Mapping, Sequence

from ..braid import Permutation
from ..errors import InvalidCertificate, NotEliminable
from .words import (
    FreeWord,
    Presentation,
    cyclic_key,
    cyclic_reduce,
    free_reduce,
    inverse,
    multiply,
    occurrences,
    split_conjugate,
)


@dataclasses.dataclass(frozen=True)
class CertificateTerm:
    conjugator: FreeWord
    relator_index: int  # 0-based index into Presentation.relators
    sign: int = 1

    def expand(self, p: Presentation) -> FreeWord:
        r = p.relators[self.relator_index]
        if self.sign < 0:
            r = inverse(r)
        return multiply(self.conjugator, r, inverse(self.conjugator))


@dataclasses.dataclass(frozen=True)
class ConsequenceCertificate:
    terms: tuple[CertificateTerm, ...] = ()

    def product(self, p: Presentation) -> FreeWord:
        return multiply(*(t.expand(p) for t in self.terms))

    def __add__(self, other: ConsequenceCertificate) -> ConsequenceCertificate:
        return ConsequenceCertificate(self.terms + other.terms)

    def __len__(self) -> int:
        return len(self.terms)


def verify_consequence(p: Presentation, w: Sequence[int], cert: ConsequenceCertificate) -> bool:
    for t in cert.terms:
        if not 0 <= t.relator_index < len(p.relators) or t.sign not in (1, -1):
            raise InvalidCertificate(f"bad certificate term {t}")
    return cert.product(p) == free_reduce(w)


def eliminate_generator(p: Presentation, gen: str | int, defining: int) -> Presentation:
    """Remove ``gen`` using relator ``defining`` (0-based), which must contain it exactly once."""
    g = gen if isinstance(gen, int) else p.index(gen)
    r = p.relators[defining]
    if occurrences(r, g) != 1:
        raise NotEliminable(
            f"relator {defining} contains {p.generators[g - 1]} {occurrences(r, g)} times")
    k = next(i for i, e in enumerate(r) if abs(e) == g)
    rot = r[k + 1:] + r[:k + 1]  # = u g^eps
    u, eps = rot[:-1], rot[-1]
    solution = inverse(u) if eps > 0 else tuple(u)

    def substitute(w: Sequence[int]) -> list[int]:
        out: list[int] = []
        for e in w:
            if e == g:
                out.extend(solution)
            elif e == -g:
                out.extend(inverse(solution))
            else:
                out.append(e)
        return out

    def renumber(e: int) -> int:
        a = abs(e)
        a = a - 1 if a > g else a
        return a if e > 0 else -a

    rels = []
    for i, rel in enumerate(p.relators):
        if i == defining:
            continue
        rels.append(tuple(renumber(e) for e in cyclic_reduce(substitute(rel))))
    gens = p.generators[:g - 1] + p.generators[g:]
    return Presentation(gens, tuple(rels))


def eliminable_pairs(p: Presentation) -> list[tuple[int, int]]:
    """All ``(generator, relator)`` pairs (1-based, 0-based) valid for elimination."""
    return [(g, j) for j, r in enumerate(p.relators) for g in range(1, p.ngens + 1)
            if occurrences(r, g) == 1]


def simplify_by_elimination(p: Presentation) -> Presentation:
    """Eliminate generators greedily (first valid pair) until none is eliminable."""
    while True:
        pairs = eliminable_pairs(p)
        if not pairs:
            return p
        g, j = pairs[0]
        p = eliminate_generator(p, g, j)


def is_free_of_rank(p: Presentation) -> int | None:
    """Generator count if elimination passes leave no relators, else ``None``.

    A sufficient condition only: ``None`` does not prove the group is not free.
    """
    q = simplify_by_elimination(p)
    return q.ngens if not q.relators else None


def remove_relator(p: Presentation, index: int, cert: ConsequenceCertificate) -> Presentation:
    """Drop relator ``index`` given a certificate built from the other relators."""
    if any(t.relator_index == index for t in cert.terms):
        raise InvalidCertificate("certificate uses the relator being removed")
    if not verify_consequence(p, p.relators[index], cert):
        raise InvalidCertificate(f"certificate does not produce relator {index}")
    rels = p.relators[:index] + p.relators[index + 1:]
    return Presentation(p.generators, rels)


def check_homomorphism(p: Presentation, images: Mapping[str, Permutation]) -> bool:
    """Whether ``generator -> image`` kills every relator (products compose as functions)."""
    missing = set(p.generators) - set(images)
    if missing:
        raise ValueError(f"no image for generators {sorted(missing)}")
    degrees = {images[g].degree for g in p.generators}
    if len(degrees) > 1:
        raise ValueError("images lie in symmetric groups of different degrees")
    m = degrees.pop() if degrees else 1
    ident = Permutation.identity(m)
    imgs = [images[g] for g in p.generators]
    inv = [x.inverse() for x in imgs]
    for r in p.relators:
        acc = ident
        for e in r:
            acc = acc * (imgs[e - 1] if e > 0 else inv[-e - 1])
        if not acc.is_identity():
            return False
    return True


# -- certificate search -------------------------------------------------------

def _single_conjugate(p: Presentation, w: FreeWord, exclude: frozenset[int]) -> CertificateTerm | None:
    """A one-term certificate for ``w`` if ``w`` is a conjugate of some ``r_j^{+-1}``."""
    u, core = split_conjugate(w)
    if not core:
        return None
    for j, r in enumerate(p.relators):
        if j in exclude or len(r) != len(core):
            continue
        for sign, base in ((1, r), (-1, inverse(r))):
            for k in range(len(base)):
                if base[k:] + base[:k] == core:
                    # core = base[:k]^-1 base base[:k]
                    return CertificateTerm(multiply(u, inverse(base[:k])), j, sign)
    return None


def _rewrite_rules(p: Presentation, exclude: frozenset[int]):
    """Rules ``(lhs, rhs, index, sign, shift)``: ``lhs rhs^-1`` is a rotation of a relator."""
    rules = []
    for j, r in enumerate(p.relators):
        if j in exclude:
            continue
        for sign, base in ((1, r), (-1, inverse(r))):
            for k in range(len(base)):
                rot = base[k:] + base[:k]  # = base[:k]^-1 base base[:k]
                shift = inverse(base[:k])
                for cut in range((len(rot) + 1) // 2, len(rot) + 1):
                    lhs, rest = rot[:cut], rot[cut:]
                    rules.append((lhs, inverse(rest), j, sign, shift))
    return rules


def _rewrite_search(p: Presentation, w: FreeWord, exclude: frozenset[int],
                    max_nodes: int) -> list[CertificateTerm] | None:
    """Best-first search over length-nonincreasing relator rewrites down to the empty word.

    Replacing an occurrence ``P lhs S`` of a relator prefix by ``P rhs S``
    (where ``lhs rhs^-1`` is a rotation of a relator) records the term
    ``P rot P^-1`` since ``P lhs S = (P rot P^-1) P rhs S``.
    """
    rules = _rewrite_rules(p, exclude)
    start = free_reduce(w)
    if not start:
        return []
    counter = itertools.count()
    heap = [(len(start), next(counter), start)]
    parent: dict[FreeWord, tuple[FreeWord, CertificateTerm] | None] = {start: None}
    while heap and len(parent) <= max_nodes:
        _, _, cur = heapq.heappop(heap)
        for lhs, rhs, j, sign, shift in rules:
            m = len(lhs)
            for pos in range(len(cur) - m + 1):
                if cur[pos:pos + m] != lhs:
                    continue
                prefix = cur[:pos]
                nxt = free_reduce(prefix + rhs + cur[pos + m:])
                if len(nxt) > len(cur) or nxt in parent:
                    continue
                term = CertificateTerm(multiply(prefix, shift), j, sign)
                parent[nxt] = (cur, term)
                if not nxt:
                    terms = []
                    node = nxt
                    while parent[node] is not None:
                        node, t = parent[node]
                        terms.append(t)
                    terms.reverse()
                    return terms
                heapq.heappush(heap, (len(nxt), next(counter), nxt))
    return None


def _sort_by_blocks(p: Presentation, w: FreeWord, left: frozenset[int],
                    exclude: frozenset[int]) -> tuple[list[CertificateTerm], FreeWord] | None:
    """Move letters of the ``left`` generators in front of all others.

    Each exchange ``y x -> x y`` costs the conjugate of a commutator relator, found
    by :func:`_single_conjugate`.  Returns the terms and the sorted word
    ``w_left w_right``, or ``None`` if some needed commutator is not a relator.
    """
    terms: list[CertificateTerm] = []
    cur = list(free_reduce(w))
    changed = True
    while changed:
        changed = False
        for i in range(len(cur) - 1):
            y, x = cur[i], cur[i + 1]
            if abs(y) in left or abs(x) not in left:
                continue
            # P y x S = (P x y c (P x y)^-1) P x y S with c = y^-1 x^-1 y x
            c = (-y, -x, y, x)
            t = _single_conjugate(p, c, exclude)
            if t is None:
                return None
            pre = tuple(cur[:i]) + (x, y)
            terms.append(CertificateTerm(multiply(pre, t.conjugator), t.relator_index, t.sign))
            cur[i], cur[i + 1] = x, y
            changed = True
            break
    return terms, tuple(cur)


def find_certificate(
    p: Presentation,
    w: Sequence[int],
    *,
    exclude: Iterable[int] = (),
    commuting: tuple[Iterable[str], Iterable[str]] | None = None,
    max_nodes: int = 20_000,
) -> ConsequenceCertificate | None:
    """Search for a certificate that ``w`` is a consequence of the relators of ``p``.

    ``exclude`` lists relator indices that may not be used.  When ``commuting``
    names two generator blocks that commute through relators of ``p``, letters
    are first sorted block by block and each block's projection is then
    reduced by rewriting.  Returns ``None`` when the bounded search fails.
    """
    excl = frozenset(exclude)
    w = free_reduce(w)
    if not w:
        return ConsequenceCertificate()
    one = _single_conjugate(p, w, excl)
    if one is not None:
        return ConsequenceCertificate((one,))
    terms: list[CertificateTerm] = []
    pieces = [w]
    if commuting is not None:
        left = frozenset(p.index(g) for g in commuting[0])
        right = frozenset(p.index(g) for g in commuting[1])
        if any(abs(e) not in left | right for e in w):
            return None
        sorted_ = _sort_by_blocks(p, w, left, excl)
        if sorted_ is None:
            return None
        terms, sw = sorted_
        split = next((i for i, e in enumerate(sw) if abs(e) not in left), len(sw))
        pieces = [free_reduce(sw[:split]), free_reduce(sw[split:])]
    for piece in pieces:
        if not piece:
            continue
        found = _rewrite_search(p, piece, excl, max_nodes)
        if found is None:
            return None
        terms.extend(found)
    cert = ConsequenceCertificate(tuple(terms))
    return cert if verify_consequence(p, w, cert) else None


def remove_redundant_relators(
    p: Presentation,
    keep: Iterable[Sequence[int]],
    *,
    commuting: tuple[Iterable[str], Iterable[str]] | None = None,
    max_nodes: int = 20_000,
) -> tuple[Presentation, list[ConsequenceCertificate]]:
    """Remove every relator outside ``keep`` that is certified to follow from the rest.

    Relators whose certificate search fails are left in place.  Certificates are
    returned in removal order, each relative to the presentation at that step.
    """
    keep_keys = {cyclic_key(r) for r in keep}
    certs: list[ConsequenceCertificate] = []
    progress = True
    while progress:
        progress = False
        for idx, r in enumerate(p.relators):
            if cyclic_key(r) in keep_keys:
                continue
            cert = find_certificate(p, r, exclude=(idx,), commuting=commuting,
                                    max_nodes=max_nodes)
            if cert is None:
                continue
            p = remove_relator(p, idx, cert)
            certs.append(cert)
            progress = True
            break
    return p, certs
