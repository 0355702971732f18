"""End-to-end verification suite over the braid and presentation catalogue.

Each check returns pass or fail with a short detail string; an exception inside
a check is recorded as a failure and never stops the run.  Check ids are
zero-padded so that sorting by id reproduces execution order.
"""

from __future__ import annotations

import dataclasses
import json
from math import comb
from pathlib import Path
from typing import Callable, Iterator

from . import braid, families
from .braid import BraidWord, Permutation, alpha, ascending, concat, descending
from .errors import InvalidRange
from .fpgroup import (
    Presentation,
    abelianization,
    check_homomorphism,
    commutator,
    coset_enumerate,
    cyclic_key,
    eliminate_generator,
    is_free_of_rank,
    isomorphic_small_groups,
    multiplication_table,
    remove_redundant_relators,
)
from .garside import braids_equal, normal_form
from .trajectory import verify_loop_full_twist

MIN_N, MAX_N, DEFAULT_MAX_N = 3, 8, 6


@dataclasses.dataclass(frozen=True)
class SuiteCheck:
    id: str
    citation: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""


@dataclasses.dataclass(frozen=True)
class SuiteReport:
    checks: tuple[SuiteCheck, ...]

    def __post_init__(self):
        ids = [c.id for c in self.checks]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate check ids")

    @property
    def summary(self) -> dict[str, int]:
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for c in self.checks:
            counts[c.status] += 1
        return counts

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def to_text(self) -> str:
        lines = [f"{c.id}\t{c.status}\t{c.citation}\t{c.detail}" for c in self.checks]
        s = self.summary
        lines.append(f"# pass={s['pass']} fail={s['fail']} skipped={s['skipped']}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {"checks": [dataclasses.asdict(c) for c in self.checks], "summary": self.summary}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# -- identity generators shared with the tests --------------------------------

def conjugation_shift_identities(n: int) -> Iterator[tuple[BraidWord, BraidWord]]:
    """Pairs that commute a generator through ``s1..sk``, ``sk..s1`` or ``sk..s1 s1..sk``."""
    for k in range(1, n):
        up, down = ascending(n, 1, k), descending(n, k, 1)
        for i in range(1, k):
            yield up * braid.word(n, [i]), braid.word(n, [i + 1]) * up
        for i in range(2, k + 1):
            yield down * braid.word(n, [i]), braid.word(n, [i - 1]) * down
        loop = down * up
        for j in range(1, k):
            yield loop * braid.word(n, [j]), braid.word(n, [j]) * loop


def cancellation_identity(n: int) -> tuple[BraidWord, BraidWord]:
    """``alpha_1n ... alpha_{n-1,n}`` against ``(s_{n-1}..s1)(s1..s_{n-1})``."""
    lhs = concat(n, (alpha(i, n, n) for i in range(1, n)))
    rhs = descending(n, n - 1, 1) * ascending(n, 1, n - 1)
    return lhs, rhs


def _pairwise_equal(words: list[BraidWord]) -> bool:
    forms = [normal_form(w) for w in words]
    return all(f == forms[0] for f in forms)


def _adjacent_transpositions(p: Presentation, degree: int) -> dict[str, Permutation]:
    return {g: Permutation.transposition(degree, int(g[1:]), int(g[1:]) + 1) for g in p.generators}


def pappus_p_reduction(p: Presentation) -> Presentation:
    """Eliminate ``b23`` and ``bp23`` via the product relators, then drop certified consequences."""
    b_product = p.word("b12", "b13", "b23")
    q = eliminate_generator(p, "b23", _relator_index(p, b_product))
    q = eliminate_generator(q, "bp23", _relator_index(q, q.word("bp12", "bp13", "bp23")))
    target = [commutator(q.word(f"b1{x}"), q.word(f"bp1{y}")) for x in (2, 3) for y in (2, 3)]
    reduced, _ = remove_redundant_relators(
        q, target, commuting=(("b12", "b13"), ("bp12", "bp13")))
    return reduced


def pappus_p_target(q: Presentation) -> set:
    return {cyclic_key(commutator(q.word(f"b1{x}"), q.word(f"bp1{y}")))
            for x in (2, 3) for y in (2, 3)}


def pappus_pi_reduction(p: Presentation) -> Presentation:
    """Eliminate ``bp23`` via the equal-products relator, then drop certified consequences."""
    last = len(p.relators) - 1
    q = eliminate_generator(p, "bp23", last)
    reduced, _ = remove_redundant_relators(
        q, pappus_pi_target_words(q), commuting=(("b12", "b13", "b23"), ("bp12", "bp13")))
    return reduced


def pappus_pi_target_words(q: Presentation) -> list:
    words = families.triple_relators(q, "b")
    words += [commutator(q.word(b), q.word(c))
              for b in ("b12", "b13", "b23") for c in ("bp12", "bp13")]
    return words


def _relator_index(p: Presentation, w) -> int:
    key = cyclic_key(w)
    for i, r in enumerate(p.relators):
        if cyclic_key(r) == key:
            return i
    raise KeyError(f"no relator {p.format_word(w)}")


# -- checks ---------------------------------------------------------------------

Check = Callable[[int, dict], tuple[bool, str]]


def _check_shift_identities(max_n, f):
    count = 0
    for n in range(2, max_n + 1):
        for lhs, rhs in conjugation_shift_identities(n):
            if not f["braids_equal"](lhs, rhs):
                return False, f"fails at n={n}: {lhs.letters} vs {rhs.letters}"
            count += 1
    return True, f"{count} identities"


def _check_delta_variants(max_n, f):
    for n in range(2, max_n + 1):
        if not _pairwise_equal([f["delta_word"](n, v) for v in braid.DeltaVariant]):
            return False, f"variants differ at n={n}"
    return True, f"n=2..{max_n}"


def _check_full_twist_variants(max_n, f):
    top = min(max_n, 7)
    for n in range(2, top + 1):
        if not _pairwise_equal([f["full_twist_word"](n, v) for v in braid.FullTwistVariant]):
            return False, f"variants differ at n={n}"
    for n in range(2, max_n + 1):
        if not f["braids_equal"](*cancellation_identity(n)):
            return False, f"cancellation fails at n={n}"
    return True, f"variants n=2..{top}, cancellation n=2..{max_n}"


def _check_centrality(max_n, f):
    top = min(max_n, 7)
    for n in range(2, top + 1):
        d = f["full_twist_word"](n, "A")
        for i in range(1, n):
            s = braid.word(n, [i])
            if not f["braids_equal"](d * s, s * d):
                return False, f"not central at n={n}, i={i}"
    return True, f"n=2..{top}"


def _check_f_abelian(max_n, f):
    for k in range(2, max_n + 1):
        for n_dim, torsion in ((1, (2,)), (2, ())):
            got = abelianization(f["f_stratum"](families.StratumParams(k + 1, 1, n_dim)))
            if (got.free_rank, got.torsion) != (comb(k, 2) - 1, torsion):
                return False, f"k={k}, n={n_dim}: got {got}"
    return True, f"k=2..{max_n}"


def _expected_c_torsion(k: int, n_dim: int) -> tuple[int, ...]:
    if n_dim == 1 or k % 2:
        return (2 * k,)
    return (k,)


def _check_c_abelian(max_n, f):
    for k in range(2, max_n + 1):
        for n_dim in (1, 2):
            if n_dim == 2 and k < 3:
                continue
            got = abelianization(f["c_stratum"](families.StratumParams(k + 1, 1, n_dim)))
            if (got.free_rank, got.torsion) != (0, _expected_c_torsion(k, n_dim)):
                return False, f"k={k}, n={n_dim}: got {got}"
    for kp in range(3, min(max_n, 6) + 1):
        for i in range(2, kp):
            for n_dim in range(i, i + 2):
                got = abelianization(f["c_stratum"](families.StratumParams(kp, i, n_dim)))
                if (got.free_rank, got.torsion) != (0, (2,)):
                    return False, f"k_points={kp}, i={i}, n={n_dim}: got {got}"
    return True, f"k=2..{max_n}"


def _check_order_two(max_n, f):
    t = coset_enumerate(f["f_stratum"](families.StratumParams(3, 1, 1)))
    return t.cosets == 2, f"order={t.cosets}"


def _check_dicyclic(max_n, f):
    t = coset_enumerate(f["c_stratum"](families.StratumParams(3, 1, 1)))
    if t.cosets != 12:
        return False, f"order={t.cosets}"
    dic = Presentation(("a", "b"), ((1,) * 6, (2, 2, -1, -1, -1), (-2, 1, 2, 1)))
    iso = isomorphic_small_groups(multiplication_table(t), multiplication_table(coset_enumerate(dic)))
    return iso, "order=12, " + ("isomorphic to Dic3" if iso else "not isomorphic to Dic3")


def _check_free_rank_two(max_n, f):
    p = f["f_stratum"](families.StratumParams(4, 1, 2))
    product = p.word("a12", "a13", "a23")
    idx = _relator_index(p, product)
    ranks = [is_free_of_rank(eliminate_generator(p, g, idx)) for g in ("a12", "a13", "a23")]
    return ranks == [2, 2, 2], f"ranks {ranks}"


def _check_pappus_p(max_n, f):
    p = f["pappus_p"]()
    r = pappus_p_reduction(p)
    ab = abelianization(p)
    ok = r.ngens == 4 and r.relator_keys() == pappus_p_target(r) and str(ab) == "Z^4"
    return ok, f"{len(r.relators)} relators on {r.ngens} generators, H1={ab}"


def _check_pappus_pi(max_n, f):
    p = f["pappus_pi"]()
    r = pappus_pi_reduction(p)
    ab = abelianization(p)
    target = {cyclic_key(w) for w in pappus_pi_target_words(r)}
    ok = r.relator_keys() == target and str(ab) == "Z^5"
    return ok, f"{len(r.relators)} relators on {r.ngens} generators, H1={ab}"


def _check_symmetric_quotient(max_n, f):
    count = 0
    for kp in range(2, min(max_n, 7) + 1):
        for i in range(1, kp):
            for n_dim in range(i, i + 2):
                p = f["c_stratum"](families.StratumParams(kp, i, n_dim))
                if not check_homomorphism(p, _adjacent_transpositions(p, kp)):
                    return False, f"k_points={kp}, i={i}, n={n_dim}"
                count += 1
    return True, f"{count} presentations"


def _check_loop(max_n, f):
    top = min(max_n, 5)
    bad = [k for k in range(2, top + 1) if not f["verify_loop"](k)]
    return not bad, f"k=2..{top}" if not bad else f"fails for k={bad}"


CHECKS: tuple[tuple[str, str, Check], ...] = (
    ("01-shift-identities", "generators slide through s1..sk and sk..s1 with an index shift",
     _check_shift_identities),
    ("02-delta-variants", "four positive words for the half twist agree", _check_delta_variants),
    ("03-full-twist-variants", "seven words for the full twist agree; alpha product cancels",
     _check_full_twist_variants),
    ("04-full-twist-central", "the full twist commutes with every generator", _check_centrality),
    ("05-ordered-strata-h1", "H1 of ordered exceptional strata", _check_f_abelian),
    ("06-unordered-strata-h1", "H1 of unordered strata", _check_c_abelian),
    ("07-order-two", "ordered stratum on the line with 3 points has order 2", _check_order_two),
    ("08-dicyclic", "unordered stratum on the line with 3 points is dicyclic of order 12",
     _check_dicyclic),
    ("09-free-rank-two", "ordered 4-point planar collinear stratum is free of rank 2",
     _check_free_rank_two),
    ("10-pappus", "Pappus group reduces to commuting free pairs", _check_pappus_p),
    ("11-pappus-partial", "partial Pappus group reduces to PB3 times F2", _check_pappus_pi),
    ("12-symmetric-quotient", "adjacent transpositions define a quotient onto the symmetric group",
     _check_symmetric_quotient),
    ("13-loop-full-twist", "the rotating loop reads as the full twist", _check_loop),
)


def default_factories() -> dict[str, Callable]:
    return {
        "braids_equal": braids_equal,
        "delta_word": braid.delta_word,
        "full_twist_word": braid.full_twist_word,
        "f_stratum": families.f_stratum_presentation,
        "c_stratum": families.c_stratum_presentation,
        "pappus_p": families.pappus_p_presentation,
        "pappus_pi": families.pappus_pi_presentation,
        "verify_loop": verify_loop_full_twist,
    }


def run_suite(max_n: int = DEFAULT_MAX_N, output: str | Path | None = None, *,
              factories: dict[str, Callable] | None = None, as_json: bool = False) -> SuiteReport:
    """Run every check in order; ``factories`` overrides building blocks (for fault injection)."""
    if not MIN_N <= max_n <= MAX_N:
        raise InvalidRange(f"max_n must lie in {MIN_N}..{MAX_N}, got {max_n}")
    f = default_factories()
    f.update(factories or {})
    results = []
    for cid, citation, fn in CHECKS:
        try:
            ok, detail = fn(max_n, f)
        except Exception as exc:  # recorded, never fatal
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(SuiteCheck(cid, citation, "pass" if ok else "fail", detail))
    report = SuiteReport(tuple(sorted(results, key=lambda c: c.id)))
    if output is not None:
        Path(output).write_text(report.to_json() if as_json else report.to_text())
    return report
