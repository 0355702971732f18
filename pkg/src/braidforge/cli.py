"""Command-line entry point.

Exit status: 0 on success, 1 on domain errors (bad input data, failed checks),
2 on usage errors.  File arguments accept ``-`` for standard input.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import braid
from .braid import BraidWord, Permutation, PureGenerator, expand_pure_generator
from .errors import BraidForgeError
from .families import FAMILIES, family_presentation
from .fpgroup import (
    DEFAULT_MAX_COSETS,
    Presentation,
    abelianization,
    check_homomorphism,
    coset_enumerate,
    eliminate_generator,
    parse_word,
)
from .garside import braids_equal, normal_form
from .suite import DEFAULT_MAX_N, run_suite
from .trajectory import ExtractionParams, StrandPaths, extract_braid

SEED_ENV = "BRAIDFORGE_SEED"


class _Usage(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _braid(path: str) -> BraidWord:
    return BraidWord.from_text(_read(path))


def _presentation(args) -> Presentation:
    if args.family is not None:
        if args.file is not None:
            raise _Usage("give either a presentation file or --family, not both")
        if args.family not in ("pappus-pi", "pappus-p") and args.k is None:
            raise _Usage(f"--family {args.family} requires --k")
        if args.family in ("f-stratum", "c-stratum") and (args.i is None or args.n is None):
            raise _Usage(f"--family {args.family} requires --i and --n")
        return family_presentation(args.family, args.k, args.i, args.n)
    if args.file is None:
        raise _Usage("a presentation file or --family is required")
    return Presentation.from_text(_read(args.file))


def _add_presentation_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", nargs="?", help="presentation file ('-' for stdin)")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--k", type=int, help="strand count (pb, artin), k (sphere families) "
                                         "or number of points (strata)")
    p.add_argument("--i", type=int, help="spanned dimension (strata)")
    p.add_argument("--n", type=int, help="ambient dimension (strata)")


# -- handlers -----------------------------------------------------------------

def _cmd_normalize(args) -> int:
    print(normal_form(_braid(args.file)).to_text())
    return 0


def _cmd_equal(args) -> int:
    print("equal" if braids_equal(_braid(args.first), _braid(args.second)) else "not equal")
    return 0


def _cmd_perm(args) -> int:
    print(braid.permutation_of(_braid(args.file)).one_line())
    return 0


def _cmd_delta(args) -> int:
    sys.stdout.write(braid.delta_word(args.n, braid.DeltaVariant.coerce(args.variant)).to_text())
    return 0


def _cmd_fulltwist(args) -> int:
    w = braid.full_twist_word(args.n, braid.FullTwistVariant.coerce(args.variant))
    sys.stdout.write(w.to_text())
    return 0


def _cmd_expand_alpha(args) -> int:
    sys.stdout.write(expand_pure_generator(PureGenerator(args.i, args.j, args.n)).to_text())
    return 0


def _cmd_abelianize(args) -> int:
    print(abelianization(_presentation(args)))
    return 0


def _cmd_coset(args) -> int:
    p = _presentation(args)
    subgroup = [parse_word(w, p.generators) for w in args.subgroup]
    t = coset_enumerate(p, subgroup, max_cosets=args.max)
    nontrivial = any(h for h in t.subgroup)
    print(f"index={t.cosets}" if nontrivial else f"order={t.cosets}")
    return 0


def _cmd_eliminate(args) -> int:
    p = _presentation(args)
    if not 1 <= args.rel <= len(p.relators):
        raise _Usage(f"--rel must lie in 1..{len(p.relators)}")
    sys.stdout.write(eliminate_generator(p, args.gen, args.rel - 1).to_text())
    return 0


def _cmd_check_hom(args) -> int:
    p = _presentation(args)
    perms = [Permutation.parse(s) for s in args.images.split(",") if s.strip()]
    if len(perms) != p.ngens:
        raise _Usage(f"--images needs {p.ngens} permutations, got {len(perms)}")
    if any(x.degree != args.sym for x in perms):
        raise _Usage(f"every image must be a permutation of 1..{args.sym}")
    print("true" if check_homomorphism(p, dict(zip(p.generators, perms))) else "false")
    return 0


def _cmd_presentation(args) -> int:
    args.file = None
    sys.stdout.write(_presentation(args).to_text())
    return 0


def _cmd_extract(args) -> int:
    seed = args.seed
    if seed is None:
        env = os.environ.get(SEED_ENV)
        try:
            seed = int(env) if env else 0
        except ValueError:
            raise _Usage(f"{SEED_ENV} must be an integer, got {env!r}") from None
    paths = StrandPaths.from_text(_read(args.file))
    params = ExtractionParams(projection_angle=args.angle, retry_seed=seed)
    sys.stdout.write(extract_braid(paths, params).to_text())
    return 0


def _cmd_suite(args) -> int:
    report = run_suite(args.max_n, args.output, as_json=args.json)
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidforge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="left-greedy normal form of a braid file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("equal", help="decide whether two braid files are the same element")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_equal)

    p = sub.add_parser("perm", help="permutation image of a braid file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_perm)

    p = sub.add_parser("delta", help="a word for the half twist")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", default="1", help="1-4 or a variant name")
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("fulltwist", help="a word for the full twist")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", default="A", help="A, B, C, D, D', E or F")
    p.set_defaults(func=_cmd_fulltwist)

    p = sub.add_parser("expand-alpha", help="Artin word of the pure generator alpha_ij")
    for flag in ("--i", "--j", "--n"):
        p.add_argument(flag, type=int, required=True)
    p.set_defaults(func=_cmd_expand_alpha)

    p = sub.add_parser("abelianize", help="abelian invariants of a presentation")
    _add_presentation_source(p)
    p.set_defaults(func=_cmd_abelianize)

    p = sub.add_parser("coset", help="Todd-Coxeter coset enumeration")
    _add_presentation_source(p)
    p.add_argument("--subgroup", action="append", default=[], metavar="WORD",
                   help="subgroup generator such as \"a b'\" (repeatable)")
    p.add_argument("--max", type=int, default=DEFAULT_MAX_COSETS, help="coset cap")
    p.set_defaults(func=_cmd_coset)

    p = sub.add_parser("eliminate", help="Tietze elimination of one generator")
    _add_presentation_source(p)
    p.add_argument("--gen", required=True)
    p.add_argument("--rel", type=int, required=True, help="1-based relator number")
    p.set_defaults(func=_cmd_eliminate)

    p = sub.add_parser("check-hom", help="test a map to a symmetric group")
    _add_presentation_source(p)
    p.add_argument("--sym", type=int, required=True, help="degree m of the symmetric group")
    p.add_argument("--images", required=True,
                   help="comma-separated one-line images in generator order, e.g. 213,132")
    p.set_defaults(func=_cmd_check_hom)

    p = sub.add_parser("presentation", help="print a named presentation")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=_cmd_presentation)

    p = sub.add_parser("extract-braid", help="braid word of a trajectory file")
    p.add_argument("file")
    p.add_argument("--angle", type=float, default=0.0, help="projection angle in radians")
    p.add_argument("--seed", type=int, default=None,
                   help=f"retry seed (default ${SEED_ENV} or 0)")
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("paper-suite", help="run every verification check")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--output", default=None, help="also write the report here")
    p.add_argument("--json", action="store_true", help="structured report")
    p.set_defaults(func=_cmd_suite)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        parser.error(str(exc))
    except (BraidForgeError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"braidforge: error: {msg}", file=sys.stderr)
        return 1
    return 0  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
