# MIT License
#
# Copyright (c) 2022 nacohom contributors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""The ``nacohom`` command line.

Every command reads JSON documents and writes one JSON document to stdout
or ``--output``. Exit codes: 0 ok, 1 domain violation, 2 unreadable or
malformed document, 3 budget exhausted."""

from __future__ import annotations

import argparse
import logging
import sys
from enum import IntEnum
from pathlib import Path
from typing import (
    Any,
    Callable,
    Dict,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np

from . import __version__
from .algebra import (
    FiniteGroup,
    FiniteGroupoid,
    GroupFamily,
    GroupoidFunctor,
    validate_functor,
    validate_group,
    validate_groupoid,
)
from .cocycle import (
    WeakAction,
    check_weak_identity,
    enumerate_cocycles,
    h2,
    validate_cocycle,
    validate_morphism,
)
from .exceptions import (
    BudgetExceeded,
    DataException,
    DocumentError,
    DomainException,
    InvalidInput,
    NotAFibration,
    PreconditionFailed,
    TheoremViolation,
)
from .extensions import Extension, interpretation_check, validate_extension
from .grothendieck import (
    Cleavage,
    KernelIdentification,
    canonical_cleavage,
    check_equivalence,
    fiber_action,
    gamma,
    twist,
    validate_cleavage,
)
from .nerve import (
    TruncatedSimplicialSet,
    nerve_of_aut,
    nerve_of_groupoid,
    representation_check,
    validate_homotopy,
    validate_map,
    validate_simplicial_set,
)
from .report import TheoremReport, ValidationReport
from .serialization import (
    ClassesConverter,
    CleavageConverter,
    CochainConverter,
    CocycleConverter,
    ExtensionConverter,
    FamilyConverter,
    FunctorConverter,
    GroupConverter,
    GroupoidConverter,
    HomotopyConverter,
    MapConverter,
    MorphismConverter,
    NerveConverter,
    ReportConverter,
    dump_document,
    load_payload,
    read_document,
    write_output,
)
from .two_groupoid import build_aut

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    VIOLATION = 1
    DOCUMENT = 2
    BUDGET = 3


VALIDATE_KINDS = (
    "group",
    "groupoid",
    "family",
    "cocycle",
    "cochain",
    "morphism",
    "functor",
    "cleavage",
    "extension",
    "nerve",
    "map",
    "homotopy",
)
THEOREMS = ("interpretation", "representation", "weak-identity", "equivalence")
FUZZ_TARGETS = ("group", "cocycle", "nerve")


# loading
def _load_group(path: str) -> FiniteGroup:
    return GroupConverter().from_stored(load_payload(path, "group"))


def _load_groupoid(path: str) -> FiniteGroupoid:
    return GroupoidConverter().from_stored(load_payload(path, "groupoid"))


def _load_family(path: str) -> GroupFamily:
    return FamilyConverter().from_stored(load_payload(path, "family"))


def _family_report(fam: GroupFamily) -> ValidationReport:
    report = ValidationReport()
    for a, g in fam.items():
        report.extend(validate_group(g), prefix=f"K_{a}: ")
    return report


def _load_coefficients(
    groupoid: str, family: str
) -> Tuple[FiniteGroupoid, GroupFamily]:
    """Load a base groupoid and a family over it; both must pass their
    validators."""

    base = _load_groupoid(groupoid)
    report = validate_groupoid(base)
    if not report.ok:
        raise InvalidInput("groupoid", report)
    fam = _load_family(family)
    fam.check_indexes(base)
    report = _family_report(fam)
    if not report.ok:
        raise InvalidInput("family", report)
    return base, fam


def _load_cocycle(path: str) -> WeakAction:
    return CocycleConverter().from_stored(load_payload(path, "cocycle"))


def _load_fibration(
    path: str,
) -> Tuple[GroupoidFunctor, Optional[KernelIdentification]]:
    """An extension document, or a bare functor whose kernel
    identification is then read off the fibers."""

    kind = read_document(path).kind
    if kind == "extension":
        e = ExtensionConverter().from_stored(load_payload(path, kind))
        return e.projection, e.kernel
    if kind == "functor":
        return FunctorConverter().from_stored(load_payload(path, kind)), None
    raise DocumentError(
        f"{path}:kind", f"expected an extension or functor, got {kind}"
    )


def _load_cleavage(args: argparse.Namespace, p: GroupoidFunctor) -> Cleavage:
    if args.cleavage is None:
        return canonical_cleavage(p)
    payload = load_payload(args.cleavage, "cleavage")
    return CleavageConverter(p).from_stored(payload)


def _instance(*paths: str) -> str:
    return "/".join(Path(p).stem for p in paths)


def _emit(args: argparse.Namespace, kind: str, payload: Any) -> None:
    write_output(dump_document(kind, payload), args.output)


def _emit_report(
    args: argparse.Namespace, report: Union[ValidationReport, TheoremReport]
) -> ExitCode:
    _emit(args, "report", ReportConverter().to_stored(report))
    return ExitCode.OK if report.ok else ExitCode.VIOLATION


# validate
def _validate_family(path: str) -> ValidationReport:
    return _family_report(_load_family(path))


def _validate_cochain(path: str) -> ValidationReport:
    """Cochains have no axioms; building one checks its values."""

    CochainConverter().from_stored(load_payload(path, "cochain"))
    return ValidationReport()


def _validate_cleavage(args: argparse.Namespace) -> ValidationReport:
    if args.fibration is None:
        raise PreconditionFailed("Validating a cleavage needs --fibration.")
    p, _ = _load_fibration(args.fibration)
    return validate_cleavage(_load_cleavage(args, p))


def _validator(kind: str) -> Callable[[str], ValidationReport]:
    def load(converter: Any) -> Callable[[str], Any]:
        return lambda path: converter.from_stored(load_payload(path, kind))

    table: Dict[str, Callable[[str], ValidationReport]] = {
        "group": lambda p: validate_group(_load_group(p)),
        "groupoid": lambda p: validate_groupoid(_load_groupoid(p)),
        "family": _validate_family,
        "cocycle": lambda p: validate_cocycle(_load_cocycle(p)),
        "cochain": _validate_cochain,
        "morphism": lambda p: validate_morphism(load(MorphismConverter())(p)),
        "functor": lambda p: validate_functor(load(FunctorConverter())(p)),
        "extension": lambda p: validate_extension(
            load(ExtensionConverter())(p)
        ),
        "nerve": lambda p: validate_simplicial_set(load(NerveConverter())(p)),
        "map": lambda p: validate_map(load(MapConverter())(p)),
        "homotopy": lambda p: validate_homotopy(load(HomotopyConverter())(p)),
    }
    return table[kind]


def cmd_validate(args: argparse.Namespace) -> ExitCode:
    """Run the validator of ``args.kind`` on ``args.path``. Malformed data
    that cannot even be built is reported with the ``structure`` code."""

    try:
        if args.kind == "cleavage":
            args.cleavage = args.path
            report = _validate_cleavage(args)
        else:
            report = _validator(args.kind)(args.path)
    except DocumentError:
        raise
    except DataException as e:
        report = ValidationReport()
        report.add("structure", str(e))
    logger.info(
        "%s %s: %d violation(s)", args.kind, args.path, len(report.violations)
    )
    return _emit_report(args, report)


# constructions
def cmd_h2(args: argparse.Namespace) -> ExitCode:
    base, fam = _load_coefficients(args.groupoid, args.family)
    classes = h2(base, fam, budget=args.budget, workers=args.workers)
    logger.info("%d cohomology class(es)", len(classes))
    converter = ClassesConverter(base, fam, witnesses=args.witnesses)
    _emit(args, "classes", converter.to_stored(classes))
    return ExitCode.OK


def cmd_twist(args: argparse.Namespace) -> ExitCode:
    t = twist(_load_cocycle(args.cocycle))
    if args.total:
        _emit(args, "groupoid", GroupoidConverter().to_stored(t.groupoid))
    else:
        e = Extension.from_twisted(t)
        _emit(args, "extension", ExtensionConverter().to_stored(e))
    return ExitCode.OK


def cmd_fiber(args: argparse.Namespace) -> ExitCode:
    p, kernel = _load_fibration(args.fibration)
    w = fiber_action(p, _load_cleavage(args, p), kernel)
    _emit(args, "cocycle", CocycleConverter().to_stored(w))
    return ExitCode.OK


def cmd_gamma(args: argparse.Namespace) -> ExitCode:
    p, kernel = _load_fibration(args.fibration)
    functor = gamma(p, _load_cleavage(args, p), kernel)
    _emit(args, "functor", FunctorConverter().to_stored(functor))
    return ExitCode.OK


def cmd_nerve(args: argparse.Namespace) -> ExitCode:
    kind = read_document(args.path).kind
    s: TruncatedSimplicialSet
    if kind == "groupoid":
        g = _load_groupoid(args.path)
        report = validate_groupoid(g)
        if not report.ok:
            raise InvalidInput("groupoid", report)
        s = nerve_of_groupoid(g)
    elif kind == "family":
        s = nerve_of_aut(build_aut(_load_family(args.path)))
    else:
        raise DocumentError(
            f"{args.path}:kind", f"expected a groupoid or family, got {kind}"
        )
    logger.info("nerve with counts %s", list(s.counts()))
    _emit(args, "nerve", NerveConverter().to_stored(s))
    return ExitCode.OK


# theorem checks
def cmd_check(args: argparse.Namespace) -> ExitCode:
    base, fam = _load_coefficients(args.groupoid, args.family)
    common: Dict[str, Any] = {
        "budget": args.budget,
        "workers": args.workers,
        "instance": _instance(args.groupoid, args.family),
    }
    if args.theorem == "interpretation":
        report = interpretation_check(base, fam, **common)
    elif args.theorem == "representation":
        report = representation_check(base, fam, raw=not args.fast, **common)
    elif args.theorem == "weak-identity":
        report = check_weak_identity(base, fam, **common)
    else:
        report = check_equivalence(
            base, fam, cleavage_limit=args.cleavage_limit, **common
        )
    logger.info(
        "%s on %s: %s (%d vs %d)",
        report.theorem,
        report.instance,
        "ok" if report.ok else "FAILED",
        report.left_count,
        report.right_count,
    )
    return _emit_report(args, report)


# fuzzing
def _pick(rng: np.random.Generator, n: int) -> int:
    return int(rng.integers(n))


def _other(rng: np.random.Generator, n: int, current: int) -> int:
    """A value in ``0..n-1`` other than ``current``; needs ``n ≥ 2``."""

    value = _pick(rng, n - 1)
    return value + 1 if value >= current else value


def _fuzz_group(
    args: argparse.Namespace, rng: np.random.Generator
) -> List[Dict[str, Any]]:
    g = _load_group(args.path)
    if g.order < 2:
        raise PreconditionFailed("The trivial group has no mutations.")
    rows: List[Dict[str, Any]] = []
    for _ in range(args.rounds):
        a, b = _pick(rng, g.order), _pick(rng, g.order)
        table = [list(row) for row in g.table]
        table[a][b] = _other(rng, g.order, table[a][b])
        detected = not validate_group(FiniteGroup(table)).ok
        rows.append({"cell": [a, b], "value": table[a][b], "ok": detected})
    return rows


def _fuzz_nerve(
    args: argparse.Namespace, rng: np.random.Generator
) -> List[Dict[str, Any]]:
    kind = read_document(args.path).kind
    if kind == "groupoid":
        s: TruncatedSimplicialSet = nerve_of_groupoid(
            _load_groupoid(args.path)
        )
    else:
        s = nerve_of_aut(build_aut(_load_family(args.path)))
    dims = [n for n in range(1, 4) if s.count(n) and s.count(n - 1) > 1]
    if not dims:
        raise PreconditionFailed("No face entry of this nerve can change.")
    rows: List[Dict[str, Any]] = []
    for _ in range(args.rounds):
        n = dims[_pick(rng, len(dims))]
        x, i = _pick(rng, s.count(n)), _pick(rng, n + 1)
        value = _other(rng, s.count(n - 1), s.face(n, i, x))
        detected = not validate_simplicial_set(s.with_face(n, x, i, value)).ok
        rows.append({"face": [n, x, i], "value": value, "ok": detected})
    return rows


def _fuzz_cocycle(
    args: argparse.Namespace, rng: np.random.Generator
) -> List[Dict[str, Any]]:
    """Mutate one ``σ`` entry; the validator must accept the result
    exactly when the enumeration contains it."""

    w = _load_cocycle(args.path)
    base, fam = w.base, w.family
    pairs = [
        (v, u)
        for v, u in base.composable_pairs()
        if fam[base.tgt(v)].order > 1
    ]
    if not pairs:
        raise PreconditionFailed("Every σ entry lives in a trivial group.")
    known = {
        c.key()
        for c in enumerate_cocycles(
            base, fam, budget=args.budget, workers=args.workers
        )
    }
    rows: List[Dict[str, Any]] = []
    for _ in range(args.rounds):
        v, u = pairs[_pick(rng, len(pairs))]
        order = fam[base.tgt(v)].order
        sigma = dict(w.sigma)
        sigma[(v, u)] = _other(rng, order, sigma[(v, u)])
        mutated = WeakAction(base, fam, w.F, sigma)
        agrees = validate_cocycle(mutated).ok == (mutated.key() in known)
        rows.append(
            {"pair": [v, u], "value": sigma[(v, u)], "ok": agrees}
        )
    return rows


def cmd_fuzz(args: argparse.Namespace) -> ExitCode:
    rng = np.random.default_rng(args.seed)
    fuzzers = {
        "group": _fuzz_group,
        "cocycle": _fuzz_cocycle,
        "nerve": _fuzz_nerve,
    }
    rows = fuzzers[args.target](args, rng)
    missed = [r for r in rows if not r["ok"]]
    report = TheoremReport(
        theorem=f"fuzz-{args.target}",
        instance=f"{_instance(args.path)}@{args.seed}",
        ok=not missed,
        left_count=len(rows),
        right_count=len(rows) - len(missed),
        rows=rows,
        counterexample=missed[0] if missed else None,
    )
    return _emit_report(args, report)


# parser
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--budget", type=int, default=None, help="search node budget"
    )
    common.add_argument(
        "--workers", type=int, default=None, help="threads for fan-out"
    )
    common.add_argument(
        "-o", "--output", default=None, help="write here instead of stdout"
    )
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="log to stderr"
    )

    parser = argparse.ArgumentParser(
        prog="nacohom",
        description="Non-abelian cohomology of finite groupoids.",
    )
    parser.add_argument(
        "--version", action="version", version=f"nacohom {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="run a validator")
    p.add_argument("kind", choices=VALIDATE_KINDS)
    p.add_argument("path")
    p.add_argument(
        "--fibration", help="extension or functor, for cleavage documents"
    )
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("h2", parents=[common], help="list H² classes")
    p.add_argument("groupoid")
    p.add_argument("family")
    p.add_argument(
        "--witnesses",
        action="store_true",
        help="add the cochain taking each representative to each member",
    )
    p.set_defaults(handler=cmd_h2)

    p = sub.add_parser("twist", parents=[common], help="twisted product")
    p.add_argument("cocycle")
    p.add_argument(
        "--total", action="store_true", help="emit only the total groupoid"
    )
    p.set_defaults(handler=cmd_twist)

    for name, handler, text in (
        ("fiber", cmd_fiber, "read a cocycle off a fibration"),
        ("gamma", cmd_gamma, "the iso from a fibration to its twist"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("fibration", help="extension or functor document")
        how = p.add_mutually_exclusive_group(required=True)
        how.add_argument("--canonical", action="store_true")
        how.add_argument("--cleavage", help="cleavage document")
        p.set_defaults(handler=handler)

    p = sub.add_parser("check", parents=[common], help="check a theorem")
    p.add_argument("theorem", choices=THEOREMS)
    p.add_argument("groupoid")
    p.add_argument("family")
    p.add_argument(
        "--fast",
        action="store_true",
        help="representation: skip the raw map enumeration",
    )
    p.add_argument(
        "--cleavage-limit",
        type=int,
        default=8,
        help="equivalence: cleavages tried per extension",
    )
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("nerve", parents=[common], help="truncated nerve")
    p.add_argument("path", help="groupoid, or family for ner(Aut(K))")
    p.set_defaults(handler=cmd_nerve)

    p = sub.add_parser("fuzz", parents=[common], help="mutation testing")
    p.add_argument("target", choices=FUZZ_TARGETS)
    p.add_argument("path")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rounds", type=int, default=20)
    p.set_defaults(handler=cmd_fuzz)

    return parser


def _configure_logging(verbosity: int) -> None:
    if not verbosity:
        return
    logging.basicConfig(
        level=logging.DEBUG if verbosity > 1 else logging.INFO,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return int(args.handler(args))
    except DocumentError as e:
        print(f"document error: {e}", file=sys.stderr)
        return ExitCode.DOCUMENT
    except BudgetExceeded as e:
        logger.warning("%s", e)
        print(f"budget exceeded: {e}", file=sys.stderr)
        return ExitCode.BUDGET
    except TheoremViolation as e:
        print(f"theorem violation: {e}", file=sys.stderr)
        report = TheoremReport(
            theorem=args.command,
            instance="",
            ok=False,
            counterexample=e.counterexample,
        )
        return _emit_report(args, report)
    except InvalidInput as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return _emit_report(args, e.report)
    except NotAFibration as e:
        print(f"not a fibration: {e} (witness {e.witness})", file=sys.stderr)
        return ExitCode.VIOLATION
    except (DomainException, DataException) as e:
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.VIOLATION
