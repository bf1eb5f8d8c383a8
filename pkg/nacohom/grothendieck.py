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

"""The twisted product of a weak action, bijective-on-objects fibrations,
their cleavages, and the reconstruction functor ``Γ``.

An arrow of the twisted product is a pair ``(f, λ)`` with ``f`` a base arrow
and ``λ ∈ K_tgt(f)``; composition is
``(g, μ)(f, λ) = (gf, μ·F(g)(λ)·σ(g, f))``.
"""

from __future__ import annotations

import bisect
import itertools
import logging
from typing import (
    TYPE_CHECKING,
    Any,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from .algebra import (
    FiniteGroupoid,
    GroupFamily,
    GroupIso,
    GroupoidFunctor,
    loop_group,
    validate_functor,
)
from .cocycle import (
    ActionMorphism,
    WeakAction,
    cohomologous,
    enumerate_cocycles,
    validate_cocycle,
    validate_morphism,
)
from .exceptions import (
    InvalidInput,
    NotAFibration,
    PreconditionFailed,
    StructuralError,
    TheoremViolation,
)
from .report import TheoremReport, ValidationReport
from .utils import Budget, ordered_map

if TYPE_CHECKING:  # pragma: no cover
    from .extensions import Extension

logger = logging.getLogger(__name__)

Outcome = Tuple[Dict[str, Any], Optional[Dict[str, Any]]]


class KernelIdentification:
    """Which arrow of a total groupoid stands for which element of ``K_A``.

    Args:
        family (GroupFamily): The kernel groups, indexed by base objects.
        arrows (Mapping[int, Sequence[int]]): Base object ``A`` to the
            kernel arrows over ``1_A``, listed by element id of ``K_A``.
    """

    __slots__: Iterable[str] = ("family", "arrows", "_elements")

    def __init__(
        self, family: GroupFamily, arrows: Mapping[int, Sequence[int]]
    ) -> None:
        self.family = family
        self.arrows: Dict[int, Tuple[int, ...]] = {
            a: tuple(arrows[a]) for a in family
        }
        # sizes are not checked here, validate_extension reports them
        self._elements: Dict[int, int] = {}
        for row in self.arrows.values():
            for k, e in enumerate(row):
                self._elements[e] = k

    def element_of(self, e: int) -> int:
        try:
            return self._elements[e]
        except KeyError:
            raise StructuralError(f"Arrow {e} is not a kernel arrow.")

    def arrow_of(self, a: int, k: int) -> int:
        return self.arrows[a][k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KernelIdentification):
            return NotImplemented
        return self.family == other.family and self.arrows == other.arrows

    def __hash__(self) -> int:
        return hash(tuple(self.arrows.items()))


class Cleavage:
    """A chosen lift of every base arrow, indexed by base arrow id."""

    __slots__: Iterable[str] = ("fibration", "lift")

    def __init__(
        self, fibration: GroupoidFunctor, lift: Sequence[int]
    ) -> None:
        if len(lift) != len(fibration.codomain.arrows):
            raise StructuralError("A cleavage lifts every base arrow once.")
        self.fibration = fibration
        self.lift: Tuple[int, ...] = tuple(lift)

    def __call__(self, f: int) -> int:
        return self.lift[f]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cleavage):
            return NotImplemented
        return self.lift == other.lift and self.fibration == other.fibration

    def __hash__(self) -> int:
        return hash(self.lift)

    def __repr__(self) -> str:
        return f"<Cleavage {list(self.lift)}>"


class TwistedGroupoid:
    """The twisted product of ``action`` with its projection to the base.

    The arrow ``(f, λ)`` has id ``offsets[f] + λ``.
    """

    __slots__: Iterable[str] = (
        "action",
        "groupoid",
        "projection",
        "offsets",
    )

    def __init__(
        self,
        action: WeakAction,
        groupoid: FiniteGroupoid,
        projection: GroupoidFunctor,
        offsets: Sequence[int],
    ) -> None:
        self.action = action
        self.groupoid = groupoid
        self.projection = projection
        self.offsets: Tuple[int, ...] = tuple(offsets)

    def arrow_id(self, f: int, lam: int) -> int:
        return self.offsets[f] + lam

    def pair(self, e: int) -> Tuple[int, int]:
        self.groupoid.src(e)
        f = bisect.bisect_right(self.offsets, e) - 1
        return f, e - self.offsets[f]

    def canonical_cleavage(self) -> Cleavage:
        """``f ↦ (f, 1)``."""

        return Cleavage(
            self.projection,
            [self.arrow_id(a.id, 0) for a in self.action.base.arrows],
        )

    def kernel_identification(self) -> KernelIdentification:
        base, fam = self.action.base, self.action.family
        return KernelIdentification(
            fam,
            {
                a: [
                    self.arrow_id(base.id_of(a), k)
                    for k in fam[a].elements
                ]
                for a in base.objects
            },
        )

    def __repr__(self) -> str:
        return f"<TwistedGroupoid with {len(self.groupoid.arrows)} arrows>"


def twist(w: WeakAction, check: bool = True) -> TwistedGroupoid:
    """Build the twisted product groupoid of ``w``.

    Args:
        w (WeakAction): The action.
        check (bool): Validate ``w`` first, and confirm
            ``F(f)(σ(f⁻¹, f)) = σ(f, f⁻¹)`` on every arrow.

    Raises:
        InvalidInput: ``w`` is not a cocycle.
        TheoremViolation: The inverse identity fails on a valid cocycle.
    """

    base, fam, F, sigma = w.base, w.family, w.F, w.sigma
    if check:
        report = validate_cocycle(w)
        if not report.ok:
            raise InvalidInput("weak action", report)
        for a in base.arrows:
            f, fi = a.id, base.inverse(a.id)
            if F[f](sigma[(fi, f)]) != sigma[(f, fi)]:
                raise TheoremViolation(
                    "F(f) does not carry σ(f⁻¹,f) to σ(f,f⁻¹).",
                    {"arrow": f},
                )

    offsets: List[int] = []
    rows: List[Tuple[int, int, int]] = []
    for a in base.arrows:
        offsets.append(len(rows))
        rows += [
            (len(rows) + lam, a.src, a.tgt) for lam in fam[a.tgt].elements
        ]

    def aid(f: int, lam: int) -> int:
        return offsets[f] + lam

    identity = {x: aid(base.id_of(x), 0) for x in base.objects}
    compose: Dict[Tuple[int, int], int] = {}
    for g, f in base.composable_pairs():
        k = fam[base.arrows[g].tgt]
        gf = base.compose(g, f)
        s = sigma[(g, f)]
        for mu in k.elements:
            for lam in fam[base.arrows[f].tgt].elements:
                compose[(aid(g, mu), aid(f, lam))] = aid(
                    gf, k.prod(mu, F[g](lam), s)
                )
    inverse: Dict[int, int] = {}
    for a in base.arrows:
        fi = base.inverse(a.id)
        k = fam[a.src]
        for lam in fam[a.tgt].elements:
            inverse[aid(a.id, lam)] = aid(
                fi, k.inv(k.mul(F[fi](lam), sigma[(fi, a.id)]))
            )

    label = f"{base.label}~" if base.label else None
    total = FiniteGroupoid(
        base.objects, rows, identity, compose, inverse, label
    )
    projection = GroupoidFunctor(
        total,
        base,
        base.objects,
        [a.id for a in base.arrows for _ in fam[a.tgt].elements],
    )
    logger.debug("twisted product with %d arrows", len(rows))
    return TwistedGroupoid(w, total, projection, offsets)


def twist_morphism(m: ActionMorphism, check: bool = True) -> GroupoidFunctor:
    """The functor ``(f, λ) ↦ (f, λ·τ(f)⁻¹)`` between twisted products.

    Raises:
        InvalidInput: ``m`` is not a morphism of weak actions.
    """

    if check:
        report = validate_morphism(m)
        if not report.ok:
            raise InvalidInput("action morphism", report)
    t1, t2 = twist(m.source, check), twist(m.target, check)
    base, fam, tau = m.source.base, m.source.family, m.tau
    arrow_map = []
    for e in t1.groupoid.arrows:
        f, lam = t1.pair(e.id)
        k = fam[base.arrows[f].tgt]
        arrow_map.append(t2.arrow_id(f, k.mul(lam, k.inv(tau(f)))))
    return GroupoidFunctor(
        t1.groupoid, t2.groupoid, base.objects, arrow_map
    )


def is_bijective_on_objects(p: GroupoidFunctor) -> bool:
    return sorted(p.object_map) == list(p.codomain.objects)


def _objects_over(p: GroupoidFunctor) -> Dict[int, int]:
    if not is_bijective_on_objects(p):
        raise NotAFibration("The functor is not bijective on objects.")
    return {x: a for a, x in enumerate(p.object_map)}


def is_opfibration(
    p: GroupoidFunctor,
) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Whether every base arrow out of ``p(A)`` lifts to an arrow out of
    ``A``. On failure the witness is ``(A, f)`` for the least such pair.
    """

    lifted = {(e.src, p(e.id)) for e in p.domain.arrows}
    for a in p.domain.objects:
        x = p.object_map[a]
        for f in p.codomain.arrows:
            if f.src == x and (a, f.id) not in lifted:
                return False, (a, f.id)
    return True, None


def fiber_subgroupoid(p: GroupoidFunctor, b: int) -> FiniteGroupoid:
    """The objects over ``b`` and the arrows over ``1_b``, renumbered in
    increasing order.

    Raises:
        UnknownObject: ``b`` is not a base object.
    """

    ident = p.codomain.id_of(b)
    dom = p.domain
    objs = [a for a in dom.objects if p.object_map[a] == b]
    arrs = [e.id for e in dom.arrows if p(e.id) == ident]
    onew = {a: i for i, a in enumerate(objs)}
    anew = {e: i for i, e in enumerate(arrs)}
    return FiniteGroupoid(
        len(objs),
        [(anew[e], onew[dom.src(e)], onew[dom.tgt(e)]) for e in arrs],
        {onew[a]: anew[dom.id_of(a)] for a in objs},
        {
            (anew[g], anew[f]): anew[dom.compose(g, f)]
            for g in arrs
            for f in arrs
            if dom.src(g) == dom.tgt(f)
        },
        {anew[e]: anew[dom.inverse(e)] for e in arrs},
    )


def kernel_identification(
    p: GroupoidFunctor, family: Optional[GroupFamily] = None
) -> KernelIdentification:
    """Identify each kernel vertex group by its default ordering: the
    identity first, then the other arrows over ``1_A`` by increasing id.

    Without ``family`` the kernel groups are read off ``p``. With it, each
    read-off table must equal the given group's table.

    Raises:
        NotAFibration: ``p`` is not bijective on objects.
        StructuralError: A kernel table differs from ``family``.
    """

    over = _objects_over(p)
    dom, base = p.domain, p.codomain
    arrows: Dict[int, List[int]] = {}
    groups = {}
    for x in base.objects:
        a = over[x]
        ident = dom.id_of(a)
        loops = [ident] + [
            e
            for e in dom.hom(a, a)
            if e != ident and p(e) == base.id_of(x)
        ]
        vg = loop_group(dom, loops)
        if family is not None and vg.group != family[x]:
            raise StructuralError(
                f"The kernel at {x} does not match the given group."
            )
        arrows[x] = loops
        groups[x] = vg.group
    return KernelIdentification(family or GroupFamily(groups), arrows)


def validate_cleavage(c: Cleavage) -> ValidationReport:
    """Each lift lies over its arrow and identities lift to identities."""

    report = ValidationReport()
    p = c.fibration
    base, dom = p.codomain, p.domain
    for f in base.arrows:
        e = c(f.id)
        if not 0 <= e < len(dom.arrows):
            report.add("structure", f"lift of {f.id} is not an arrow", f.id)
            continue
        if p(e) != f.id:
            report.add("over", f"lift of {f.id} lies over {p(e)}", f.id)
        if base.is_identity(f.id) and not dom.is_identity(e):
            report.add("unit", f"identity {f.id} lifts to {e}", f.id)
    return report


def _lifts(p: GroupoidFunctor) -> Dict[int, List[int]]:
    over = _objects_over(p)
    lifts: Dict[int, List[int]] = {f.id: [] for f in p.codomain.arrows}
    for e in p.domain.arrows:
        lifts[p(e.id)].append(e.id)
    for f in p.codomain.arrows:
        if not lifts[f.id]:
            raise NotAFibration(
                f"Base arrow {f.id} has no lift.", (over[f.src], f.id)
            )
    return lifts


def canonical_cleavage(p: GroupoidFunctor) -> Cleavage:
    """The least arrow over each base arrow, and identities over
    identities.

    Raises:
        NotAFibration: ``p`` is not a bijective-on-objects fibration.
    """

    lifts = _lifts(p)
    base, dom = p.codomain, p.domain
    over = _objects_over(p)
    lift = [
        dom.id_of(over[f.src]) if base.is_identity(f.id) else lifts[f.id][0]
        for f in base.arrows
    ]
    return Cleavage(p, lift)


def enumerate_cleavages(
    p: GroupoidFunctor, *, budget: Union[int, Budget, None] = None
) -> Iterator[Cleavage]:
    """All normalized cleavages, the canonical one first."""

    budget = Budget.resolve(budget, "cleavage enumeration")
    lifts = _lifts(p)
    base = p.codomain
    first = canonical_cleavage(p)
    choices = []
    total = 1
    for f in base.arrows:
        if base.is_identity(f.id):
            choices.append((first(f.id),))
        else:
            choices.append(tuple(lifts[f.id]))
            total *= len(lifts[f.id])
    budget.check_size(total, "cleavage count")
    for lift in itertools.product(*choices):
        yield Cleavage(p, lift)


def _prepare(
    p: GroupoidFunctor, c: Cleavage
) -> Tuple[Dict[int, int], ValidationReport]:
    over = _objects_over(p)
    ok, witness = is_opfibration(p)
    if not ok:
        raise NotAFibration("Some arrow has no lift.", witness)
    if c.fibration != p:
        raise PreconditionFailed("The cleavage belongs to another functor.")
    return over, validate_cleavage(c)


def fiber_action(
    p: GroupoidFunctor,
    c: Cleavage,
    kernel: Optional[KernelIdentification] = None,
) -> WeakAction:
    """The weak action read off a cleavage:
    ``F(f)(k) = lift(f)·k·lift(f)⁻¹`` and
    ``σ(g, f) = lift(g)·lift(f)·lift(gf)⁻¹``.

    Raises:
        NotAFibration: ``p`` is not a bijective-on-objects fibration.
        PreconditionFailed: ``c`` is not a normalized cleavage of ``p``.
    """

    _, report = _prepare(p, c)
    if not report.ok:
        raise PreconditionFailed(
            f"Not a normalized cleavage: {report.violations[0].message}"
        )
    if kernel is None:
        kernel = kernel_identification(p)
    base, dom, fam = p.codomain, p.domain, kernel.family

    F = []
    for f in base.arrows:
        lf = c(f.id)
        lfi = dom.inverse(lf)
        F.append(
            GroupIso(
                fam[f.src],
                fam[f.tgt],
                [
                    kernel.element_of(
                        dom.chain(lf, kernel.arrow_of(f.src, k), lfi)
                    )
                    for k in fam[f.src].elements
                ],
            )
        )
    sigma = {
        (g, f): kernel.element_of(
            dom.chain(c(g), c(f), dom.inverse(c(base.compose(g, f))))
        )
        for g, f in base.composable_pairs()
    }
    return WeakAction(base, fam, F, sigma)


def gamma(
    p: GroupoidFunctor,
    c: Cleavage,
    kernel: Optional[KernelIdentification] = None,
) -> GroupoidFunctor:
    """``Γ(e) = (P(e), e·lift(P(e))⁻¹)`` into the twisted product of
    :func:`fiber_action`.

    Raises:
        TheoremViolation: The read-off action is not a cocycle, or ``Γ``
            is not an isomorphism over the base.
    """

    w = fiber_action(p, c, kernel)
    report = validate_cocycle(w)
    if not report.ok:
        raise TheoremViolation(
            "The action of a cleavage is not a cocycle.",
            {"violations": [v.message for v in report.violations]},
        )
    if kernel is None:
        kernel = kernel_identification(p)
    t = twist(w, check=False)
    dom = p.domain
    arrow_map = []
    for e in dom.arrows:
        f = p(e.id)
        k = kernel.element_of(dom.compose(e.id, dom.inverse(c(f))))
        arrow_map.append(t.arrow_id(f, k))
    functor = GroupoidFunctor(dom, t.groupoid, p.object_map, arrow_map)
    if not functor.is_isomorphism() or not validate_functor(functor).ok:
        raise TheoremViolation(
            "Γ is not an isomorphism.", {"arrow_map": arrow_map}
        )
    if t.projection.compose(functor) != p:
        raise TheoremViolation("Γ does not commute with the projections.")
    return functor


def check_equivalence(
    base: FiniteGroupoid,
    family: GroupFamily,
    *,
    pool: Optional[Sequence[Extension]] = None,
    budget: Union[int, Budget, None] = None,
    workers: Optional[int] = None,
    cleavage_limit: int = 8,
    instance: str = "",
) -> TheoremReport:
    """For every cocycle ``w``: the canonical cleavage of its twisted
    product gives back ``w`` exactly.

    The twisted products of all cocycles and the members of ``pool``
    (:func:`~nacohom.extensions.generate_pool` by default) are then read
    off through up to ``cleavage_limit`` cleavages each. Every ``Γ`` must
    be an isomorphism over the base sending the kernel arrow of ``k`` to
    ``(1_A, k)``, and the actions read off one fibration must form a
    single cohomology class. ``rows`` has one entry per fibration.
    """

    budget = Budget.resolve(budget, "equivalence check")
    cocycles = enumerate_cocycles(
        base, family, budget=budget, workers=workers
    )
    if pool is None:
        from .extensions import generate_pool

        pool = generate_pool(base, family, budget=budget)

    def sample(
        label: str, p: GroupoidFunctor, kernel: KernelIdentification
    ) -> Outcome:
        actions: List[WeakAction] = []
        failure: Optional[Dict[str, Any]] = None
        cleavages = enumerate_cleavages(p, budget=budget)
        for c in itertools.islice(cleavages, cleavage_limit):
            try:
                functor = gamma(p, c, kernel)
            except TheoremViolation as e:
                failure = {"failure": str(e), **e.counterexample}
            else:
                w = fiber_action(p, c, kernel)
                t = twist(w, check=False)
                if any(
                    functor(kernel.arrow_of(a, k))
                    != t.arrow_id(w.base.id_of(a), k)
                    for a in w.base.objects
                    for k in w.family[a].elements
                ):
                    failure = {"failure": "kernel not preserved"}
                actions.append(w)
            if failure is not None:
                failure.update(fibration=label, cleavage=list(c.lift))
                break
        blocks: List[List[int]] = []
        for i, w in enumerate(actions):
            for block in blocks:
                first = actions[block[0]]
                if cohomologous(first, w, budget=budget) is not None:
                    block.append(i)
                    break
            else:
                blocks.append([i])
        if failure is None and len(blocks) > 1:
            failure = {"fibration": label, "failure": "cleavage dependence"}
        row = {
            "fibration": label,
            "cleavages": len(actions),
            "blocks": blocks,
        }
        return row, failure

    def check_cocycle(w: WeakAction) -> Outcome:
        t = twist(w)
        kernel = t.kernel_identification()
        if fiber_action(t.projection, t.canonical_cleavage(), kernel) != w:
            failure = {"fibration": repr(w), "failure": "round trip"}
            return {"fibration": repr(w), "blocks": []}, failure
        return sample(repr(w), t.projection, kernel)

    def check_extension(e: Extension) -> Outcome:
        return sample(repr(e), e.projection, e.kernel)

    results = ordered_map(check_cocycle, cocycles, workers)
    passed = sum(1 for _, failure in results if failure is None)
    results += ordered_map(check_extension, list(pool), workers)
    failures = [failure for _, failure in results if failure is not None]
    ok = not failures
    logger.info(
        "equivalence on %s: %d cocycles, %d pool members, %d failures",
        instance or "instance",
        len(cocycles),
        len(pool),
        len(failures),
    )
    return TheoremReport(
        theorem="equivalence",
        instance=instance,
        ok=ok,
        left_count=len(cocycles),
        right_count=passed,
        rows=[row for row, _ in results],
        counterexample=failures[0] if failures else None,
    )
