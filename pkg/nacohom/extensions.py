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

"""Groupoid extensions ``1 → K → E → G → 1`` presented as
bijective-on-objects fibrations with identified kernels, morphisms
between them, and the comparison of their components with ``H²``."""

from __future__ import annotations

import itertools
import logging
from typing import (
    Dict,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from .algebra import (
    FiniteGroup,
    FiniteGroupoid,
    GroupFamily,
    GroupoidFunctor,
    connected_components,
    describe_group,
    group_iso_search,
    groups_of_order,
    iter_homomorphisms,
    iter_isomorphisms,
    subgroup,
    validate_functor,
    validate_groupoid,
    vertex_group,
)
from .cocycle import ActionMorphism, WeakAction, h2
from .config import get_settings
from .exceptions import (
    InvalidInput,
    PreconditionFailed,
    TheoremViolation,
)
from .grothendieck import (
    Cleavage,
    KernelIdentification,
    TwistedGroupoid,
    canonical_cleavage,
    fiber_action,
    is_bijective_on_objects,
    is_opfibration,
    twist,
    twist_morphism,
)
from .report import TheoremReport, ValidationReport
from .utils import Budget, DisjointSet, ordered_map

logger = logging.getLogger(__name__)


class Extension:
    """A projection ``E → G`` together with the kernel identification.

    Args:
        projection (GroupoidFunctor): The functor ``P: E → G``.
        kernel (KernelIdentification): For each base object ``A``, the
            arrows over ``1_A`` listed by element of ``K_A``.
        label (str, optional): A human readable name.
    """

    __slots__: Iterable[str] = ("projection", "kernel", "label")

    def __init__(
        self,
        projection: GroupoidFunctor,
        kernel: KernelIdentification,
        label: Optional[str] = None,
    ) -> None:
        self.projection = projection
        self.kernel = kernel
        self.label = label

    @property
    def total(self) -> FiniteGroupoid:
        return self.projection.domain

    @property
    def base(self) -> FiniteGroupoid:
        return self.projection.codomain

    @property
    def family(self) -> GroupFamily:
        return self.kernel.family

    @classmethod
    def from_twisted(cls, t: TwistedGroupoid) -> Extension:
        return cls(t.projection, t.kernel_identification(), t.groupoid.label)

    @classmethod
    def from_group_surjection(
        cls,
        total: FiniteGroup,
        base: FiniteGroup,
        images: Sequence[int],
        kernel_group: Optional[FiniteGroup] = None,
    ) -> Extension:
        """A group extension. The kernel elements are listed identity
        first, then by increasing id; ``kernel_group`` defaults to the
        subgroup they form."""

        members = [x for x in total.elements if images[x] == 0]
        if kernel_group is None:
            kernel_group, _ = subgroup(total, members)
        e = FiniteGroupoid.from_group(total)
        g = FiniteGroupoid.from_group(base)
        return cls(
            GroupoidFunctor.from_homomorphism(e, g, images),
            KernelIdentification(GroupFamily({0: kernel_group}), {0: members}),
            total.label,
        )

    def object_over(self, x: int) -> int:
        return self.projection.object_map.index(x)

    def arrows_over(self, f: int) -> List[int]:
        return [e.id for e in self.total.arrows if self.projection(e.id) == f]

    def canonical_cleavage(self) -> Cleavage:
        return canonical_cleavage(self.projection)

    def fiber_action(self, cleavage: Optional[Cleavage] = None) -> WeakAction:
        return fiber_action(
            self.projection,
            cleavage or self.canonical_cleavage(),
            self.kernel,
        )

    def decompose(
        self, e: int, cleavage: Optional[Cleavage] = None
    ) -> Tuple[int, int]:
        """``e = κ(k)∘lift(f)``, by default for the canonical cleavage;
        returns ``(f, k)``."""

        f = self.projection(e)
        lift = (cleavage or self.canonical_cleavage())(f)
        total = self.total
        return f, self.kernel.element_of(
            total.compose(e, total.inverse(lift))
        )

    def __repr__(self) -> str:
        name = f" {self.label}" if self.label else ""
        return f"<Extension{name} with {len(self.total.arrows)} arrows>"


def _kernel_report(e: Extension, report: ValidationReport) -> None:
    p, total, base, kernel = e.projection, e.total, e.base, e.kernel
    if kernel.family.base_objects != base.objects:
        report.add("kernel-mismatch", "kernel family is not indexed by G")
        return
    for x in base.objects:
        a = e.object_over(x)
        listed = kernel.arrows[x]
        group = kernel.family[x]
        over = {
            f.id
            for f in total.arrows
            if f.src == a and p(f.id) == base.id_of(x)
        }
        if len(listed) != group.order or set(listed) != over:
            report.add(
                "kernel-mismatch",
                f"kernel at {x} has {len(over)} arrows, K_{x} has order "
                f"{group.order}",
                x,
            )
            continue
        if listed[0] != total.id_of(a):
            report.add("kernel-mismatch", f"1 of K_{x} is not 1_{a}", x)
            continue
        for k1 in group.elements:
            for k2 in group.elements:
                arrow = total.compose(listed[k1], listed[k2])
                if arrow != listed[group.mul(k1, k2)]:
                    report.add(
                        "kernel-mismatch",
                        f"kernel at {x} does not multiply like K_{x}",
                        x,
                        k1,
                        k2,
                    )
                    break
            else:
                continue
            break


def validate_extension(e: Extension) -> ValidationReport:
    """Structural checks first (codes ``structural`` and ``fibration``),
    then the kernel (``kernel-mismatch``) and exactness (``exactness``)."""

    report = ValidationReport()
    report.extend(validate_groupoid(e.total), "total: ")
    report.extend(validate_groupoid(e.base), "base: ")
    report.extend(validate_functor(e.projection), "projection: ")
    for v in report.violations:
        v.code = "structural"
    if not report.ok:
        return report

    if not is_bijective_on_objects(e.projection):
        report.add("fibration", "projection is not bijective on objects")
        return report
    ok, witness = is_opfibration(e.projection)
    if not ok:
        assert witness is not None
        report.add("fibration", "projection is not a fibration", *witness)
        return report

    _kernel_report(e, report)

    total, p = e.total, e.projection
    kernel_arrows = {f for row in e.kernel.arrows.values() for f in row}
    for e1 in total.arrows:
        for e2 in total.hom(e1.src, e1.tgt):
            same = p(e1.id) == p(e2)
            differ = total.compose(e2, total.inverse(e1.id)) in kernel_arrows
            if same != differ:
                report.add(
                    "exactness",
                    f"arrows {e1.id} and {e2} break the kernel-coset rule",
                    e1.id,
                    e2,
                )
    return report


class ExtensionMorphism:
    """A functor between the totals of two extensions of ``G`` by ``K``."""

    __slots__: Iterable[str] = ("source", "target", "functor")

    def __init__(
        self, source: Extension, target: Extension, functor: GroupoidFunctor
    ) -> None:
        self.source = source
        self.target = target
        self.functor = functor

    @classmethod
    def identity(cls, e: Extension) -> ExtensionMorphism:
        return cls(e, e, GroupoidFunctor.identity(e.total))

    def inverse(self) -> ExtensionMorphism:
        return ExtensionMorphism(
            self.target, self.source, self.functor.inverse()
        )

    def __repr__(self) -> str:
        return f"<ExtensionMorphism {list(self.functor.arrow_map)}>"


def validate_extension_morphism(m: ExtensionMorphism) -> ValidationReport:
    """Commutation with the projections, identity on kernels, and
    invertibility."""

    report = ValidationReport()
    s, t, phi = m.source, m.target, m.functor
    if s.base != t.base or s.family != t.family:
        report.add("structure", "extensions of different data")
        return report
    if phi.domain != s.total or phi.codomain != t.total:
        report.add("structure", "functor does not join the totals")
        return report
    report.extend(validate_functor(phi))
    if not report.ok:
        return report

    for a in s.total.objects:
        x = s.projection.object_map[a]
        if phi.object_map[a] != t.object_over(x):
            report.add("objects", f"object over {x} is moved", a)
    for f in s.total.arrows:
        if t.projection(phi(f.id)) != s.projection(f.id):
            report.add("commute", f"arrow {f.id} changes its image", f.id)
    for x in s.base.objects:
        for k in s.family[x].elements:
            if phi(s.kernel.arrow_of(x, k)) != t.kernel.arrow_of(x, k):
                report.add("kernel", f"K_{x} is moved at {k}", x, k)

    if not phi.is_isomorphism():
        report.add("invertible", "functor is not bijective")
    elif not validate_functor(phi.inverse()).ok:
        report.add("invertible", "inverse is not a functor")
    return report


def find_extension_morphism(
    e1: Extension,
    e2: Extension,
    *,
    budget: Union[int, Budget, None] = None,
) -> Optional[ExtensionMorphism]:
    """The first morphism ``e1 → e2`` found, or None.

    An arrow of ``E1`` is ``κ1(k)∘lift1(f)``; a morphism is fixed by the
    images ``φ(f)`` of the canonical lifts, which are searched in order of
    base arrows.

    Raises:
        PreconditionFailed: The extensions have different bases or
            kernels.
        TheoremViolation: A morphism was found that is not invertible.
    """

    if e1.base != e2.base or e1.family != e2.family:
        raise PreconditionFailed(
            "Extension morphisms need a shared base and kernel family."
        )
    budget = Budget.resolve(budget, "extension morphism search")
    base, t1, t2 = e1.base, e1.total, e2.total
    k2 = e2.kernel

    lift1 = e1.canonical_cleavage()
    parts = [e1.decompose(f.id, lift1) for f in t1.arrows]
    by_base: Dict[int, List[int]] = {f.id: [] for f in base.arrows}
    for e, (f, _) in enumerate(parts):
        by_base[f].append(e)

    free = [f.id for f in base.arrows if not base.is_identity(f.id)]
    pos = {f: i for i, f in enumerate(free)}
    candidates = [e2.arrows_over(f) for f in free]
    triggers: Dict[int, List[Tuple[int, int]]] = {}
    for g, f in base.composable_pairs():
        last = max(pos.get(x, -1) for x in (g, f, base.compose(g, f)))
        triggers.setdefault(last, []).append((g, f))

    phi: Dict[int, int] = {
        f.id: t2.id_of(e2.object_over(f.src))
        for f in base.arrows
        if base.is_identity(f.id)
    }

    def image(e: int) -> int:
        f, k = parts[e]
        return t2.compose(k2.arrow_of(base.arrows[f].tgt, k), phi[f])

    def functorial(g: int, f: int) -> bool:
        for eg in by_base[g]:
            for ef in by_base[f]:
                if image(t1.compose(eg, ef)) != t2.compose(
                    image(eg), image(ef)
                ):
                    return False
        return True

    def descend(i: int) -> bool:
        if i == len(free):
            return True
        f = free[i]
        for c in candidates[i]:
            budget.spend()
            phi[f] = c
            if all(functorial(*p) for p in triggers.get(i, [])):
                if descend(i + 1):
                    return True
        del phi[f]
        return False

    if not all(functorial(*p) for p in triggers.get(-1, [])):
        return None
    if not descend(0):
        return None

    functor = GroupoidFunctor(
        t1,
        t2,
        [e2.object_over(x) for x in e1.projection.object_map],
        [image(e.id) for e in t1.arrows],
    )
    m = ExtensionMorphism(e1, e2, functor)
    report = validate_extension_morphism(m)
    if not report.ok:
        raise TheoremViolation(
            "Found an extension morphism that is not an isomorphism.",
            {"violations": [v.message for v in report.violations]},
        )
    return m


def _check_pool(
    base: FiniteGroupoid, family: GroupFamily, pool: Sequence[Extension]
) -> None:
    for i, e in enumerate(pool):
        if e.base != base or e.family != family:
            raise PreconditionFailed(
                f"Pool member {i} extends a different base or kernel."
            )


def ext_components(
    base: FiniteGroupoid,
    family: GroupFamily,
    pool: Sequence[Extension],
    *,
    budget: Union[int, Budget, None] = None,
    workers: Optional[int] = None,
) -> List[List[int]]:
    """Partition ``pool`` by existence of extension morphisms.

    Each member is compared with one representative per block found so
    far; blocks are sorted and ordered by least member.
    """

    _check_pool(base, family, pool)
    budget = Budget.resolve(budget, "extension components")
    ds = DisjointSet(len(pool))
    reps: List[int] = []
    for j, e in enumerate(pool):
        found = ordered_map(
            lambda i: find_extension_morphism(pool[i], e, budget=budget),
            reps,
            workers,
        )
        hit = next((i for i, m in zip(reps, found) if m is not None), None)
        if hit is None:
            reps.append(j)
        else:
            ds.union(hit, j)
    return ds.blocks()


class _Piece(NamedTuple):
    """The part of a generated total groupoid over one base component."""

    rows: List[Tuple[int, int, int]]
    identity: Dict[int, int]
    compose: Dict[Tuple[int, int], int]
    inverse: Dict[int, int]
    arrow_map: List[int]
    kernel: Dict[int, List[int]]
    label: Optional[str]


def _component_pieces(
    base: FiniteGroupoid,
    family: GroupFamily,
    objects: Sequence[int],
    budget: Budget,
    limit: int,
) -> List[_Piece]:
    """Extensions of one connected component, independent of cocycles.

    With ``H`` the vertex group at the least object ``x0``, every group
    ``E`` of order ``|H|·|K_x0|`` from the catalog, every surjection
    ``E → H`` and every identification of ``K_x0`` with its kernel gives a
    total groupoid with arrows ``(i, e, j): x_i → x_j``. Its kernels are
    transported along the least isomorphisms ``K_x0 → K_xi``.
    """

    x0 = objects[0]
    hg = vertex_group(base, x0)
    k0 = family[x0]
    spans = [base.id_of(x0)] + [base.hom(x0, x)[0] for x in objects[1:]]
    psis = []
    for x in objects:
        psi = group_iso_search(k0, family[x])
        if psi is None:
            logger.debug("K_%d and K_%d differ: no extensions", x0, x)
            return []
        psis.append(psi.inverse())

    m = len(objects)
    pieces: List[_Piece] = []
    for eg in groups_of_order(hg.group.order * k0.order):
        n = eg.order

        def aid(i: int, e: int, j: int) -> int:
            return (i * m + j) * n + e

        for images in iter_homomorphisms(eg, hg.group):
            budget.spend()
            if len(set(images)) != hg.group.order:
                continue
            members = [x for x in eg.elements if images[x] == 0]
            sub, _ = subgroup(eg, members)
            for iota in iter_isomorphisms(k0, sub):
                if len(pieces) >= limit:
                    return pieces
                rows: List[Tuple[int, int, int]] = []
                arrow_map: List[int] = []
                compose: Dict[Tuple[int, int], int] = {}
                inverse: Dict[int, int] = {}
                for i, j in itertools.product(range(m), repeat=2):
                    for e in eg.elements:
                        rows.append((aid(i, e, j), objects[i], objects[j]))
                        h = hg.arrows[images[e]]
                        arrow_map.append(
                            base.chain(spans[j], h, base.inverse(spans[i]))
                        )
                        inverse[aid(i, e, j)] = aid(j, eg.inv(e), i)
                        for k, e2 in itertools.product(
                            range(m), eg.elements
                        ):
                            compose[(aid(j, e2, k), aid(i, e, j))] = aid(
                                i, eg.mul(e2, e), k
                            )
                kernel = {
                    x: [
                        aid(i, members[iota(psis[i](k))], i)
                        for k in family[x].elements
                    ]
                    for i, x in enumerate(objects)
                }
                pieces.append(
                    _Piece(
                        rows,
                        {x: aid(i, 0, i) for i, x in enumerate(objects)},
                        compose,
                        inverse,
                        arrow_map,
                        kernel,
                        eg.label,
                    )
                )
    return pieces


def _assemble(
    base: FiniteGroupoid, family: GroupFamily, pieces: Sequence[_Piece]
) -> Extension:
    rows: List[Tuple[int, int, int]] = []
    identity: Dict[int, int] = {}
    compose: Dict[Tuple[int, int], int] = {}
    inverse: Dict[int, int] = {}
    arrow_map: List[int] = []
    kernel: Dict[int, List[int]] = {}
    for piece in pieces:
        off = len(rows)
        rows += [(a + off, s, t) for a, s, t in piece.rows]
        identity.update({x: a + off for x, a in piece.identity.items()})
        compose.update(
            {
                (g + off, f + off): h + off
                for (g, f), h in piece.compose.items()
            }
        )
        inverse.update({f + off: g + off for f, g in piece.inverse.items()})
        arrow_map += piece.arrow_map
        kernel.update(
            {x: [a + off for a in row] for x, row in piece.kernel.items()}
        )
    labels = [p.label or "?" for p in pieces]
    total = FiniteGroupoid(
        base.objects, rows, identity, compose, inverse, "+".join(labels)
    )
    return Extension(
        GroupoidFunctor(total, base, base.objects, arrow_map),
        KernelIdentification(family, kernel),
        total.label,
    )


def generate_pool(
    base: FiniteGroupoid,
    family: GroupFamily,
    *,
    budget: Union[int, Budget, None] = None,
    limit: Optional[int] = None,
) -> List[Extension]:
    """Extensions built from the group catalog, without reference to
    cocycles, one choice per connected component, at most ``limit`` of
    them (``pool_limit`` by default)."""

    family.check_indexes(base)
    budget = Budget.resolve(budget, "extension pool")
    if limit is None:
        limit = get_settings().pool_limit
    per_component = [
        _component_pieces(base, family, objects, budget, limit)
        for objects in connected_components(base)
    ]
    pool = [
        _assemble(base, family, combo)
        for combo in itertools.islice(
            itertools.product(*per_component), limit
        )
    ]
    logger.debug("generated a pool of %d extensions", len(pool))
    return pool


def _middle_group(e: Extension) -> str:
    """Vertex groups of the total groupoid, one per component."""

    return "+".join(
        describe_group(vertex_group(e.total, block[0]).group)
        for block in connected_components(e.total)
    )


def interpretation_check(
    base: FiniteGroupoid,
    family: GroupFamily,
    *,
    pool: Optional[Sequence[Extension]] = None,
    budget: Union[int, Budget, None] = None,
    workers: Optional[int] = None,
    instance: str = "",
) -> TheoremReport:
    """Compare the cohomology classes with the extension components.

    Each class representative is twisted; members are joined to it
    through :func:`twist_morphism` of their witnesses, the twisted
    representatives must lie in distinct components, and every pool
    member must reach one of them.

    Raises:
        InvalidInput: A pool member is not a valid extension.
    """

    budget = Budget.resolve(budget, "interpretation check")
    classes = h2(base, family, budget=budget, workers=workers)
    twisted = [
        Extension.from_twisted(twist(c.representative)) for c in classes
    ]
    counterexample: Optional[Dict[str, object]] = None

    for i, c in enumerate(classes):
        for member, tau in zip(c.members[1:], c.witnesses[1:]):
            functor = twist_morphism(
                ActionMorphism(c.representative, member, tau)
            )
            m = ExtensionMorphism(
                twisted[i], Extension.from_twisted(twist(member)), functor
            )
            report = validate_extension_morphism(m)
            if not report.ok and counterexample is None:
                counterexample = {
                    "failure": "well-defined",
                    "class": i,
                    "member": repr(member),
                }

    blocks = ext_components(
        base, family, twisted, budget=budget, workers=workers
    )
    if len(blocks) != len(twisted) and counterexample is None:
        merged = next(b for b in blocks if len(b) > 1)
        counterexample = {"failure": "injective", "classes": merged}

    if pool is None:
        pool = generate_pool(base, family, budget=budget)
    _check_pool(base, family, pool)
    hits = [0] * len(twisted)
    unmatched: List[Extension] = []
    for j, e in enumerate(pool):
        report = validate_extension(e)
        if not report.ok:
            raise InvalidInput(f"pool member {j}", report)
        found = ordered_map(
            lambda r: find_extension_morphism(r, e, budget=budget),
            twisted,
            workers,
        )
        hit = next((i for i, m in enumerate(found) if m is not None), None)
        if hit is None:
            unmatched.append(e)
            if counterexample is None:
                counterexample = {"failure": "surjective", "pool_member": j}
        else:
            hits[hit] += 1

    extra = len(
        ext_components(base, family, unmatched, budget=budget, workers=workers)
    )
    rows = [
        {
            "class": i,
            "size": c.size,
            "middle_group": _middle_group(twisted[i]) if base.objects else "",
            "pool_hits": hits[i],
        }
        for i, c in enumerate(classes)
    ]
    ok = counterexample is None
    logger.info(
        "interpretation on %s: %d classes, %d pool members, ok=%s",
        instance or "instance",
        len(classes),
        len(pool),
        ok,
    )
    return TheoremReport(
        theorem="interpretation",
        instance=instance,
        ok=ok,
        left_count=len(classes),
        right_count=len(blocks) + extra,
        rows=rows,
        counterexample=counterexample,
    )
