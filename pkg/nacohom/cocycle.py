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

"""Weak actions of a groupoid on a family of groups (non-abelian
2-cocycles), their morphisms, and the cohomology set ``H²``.

A weak action is a pair ``(F, σ)``: ``F(u): K_A → K_B`` for every arrow
``u: A → B`` and ``σ[(v, u)] ∈ K_tgt(v)`` for every composable pair, ``u``
applied first. Conditions checked by :func:`validate_cocycle`:

1. ``F(1) = 1``.
2. ``σ`` vanishes on pairs containing an identity.
3. ``σ_vu·F(vu)(x) = F(v)(F(u)(x))·σ_vu``.
4. ``σ_wv·σ_(wv)u = F(w)(σ_vu)·σ_w(vu)``.
"""

from __future__ import annotations

import itertools
import logging
from typing import (
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

from .algebra import FiniteGroupoid, GroupFamily, GroupIso
from .exceptions import (
    CompositionError,
    PreconditionFailed,
    StructuralError,
    TheoremViolation,
)
from .report import TheoremReport, ValidationReport
from .two_groupoid import build_aut
from .utils import Budget, ordered_map

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
ActionKey = Tuple[Tuple[Tuple[int, ...], ...], Tuple[int, ...]]


class WeakAction:
    """A candidate 2-cocycle ``(F, σ)`` over ``base`` with coefficients in
    ``family``. Nothing beyond shapes is checked on construction.

    Args:
        base (FiniteGroupoid): The acting groupoid.
        family (GroupFamily): Groups indexed by the objects of ``base``.
        F (Sequence[GroupIso]): One iso per arrow, indexed by arrow id.
        sigma (Mapping[tuple[int, int], int]): Composable pair ``(v, u)``
            to an element of ``K_tgt(v)``.
    """

    __slots__: Iterable[str] = ("base", "family", "F", "sigma")

    def __init__(
        self,
        base: FiniteGroupoid,
        family: GroupFamily,
        F: Sequence[GroupIso],
        sigma: Mapping[Pair, int],
    ) -> None:
        family.check_indexes(base)
        if len(F) != len(base.arrows):
            raise StructuralError(
                f"F has {len(F)} entries for {len(base.arrows)} arrows."
            )
        self.base = base
        self.family = family
        self.F: Tuple[GroupIso, ...] = tuple(F)
        self.sigma: Dict[Pair, int] = dict(sigma)

    @classmethod
    def normalized(
        cls,
        base: FiniteGroupoid,
        family: GroupFamily,
        F: Sequence[GroupIso],
        sigma: Mapping[Pair, int],
    ) -> WeakAction:
        """Fill in ``σ = 0`` on every pair containing an identity, and on
        any pair not given."""

        full = {p: sigma.get(p, 0) for p in base.composable_pairs()}
        return cls(base, family, F, full)

    @classmethod
    def trivial(cls, base: FiniteGroupoid, family: GroupFamily) -> WeakAction:
        """``F ≡ id`` and ``σ ≡ 0``; the groups must agree along arrows."""

        F = []
        for a in base.arrows:
            if family[a.src] != family[a.tgt]:
                raise PreconditionFailed(
                    f"Arrow {a.id} joins different groups; no trivial action."
                )
            F.append(GroupIso.identity(family[a.src]))
        return cls.normalized(base, family, F, {})

    def s(self, v: int, u: int) -> int:
        return self.sigma[(v, u)]

    def key(self) -> ActionKey:
        """Canonical sort key: flattened F images, then σ in pair order."""

        return (
            tuple(f.images for f in self.F),
            tuple(self.sigma.get(p, -1) for p in self.base.composable_pairs()),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeakAction):
            return NotImplemented
        return (
            self.F == other.F
            and self.sigma == other.sigma
            and self.family == other.family
            and self.base == other.base
        )

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        nonzero = {p: x for p, x in self.sigma.items() if x}
        return f"<WeakAction F={[list(f.images) for f in self.F]} σ={nonzero}>"


class Cochain1:
    """A normalized 1-cochain: ``tau[u] ∈ K_tgt(u)`` for every arrow."""

    __slots__: Iterable[str] = ("base", "family", "tau")

    def __init__(
        self,
        base: FiniteGroupoid,
        family: GroupFamily,
        tau: Union[Sequence[int], Mapping[int, int]],
    ) -> None:
        if isinstance(tau, Mapping):
            tau = [tau.get(a.id, 0) for a in base.arrows]
        if len(tau) != len(base.arrows):
            raise StructuralError("A cochain needs one value per arrow.")
        for a, x in zip(base.arrows, tau):
            if not 0 <= x < family[a.tgt].order:
                raise StructuralError(
                    f"Cochain value {x} on arrow {a.id} is not in K_{a.tgt}."
                )
        self.base = base
        self.family = family
        self.tau: Tuple[int, ...] = tuple(tau)

    @classmethod
    def identity(cls, base: FiniteGroupoid, family: GroupFamily) -> Cochain1:
        return cls(base, family, [0] * len(base.arrows))

    def __call__(self, u: int) -> int:
        return self.tau[u]

    def product(self, first: Cochain1) -> Cochain1:
        """Pointwise ``self(u)·first(u)``."""

        fam = self.family
        return Cochain1(
            self.base,
            fam,
            [
                fam[a.tgt].mul(self.tau[a.id], first.tau[a.id])
                for a in self.base.arrows
            ],
        )

    def inverse(self) -> Cochain1:
        fam = self.family
        return Cochain1(
            self.base,
            fam,
            [fam[a.tgt].inv(self.tau[a.id]) for a in self.base.arrows],
        )

    def is_identity(self) -> bool:
        return not any(self.tau)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain1):
            return NotImplemented
        return self.tau == other.tau and self.base == other.base

    def __hash__(self) -> int:
        return hash(self.tau)

    def __repr__(self) -> str:
        return f"<Cochain1 {list(self.tau)}>"


class ActionMorphism:
    """A morphism ``source → target`` of weak actions given by ``tau``."""

    __slots__: Iterable[str] = ("source", "target", "tau")

    def __init__(
        self, source: WeakAction, target: WeakAction, tau: Cochain1
    ) -> None:
        self.source = source
        self.target = target
        self.tau = tau

    @classmethod
    def identity(cls, w: WeakAction) -> ActionMorphism:
        return cls(w, w, Cochain1.identity(w.base, w.family))

    def __repr__(self) -> str:
        return f"<ActionMorphism {list(self.tau.tau)}>"


def _check_shapes(w: WeakAction) -> None:
    base, fam = w.base, w.family
    for a in base.arrows:
        f = w.F[a.id]
        if f.source != fam[a.src] or f.target != fam[a.tgt]:
            raise StructuralError(
                f"F({a.id}) is not a map K_{a.src} -> K_{a.tgt}."
            )
        if not f.validate().ok:
            raise StructuralError(f"F({a.id}) is not an isomorphism.")
    for v, u in base.composable_pairs():
        if (v, u) not in w.sigma:
            raise StructuralError(f"σ is missing on the pair ({v},{u}).")
        x = w.sigma[(v, u)]
        if not 0 <= x < fam[base.arrows[v].tgt].order:
            raise StructuralError(f"σ({v},{u}) = {x} is not in its group.")


def _cocycle_report(w: WeakAction, *, full_lf3: bool) -> ValidationReport:
    _check_shapes(w)
    report = ValidationReport()
    base, fam, F, sigma = w.base, w.family, w.F, w.sigma

    for a in base.objects:
        i = base.id_of(a)
        if not F[i].is_identity():
            report.add("cond1", f"F(1_{a}) is not the identity", i)
        if sigma[(i, i)] != 0:
            report.add("lf3", f"σ(1_{a},1_{a}) != 1", i, i)

    if full_lf3:
        for v, u in base.composable_pairs():
            if (base.is_identity(v) or base.is_identity(u)) and not (
                base.is_identity(v) and base.is_identity(u)
            ):
                if sigma[(v, u)] != 0:
                    report.add("lf3", f"σ({v},{u}) != 1", v, u)

    for v, u in base.composable_pairs():
        k = fam[base.arrows[v].tgt]
        s = sigma[(v, u)]
        vu = base.compose(v, u)
        for x in fam[base.arrows[u].src].elements:
            lhs = k.mul(s, F[vu](x))
            rhs = k.mul(F[v](F[u](x)), s)
            if lhs != rhs:
                report.add(
                    "cond3", f"condition 3 fails at ({v},{u}) on {x}", v, u, x
                )
                break

    for wa, v, u in base.composable_triples():
        k = fam[base.arrows[wa].tgt]
        wv = base.compose(wa, v)
        vu = base.compose(v, u)
        lhs = k.mul(sigma[(wa, v)], sigma[(wv, u)])
        rhs = k.mul(F[wa](sigma[(v, u)]), sigma[(wa, vu)])
        if lhs != rhs:
            report.add(
                "cond4", f"condition 4 fails at ({wa},{v},{u})", wa, v, u
            )
    return report


def validate_cocycle(w: WeakAction) -> ValidationReport:
    """Check conditions 1 to 4 with full normalization.

    Raises:
        StructuralError: Some ``F(u)`` is not an iso ``K_src → K_tgt``, or
            ``σ`` is not total.
    """

    return _cocycle_report(w, full_lf3=True)


def weak_identity_upgrade(w: WeakAction) -> WeakAction:
    """Certify that normalizing ``σ(1,1)`` alone forces ``σ`` to vanish on
    every pair containing an identity.

    Returns ``w`` unchanged.

    Raises:
        PreconditionFailed: Conditions 1, 3, 4 or ``σ(1,1) = 1`` fail.
        TheoremViolation: They hold, yet some ``σ(v,1)`` or ``σ(1,u)`` is
            not the identity.
    """

    weak = _cocycle_report(w, full_lf3=False)
    if not weak.ok:
        raise PreconditionFailed(
            f"Candidate is not weakly normalized: {weak.violations[0].message}"
        )
    full = _cocycle_report(w, full_lf3=True)
    if not full.ok:
        raise TheoremViolation(
            "Weak normalization did not force full normalization.",
            {"violations": [v.message for v in full.violations]},
        )
    return w


def _same_coefficients(
    a: WeakAction, b: Union[WeakAction, Cochain1]
) -> None:
    if a.base != b.base or a.family != b.family:
        raise PreconditionFailed(
            "Both sides must share the base groupoid and the group family."
        )


def nabla(t: Cochain1, w: WeakAction) -> WeakAction:
    """The action ``τ∇w``:

    ``F'(u)(k) = τ(u)·F(u)(k)·τ(u)⁻¹`` and
    ``σ'(v,u) = τ(v)·F(v)(τ(u))·σ(v,u)·τ(vu)⁻¹``.
    """

    _same_coefficients(w, t)
    base, fam = w.base, w.family
    F = [w.F[a.id].conjugated(t(a.id)) for a in base.arrows]
    sigma = {}
    for v, u in base.composable_pairs():
        k = fam[base.arrows[v].tgt]
        vu = base.compose(v, u)
        sigma[(v, u)] = k.prod(
            t(v), w.F[v](t(u)), w.sigma[(v, u)], k.inv(t(vu))
        )
    return WeakAction(base, fam, F, sigma)


def validate_morphism(m: ActionMorphism) -> ValidationReport:
    """Check normalization, naturality and coherence of ``m``."""

    report = ValidationReport()
    w1, w2, t = m.source, m.target, m.tau
    if (
        w1.base != w2.base
        or w1.family != w2.family
        or t.base != w1.base
        or t.family != w1.family
    ):
        report.add("structure", "source, target and τ do not share data")
        return report
    base, fam = w1.base, w1.family

    for a in base.objects:
        i = base.id_of(a)
        if t(i) != 0:
            report.add("normalization", f"τ(1_{a}) != 1", i)

    for a in base.arrows:
        k = fam[a.tgt]
        ta = t(a.id)
        for x in fam[a.src].elements:
            if k.mul(ta, w1.F[a.id](x)) != k.mul(w2.F[a.id](x), ta):
                report.add(
                    "naturality", f"naturality fails on arrow {a.id}", a.id
                )
                break

    for v, u in base.composable_pairs():
        k = fam[base.arrows[v].tgt]
        vu = base.compose(v, u)
        lhs = k.prod(w2.F[v](t(u)), t(v), w1.sigma[(v, u)])
        rhs = k.mul(w2.sigma[(v, u)], t(vu))
        if lhs != rhs:
            report.add("coherence", f"coherence fails at ({v},{u})", v, u)
    return report


def compose_morphisms(
    second: ActionMorphism, first: ActionMorphism
) -> ActionMorphism:
    """``τ(u) = τ_second(u)·τ_first(u)``."""

    if first.target != second.source:
        raise CompositionError(
            "The first morphism does not end where the second starts."
        )
    return ActionMorphism(
        first.source, second.target, second.tau.product(first.tau)
    )


def inverse_morphism(m: ActionMorphism) -> ActionMorphism:
    return ActionMorphism(m.target, m.source, m.tau.inverse())


def iter_cochains(
    base: FiniteGroupoid, family: GroupFamily
) -> Iterator[Cochain1]:
    """All normalized 1-cochains in lexicographic order."""

    ranges = [
        range(1) if base.is_identity(a.id) else family[a.tgt].elements
        for a in base.arrows
    ]
    for tau in itertools.product(*ranges):
        yield Cochain1(base, family, tau)


def cochain_count(base: FiniteGroupoid, family: GroupFamily) -> int:
    total = 1
    for a in base.arrows:
        if not base.is_identity(a.id):
            total *= family[a.tgt].order
    return total


class _SigmaSearch:
    """Depth-first search for ``σ`` once ``F`` is fixed.

    With ``full_lf3`` the pairs containing an identity are fixed to 0;
    otherwise only ``(1,1)`` pairs are.
    """

    __slots__: Iterable[str] = (
        "base",
        "family",
        "F",
        "budget",
        "free",
        "fixed",
        "candidates",
        "triggers",
        "blocked",
    )

    def __init__(
        self,
        base: FiniteGroupoid,
        family: GroupFamily,
        F: Sequence[GroupIso],
        budget: Budget,
        full_lf3: bool,
    ) -> None:
        self.base = base
        self.family = family
        self.F = F
        self.budget = budget

        def is_fixed(v: int, u: int) -> bool:
            if full_lf3:
                return base.is_identity(v) or base.is_identity(u)
            return base.is_identity(v) and base.is_identity(u)

        pairs = base.composable_pairs()
        self.fixed = {p: 0 for p in pairs if is_fixed(*p)}
        self.free = [p for p in pairs if p not in self.fixed]
        pos = {p: i for i, p in enumerate(self.free)}

        # condition 3 as a filter: σ must conjugate F(vu) onto F(v)F(u)
        self.blocked = False
        self.candidates: List[List[int]] = []
        for v, u in pairs:
            target = F[v].compose(F[u])
            fvu = F[base.compose(v, u)]
            k = family[base.arrows[v].tgt]
            ok = [s for s in k.elements if fvu.conjugated(s) == target]
            if (v, u) in pos:
                self.candidates.append(ok)
            elif 0 not in ok:
                self.blocked = True

        self.triggers: Dict[int, List[Tuple[int, int, int]]] = {}
        for w, v, u in base.composable_triples():
            wv, vu = base.compose(w, v), base.compose(v, u)
            involved = [(w, v), (wv, u), (v, u), (w, vu)]
            last = max(pos.get(p, -1) for p in involved)
            self.triggers.setdefault(last, []).append((w, v, u))

    def _cond4(self, sigma: Dict[Pair, int], w: int, v: int, u: int) -> bool:
        base, F = self.base, self.F
        k = self.family[base.arrows[w].tgt]
        wv, vu = base.compose(w, v), base.compose(v, u)
        return k.mul(sigma[(w, v)], sigma[(wv, u)]) == k.mul(
            F[w](sigma[(v, u)]), sigma[(w, vu)]
        )

    def run(self) -> List[Dict[Pair, int]]:
        if self.blocked or not all(self.candidates):
            return []
        sigma = dict(self.fixed)
        if not all(self._cond4(sigma, *t) for t in self.triggers.get(-1, [])):
            return []
        found: List[Dict[Pair, int]] = []
        self._descend(0, sigma, found)
        return found

    def _descend(
        self, i: int, sigma: Dict[Pair, int], found: List[Dict[Pair, int]]
    ) -> None:
        if i == len(self.free):
            found.append(dict(sigma))
            return
        pair = self.free[i]
        checks = self.triggers.get(i, [])
        for s in self.candidates[i]:
            self.budget.spend()
            sigma[pair] = s
            if all(self._cond4(sigma, *t) for t in checks):
                self._descend(i + 1, sigma, found)
        del sigma[pair]


def _search(
    base: FiniteGroupoid,
    family: GroupFamily,
    full_lf3: bool,
    budget: Union[int, Budget, None],
    workers: Optional[int],
) -> List[WeakAction]:
    family.check_indexes(base)
    budget = Budget.resolve(budget, "cocycle enumeration")
    budget.check_size(len(base.arrows) * family.max_order, "cocycle size")
    aut = build_aut(family)

    choices: List[Sequence[GroupIso]] = []
    for a in base.arrows:
        if base.is_identity(a.id):
            choices.append((aut.identity(a.src),))
        else:
            isos = aut.isos(a.src, a.tgt)
            if not isos:
                logger.debug("no iso along arrow %d: no cocycles", a.id)
                return []
            choices.append(isos)

    def solve(F: Tuple[GroupIso, ...]) -> List[WeakAction]:
        search = _SigmaSearch(base, family, F, budget, full_lf3)
        return [WeakAction(base, family, F, s) for s in search.run()]

    per_f = ordered_map(solve, itertools.product(*choices), workers)
    found = sorted(
        (w for ws in per_f for w in ws), key=lambda w: w.key()
    )
    logger.debug(
        "enumerated %d actions (full normalization: %s) in %d nodes",
        len(found),
        full_lf3,
        budget.spent,
    )
    return found


def enumerate_cocycles(
    base: FiniteGroupoid,
    family: GroupFamily,
    *,
    budget: Union[int, Budget, None] = None,
    workers: Optional[int] = None,
) -> List[WeakAction]:
    """Every valid weak action, in canonical order.

    Raises:
        BudgetExceeded: The search outgrew its budget.
    """

    return _search(base, family, True, budget, workers)


def enumerate_lf3_prime_candidates(
    base: FiniteGroupoid,
    family: GroupFamily,
    *,
    budget: Union[int, Budget, None] = None,
    workers: Optional[int] = None,
) -> List[WeakAction]:
    """Every ``(F, σ)`` satisfying conditions 1, 3, 4 with only
    ``σ(1,1) = 1`` imposed."""

    return _search(base, family, False, budget, workers)


def check_weak_identity(
    base: FiniteGroupoid,
    family: GroupFamily,
    *,
    budget: Union[int, Budget, None] = None,
    workers: Optional[int] = None,
    instance: str = "",
) -> TheoremReport:
    """Run :func:`weak_identity_upgrade` over every weakly normalized
    candidate."""

    candidates = enumerate_lf3_prime_candidates(
        base, family, budget=budget, workers=workers
    )
    upgraded = 0
    for w in candidates:
        try:
            weak_identity_upgrade(w)
        except TheoremViolation as e:
            return TheoremReport(
                theorem="weak-identity",
                instance=instance,
                ok=False,
                left_count=len(candidates),
                right_count=upgraded,
                counterexample=e.counterexample,
            )
        upgraded += 1
    logger.info("weak identity: %d candidates upgraded", upgraded)
    return TheoremReport(
        theorem="weak-identity",
        instance=instance,
        ok=True,
        left_count=len(candidates),
        right_count=upgraded,
    )


def cohomologous(
    w1: WeakAction,
    w2: WeakAction,
    *,
    budget: Union[int, Budget, None] = None,
) -> Optional[Cochain1]:
    """The lexicographically least ``τ`` with ``nabla(τ, w1) = w2``, or
    None. Searches all of ``C¹``."""

    _same_coefficients(w1, w2)
    budget = Budget.resolve(budget, "cohomologous search")
    base, fam = w1.base, w1.family
    free = [a.id for a in base.arrows if not base.is_identity(a.id)]
    pos = {u: i for i, u in enumerate(free)}

    candidates = []
    for u in free:
        a = base.arrows[u]
        candidates.append(
            [
                x
                for x in fam[a.tgt].elements
                if w1.F[u].conjugated(x) == w2.F[u]
            ]
        )

    triggers: Dict[int, List[Pair]] = {}
    for v, u in base.composable_pairs():
        last = max(pos.get(x, -1) for x in (u, v, base.compose(v, u)))
        triggers.setdefault(last, []).append((v, u))

    tau = [0] * len(base.arrows)

    def coherent(v: int, u: int) -> bool:
        k = fam[base.arrows[v].tgt]
        vu = base.compose(v, u)
        return k.prod(w2.F[v](tau[u]), tau[v], w1.sigma[(v, u)]) == k.mul(
            w2.sigma[(v, u)], tau[vu]
        )

    for a in base.arrows:
        if base.is_identity(a.id) and w1.F[a.id] != w2.F[a.id]:
            return None
    if not all(coherent(*p) for p in triggers.get(-1, [])):
        return None

    def descend(i: int) -> bool:
        if i == len(free):
            return True
        u = free[i]
        for x in candidates[i]:
            budget.spend()
            tau[u] = x
            if all(coherent(*p) for p in triggers.get(i, [])):
                if descend(i + 1):
                    return True
        tau[u] = 0
        return False

    if descend(0):
        return Cochain1(base, fam, tau)
    return None


class CohomologyClass:
    """One element of ``H²``: the canonical representative, every member
    in canonical order, and for each member the least ``τ`` carrying the
    representative onto it."""

    __slots__: Iterable[str] = ("representative", "members", "witnesses")

    def __init__(
        self,
        representative: WeakAction,
        members: Sequence[WeakAction],
        witnesses: Sequence[Cochain1],
    ) -> None:
        self.representative = representative
        self.members: Tuple[WeakAction, ...] = tuple(members)
        self.witnesses: Tuple[Cochain1, ...] = tuple(witnesses)

    @property
    def size(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"<CohomologyClass of size {self.size}>"


def h2(
    base: FiniteGroupoid,
    family: GroupFamily,
    *,
    budget: Union[int, Budget, None] = None,
    workers: Optional[int] = None,
) -> List[CohomologyClass]:
    """Partition the cocycles into cohomology classes.

    Classes are the ``nabla``-orbits. Every morphism of weak actions is
    invertible, so orbits are exactly the connected components of the
    category of weak actions. Classes come in canonical order of their
    representatives.

    Raises:
        BudgetExceeded: The enumeration or the orbit sweep is too big.
        TheoremViolation: ``nabla`` produced an action outside the
            enumeration.
    """

    budget = Budget.resolve(budget, "h2")
    cocycles = enumerate_cocycles(
        base, family, budget=budget, workers=workers
    )
    if not cocycles:
        return []
    index = {w.key(): i for i, w in enumerate(cocycles)}
    budget.check_size(cochain_count(base, family), "cochain count")
    cochains = list(iter_cochains(base, family))

    assigned = [False] * len(cocycles)
    classes: List[CohomologyClass] = []
    for i, w in enumerate(cocycles):
        if assigned[i]:
            continue
        budget.spend(len(cochains))
        images = ordered_map(lambda t: nabla(t, w), cochains, workers)
        witness: Dict[int, Cochain1] = {}
        for t, img in zip(cochains, images):
            j = index.get(img.key())
            if j is None:
                raise TheoremViolation(
                    "nabla left the set of cocycles.",
                    {"cocycle": repr(w), "tau": list(t.tau)},
                )
            witness.setdefault(j, t)
        order = sorted(witness)
        for j in order:
            assigned[j] = True
        classes.append(
            CohomologyClass(
                cocycles[order[0]],
                [cocycles[j] for j in order],
                [witness[j] for j in order],
            )
        )
    logger.debug(
        "h2: %d cocycles in %d classes", len(cocycles), len(classes)
    )
    return classes
