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

"""Converters between payload models and domain objects."""

from __future__ import annotations

from typing import (
    Any,
    Dict,
    Generic,
    Iterable,
    List,
    Mapping,
    Sequence,
    Tuple,
    TypeVar,
    Union,
)

from ..algebra import (
    FiniteGroup,
    FiniteGroupoid,
    GroupFamily,
    GroupIso,
    GroupoidFunctor,
)
from ..cocycle import (
    ActionMorphism,
    Cochain1,
    CohomologyClass,
    Pair,
    WeakAction,
    nabla,
)
from ..exceptions import DocumentError, StructuralError
from ..extensions import Extension
from ..grothendieck import Cleavage, KernelIdentification
from ..nerve import (
    AutNerve,
    GroupoidNerve,
    Record,
    SimplicialHomotopy,
    SimplicialMap,
    TruncatedSimplicialSet,
    nerve_of_aut,
    nerve_of_groupoid,
)
from ..report import TheoremReport, ValidationReport
from ..two_groupoid import build_aut
from .schema import (
    ActionTables,
    ClassesPayload,
    ClassPayload,
    CleavagePayload,
    CochainPayload,
    CocyclePayload,
    ExtensionPayload,
    FamilyPayload,
    FunctorPayload,
    GroupoidPayload,
    GroupPayload,
    HomotopyPayload,
    MapPayload,
    MorphismPayload,
    NervePayload,
)

_ORIG = TypeVar("_ORIG")
_CONV = TypeVar("_CONV")

Report = Union[ValidationReport, TheoremReport]


class Converter(Generic[_ORIG, _CONV]):
    """Base class of every payload converter."""

    __slots__: Iterable[str] = ()

    def from_stored(self, value: _ORIG) -> _CONV:
        """Take a parsed payload and build the domain value."""

        raise NotImplementedError  # pragma: no cover

    def to_stored(self, value: _CONV) -> _ORIG:
        """Take a domain value and build the payload written to disk."""

        raise NotImplementedError  # pragma: no cover


def pair_key(v: int, u: int) -> str:
    return f"{v},{u}"


def parse_pair_key(key: str) -> Pair:
    parts = key.split(",")
    try:
        v, u = (int(p) for p in parts)
    except ValueError:
        raise DocumentError(f"sigma.{key}", "expected a key of the form 'v,u'")
    return v, u


def _as_record(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return tuple(_as_record(x) for x in value)
    return value


class GroupConverter(Converter[GroupPayload, FiniteGroup]):
    __slots__: Iterable[str] = ()

    def from_stored(self, value: GroupPayload) -> FiniteGroup:
        return FiniteGroup(value.table, value.label)

    def to_stored(self, value: FiniteGroup) -> GroupPayload:
        return GroupPayload(
            table=[list(row) for row in value.table], label=value.label
        )


class GroupoidConverter(Converter[GroupoidPayload, FiniteGroupoid]):
    __slots__: Iterable[str] = ()

    def from_stored(self, value: GroupoidPayload) -> FiniteGroupoid:
        if len(value.identity) != value.objects:
            raise StructuralError("One identity arrow per object is needed.")
        if len(value.inverse) != len(value.arrows):
            raise StructuralError("One inverse per arrow is needed.")
        return FiniteGroupoid(
            value.objects,
            value.arrows,
            dict(enumerate(value.identity)),
            {(g, f): gf for g, f, gf in value.compose},
            dict(enumerate(value.inverse)),
            value.label,
        )

    def to_stored(self, value: FiniteGroupoid) -> GroupoidPayload:
        n_obj, n_arr = len(value.objects), len(value.arrows)
        try:
            identity = [value.identity[a] for a in range(n_obj)]
            inverse = [value.inverse_table[f] for f in range(n_arr)]
        except KeyError as e:
            raise StructuralError(f"Partial groupoid table at {e.args[0]}.")
        return GroupoidPayload(
            objects=n_obj,
            arrows=[tuple(a) for a in value.arrows],
            identity=identity,
            compose=sorted(
                (g, f, gf) for (g, f), gf in value.compose_table.items()
            ),
            inverse=inverse,
            label=value.label,
        )


class FamilyConverter(Converter[FamilyPayload, GroupFamily]):
    __slots__: Iterable[str] = ("_groups",)

    def __init__(self) -> None:
        self._groups = GroupConverter()

    def from_stored(self, value: FamilyPayload) -> GroupFamily:
        return GroupFamily(
            {a: self._groups.from_stored(g) for a, g in value.groups.items()}
        )

    def to_stored(self, value: GroupFamily) -> FamilyPayload:
        return FamilyPayload(
            groups={a: self._groups.to_stored(g) for a, g in value.items()}
        )


def _cochain_values(
    base: FiniteGroupoid, tau: Mapping[int, int]
) -> List[int]:
    for f in tau:
        if not 0 <= f < len(base.arrows):
            raise DocumentError(f"tau.{f}", "not an arrow of the base")
    return [tau.get(a.id, 0) for a in base.arrows]


class ActionTablesConverter(Converter[ActionTables, WeakAction]):
    """The ``F`` and ``σ`` tables of a weak action over known
    coefficients."""

    __slots__: Iterable[str] = ("base", "family")

    def __init__(self, base: FiniteGroupoid, family: GroupFamily) -> None:
        self.base = base
        self.family = family

    def from_stored(self, value: ActionTables) -> WeakAction:
        base, fam = self.base, self.family
        F: List[GroupIso] = []
        for a in base.arrows:
            if a.id not in value.F:
                raise StructuralError(f"F is missing on arrow {a.id}.")
            F.append(GroupIso(fam[a.src], fam[a.tgt], value.F[a.id]))
        sigma: Dict[Pair, int] = {
            parse_pair_key(k): x for k, x in value.sigma.items()
        }
        return WeakAction(base, fam, F, sigma)

    def to_stored(self, value: WeakAction) -> ActionTables:
        return ActionTables(
            F={a.id: list(value.F[a.id].images) for a in value.base.arrows},
            sigma={pair_key(v, u): x for (v, u), x in value.sigma.items()},
        )


class CocycleConverter(Converter[CocyclePayload, WeakAction]):
    __slots__: Iterable[str] = ("_groupoids", "_families")

    def __init__(self) -> None:
        self._groupoids = GroupoidConverter()
        self._families = FamilyConverter()

    def from_stored(self, value: CocyclePayload) -> WeakAction:
        base = self._groupoids.from_stored(value.base)
        fam = self._families.from_stored(value.family)
        fam.check_indexes(base)
        return ActionTablesConverter(base, fam).from_stored(value)

    def to_stored(self, value: WeakAction) -> CocyclePayload:
        tables = ActionTablesConverter(value.base, value.family)
        return CocyclePayload(
            base=self._groupoids.to_stored(value.base),
            family=self._families.to_stored(value.family),
            **tables.to_stored(value).dict(),
        )


class CochainConverter(Converter[CochainPayload, Cochain1]):
    __slots__: Iterable[str] = ("_groupoids", "_families")

    def __init__(self) -> None:
        self._groupoids = GroupoidConverter()
        self._families = FamilyConverter()

    def from_stored(self, value: CochainPayload) -> Cochain1:
        base = self._groupoids.from_stored(value.base)
        fam = self._families.from_stored(value.family)
        fam.check_indexes(base)
        return Cochain1(base, fam, _cochain_values(base, value.tau))

    def to_stored(self, value: Cochain1) -> CochainPayload:
        return CochainPayload(
            base=self._groupoids.to_stored(value.base),
            family=self._families.to_stored(value.family),
            tau=dict(enumerate(value.tau)),
        )


class MorphismConverter(Converter[MorphismPayload, ActionMorphism]):
    __slots__: Iterable[str] = ("_cocycles",)

    def __init__(self) -> None:
        self._cocycles = CocycleConverter()

    def from_stored(self, value: MorphismPayload) -> ActionMorphism:
        source = self._cocycles.from_stored(value.source)
        target = self._cocycles.from_stored(value.target)
        tau = Cochain1(
            source.base,
            source.family,
            _cochain_values(source.base, value.tau),
        )
        return ActionMorphism(source, target, tau)

    def to_stored(self, value: ActionMorphism) -> MorphismPayload:
        return MorphismPayload(
            source=self._cocycles.to_stored(value.source),
            target=self._cocycles.to_stored(value.target),
            tau=dict(enumerate(value.tau.tau)),
        )


class FunctorConverter(Converter[FunctorPayload, GroupoidFunctor]):
    __slots__: Iterable[str] = ("_groupoids",)

    def __init__(self) -> None:
        self._groupoids = GroupoidConverter()

    def from_stored(self, value: FunctorPayload) -> GroupoidFunctor:
        return GroupoidFunctor(
            self._groupoids.from_stored(value.domain),
            self._groupoids.from_stored(value.codomain),
            value.object_map,
            value.arrow_map,
        )

    def to_stored(self, value: GroupoidFunctor) -> FunctorPayload:
        return FunctorPayload(
            domain=self._groupoids.to_stored(value.domain),
            codomain=self._groupoids.to_stored(value.codomain),
            object_map=list(value.object_map),
            arrow_map=list(value.arrow_map),
        )


class CleavageConverter(Converter[CleavagePayload, Cleavage]):
    """Cleavages of a fixed fibration.

    Args:
        fibration (GroupoidFunctor): The functor being cloven.
    """

    __slots__: Iterable[str] = ("fibration",)

    def __init__(self, fibration: GroupoidFunctor) -> None:
        self.fibration = fibration

    def from_stored(self, value: CleavagePayload) -> Cleavage:
        return Cleavage(self.fibration, value.lift)

    def to_stored(self, value: Cleavage) -> CleavagePayload:
        return CleavagePayload(lift=list(value.lift))


class ExtensionConverter(Converter[ExtensionPayload, Extension]):
    __slots__: Iterable[str] = ("_functors", "_families")

    def __init__(self) -> None:
        self._functors = FunctorConverter()
        self._families = FamilyConverter()

    def from_stored(self, value: ExtensionPayload) -> Extension:
        projection = self._functors.from_stored(value.projection)
        fam = self._families.from_stored(value.family)
        fam.check_indexes(projection.codomain)
        missing = [a for a in fam if a not in value.kernel]
        if missing:
            raise DocumentError(
                f"kernel.{missing[0]}", "no kernel arrows for this object"
            )
        return Extension(
            projection, KernelIdentification(fam, value.kernel), value.label
        )

    def to_stored(self, value: Extension) -> ExtensionPayload:
        return ExtensionPayload(
            projection=self._functors.to_stored(value.projection),
            family=self._families.to_stored(value.family),
            kernel={a: list(row) for a, row in value.kernel.arrows.items()},
            label=value.label,
        )


class NerveConverter(Converter[NervePayload, TruncatedSimplicialSet]):
    """Stored nerves come back as plain :class:`TruncatedSimplicialSet`
    instances, without the record semantics of the nerve they came
    from."""

    __slots__: Iterable[str] = ()

    def from_stored(self, value: NervePayload) -> TruncatedSimplicialSet:
        simplices: List[List[Record]] = [
            [_as_record(r) for r in level] for level in value.simplices
        ]
        return TruncatedSimplicialSet(
            simplices,
            [_as_record(t) for t in value.faces],
            [_as_record(t) for t in value.degeneracies],
            value.coskeletal,
        )

    def to_stored(self, value: TruncatedSimplicialSet) -> NervePayload:
        return NervePayload(
            simplices=[list(level) for level in value.simplices],
            faces=[[list(row) for row in t] for t in value.faces],
            degeneracies=[
                [list(row) for row in t] for t in value.degeneracies
            ],
            coskeletal=value.coskeletal,
        )


def _action_nerves(
    base: GroupoidPayload, family: FamilyPayload
) -> Tuple[GroupoidNerve, AutNerve]:
    g = GroupoidConverter().from_stored(base)
    fam = FamilyConverter().from_stored(family)
    fam.check_indexes(g)
    return nerve_of_groupoid(g), nerve_of_aut(build_aut(fam))


def _map_coefficients(
    value: SimplicialMap,
) -> Tuple[GroupoidPayload, FamilyPayload]:
    source, target = value.source, value.target
    if not isinstance(source, GroupoidNerve) or not isinstance(
        target, AutNerve
    ):
        raise StructuralError("Only maps ner(G) -> ner(Aut(K)) are stored.")
    return (
        GroupoidConverter().to_stored(source.groupoid),
        FamilyConverter().to_stored(target.aut.family),
    )


def _levels(levels: Sequence[Sequence[int]]) -> List[List[int]]:
    return [list(level) for level in levels]


class MapConverter(Converter[MapPayload, SimplicialMap]):
    __slots__: Iterable[str] = ()

    def from_stored(self, value: MapPayload) -> SimplicialMap:
        source, target = _action_nerves(value.base, value.family)
        return SimplicialMap(source, target, value.levels)

    def to_stored(self, value: SimplicialMap) -> MapPayload:
        base, family = _map_coefficients(value)
        return MapPayload(
            base=base, family=family, levels=_levels(value.levels)
        )


class HomotopyConverter(Converter[HomotopyPayload, SimplicialHomotopy]):
    __slots__: Iterable[str] = ()

    def from_stored(self, value: HomotopyPayload) -> SimplicialHomotopy:
        source, target = _action_nerves(value.base, value.family)
        return SimplicialHomotopy(
            SimplicialMap(source, target, value.source),
            SimplicialMap(source, target, value.target),
            value.components,
        )

    def to_stored(self, value: SimplicialHomotopy) -> HomotopyPayload:
        base, family = _map_coefficients(value.source_map)
        return HomotopyPayload(
            base=base,
            family=family,
            source=_levels(value.source_map.levels),
            target=_levels(value.target_map.levels),
            components=[_levels(level) for level in value.components],
        )


class ClassesConverter(Converter[ClassesPayload, List[CohomologyClass]]):
    """``H²`` listings. Members are rebuilt from the representative and
    the witnesses, so reading needs a listing written with witnesses.

    Args:
        base (FiniteGroupoid): The acting groupoid, used when writing.
        family (GroupFamily): The coefficients, used when writing.
        witnesses (bool): Whether to write the witnesses.
    """

    __slots__: Iterable[str] = ("base", "family", "witnesses")

    def __init__(
        self,
        base: FiniteGroupoid,
        family: GroupFamily,
        witnesses: bool = False,
    ) -> None:
        self.base = base
        self.family = family
        self.witnesses = witnesses

    def from_stored(self, value: ClassesPayload) -> List[CohomologyClass]:
        base = GroupoidConverter().from_stored(value.base)
        fam = FamilyConverter().from_stored(value.family)
        tables = ActionTablesConverter(base, fam)
        classes: List[CohomologyClass] = []
        for i, c in enumerate(value.classes):
            if c.witnesses is None or len(c.witnesses) != c.size:
                raise DocumentError(
                    f"classes.{i}.witnesses",
                    "one witness per member is needed to rebuild a class",
                )
            rep = tables.from_stored(c.representative)
            taus = [
                Cochain1(base, fam, _cochain_values(base, t))
                for t in c.witnesses
            ]
            classes.append(
                CohomologyClass(rep, [nabla(t, rep) for t in taus], taus)
            )
        return classes

    def to_stored(self, value: List[CohomologyClass]) -> ClassesPayload:
        tables = ActionTablesConverter(self.base, self.family)
        classes = [
            ClassPayload(
                representative=tables.to_stored(c.representative),
                size=c.size,
                witnesses=[dict(enumerate(t.tau)) for t in c.witnesses]
                if self.witnesses
                else None,
            )
            for c in value
        ]
        return ClassesPayload(
            base=GroupoidConverter().to_stored(self.base),
            family=FamilyConverter().to_stored(self.family),
            classes=classes,
        )


class ReportConverter(Converter[Dict[str, Any], Report]):
    __slots__: Iterable[str] = ()

    def from_stored(self, value: Dict[str, Any]) -> Report:
        if "theorem" in value:
            return TheoremReport(**value)
        return ValidationReport(**value)

    def to_stored(self, value: Report) -> Dict[str, Any]:
        return value.dict()
