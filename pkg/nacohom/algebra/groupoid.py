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

"""Finite groupoids, their vertex groups and functors between them.

``compose(g, f)`` means "``f`` first, then ``g``"."""

from __future__ import annotations

import logging
from typing import (
    Dict,
    Iterable,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

from ..config import get_settings
from ..exceptions import (
    BudgetExceeded,
    CompositionError,
    StructuralError,
    UnknownArrow,
    UnknownObject,
)
from ..report import ValidationReport
from ..utils import DisjointSet
from .group import FiniteGroup

logger = logging.getLogger(__name__)


class Arrow(NamedTuple):
    id: int
    src: int
    tgt: int


class FiniteGroupoid:
    """A groupoid given by explicit tables.

    Object ids are ``0..len(objects)-1`` and arrow ids are
    ``0..len(arrows)-1``. The constructor checks sizes and density of ids;
    :func:`validate_groupoid` checks the axioms.

    Args:
        objects (int | Sequence[int]): Number of objects, or their ids.
        arrows (Sequence[tuple[int, int, int]]): ``(id, src, tgt)`` rows.
        identity (Mapping[int, int]): Object to identity arrow.
        compose (Mapping[tuple[int, int], int]): ``(g, f)`` to ``g∘f``.
        inverse (Mapping[int, int]): Arrow to inverse arrow.
        label (str, optional): A human readable name.

    Raises:
        BudgetExceeded: Above the configured object or arrow limits.
        StructuralError: Ids are not dense.
    """

    __slots__: Iterable[str] = (
        "objects",
        "arrows",
        "identity",
        "compose_table",
        "inverse_table",
        "label",
        "_hom",
        "_pairs",
    )

    def __init__(
        self,
        objects: int | Sequence[int],
        arrows: Sequence[Tuple[int, int, int]],
        identity: Mapping[int, int],
        compose: Mapping[Tuple[int, int], int],
        inverse: Mapping[int, int],
        label: Optional[str] = None,
    ) -> None:
        if isinstance(objects, int):
            objects = range(objects)
        settings = get_settings()
        if len(objects) > settings.max_objects:
            raise BudgetExceeded("groupoid object count", settings.max_objects)
        if len(arrows) > settings.max_arrows:
            raise BudgetExceeded("groupoid arrow count", settings.max_arrows)
        if list(objects) != list(range(len(objects))):
            raise StructuralError("Object ids must be 0..n-1 in order.")
        rows = sorted(Arrow(*map(int, a)) for a in arrows)
        if [a.id for a in rows] != list(range(len(rows))):
            raise StructuralError("Arrow ids must be 0..m-1 without gaps.")

        self.objects: Tuple[int, ...] = tuple(objects)
        self.arrows: Tuple[Arrow, ...] = tuple(rows)
        self.identity: Dict[int, int] = dict(identity)
        self.compose_table: Dict[Tuple[int, int], int] = dict(compose)
        self.inverse_table: Dict[int, int] = dict(inverse)
        self.label = label
        self._hom: Optional[Dict[Tuple[int, int], Tuple[int, ...]]] = None
        self._pairs: Optional[List[Tuple[int, int]]] = None

    def _check_object(self, a: int) -> None:
        if not 0 <= a < len(self.objects):
            raise UnknownObject(a)

    def _check_arrow(self, f: int) -> None:
        if not 0 <= f < len(self.arrows):
            raise UnknownArrow(f)

    def src(self, f: int) -> int:
        self._check_arrow(f)
        return self.arrows[f].src

    def tgt(self, f: int) -> int:
        self._check_arrow(f)
        return self.arrows[f].tgt

    def id_of(self, a: int) -> int:
        self._check_object(a)
        try:
            return self.identity[a]
        except KeyError:
            raise StructuralError(f"Object {a} has no identity arrow.")

    def is_identity(self, f: int) -> bool:
        return self.identity.get(self.arrows[f].src) == f

    def compose(self, g: int, f: int) -> int:
        if self.src(g) != self.tgt(f):
            raise CompositionError(
                f"Arrow {g} does not start where arrow {f} ends."
            )
        try:
            return self.compose_table[(g, f)]
        except KeyError:
            raise StructuralError(f"Composite of ({g},{f}) is missing.")

    def chain(self, *fs: int) -> int:
        """Compose right to left: ``chain(h, g, f) = h∘g∘f``."""

        acc = fs[-1]
        for g in reversed(fs[:-1]):
            acc = self.compose(g, acc)
        return acc

    def inverse(self, f: int) -> int:
        self._check_arrow(f)
        try:
            return self.inverse_table[f]
        except KeyError:
            raise StructuralError(f"Arrow {f} has no inverse.")

    def hom(self, a: int, b: int) -> Tuple[int, ...]:
        """Arrows ``a → b`` in increasing id order."""

        if self._hom is None:
            hom: Dict[Tuple[int, int], List[int]] = {}
            for arrow in self.arrows:
                hom.setdefault((arrow.src, arrow.tgt), []).append(arrow.id)
            self._hom = {k: tuple(v) for k, v in hom.items()}
        return self._hom.get((a, b), ())

    def composable_pairs(self) -> List[Tuple[int, int]]:
        """All ``(v, u)`` with ``src(v) = tgt(u)``, sorted."""

        if self._pairs is None:
            self._pairs = [
                (v.id, u.id)
                for v in self.arrows
                for u in self.arrows
                if v.src == u.tgt
            ]
        return list(self._pairs)

    def composable_triples(self) -> List[Tuple[int, int, int]]:
        """All composable ``(w, v, u)``, ``u`` applied first."""

        return [
            (w.id, v, u)
            for v, u in self.composable_pairs()
            for w in self.arrows
            if w.src == self.arrows[v].tgt
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroupoid):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.arrows == other.arrows
            and self.identity == other.identity
            and self.compose_table == other.compose_table
            and self.inverse_table == other.inverse_table
        )

    def __hash__(self) -> int:
        return hash((self.objects, self.arrows))

    def __repr__(self) -> str:
        name = f" {self.label}" if self.label else ""
        return (
            f"<FiniteGroupoid{name} with {len(self.objects)} objects and "
            f"{len(self.arrows)} arrows>"
        )

    # builders
    @classmethod
    def from_group(cls, g: FiniteGroup) -> FiniteGroupoid:
        """The one-object groupoid whose arrows are the elements of ``g``."""

        return cls(
            1,
            [(x, 0, 0) for x in g.elements],
            {0: 0},
            {(a, b): g.mul(a, b) for a in g.elements for b in g.elements},
            {x: g.inv(x) for x in g.elements},
            g.label,
        )

    @classmethod
    def discrete(cls, n: int) -> FiniteGroupoid:
        return cls(
            n,
            [(a, a, a) for a in range(n)],
            {a: a for a in range(n)},
            {(a, a): a for a in range(n)},
            {a: a for a in range(n)},
            f"discrete({n})",
        )

    @classmethod
    def codiscrete(cls, n: int) -> FiniteGroupoid:
        """Exactly one arrow between any two objects; the arrow ``a → b``
        has id ``a·n + b``."""

        arrows = [(a * n + b, a, b) for a in range(n) for b in range(n)]
        compose = {
            (b * n + c, a * n + b): a * n + c
            for a in range(n)
            for b in range(n)
            for c in range(n)
        }
        return cls(
            n,
            arrows,
            {a: a * n + a for a in range(n)},
            compose,
            {a * n + b: b * n + a for a in range(n) for b in range(n)},
            f"codiscrete({n})",
        )

    @classmethod
    def interval(cls) -> FiniteGroupoid:
        """Objects ``{0, 1}``: arrows ``0, 1`` are the identities, ``2`` is
        ``0 → 1`` and ``3`` its inverse."""

        arrows = [(0, 0, 0), (1, 1, 1), (2, 0, 1), (3, 1, 0)]
        compose = {
            (0, 0): 0,
            (1, 1): 1,
            (2, 0): 2,
            (1, 2): 2,
            (3, 1): 3,
            (0, 3): 3,
            (3, 2): 0,
            (2, 3): 1,
        }
        return cls(
            2, arrows, {0: 0, 1: 1}, compose, {0: 0, 1: 1, 2: 3, 3: 2}, "I"
        )


def disjoint_union(*parts: FiniteGroupoid) -> FiniteGroupoid:
    """Side by side, with object and arrow ids shifted in order."""

    arrows: List[Tuple[int, int, int]] = []
    identity: Dict[int, int] = {}
    compose: Dict[Tuple[int, int], int] = {}
    inverse: Dict[int, int] = {}
    obj_off = arr_off = 0
    for p in parts:
        arrows += [
            (a.id + arr_off, a.src + obj_off, a.tgt + obj_off)
            for a in p.arrows
        ]
        identity.update(
            {a + obj_off: f + arr_off for a, f in p.identity.items()}
        )
        compose.update(
            {
                (g + arr_off, f + arr_off): h + arr_off
                for (g, f), h in p.compose_table.items()
            }
        )
        inverse.update(
            {f + arr_off: g + arr_off for f, g in p.inverse_table.items()}
        )
        obj_off += len(p.objects)
        arr_off += len(p.arrows)
    labels = [p.label for p in parts]
    label = "+".join(x for x in labels if x) if all(labels) else None
    return FiniteGroupoid(obj_off, arrows, identity, compose, inverse, label)


def _check_structure(g: FiniteGroupoid) -> None:
    n_obj, n_arr = len(g.objects), len(g.arrows)

    def obj(a: int, where: str) -> None:
        if not 0 <= a < n_obj:
            raise StructuralError(f"{where} refers to unknown object {a}.")

    def arr(f: int, where: str) -> None:
        if not 0 <= f < n_arr:
            raise StructuralError(f"{where} refers to unknown arrow {f}.")

    for a in g.arrows:
        obj(a.src, f"arrow {a.id}")
        obj(a.tgt, f"arrow {a.id}")
    for a, f in g.identity.items():
        obj(a, "identity map")
        arr(f, f"identity of object {a}")
    for (x, y), z in g.compose_table.items():
        arr(x, "compose table")
        arr(y, "compose table")
        arr(z, f"composite of ({x},{y})")
    for f, h in g.inverse_table.items():
        arr(f, "inverse map")
        arr(h, f"inverse of arrow {f}")


def validate_groupoid(g: FiniteGroupoid) -> ValidationReport:
    """Check the groupoid axioms.

    Raises:
        StructuralError: Some table refers to an id that does not exist.
    """

    _check_structure(g)
    report = ValidationReport()
    arrows = g.arrows
    table = g.compose_table

    for a in g.objects:
        f = g.identity.get(a)
        if f is None:
            report.add("identity", f"object {a} has no identity", a)
        elif arrows[f].src != a or arrows[f].tgt != a:
            report.add("identity", f"identity of {a} is not a loop", f)
    if not report.ok:
        return report

    for (x, y), z in table.items():
        if arrows[x].src != arrows[y].tgt:
            report.add(
                "domain", f"compose defined on non-composable ({x},{y})", x, y
            )
        elif arrows[z].src != arrows[y].src or arrows[z].tgt != arrows[x].tgt:
            report.add(
                "endpoints", f"composite of ({x},{y}) has wrong ends", x, y
            )

    pairs = g.composable_pairs()
    missing = [p for p in pairs if p not in table]
    for v, u in missing:
        report.add("domain", f"compose undefined for ({v},{u})", v, u)
    if not report.ok:
        return report

    for f in arrows:
        i_src = g.identity.get(f.src)
        i_tgt = g.identity.get(f.tgt)
        if i_src is not None and table[(f.id, i_src)] != f.id:
            report.add("unit", f"{f.id}∘1 != {f.id}", f.id)
        if i_tgt is not None and table[(i_tgt, f.id)] != f.id:
            report.add("unit", f"1∘{f.id} != {f.id}", f.id)

    for w, v, u in g.composable_triples():
        if table[(table[(w, v)], u)] != table[(w, table[(v, u)])]:
            report.add(
                "assoc", f"associativity failure at ({w},{v},{u})", w, v, u
            )

    for f in arrows:
        h = g.inverse_table.get(f.id)
        if h is None:
            report.add("inverse", f"arrow {f.id} has no inverse", f.id)
            continue
        if arrows[h].src != f.tgt or arrows[h].tgt != f.src:
            report.add("inverse", f"inverse of {f.id} has wrong ends", f.id)
            continue
        if table[(h, f.id)] != g.identity.get(f.src):
            report.add("inverse", f"inverse({f.id})∘{f.id} != 1", f.id)
        if table[(f.id, h)] != g.identity.get(f.tgt):
            report.add("inverse", f"{f.id}∘inverse({f.id}) != 1", f.id)
    return report


class VertexGroup(NamedTuple):
    """The automorphism group of one object.

    ``arrows[x]`` is the arrow for element ``x``; ``elements`` is the
    reverse lookup."""

    group: FiniteGroup
    arrows: Tuple[int, ...]
    elements: Dict[int, int]


def loop_group(
    g: FiniteGroupoid, loops: Sequence[int], label: Optional[str] = None
) -> VertexGroup:
    """The group on ``loops`` (the first one the identity) under
    composition in ``g``."""

    index = {f: i for i, f in enumerate(loops)}
    try:
        table = [[index[g.compose(x, y)] for y in loops] for x in loops]
    except KeyError:
        raise StructuralError("Loops are not closed under composition.")
    return VertexGroup(FiniteGroup(table, label), tuple(loops), index)


def vertex_group(g: FiniteGroupoid, a: int) -> VertexGroup:
    """The group of arrows ``a → a``: identity is element 0, the other
    arrows follow in increasing id order."""

    ident = g.id_of(a)
    loops = [ident] + [f for f in g.hom(a, a) if f != ident]
    return loop_group(g, loops)


def connected_components(g: FiniteGroupoid) -> List[List[int]]:
    """Blocks of objects joined by arrows, each sorted, ordered by least
    member."""

    ds = DisjointSet(len(g.objects))
    for a in g.arrows:
        ds.union(a.src, a.tgt)
    return ds.blocks()


class GroupoidFunctor:
    """A functor given by its object and arrow maps."""

    __slots__: Iterable[str] = (
        "domain",
        "codomain",
        "object_map",
        "arrow_map",
    )

    def __init__(
        self,
        domain: FiniteGroupoid,
        codomain: FiniteGroupoid,
        object_map: Sequence[int],
        arrow_map: Sequence[int],
    ) -> None:
        if len(object_map) != len(domain.objects) or len(arrow_map) != len(
            domain.arrows
        ):
            raise StructuralError("Functor maps must be total on the domain.")
        self.domain = domain
        self.codomain = codomain
        self.object_map: Tuple[int, ...] = tuple(object_map)
        self.arrow_map: Tuple[int, ...] = tuple(arrow_map)

    @classmethod
    def identity(cls, g: FiniteGroupoid) -> GroupoidFunctor:
        return cls(g, g, range(len(g.objects)), range(len(g.arrows)))

    @classmethod
    def from_homomorphism(
        cls, g: FiniteGroupoid, h: FiniteGroupoid, images: Sequence[int]
    ) -> GroupoidFunctor:
        """Between one-object groupoids, from an element map."""

        return cls(g, h, [0], images)

    def __call__(self, f: int) -> int:
        return self.arrow_map[f]

    def compose(self, first: GroupoidFunctor) -> GroupoidFunctor:
        """``self ∘ first``."""

        if first.codomain != self.domain:
            raise CompositionError("Functors do not compose.")
        return GroupoidFunctor(
            first.domain,
            self.codomain,
            [self.object_map[a] for a in first.object_map],
            [self.arrow_map[f] for f in first.arrow_map],
        )

    def is_isomorphism(self) -> bool:
        return sorted(self.object_map) == list(
            range(len(self.codomain.objects))
        ) and sorted(self.arrow_map) == list(range(len(self.codomain.arrows)))

    def inverse(self) -> GroupoidFunctor:
        if not self.is_isomorphism():
            raise StructuralError("Functor is not bijective.")
        objs = [0] * len(self.object_map)
        arrs = [0] * len(self.arrow_map)
        for a, b in enumerate(self.object_map):
            objs[b] = a
        for f, g in enumerate(self.arrow_map):
            arrs[g] = f
        return GroupoidFunctor(self.codomain, self.domain, objs, arrs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupoidFunctor):
            return NotImplemented
        return (
            self.object_map == other.object_map
            and self.arrow_map == other.arrow_map
            and self.domain == other.domain
            and self.codomain == other.codomain
        )

    def __hash__(self) -> int:
        return hash((self.object_map, self.arrow_map))

    def __repr__(self) -> str:
        return f"<GroupoidFunctor {list(self.arrow_map)}>"


def validate_functor(p: GroupoidFunctor) -> ValidationReport:
    """Check that ``p`` preserves ends, identities and composition."""

    report = ValidationReport()
    dom, cod = p.domain, p.codomain
    n_obj, n_arr = len(cod.objects), len(cod.arrows)
    if any(not 0 <= b < n_obj for b in p.object_map) or any(
        not 0 <= f < n_arr for f in p.arrow_map
    ):
        report.add("structure", "functor maps leave the codomain")
        return report

    for f in dom.arrows:
        g = cod.arrows[p.arrow_map[f.id]]
        if g.src != p.object_map[f.src] or g.tgt != p.object_map[f.tgt]:
            report.add("ends", f"arrow {f.id} lands on wrong ends", f.id)
    if not report.ok:
        return report
    for a in dom.objects:
        if p.arrow_map[dom.id_of(a)] != cod.id_of(p.object_map[a]):
            report.add("unit", f"identity of {a} not preserved", a)
    for (g, f), h in dom.compose_table.items():
        if p.arrow_map[h] != cod.compose(p.arrow_map[g], p.arrow_map[f]):
            report.add("compose", f"composite ({g},{f}) not preserved", g, f)
    return report
