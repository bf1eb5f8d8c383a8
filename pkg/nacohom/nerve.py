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

"""Nerves truncated at dimension 3, simplicial maps between them and
combinatorial homotopies.

Simplices are stored explicitly, degenerate ones included, as hashable
records together with index tables for the face and degeneracy maps.

Records of the nerve of a groupoid: ``(A,)`` in dimension 0 and the chain
``(u1, ..., un)``, ``u1`` applied first, in dimension ``n ≥ 1``.

Records of the nerve of ``Aut(K)``: ``(A,)``; a 1-cell ``(A0, A1,
images)``; a triangle ``(g, h, f, α)`` with ``c(α)∘h = g∘f``; a tetrahedron
as the tuple of its four faces, ``d_i`` omitting vertex ``i``.
"""

from __future__ import annotations

import copy
import logging
from functools import lru_cache
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from .algebra import FiniteGroupoid, GroupFamily, GroupIso
from .cocycle import (
    ActionMorphism,
    WeakAction,
    enumerate_cocycles,
    h2,
    validate_cocycle,
    validate_morphism,
)
from .exceptions import (
    InvalidInput,
    PreconditionFailed,
    StructuralError,
    TheoremViolation,
)
from .report import TheoremReport, ValidationReport
from .two_groupoid import AutTwoGroupoid, build_aut
from .utils import Budget, DisjointSet, ordered_map

logger = logging.getLogger(__name__)

Record = Tuple[Any, ...]
Table = Tuple[Tuple[int, ...], ...]
RecordFn = Callable[[int, int, Record], Record]

TOP = 3


class TruncatedSimplicialSet:
    """Simplices of dimensions 0 to 3 with their face and degeneracy
    tables.

    Args:
        simplices (Sequence[Sequence[Record]]): Records per dimension.
        faces (Sequence[Table]): ``faces[n][x][i]`` is the index of
            ``d_i x`` in dimension ``n - 1``; ``faces[0]`` is empty rows.
        degeneracies (Sequence[Table]): ``degeneracies[n][x][i]`` is the
            index of ``s_i x`` in dimension ``n + 1``, for ``n ≤ 2``.
        coskeletal (int): 2 when every compatible 3-boundary has exactly
            one filler, 3 when it has at most one, 0 when unknown.
    """

    __slots__: Iterable[str] = (
        "simplices",
        "faces",
        "degeneracies",
        "coskeletal",
        "_index",
        "_fillers",
        "_degenerate",
    )

    def __init__(
        self,
        simplices: Sequence[Sequence[Record]],
        faces: Sequence[Table],
        degeneracies: Sequence[Table],
        coskeletal: int = 0,
    ) -> None:
        if len(simplices) != TOP + 1 or len(faces) != TOP + 1:
            raise StructuralError("Expected simplices in dimensions 0..3.")
        if len(degeneracies) != TOP:
            raise StructuralError("Expected degeneracies in dimensions 0..2.")
        self.simplices: Tuple[Tuple[Record, ...], ...] = tuple(
            tuple(level) for level in simplices
        )
        self.faces: Tuple[Table, ...] = tuple(faces)
        self.degeneracies: Tuple[Table, ...] = tuple(degeneracies)
        self.coskeletal = coskeletal
        self._index: List[Dict[Record, int]] = [
            {r: x for x, r in enumerate(level)} for level in self.simplices
        ]
        self._fillers: Dict[int, Dict[Tuple[int, ...], List[int]]] = {}
        self._degenerate: Optional[List[Dict[int, Tuple[int, int]]]] = None

    def count(self, n: int) -> int:
        return len(self.simplices[n])

    def counts(self) -> Tuple[int, ...]:
        return tuple(len(level) for level in self.simplices)

    def find(self, n: int, record: Record) -> Optional[int]:
        return self._index[n].get(record)

    def index(self, n: int, record: Record) -> int:
        x = self.find(n, record)
        if x is None:
            raise StructuralError(f"No {n}-simplex {record!r}.")
        return x

    def face(self, n: int, i: int, x: int) -> int:
        return self.faces[n][x][i]

    def degeneracy(self, n: int, i: int, x: int) -> int:
        return self.degeneracies[n][x][i]

    def fillers(self, n: int, boundary: Tuple[int, ...]) -> List[int]:
        """The ``n``-simplices whose faces are ``boundary``."""

        if n not in self._fillers:
            table: Dict[Tuple[int, ...], List[int]] = {}
            for x, row in enumerate(self.faces[n]):
                table.setdefault(tuple(row), []).append(x)
            self._fillers[n] = table
        return self._fillers[n].get(boundary, [])

    def degenerate_origin(self, n: int, x: int) -> Optional[Tuple[int, int]]:
        """``(i, y)`` with ``x = s_i y`` and ``i`` least, or None."""

        if self._degenerate is None:
            found: List[Dict[int, Tuple[int, int]]] = [{}]
            for m in range(TOP):
                level: Dict[int, Tuple[int, int]] = {}
                for y, row in enumerate(self.degeneracies[m]):
                    for i, z in enumerate(row):
                        if z not in level or level[z][0] > i:
                            level[z] = (i, y)
                found.append(level)
            self._degenerate = found
        return self._degenerate[n].get(x)

    def is_degenerate(self, n: int, x: int) -> bool:
        return self.degenerate_origin(n, x) is not None

    def record_face(self, n: int, i: int, record: Record) -> Optional[Record]:
        """The face computed from the record itself, when the record
        format is known."""

        return None

    def with_face(
        self, n: int, x: int, i: int, value: int
    ) -> TruncatedSimplicialSet:
        """A copy with one entry of a face table replaced."""

        faces = [list(level) for level in self.faces]
        row = list(faces[n][x])
        row[i] = value
        faces[n][x] = tuple(row)
        mutated = copy.copy(self)
        mutated.faces = tuple(tuple(level) for level in faces)
        mutated._fillers = {}
        return mutated

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSimplicialSet):
            return NotImplemented
        return (
            self.simplices == other.simplices
            and self.faces == other.faces
            and self.degeneracies == other.degeneracies
        )

    def __hash__(self) -> int:
        return hash(self.counts())

    def __repr__(self) -> str:
        return f"<{type(self).__name__} counts={list(self.counts())}>"


def _tabulate(
    levels: Sequence[Sequence[Record]], face: RecordFn, degeneracy: RecordFn
) -> Tuple[List[Table], List[Table]]:
    index = [{r: x for x, r in enumerate(level)} for level in levels]
    faces: List[Table] = [tuple(() for _ in levels[0])]
    for n in range(1, TOP + 1):
        faces.append(
            tuple(
                tuple(index[n - 1][face(n, i, r)] for i in range(n + 1))
                for r in levels[n]
            )
        )
    degens: List[Table] = []
    for n in range(TOP):
        degens.append(
            tuple(
                tuple(index[n + 1][degeneracy(n, i, r)] for i in range(n + 1))
                for r in levels[n]
            )
        )
    return faces, degens


class GroupoidNerve(TruncatedSimplicialSet):
    """The nerve of a groupoid: chains of composable arrows."""

    __slots__: Iterable[str] = ("groupoid",)

    def __init__(self, groupoid: FiniteGroupoid) -> None:
        g = groupoid
        levels: List[List[Record]] = [
            [(a,) for a in g.objects],
            [(a.id,) for a in g.arrows],
            sorted((u, v) for v, u in g.composable_pairs()),
            sorted((u, v, w) for w, v, u in g.composable_triples()),
        ]
        self.groupoid = g
        faces, degens = _tabulate(levels, self.record_face, self._degen)
        super().__init__(levels, faces, degens, coskeletal=2)

    def vertices(self, n: int, record: Record) -> List[int]:
        if n == 0:
            return [record[0]]
        g = self.groupoid
        return [g.src(record[0])] + [g.tgt(u) for u in record]

    def arrow_between(self, n: int, record: Record, i: int, j: int) -> int:
        """The composite ``u_j ∘ ... ∘ u_{i+1}`` from vertex ``i`` to
        vertex ``j``, an identity when ``i = j``."""

        g = self.groupoid
        if i == j:
            return g.id_of(self.vertices(n, record)[i])
        return g.chain(*reversed(record[i:j]))

    def record_face(self, n: int, i: int, record: Record) -> Record:
        g = self.groupoid
        if n == 1:
            return (g.tgt(record[0]),) if i == 0 else (g.src(record[0]),)
        if i == 0:
            return record[1:]
        if i == n:
            return record[:-1]
        merged = g.compose(record[i], record[i - 1])
        return record[: i - 1] + (merged,) + record[i + 1 :]

    def _degen(self, n: int, i: int, record: Record) -> Record:
        g = self.groupoid
        if n == 0:
            return (g.id_of(record[0]),)
        ident = g.id_of(self.vertices(n, record)[i])
        return record[:i] + (ident,) + record[i:]


class AutNerve(TruncatedSimplicialSet):
    """The nerve of ``Aut(K)``: triangles are 2-cells and tetrahedra are
    the commutative ones, ``m(β)·φ = ρ·λ`` with ``m`` the edge ``2 → 3``,
    ``β, φ, λ, ρ`` the witnesses of the faces ``d3, d1, d2, d0``."""

    __slots__: Iterable[str] = ("aut", "_cells")

    def __init__(
        self, aut: AutTwoGroupoid, budget: Union[int, Budget, None] = None
    ) -> None:
        budget = Budget.resolve(budget, "Aut nerve")
        fam = aut.family
        self.aut = aut
        cells = {(a, b, f.images): f for a, b, f in aut.one_cells}
        self._cells = cells
        ones: List[Record] = sorted(cells)
        out: Dict[int, List[Record]] = {}
        for r in ones:
            out.setdefault(r[0], []).append(r)

        triangles: List[Record] = []
        for fr in ones:
            for gr in out.get(fr[1], []):
                gf = cells[gr].compose(cells[fr])
                k = fam[gr[1]]
                for alpha in k.elements:
                    h = gf.conjugated(k.inv(alpha))
                    triangles.append(
                        (gr, (fr[0], gr[1], h.images), fr, alpha)
                    )
        triangles.sort()

        size = sum(
            len(out.get(t[0][1], [])) * fam[t[0][1]].order ** 2
            for t in triangles
        )
        budget.check_size(size, "Aut nerve 3-simplices")

        tetrahedra: List[Record] = []
        for gr, e02r, fr, beta in triangles:
            f, e02 = cells[fr], cells[e02r]
            a0, a1 = fr[0], fr[1]
            for mr in out.get(gr[1], []):
                m = cells[mr]
                a3 = mr[1]
                k3 = fam[a3]
                me02 = m.compose(e02)
                for phi in k3.elements:
                    e03 = me02.conjugated(k3.inv(phi))
                    e03r = (a0, a3, e03.images)
                    back = e03.compose(f.inverse())
                    for lam in k3.elements:
                        e13r = (a1, a3, back.conjugated(lam).images)
                        rho = k3.prod(m(beta), phi, k3.inv(lam))
                        tetrahedra.append(
                            (
                                (mr, e13r, gr, rho),
                                (mr, e03r, e02r, phi),
                                (e13r, e03r, fr, lam),
                                (gr, e02r, fr, beta),
                            )
                        )
        tetrahedra.sort()

        levels: List[List[Record]] = [
            [(a,) for a in aut.objects],
            ones,
            triangles,
            tetrahedra,
        ]
        faces, degens = _tabulate(levels, self.record_face, self._degen)
        super().__init__(levels, faces, degens, coskeletal=3)
        logger.debug("Aut nerve with counts %s", self.counts())

    def one_cell(self, record: Record) -> GroupIso:
        return self._cells[record]

    def record_face(self, n: int, i: int, record: Record) -> Record:
        if n == 1:
            return (record[1],) if i == 0 else (record[0],)
        face: Record = record[i]
        return face

    def _degen(self, n: int, i: int, record: Record) -> Record:
        if n == 0:
            a = record[0]
            return (a, a, tuple(self.aut.family[a].elements))
        if n == 1:
            if i == 0:
                return (record, record, self._degen(0, 0, (record[0],)), 0)
            return (self._degen(0, 0, (record[1],)), record, record, 0)
        faces: List[Record] = []
        for k in range(4):
            if k < i:
                d = self.record_face(2, k, record)
                faces.append(self._degen(1, i - 1, d))
            elif k in (i, i + 1):
                faces.append(record)
            else:
                d = self.record_face(2, k - 1, record)
                faces.append(self._degen(1, i, d))
        return tuple(faces)


@lru_cache(maxsize=32)
def nerve_of_groupoid(g: FiniteGroupoid) -> GroupoidNerve:
    return GroupoidNerve(g)


@lru_cache(maxsize=32)
def nerve_of_aut(aut: AutTwoGroupoid) -> AutNerve:
    """Raises:
    BudgetExceeded: The tetrahedra would outgrow the search budget.
    """

    return AutNerve(aut)


def iter_compatible_boundaries(
    s: TruncatedSimplicialSet,
) -> Iterator[Tuple[int, int, int, int]]:
    """Every ``(y0, y1, y2, y3)`` of 2-simplices that could be the faces
    of a 3-simplex."""

    by_d2: Dict[int, List[int]] = {}
    by_d2_d1: Dict[Tuple[int, int], List[int]] = {}
    for y, row in enumerate(s.faces[2]):
        by_d2.setdefault(row[2], []).append(y)
        by_d2_d1.setdefault((row[2], row[1]), []).append(y)
    for y3 in range(s.count(2)):
        for y2 in by_d2.get(s.face(2, 2, y3), []):
            for y1 in by_d2_d1.get(
                (s.face(2, 1, y3), s.face(2, 1, y2)), []
            ):
                key = (s.face(2, 0, y1), s.face(2, 0, y2), s.face(2, 0, y3))
                for y0 in s.fillers(2, key):
                    yield y0, y1, y2, y3


def validate_simplicial_set(s: TruncatedSimplicialSet) -> ValidationReport:
    """Check the simplicial identities, the agreement of the tables with
    the records, and the coskeletal degree."""

    report = ValidationReport()
    for n in range(TOP + 1):
        for x, row in enumerate(s.faces[n]):
            if len(row) != (n + 1 if n else 0) or any(
                not 0 <= y < s.count(n - 1) for y in row
            ):
                report.add("structure", f"bad face row {n}:{x}", n, x)
    for n in range(TOP):
        for x, row in enumerate(s.degeneracies[n]):
            if len(row) != n + 1 or any(
                not 0 <= y < s.count(n + 1) for y in row
            ):
                report.add("structure", f"bad degeneracy row {n}:{x}", n, x)
    if not report.ok:
        return report

    for n in range(1, TOP + 1):
        for x, record in enumerate(s.simplices[n]):
            for i in range(n + 1):
                expected = s.record_face(n, i, record)
                if expected is None:
                    continue
                if s.simplices[n - 1][s.face(n, i, x)] != expected:
                    report.add("record", f"d{i} of {n}:{x} disagrees", n, x)

    for n in range(2, TOP + 1):
        for x in range(s.count(n)):
            for j in range(n + 1):
                for i in range(j):
                    lhs = s.face(n - 1, i, s.face(n, j, x))
                    rhs = s.face(n - 1, j - 1, s.face(n, i, x))
                    if lhs != rhs:
                        report.add(
                            "face", f"d{i}d{j} != d{j - 1}d{i} on {n}:{x}",
                            n, x,
                        )

    for n in range(TOP):
        for x in range(s.count(n)):
            for j in range(n + 1):
                y = s.degeneracy(n, j, x)
                for i in range(n + 2):
                    got = s.face(n + 1, i, y)
                    if i in (j, j + 1):
                        want = x
                    elif i < j:
                        want = s.degeneracy(n - 1, j - 1, s.face(n, i, x))
                    else:
                        want = s.degeneracy(n - 1, j, s.face(n, i - 1, x))
                    if got != want:
                        report.add(
                            "degeneracy", f"d{i}s{j} fails on {n}:{x}", n, x
                        )
                if n + 1 < TOP:
                    for i in range(j + 1):
                        lhs = s.degeneracy(n + 1, i, y)
                        rhs = s.degeneracy(
                            n + 1, j + 1, s.degeneracy(n, i, x)
                        )
                        if lhs != rhs:
                            report.add(
                                "degeneracy",
                                f"s{i}s{j} fails on {n}:{x}",
                                n,
                                x,
                            )

    if s.coskeletal and report.ok:
        for boundary in iter_compatible_boundaries(s):
            found = len(s.fillers(3, boundary))
            if found > 1 or (s.coskeletal == 2 and found != 1):
                report.add(
                    "coskeletal",
                    f"{found} fillers for boundary {boundary}",
                    *boundary,
                )
        for x, row in enumerate(s.faces[3]):
            if len(s.fillers(3, tuple(row))) > 1:
                report.add("coskeletal", f"3-simplex {x} is not unique", x)
    return report


def commutative_tetrahedra(aut: AutTwoGroupoid) -> int:
    """Count the compatible 3-boundaries of the nerve of ``aut`` that
    satisfy ``m(β)·φ = ρ·λ``, by brute force over its 2-simplices."""

    s = nerve_of_aut(aut)
    fam = aut.family
    total = 0
    for y0, y1, y2, y3 in iter_compatible_boundaries(s):
        rho, phi, lam, beta = (
            s.simplices[2][y][3] for y in (y0, y1, y2, y3)
        )
        m_rec = s.simplices[2][y0][0]
        k = fam[m_rec[1]]
        if k.mul(s.one_cell(m_rec)(beta), phi) == k.mul(rho, lam):
            total += 1
    return total


class SimplicialMap:
    """Level maps ``levels[n][x]`` from source to target simplices."""

    __slots__: Iterable[str] = ("source", "target", "levels")

    def __init__(
        self,
        source: TruncatedSimplicialSet,
        target: TruncatedSimplicialSet,
        levels: Sequence[Sequence[int]],
    ) -> None:
        if len(levels) != TOP + 1:
            raise StructuralError("A simplicial map has four levels.")
        self.source = source
        self.target = target
        self.levels: Table = tuple(tuple(level) for level in levels)

    def __call__(self, n: int, x: int) -> int:
        return self.levels[n][x]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return self.levels == other.levels and self.source == other.source

    def __hash__(self) -> int:
        return hash(self.levels)

    def __repr__(self) -> str:
        return f"<SimplicialMap {[list(level) for level in self.levels]}>"


def validate_map(m: SimplicialMap) -> ValidationReport:
    """Check that every level commutes with faces and degeneracies."""

    report = ValidationReport()
    s, t = m.source, m.target
    for n in range(TOP + 1):
        if len(m.levels[n]) != s.count(n) or any(
            not 0 <= y < t.count(n) for y in m.levels[n]
        ):
            report.add("level", f"level {n} is not a total map", n)
    if not report.ok:
        return report
    for n in range(1, TOP + 1):
        for x in range(s.count(n)):
            for i in range(n + 1):
                if m(n - 1, s.face(n, i, x)) != t.face(n, i, m(n, x)):
                    report.add("face", f"d{i} not preserved at {n}:{x}", n, x)
    for n in range(TOP):
        for x in range(s.count(n)):
            for i in range(n + 1):
                if m(n + 1, s.degeneracy(n, i, x)) != t.degeneracy(
                    n, i, m(n, x)
                ):
                    report.add(
                        "degeneracy", f"s{i} not preserved at {n}:{x}", n, x
                    )
    return report


def _lax_record(
    objects: Sequence[int],
    edge: Callable[[int, int], Record],
    cell: Callable[[int, int, int], int],
) -> Record:
    """The simplex of the ``Aut`` nerve on ``objects`` with 1-cells
    ``edge(p, q)`` and 2-cell witnesses ``cell(p, q, r)``."""

    n = len(objects) - 1
    if n == 0:
        return (objects[0],)
    if n == 1:
        return edge(0, 1)

    def triangle(p: int, q: int, r: int) -> Record:
        return (edge(q, r), edge(p, r), edge(p, q), cell(p, q, r))

    if n == 2:
        return triangle(0, 1, 2)
    return (
        triangle(1, 2, 3),
        triangle(0, 2, 3),
        triangle(0, 1, 3),
        triangle(0, 1, 2),
    )


def _action_nerves(w: WeakAction) -> Tuple[GroupoidNerve, AutNerve]:
    return nerve_of_groupoid(w.base), nerve_of_aut(build_aut(w.family))


def cocycle_to_map(w: WeakAction, check: bool = True) -> SimplicialMap:
    """``A ↦ K_A``, ``u ↦ F(u)``, ``(u, v) ↦ (F(v), F(vu), F(u); σ(v, u))``
    and the forced tetrahedra.

    Raises:
        InvalidInput: ``w`` is not a cocycle.
    """

    if check:
        report = validate_cocycle(w)
        if not report.ok:
            raise InvalidInput("weak action", report)
    source, target = _action_nerves(w)
    levels = []
    for n in range(TOP + 1):
        level = []
        for record in source.simplices[n]:
            objs = source.vertices(n, record)

            def arrow(p: int, q: int) -> int:
                return source.arrow_between(n, record, p, q)

            def edge(p: int, q: int) -> Record:
                return (objs[p], objs[q], w.F[arrow(p, q)].images)

            def cell(p: int, q: int, r: int) -> int:
                return w.sigma[(arrow(q, r), arrow(p, q))]

            image = target.find(n, _lax_record(objs, edge, cell))
            if image is None:
                raise TheoremViolation(
                    "A cocycle has no image simplex.",
                    {"dimension": n, "simplex": list(record)},
                )
            level.append(image)
        levels.append(level)
    return SimplicialMap(source, target, levels)


def map_to_cocycle(m: SimplicialMap) -> WeakAction:
    """Read ``(F, σ)`` off levels 1 and 2.

    Raises:
        PreconditionFailed: ``m`` is not a valid map between the nerve of
            a groupoid and the nerve of ``Aut(K)``, or its 0-level does not
            send ``A`` to ``K_A``.
        TheoremViolation: The read-off action is not a cocycle.
    """

    source, target = m.source, m.target
    if not isinstance(source, GroupoidNerve) or not isinstance(
        target, AutNerve
    ):
        raise PreconditionFailed(
            "Expected a map from a groupoid nerve to an Aut nerve."
        )
    report = validate_map(m)
    if not report.ok:
        raise PreconditionFailed(
            f"Not a simplicial map: {report.violations[0].message}"
        )
    base, fam = source.groupoid, target.aut.family
    if fam.base_objects != base.objects:
        raise PreconditionFailed("The family is not indexed by the base.")
    for a in base.objects:
        if target.simplices[0][m(0, a)] != (a,):
            raise PreconditionFailed(
                f"Object {a} is not sent to K_{a}: a lax functor, but not "
                "a weak action."
            )
    F = [
        target.one_cell(target.simplices[1][m(1, a.id)]) for a in base.arrows
    ]
    sigma = {}
    for x, (u, v) in enumerate(source.simplices[2]):
        sigma[(v, u)] = target.simplices[2][m(2, x)][3]
    w = WeakAction(base, fam, F, sigma)
    report = validate_cocycle(w)
    if not report.ok:
        raise TheoremViolation(
            "A simplicial map gave an action that is not a cocycle.",
            {"violations": [v.message for v in report.violations]},
        )
    return w


class SimplicialHomotopy:
    """Components ``components[n][j][x] = h_j(x)`` for ``x`` in dimension
    ``n ≤ 2`` and ``0 ≤ j ≤ n``, from ``source_map`` (time 0) to
    ``target_map`` (time 1)."""

    __slots__: Iterable[str] = ("source_map", "target_map", "components")

    def __init__(
        self,
        source_map: SimplicialMap,
        target_map: SimplicialMap,
        components: Sequence[Sequence[Sequence[int]]],
    ) -> None:
        if len(components) != TOP or any(
            len(components[n]) != n + 1 for n in range(TOP)
        ):
            raise StructuralError("Homotopy components have the wrong shape.")
        self.source_map = source_map
        self.target_map = target_map
        self.components: Tuple[Table, ...] = tuple(
            tuple(tuple(h) for h in level) for level in components
        )

    def __call__(self, n: int, j: int, x: int) -> int:
        return self.components[n][j][x]

    def is_degenerate(self) -> bool:
        """Whether every component is a degenerate simplex."""

        t = self.source_map.target
        return all(
            t.is_degenerate(n + 1, y)
            for n, level in enumerate(self.components)
            for h in level
            for y in h
        )

    def __repr__(self) -> str:
        return "<SimplicialHomotopy>"


def validate_homotopy(h: SimplicialHomotopy) -> ValidationReport:
    """Check ends, face and degeneracy identities in dimensions ``≤ 2``
    and normalization on objects."""

    report = ValidationReport()
    m1, m2 = h.source_map, h.target_map
    s, t = m1.source, m1.target
    if m2.source != s or m2.target != t:
        report.add("structure", "the two maps have different ends")
        return report
    for n in range(TOP):
        for j in range(n + 1):
            if len(h.components[n][j]) != s.count(n) or any(
                not 0 <= y < t.count(n + 1) for y in h.components[n][j]
            ):
                report.add("structure", f"component h{j} at {n} is bad", n)
    if not report.ok:
        return report

    for n in range(TOP):
        for x in range(s.count(n)):
            if t.face(n + 1, n + 1, h(n, n, x)) != m1(n, x):
                report.add("ends", f"d{n + 1}h{n} != source at {n}:{x}", n, x)
            if t.face(n + 1, 0, h(n, 0, x)) != m2(n, x):
                report.add("ends", f"d0h0 != target at {n}:{x}", n, x)
            for j in range(n + 1):
                y = h(n, j, x)
                for i in range(n + 2):
                    got = t.face(n + 1, i, y)
                    if i < j:
                        want = h(n - 1, j - 1, s.face(n, i, x))
                    elif i == j and j > 0:
                        want = t.face(n + 1, j, h(n, j - 1, x))
                    elif i > j + 1:
                        want = h(n - 1, j, s.face(n, i - 1, x))
                    else:
                        continue
                    if got != want:
                        report.add(
                            "face", f"d{i}h{j} fails at {n}:{x}", n, x
                        )
            if n + 1 < TOP:
                for j in range(n + 1):
                    for i in range(n + 2):
                        got = t.degeneracy(n + 1, i, h(n, j, x))
                        if i <= j:
                            want = h(n + 1, j + 1, s.degeneracy(n, i, x))
                        else:
                            want = h(n + 1, j, s.degeneracy(n, i - 1, x))
                        if got != want:
                            report.add(
                                "degeneracy",
                                f"s{i}h{j} fails at {n}:{x}",
                                n,
                                x,
                            )

    for a in range(s.count(0)):
        if h(0, 0, a) != t.degeneracy(0, 0, m1(0, a)):
            report.add("normalized", f"h0 on object {a} is not degenerate", a)
    return report


def homotopy_from_morphism(
    m: ActionMorphism, check: bool = True
) -> SimplicialHomotopy:
    """The prism homotopy of ``m``.

    ``h_j(x)`` is the simplex on the prism vertices
    ``(0,0)..(j,0),(j,1)..(n,1)``. An edge whose ends both lie at time 1
    carries ``F2``, every other edge ``F1``. The witness of a triangle with
    times ``(0,·,·)`` below ``(0,1,1)`` is ``σ1``, with times ``(0,1,1)``
    it is ``τ(u_qr)·σ1`` and with times ``(1,1,1)`` it is ``σ2``.

    Raises:
        InvalidInput: ``m`` is not a morphism of weak actions.
    """

    if check:
        report = validate_morphism(m)
        if not report.ok:
            raise InvalidInput("action morphism", report)
    w1, w2, tau = m.source, m.target, m.tau
    m1 = cocycle_to_map(w1, check)
    m2 = cocycle_to_map(w2, check)
    source, target = _action_nerves(w1)
    fam = w1.family

    components = []
    for n in range(TOP):
        level = []
        for j in range(n + 1):
            row = []
            for record in source.simplices[n]:
                objs = source.vertices(n, record)
                prism = [(i, 0) for i in range(j + 1)] + [
                    (i, 1) for i in range(j, n + 1)
                ]

                def arrow(p: int, q: int) -> int:
                    i, k = prism[p][0], prism[q][0]
                    return source.arrow_between(n, record, i, k)

                def edge(p: int, q: int) -> Record:
                    w = w2 if prism[p][1] == prism[q][1] == 1 else w1
                    return (
                        objs[prism[p][0]],
                        objs[prism[q][0]],
                        w.F[arrow(p, q)].images,
                    )

                def cell(p: int, q: int, r: int) -> int:
                    v, u = arrow(q, r), arrow(p, q)
                    times = (prism[p][1], prism[q][1], prism[r][1])
                    if times == (1, 1, 1):
                        return w2.sigma[(v, u)]
                    if times == (0, 1, 1):
                        k = fam[objs[prism[r][0]]]
                        return k.mul(tau(v), w1.sigma[(v, u)])
                    return w1.sigma[(v, u)]

                objects = [objs[i] for i, _ in prism]
                y = target.find(n + 1, _lax_record(objects, edge, cell))
                if y is None:
                    raise TheoremViolation(
                        "A prism simplex is missing from the Aut nerve.",
                        {"dimension": n, "j": j, "simplex": list(record)},
                    )
                row.append(y)
            level.append(row)
        components.append(level)
    return SimplicialHomotopy(m1, m2, components)


def _same_nerves(m1: SimplicialMap, m2: SimplicialMap) -> None:
    if m1.source != m2.source or m1.target != m2.target:
        raise PreconditionFailed("The maps join different nerves.")


class _HomotopySearch:
    """Backtracking over the level-1 components of a normalized homotopy;
    the level-2 components are filled in as soon as their faces are
    fixed."""

    __slots__: Iterable[str] = (
        "m1",
        "m2",
        "budget",
        "h0",
        "arrows",
        "candidates",
        "triggers",
        "level1",
        "level2",
    )

    def __init__(
        self, m1: SimplicialMap, m2: SimplicialMap, budget: Budget
    ) -> None:
        s, t = m1.source, m1.target
        self.m1, self.m2, self.budget = m1, m2, budget
        self.h0 = [t.degeneracy(0, 0, y) for y in m1.levels[0]]
        self.arrows = [
            x for x in range(s.count(1)) if not s.is_degenerate(1, x)
        ]
        pos = {x: i for i, x in enumerate(self.arrows)}
        self.candidates = [self._level1_candidates(x) for x in self.arrows]
        self.triggers: Dict[int, List[int]] = {}
        for x in range(s.count(2)):
            if s.is_degenerate(2, x):
                continue
            last = max(pos.get(s.face(2, i, x), -1) for i in range(3))
            self.triggers.setdefault(last, []).append(x)
        self.level1: Dict[int, Tuple[int, int]] = {}
        self.level2: Dict[int, Tuple[int, int, int]] = {}

    def _level1_candidates(self, x: int) -> List[Tuple[int, int]]:
        s, t = self.m1.source, self.m1.target
        src, tgt = s.face(1, 1, x), s.face(1, 0, x)
        found = []
        for diag in range(t.count(1)):
            for y1 in t.fillers(2, (self.h0[tgt], diag, self.m1(1, x))):
                for y0 in t.fillers(2, (self.m2(1, x), diag, self.h0[src])):
                    found.append((y0, y1))
        return found

    def h1(self, x: int) -> Tuple[int, int]:
        """``(h0 x, h1 x)`` for a 1-simplex, degenerate ones included."""

        s, t = self.m1.source, self.m1.target
        origin = s.degenerate_origin(1, x)
        if origin is None:
            return self.level1[x]
        a = origin[1]
        return t.degeneracy(1, 1, self.h0[a]), t.degeneracy(1, 0, self.h0[a])

    def h2(self, x: int) -> Tuple[int, int, int]:
        s, t = self.m1.source, self.m1.target
        origin = s.degenerate_origin(2, x)
        if origin is None:
            return self.level2[x]
        i, u = origin
        h0u, h1u = self.h1(u)
        if i == 0:
            return (
                t.degeneracy(2, 1, h0u),
                t.degeneracy(2, 0, h0u),
                t.degeneracy(2, 0, h1u),
            )
        return (
            t.degeneracy(2, 2, h0u),
            t.degeneracy(2, 2, h1u),
            t.degeneracy(2, 1, h1u),
        )

    def fill(self, x: int) -> Optional[Tuple[int, int, int]]:
        """Level-2 components of a non-degenerate 2-simplex, or None."""

        s, t = self.m1.source, self.m1.target
        d0, d1, d2 = (s.face(2, i, x) for i in range(3))
        y0, y2, y3 = self.m2(2, x), self.h1(d1)[0], self.h1(d2)[0]
        z0, z1, z3 = self.h1(d0)[1], self.h1(d1)[1], self.m1(2, x)
        h0_d0, h1_d2 = self.h1(d0)[0], self.h1(d2)[1]
        a_bnd = (t.face(2, 0, y0), t.face(2, 1, y2), t.face(2, 1, y3))
        b_bnd = (t.face(2, 1, z0), t.face(2, 1, z1), t.face(2, 2, z3))
        for a in t.fillers(2, a_bnd):
            first = t.fillers(3, (y0, a, y2, y3))
            if not first:
                continue
            for b in t.fillers(2, b_bnd):
                self.budget.spend()
                second = t.fillers(3, (h0_d0, a, b, h1_d2))
                third = t.fillers(3, (z0, z1, b, z3))
                if second and third:
                    return first[0], second[0], third[0]
        return None

    def _check(self, i: int) -> bool:
        for x in self.triggers.get(i, []):
            found = self.fill(x)
            if found is None:
                return False
            self.level2[x] = found
        return True

    def build(self) -> SimplicialHomotopy:
        s = self.m1.source
        level1 = [self.h1(x) for x in range(s.count(1))]
        level2 = [self.h2(x) for x in range(s.count(2))]
        return SimplicialHomotopy(
            self.m1,
            self.m2,
            [
                [self.h0],
                [[h[0] for h in level1], [h[1] for h in level1]],
                [[h[j] for h in level2] for j in range(3)],
            ],
        )

    def run(self) -> Optional[SimplicialHomotopy]:
        if not self._check(-1):
            return None
        return self._descend(0)

    def _descend(self, i: int) -> Optional[SimplicialHomotopy]:
        if i == len(self.arrows):
            h = self.build()
            if validate_homotopy(h).ok:
                return h
            logger.debug("rejected a homotopy candidate at a leaf")
            return None
        x = self.arrows[i]
        for pair in self.candidates[i]:
            self.budget.spend()
            self.level1[x] = pair
            if self._check(i):
                found = self._descend(i + 1)
                if found is not None:
                    return found
        self.level1.pop(x, None)
        return None


def normalized_homotopic(
    m1: SimplicialMap,
    m2: SimplicialMap,
    *,
    budget: Union[int, Budget, None] = None,
) -> Optional[SimplicialHomotopy]:
    """Search for a normalized homotopy from ``m1`` to ``m2``.

    Components up to dimension 2 are searched; the target's unique
    fillers decide the rest.

    Raises:
        PreconditionFailed: The maps join different nerves.
        BudgetExceeded: The search outgrew its budget.
    """

    _same_nerves(m1, m2)
    if m1.levels[0] != m2.levels[0]:
        return None
    budget = Budget.resolve(budget, "homotopy search")
    return _HomotopySearch(m1, m2, budget).run()


def _indexing_level(source: GroupoidNerve, target: AutNerve) -> List[int]:
    fam = target.aut.family
    if fam.base_objects != source.groupoid.objects:
        raise PreconditionFailed("The family is not indexed by the base.")
    return [target.index(0, (a,)) for a in source.groupoid.objects]


def enumerate_simplicial_maps(
    source: GroupoidNerve,
    target: AutNerve,
    *,
    budget: Union[int, Budget, None] = None,
) -> List[SimplicialMap]:
    """Every simplicial map sending ``A`` to ``K_A``, found by searching
    the simplices level by level without going through cocycles."""

    budget = Budget.resolve(budget, "simplicial map enumeration")
    s, t = source, target
    level0 = _indexing_level(s, t)
    arrows = [x for x in range(s.count(1)) if not s.is_degenerate(1, x)]
    tri = [x for x in range(s.count(2)) if not s.is_degenerate(2, x)]
    tri_pos = {x: i for i, x in enumerate(tri)}
    checks: Dict[int, List[int]] = {}
    for x in range(s.count(3)):
        if not s.is_degenerate(3, x):
            last = max(tri_pos.get(s.face(3, i, x), -1) for i in range(4))
            checks.setdefault(last, []).append(x)

    one: Dict[int, int] = {}
    two: Dict[int, int] = {}
    found: List[SimplicialMap] = []

    def image(n: int, x: int, level: Dict[int, int]) -> int:
        origin = s.degenerate_origin(n, x)
        if origin is None:
            return level[x]
        i, y = origin
        return t.degeneracy(n - 1, i, lower(n - 1, y))

    def lower(n: int, x: int) -> int:
        if n == 0:
            return level0[x]
        if n == 1:
            return image(1, x, one)
        return image(2, x, two)

    def faces_of(n: int, x: int) -> Tuple[int, ...]:
        return tuple(lower(n - 1, s.face(n, i, x)) for i in range(n + 1))

    def tetra_ok(i: int) -> bool:
        return all(t.fillers(3, faces_of(3, x)) for x in checks.get(i, []))

    def descend2(i: int) -> None:
        if i == len(tri):
            level1 = [lower(1, x) for x in range(s.count(1))]
            level2 = [lower(2, x) for x in range(s.count(2))]
            level3 = []
            for x in range(s.count(3)):
                origin = s.degenerate_origin(3, x)
                if origin is None:
                    level3.append(t.fillers(3, faces_of(3, x))[0])
                else:
                    level3.append(
                        t.degeneracy(2, origin[0], lower(2, origin[1]))
                    )
            m = SimplicialMap(s, t, [level0, level1, level2, level3])
            if validate_map(m).ok:
                found.append(m)
            return
        x = tri[i]
        for y in t.fillers(2, faces_of(2, x)):
            budget.spend()
            two[x] = y
            if tetra_ok(i):
                descend2(i + 1)
        two.pop(x, None)

    def descend1(i: int) -> None:
        if i == len(arrows):
            if tetra_ok(-1):
                descend2(0)
            return
        x = arrows[i]
        for y in t.fillers(1, faces_of(1, x)):
            budget.spend()
            one[x] = y
            descend1(i + 1)
        one.pop(x, None)

    descend1(0)
    found.sort(key=lambda m: m.levels)
    logger.debug("enumerated %d simplicial maps", len(found))
    return found


def homotopy_classes(
    maps: Sequence[SimplicialMap],
    *,
    budget: Union[int, Budget, None] = None,
    workers: Optional[int] = None,
) -> List[List[int]]:
    """Partition ``maps`` by :func:`normalized_homotopic`, comparing each
    map with one representative per block."""

    budget = Budget.resolve(budget, "homotopy classes")
    ds = DisjointSet(len(maps))
    reps: List[int] = []
    for j, m in enumerate(maps):
        found = ordered_map(
            lambda i: normalized_homotopic(maps[i], m, budget=budget),
            reps,
            workers,
        )
        hit = next((i for i, h in zip(reps, found) if h is not None), None)
        if hit is None:
            reps.append(j)
        else:
            ds.union(hit, j)
    return ds.blocks()


def representation_check(
    base: FiniteGroupoid,
    family: GroupFamily,
    *,
    raw: bool = True,
    budget: Union[int, Budget, None] = None,
    workers: Optional[int] = None,
    instance: str = "",
) -> TheoremReport:
    """Compare ``H²`` with homotopy classes of simplicial maps between the
    nerve of ``base`` and the nerve of ``Aut(K)``.

    Every cocycle is sent to a map and read back; with ``raw`` the maps are
    also enumerated directly and must be exactly the images of the
    cocycles. The homotopy classes must then match the cohomology classes
    one to one.
    """

    budget = Budget.resolve(budget, "representation check")
    cocycles = enumerate_cocycles(
        base, family, budget=budget, workers=workers
    )
    maps = ordered_map(cocycle_to_map, cocycles, workers)
    counterexample: Optional[Dict[str, object]] = None
    for w, m in zip(cocycles, maps):
        if map_to_cocycle(m) != w:
            counterexample = {"failure": "round trip", "cocycle": repr(w)}
            break

    if raw and counterexample is None:
        source = nerve_of_groupoid(base)
        target = nerve_of_aut(build_aut(family))
        direct = enumerate_simplicial_maps(source, target, budget=budget)
        if {m.levels for m in direct} != {m.levels for m in maps}:
            counterexample = {
                "failure": "raw enumeration",
                "raw": len(direct),
                "from_cocycles": len(maps),
            }

    classes = h2(base, family, budget=budget, workers=workers)
    blocks = homotopy_classes(maps, budget=budget, workers=workers)
    block_of = {x: b for b, members in enumerate(blocks) for x in members}
    index = {w.key(): i for i, w in enumerate(cocycles)}
    rows = []
    for c, cls in enumerate(classes):
        hit = {block_of[index[w.key()]] for w in cls.members}
        rows.append({"class": c, "size": cls.size, "blocks": sorted(hit)})
        if len(hit) != 1 and counterexample is None:
            counterexample = {"failure": "class split", "class": c}
    if len(blocks) != len(classes) and counterexample is None:
        counterexample = {
            "failure": "count",
            "classes": len(classes),
            "blocks": len(blocks),
        }
    ok = counterexample is None
    logger.info(
        "representation on %s: %d classes, %d homotopy classes, ok=%s",
        instance or "instance",
        len(classes),
        len(blocks),
        ok,
    )
    return TheoremReport(
        theorem="representation",
        instance=instance,
        ok=ok,
        left_count=len(classes),
        right_count=len(blocks),
        rows=rows,
        counterexample=counterexample,
    )
