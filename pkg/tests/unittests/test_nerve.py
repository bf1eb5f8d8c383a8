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

from __future__ import annotations

import itertools
from typing import Tuple

import pytest

from nacohom.algebra import (
    FiniteGroup,
    FiniteGroupoid,
    GroupFamily,
    GroupIso,
)
from nacohom.cocycle import (
    ActionMorphism,
    WeakAction,
    cohomologous,
    enumerate_cocycles,
    h2,
)
from nacohom.exceptions import (
    InvalidInput,
    PreconditionFailed,
    StructuralError,
)
from nacohom.nerve import (
    SimplicialHomotopy,
    SimplicialMap,
    TruncatedSimplicialSet,
    cocycle_to_map,
    commutative_tetrahedra,
    enumerate_simplicial_maps,
    homotopy_classes,
    homotopy_from_morphism,
    map_to_cocycle,
    nerve_of_aut,
    nerve_of_groupoid,
    normalized_homotopic,
    representation_check,
    validate_homotopy,
    validate_map,
    validate_simplicial_set,
)
from nacohom.two_groupoid import build_aut

Coefficients = Tuple[FiniteGroupoid, GroupFamily]


def _aut_nerve(family: GroupFamily):
    return nerve_of_aut(build_aut(family))


def test_nerve_of_z2(z2: FiniteGroup):
    s = nerve_of_groupoid(FiniteGroupoid.from_group(z2))
    assert s.counts() == (1, 2, 4, 8)
    assert validate_simplicial_set(s).ok
    assert s.is_degenerate(1, s.index(1, (0,)))
    assert not s.is_degenerate(1, s.index(1, (1,)))
    assert s.degenerate_origin(0, 0) is None


def test_nerve_of_interval():
    s = nerve_of_groupoid(FiniteGroupoid.interval())
    assert s.counts() == (2, 4, 8, 16)
    assert validate_simplicial_set(s).ok


def test_groupoid_nerve_faces(z3: FiniteGroup):
    s = nerve_of_groupoid(FiniteGroupoid.from_group(z3))
    x = s.index(2, (1, 1))
    assert s.simplices[1][s.face(2, 0, x)] == (1,)
    assert s.simplices[1][s.face(2, 1, x)] == (2,)
    assert s.simplices[1][s.face(2, 2, x)] == (1,)
    with pytest.raises(StructuralError):
        s.index(2, (7, 7))


def test_aut_nerve_of_z3(z3: FiniteGroup):
    aut = build_aut(GroupFamily({0: z3}))
    s = nerve_of_aut(aut)
    assert s.counts() == (1, 2, 12, 216)
    assert validate_simplicial_set(s).ok
    assert commutative_tetrahedra(aut) == 216


def test_mutated_face_is_reported(z2: FiniteGroup):
    s = nerve_of_groupoid(FiniteGroupoid.from_group(z2))
    x = s.index(2, (1, 1))
    mutated = s.with_face(2, x, 1, s.index(1, (1,)))
    assert not validate_simplicial_set(mutated).ok
    assert validate_simplicial_set(s).ok


def test_plain_simplicial_set(z2: FiniteGroup):
    s = nerve_of_groupoid(FiniteGroupoid.from_group(z2))
    plain = TruncatedSimplicialSet(s.simplices, s.faces, s.degeneracies)
    assert plain == s
    assert plain.record_face(1, 0, (1,)) is None
    assert validate_simplicial_set(plain).ok


def test_simplicial_set_shape():
    with pytest.raises(StructuralError):
        TruncatedSimplicialSet([[]], [()], [])


def test_cocycle_to_map_round_trip(z4_action: WeakAction):
    m = cocycle_to_map(z4_action)
    assert validate_map(m).ok
    assert map_to_cocycle(m) == z4_action


@pytest.mark.parametrize(
    "coefficients", ["z2_z2", "z2_z3", "interval_z2", "disjoint_mixed"]
)
def test_every_cocycle_round_trips(coefficients: str, request):
    base, family = request.getfixturevalue(coefficients)
    for w in enumerate_cocycles(base, family):
        assert map_to_cocycle(cocycle_to_map(w)) == w


def test_cocycle_to_map_rejects_invalid(z3_z3: Coefficients):
    base, fam = z3_z3
    F = [GroupIso.identity(fam[0])] * 3
    w = WeakAction.normalized(base, fam, F, {(1, 1): 1})
    with pytest.raises(InvalidInput):
        cocycle_to_map(w)


def test_map_to_cocycle_preconditions(z4_action: WeakAction):
    s = nerve_of_groupoid(z4_action.base)
    identity = SimplicialMap(
        s, s, [list(range(s.count(n))) for n in range(4)]
    )
    assert validate_map(identity).ok
    with pytest.raises(PreconditionFailed):
        map_to_cocycle(identity)

    m = cocycle_to_map(z4_action)
    broken = SimplicialMap(
        m.source, m.target, [m.levels[0], m.levels[1], m.levels[2], []]
    )
    assert [v.code for v in validate_map(broken).violations] == ["level"]
    with pytest.raises(PreconditionFailed):
        map_to_cocycle(broken)


def test_simplicial_map_shape(z2: FiniteGroup):
    s = nerve_of_groupoid(FiniteGroupoid.from_group(z2))
    with pytest.raises(StructuralError):
        SimplicialMap(s, s, [[0]])


@pytest.mark.parametrize(
    "coefficients, count",
    [("z2_z2", 2), ("z2_z3", 4), ("z3_z3", 9), ("interval_mixed", 0)],
)
def test_enumerate_simplicial_maps(coefficients: str, count: int, request):
    base, family = request.getfixturevalue(coefficients)
    maps = enumerate_simplicial_maps(
        nerve_of_groupoid(base), _aut_nerve(family)
    )
    assert len(maps) == count
    cocycles = enumerate_cocycles(base, family)
    expected = {cocycle_to_map(w).levels for w in cocycles}
    assert {m.levels for m in maps} == expected


def test_enumerate_simplicial_maps_needs_indexed_family(
    z2_z2: Coefficients, interval_z2: Coefficients
):
    with pytest.raises(PreconditionFailed):
        enumerate_simplicial_maps(
            nerve_of_groupoid(interval_z2[0]), _aut_nerve(z2_z2[1])
        )


def test_homotopy_from_morphism(z2_z3: Coefficients):
    for c in h2(*z2_z3):
        for member, tau in zip(c.members, c.witnesses):
            m = ActionMorphism(c.representative, member, tau)
            h = homotopy_from_morphism(m)
            assert validate_homotopy(h).ok
            assert h.source_map == cocycle_to_map(c.representative)
            assert h.target_map == cocycle_to_map(member)


def test_homotopy_shape(z4_action: WeakAction):
    m = cocycle_to_map(z4_action)
    with pytest.raises(StructuralError):
        SimplicialHomotopy(m, m, [[[0]]])


def test_normalized_homotopic(z2_z3: Coefficients):
    first, second = h2(*z2_z3)
    rep = cocycle_to_map(first.representative)
    for member in first.members:
        h = normalized_homotopic(rep, cocycle_to_map(member))
        assert h is not None
        assert validate_homotopy(h).ok
    other = cocycle_to_map(second.representative)
    assert normalized_homotopic(rep, other) is None


@pytest.mark.parametrize("coefficients", ["z2_z2", "z2_z3"])
def test_homotopy_is_an_equivalence(coefficients: str, request):
    base, family = request.getfixturevalue(coefficients)
    cocycles = enumerate_cocycles(base, family)
    maps = [cocycle_to_map(w) for w in cocycles]
    n = len(maps)
    related = [[False] * n for _ in range(n)]
    for i, j in itertools.product(range(n), repeat=2):
        h = normalized_homotopic(maps[i], maps[j])
        if h is not None:
            assert validate_homotopy(h).ok
            assert h.source_map == maps[i] and h.target_map == maps[j]
        related[i][j] = h is not None
        found = cohomologous(cocycles[i], cocycles[j])
        assert related[i][j] == (found is not None)
    for i in range(n):
        assert related[i][i]
    for i, j in itertools.product(range(n), repeat=2):
        assert related[i][j] == related[j][i]
    for i, j, k in itertools.product(range(n), repeat=3):
        if related[i][j] and related[j][k]:
            assert related[i][k]


def test_normalized_homotopic_needs_shared_nerves(
    z4_action: WeakAction, z2_z3: Coefficients
):
    m1 = cocycle_to_map(z4_action)
    m2 = cocycle_to_map(WeakAction.trivial(*z2_z3))
    with pytest.raises(PreconditionFailed):
        normalized_homotopic(m1, m2)


def test_homotopy_classes(z2_z3: Coefficients):
    maps = [cocycle_to_map(w) for w in enumerate_cocycles(*z2_z3)]
    blocks = homotopy_classes(maps)
    assert sorted(len(b) for b in blocks) == [1, 3]


@pytest.mark.parametrize("raw", [True, False])
@pytest.mark.parametrize(
    "coefficients, count",
    [("z2_z2", 2), ("z2_z3", 2), ("interval_z2", 1), ("interval_mixed", 0)],
)
def test_representation_check(
    coefficients: str, count: int, raw: bool, request
):
    base, family = request.getfixturevalue(coefficients)
    report = representation_check(base, family, raw=raw)
    assert report.ok
    assert report.theorem == "representation"
    assert report.left_count == report.right_count == count
