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

from typing import List, Tuple

import pytest

from nacohom.algebra import (
    FiniteGroup,
    FiniteGroupoid,
    GroupFamily,
    GroupIso,
    GroupoidFunctor,
    identify_group,
    validate_functor,
    validate_groupoid,
    vertex_group,
)
from nacohom.cocycle import (
    ActionMorphism,
    WeakAction,
    cohomologous,
    compose_morphisms,
    enumerate_cocycles,
    h2,
    iter_cochains,
    nabla,
    validate_cocycle,
)
from nacohom.exceptions import (
    InvalidInput,
    NotAFibration,
    PreconditionFailed,
    StructuralError,
)
from nacohom.extensions import Extension, generate_pool
from nacohom.grothendieck import (
    Cleavage,
    canonical_cleavage,
    check_equivalence,
    enumerate_cleavages,
    fiber_action,
    fiber_subgroupoid,
    gamma,
    is_bijective_on_objects,
    is_opfibration,
    kernel_identification,
    twist,
    twist_morphism,
    validate_cleavage,
)

Coefficients = Tuple[FiniteGroupoid, GroupFamily]


@pytest.fixture()
def z4_over_z2(z4: FiniteGroup, z2: FiniteGroup) -> Extension:
    return Extension.from_group_surjection(z4, z2, [0, 1, 0, 1])


@pytest.fixture()
def surjections(
    z2: FiniteGroup, z4: FiniteGroup, v4: FiniteGroup, s3: FiniteGroup
) -> List[Extension]:
    return [
        Extension.from_group_surjection(z4, z2, [0, 1, 0, 1]),
        Extension.from_group_surjection(v4, z2, [0, 0, 1, 1]),
        Extension.from_group_surjection(s3, z2, [0, 1, 1, 0, 0, 1]),
    ]


def test_twist_of_z4_action(z4_action: WeakAction):
    t = twist(z4_action)
    assert validate_groupoid(t.groupoid).ok
    assert identify_group(vertex_group(t.groupoid, 0).group) == "Z/4"
    assert t.groupoid.label == "Z/2~"
    assert t.pair(t.arrow_id(1, 1)) == (1, 1)
    assert t.projection(t.arrow_id(1, 1)) == 1


def test_twist_of_trivial_action(z2_z2: Coefficients):
    t = twist(WeakAction.trivial(*z2_z2))
    assert identify_group(vertex_group(t.groupoid, 0).group) == "Z/2xZ/2"


@pytest.mark.parametrize(
    "coefficients", ["z2_z2", "z2_z3", "interval_z2", "disjoint_mixed"]
)
def test_canonical_cleavage_round_trip(coefficients: str, request):
    base, family = request.getfixturevalue(coefficients)
    for w in enumerate_cocycles(base, family):
        t = twist(w)
        assert validate_groupoid(t.groupoid).ok
        assert validate_functor(t.projection).ok
        assert t.canonical_cleavage() == canonical_cleavage(t.projection)
        kernel = t.kernel_identification()
        assert fiber_action(t.projection, t.canonical_cleavage(), kernel) == w


def test_twist_rejects_invalid(z3_z3: Coefficients):
    base, fam = z3_z3
    F = [GroupIso.identity(fam[0])] * 3
    w = WeakAction.normalized(base, fam, F, {(1, 1): 1})
    with pytest.raises(InvalidInput):
        twist(w)


def test_twist_morphism_commutes_with_projections(z2_z3: Coefficients):
    base, family = z2_z3
    for c in h2(base, family):
        for member, tau in zip(c.members, c.witnesses):
            m = ActionMorphism(c.representative, member, tau)
            functor = twist_morphism(m)
            assert validate_functor(functor).ok
            assert functor.is_isomorphism()
            source, target = twist(m.source), twist(m.target)
            assert target.projection.compose(functor) == source.projection


@pytest.mark.parametrize("name", ["z2_z3", "z2_s3"])
def test_twist_morphism_is_functorial(
    name: str, request: pytest.FixtureRequest
):
    base, family = request.getfixturevalue(name)
    cochains = list(iter_cochains(base, family))
    for w in enumerate_cocycles(base, family):
        for t1 in cochains:
            m1 = ActionMorphism(w, nabla(t1, w), t1)
            first = twist_morphism(m1)
            for t2 in cochains:
                m2 = ActionMorphism(m1.target, nabla(t2, m1.target), t2)
                both = twist_morphism(compose_morphisms(m2, m1))
                assert both == twist_morphism(m2).compose(first)


def test_bijective_on_objects(z4_over_z2: Extension):
    assert is_bijective_on_objects(z4_over_z2.projection)
    discrete = FiniteGroupoid.discrete(2)
    point = FiniteGroupoid.discrete(1)
    collapse = GroupoidFunctor(discrete, point, [0, 0], [0, 0])
    assert not is_bijective_on_objects(collapse)
    with pytest.raises(NotAFibration):
        canonical_cleavage(collapse)


def test_missing_lift(z2: FiniteGroup):
    g = FiniteGroupoid.from_group(z2)
    trivial_map = GroupoidFunctor.from_homomorphism(g, g, [0, 0])
    assert is_opfibration(trivial_map) == (False, (0, 1))
    with pytest.raises(NotAFibration) as exc:
        canonical_cleavage(trivial_map)
    assert exc.value.witness == (0, 1)


def test_fiber_subgroupoid(z4_over_z2: Extension):
    fiber = fiber_subgroupoid(z4_over_z2.projection, 0)
    assert validate_groupoid(fiber).ok
    assert len(fiber.arrows) == 2


def test_kernel_identification(z4_over_z2: Extension, z2: FiniteGroup):
    kernel = kernel_identification(z4_over_z2.projection)
    assert kernel.arrows == {0: (0, 2)}
    assert kernel.family[0] == z2
    assert kernel.element_of(2) == 1
    with pytest.raises(StructuralError):
        kernel.element_of(1)


def test_kernel_identification_mismatch(
    z4_over_z2: Extension, z3: FiniteGroup
):
    with pytest.raises(StructuralError):
        kernel_identification(z4_over_z2.projection, GroupFamily({0: z3}))


def test_validate_cleavage(z4_over_z2: Extension):
    p = z4_over_z2.projection
    assert validate_cleavage(Cleavage(p, [0, 3])).ok
    report = validate_cleavage(Cleavage(p, [2, 0]))
    codes = sorted(v.code for v in report.violations)
    assert codes == ["over", "unit"]
    report = validate_cleavage(Cleavage(p, [0, 9]))
    assert [v.code for v in report.violations] == ["structure"]


def test_cleavage_length(z4_over_z2: Extension):
    with pytest.raises(StructuralError):
        Cleavage(z4_over_z2.projection, [0])


def test_enumerate_cleavages(z4_over_z2: Extension):
    p = z4_over_z2.projection
    cleavages = list(enumerate_cleavages(p))
    assert [list(c.lift) for c in cleavages] == [[0, 1], [0, 3]]
    assert cleavages[0] == canonical_cleavage(p)


def test_fiber_action_of_z4(z4_over_z2: Extension):
    for c in enumerate_cleavages(z4_over_z2.projection):
        w = z4_over_z2.fiber_action(c)
        assert validate_cocycle(w).ok
        assert w.s(1, 1) == 1


def test_fiber_action_preconditions(
    z4_over_z2: Extension, z2: FiniteGroup, v4: FiniteGroup
):
    p = z4_over_z2.projection
    with pytest.raises(PreconditionFailed):
        fiber_action(p, Cleavage(p, [2, 1]))
    other = Extension.from_group_surjection(v4, z2, [0, 0, 1, 1])
    with pytest.raises(PreconditionFailed):
        fiber_action(p, other.canonical_cleavage())


def test_cleavages_give_cohomologous_actions(surjections: List[Extension]):
    for e in surjections:
        first = e.fiber_action()
        for c in enumerate_cleavages(e.projection):
            w = e.fiber_action(c)
            assert validate_cocycle(w).ok
            assert cohomologous(first, w) is not None


def test_gamma_is_an_isomorphism(surjections: List[Extension]):
    for e in surjections:
        for c in enumerate_cleavages(e.projection):
            functor = gamma(e.projection, c, e.kernel)
            assert functor.is_isomorphism()
            assert validate_functor(functor).ok
            t = twist(e.fiber_action(c))
            assert functor.codomain == t.groupoid


def test_gamma_of_sign_map(surjections: List[Extension]):
    sign = surjections[2]
    t = twist(sign.fiber_action())
    assert identify_group(vertex_group(t.groupoid, 0).group) == "S3"
    assert identify_group(sign.family[0]) == "Z/3"


@pytest.mark.parametrize(
    "coefficients", ["z2_z2", "z2_z3", "interval_z2", "disjoint_mixed"]
)
def test_check_equivalence(coefficients: str, request):
    base, family = request.getfixturevalue(coefficients)
    report = check_equivalence(base, family, instance=coefficients)
    assert report.ok
    assert report.theorem == "equivalence"
    assert report.left_count == report.right_count
    assert report.counterexample is None
    assert all(len(row["blocks"]) == 1 for row in report.rows)
    pool = generate_pool(base, family)
    cocycles = enumerate_cocycles(base, family)
    assert len(report.rows) == len(cocycles) + len(pool)


def test_check_equivalence_samples_pool(
    z2_z2: Coefficients, surjections: List[Extension]
):
    base, family = z2_z2
    report = check_equivalence(base, family, pool=surjections[:2])
    assert report.ok, report.counterexample
    assert report.left_count == report.right_count == 2
    assert len(report.rows) == 4
    for row in report.rows[2:]:
        assert row["cleavages"] == 2
        assert row["blocks"] == [[0, 1]]


def test_check_equivalence_sign_map(
    z2_z3: Coefficients, surjections: List[Extension]
):
    base, family = z2_z3
    report = check_equivalence(base, family, pool=[surjections[2]])
    assert report.ok, report.counterexample
    assert report.rows[-1]["blocks"] == [[0, 1, 2]]
