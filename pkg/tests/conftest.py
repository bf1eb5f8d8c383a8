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

from typing import Tuple

import pytest

from nacohom import GroupFamily, WeakAction
from nacohom.algebra import (
    FiniteGroup,
    FiniteGroupoid,
    GroupIso,
    cyclic,
    direct_product,
    disjoint_union,
    symmetric,
)

Coefficients = Tuple[FiniteGroupoid, GroupFamily]


def one_object(g: FiniteGroup, k: FiniteGroup) -> Coefficients:
    base = FiniteGroupoid.from_group(g)
    return base, GroupFamily.constant(base, k)


def nontrivial_z2(base: FiniteGroupoid, family: GroupFamily) -> WeakAction:
    """The action on ``(Z/2, Z/2)`` with ``σ(1, 1) = 1``, whose twisted
    product is ``Z/4``."""

    k = family[0]
    F = [GroupIso.identity(k)] * len(base.arrows)
    return WeakAction.normalized(base, family, F, {(1, 1): 1})


@pytest.fixture(scope="session")
def z2() -> FiniteGroup:
    return cyclic(2)


@pytest.fixture(scope="session")
def z3() -> FiniteGroup:
    return cyclic(3)


@pytest.fixture(scope="session")
def z4() -> FiniteGroup:
    return cyclic(4)


@pytest.fixture(scope="session")
def v4() -> FiniteGroup:
    return direct_product(cyclic(2), cyclic(2))


@pytest.fixture(scope="session")
def s3() -> FiniteGroup:
    return symmetric(3)


@pytest.fixture(scope="session")
def z2_z2() -> Coefficients:
    return one_object(cyclic(2), cyclic(2))


@pytest.fixture(scope="session")
def z2_z3() -> Coefficients:
    return one_object(cyclic(2), cyclic(3))


@pytest.fixture(scope="session")
def z3_z3() -> Coefficients:
    return one_object(cyclic(3), cyclic(3))


@pytest.fixture(scope="session")
def z2_s3() -> Coefficients:
    return one_object(cyclic(2), symmetric(3))


@pytest.fixture(scope="session")
def interval_z2() -> Coefficients:
    base = FiniteGroupoid.interval()
    return base, GroupFamily.constant(base, cyclic(2))


@pytest.fixture(scope="session")
def interval_mixed() -> Coefficients:
    base = FiniteGroupoid.interval()
    return base, GroupFamily({0: cyclic(2), 1: cyclic(3)})


@pytest.fixture(scope="session")
def disjoint_mixed() -> Coefficients:
    base = disjoint_union(
        FiniteGroupoid.from_group(cyclic(2)),
        FiniteGroupoid.from_group(cyclic(3)),
    )
    return base, GroupFamily({0: cyclic(3), 1: cyclic(2)})


@pytest.fixture(scope="session")
def z4_action(z2_z2: Coefficients) -> WeakAction:
    return nontrivial_z2(*z2_z2)
