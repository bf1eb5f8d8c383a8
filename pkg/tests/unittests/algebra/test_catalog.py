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

import pytest

from nacohom.algebra import (
    FiniteGroup,
    alternating4,
    canonical_table,
    cyclic,
    describe_group,
    dihedral,
    direct_product,
    fingerprint,
    from_function,
    groups_of_order,
    identify_group,
    relabel,
    semidirect_cyclic,
    small_groups,
    validate_group,
)
from nacohom.exceptions import BudgetExceeded, StructuralError


def test_catalog_is_valid():
    groups = small_groups()
    assert len(groups) == 24
    for g in groups:
        assert validate_group(g).ok, g.label


@pytest.mark.parametrize(
    "order,count", [(1, 1), (4, 2), (6, 2), (8, 5), (9, 2), (12, 5)]
)
def test_groups_of_order(order: int, count: int):
    assert len(groups_of_order(order)) == count


@pytest.mark.parametrize(
    "group,label",
    [
        (dihedral(3), "S3"),
        (semidirect_cyclic(3, 2, 1), "Z/6"),
        (direct_product(cyclic(2), cyclic(2)), "Z/2xZ/2"),
        (direct_product(cyclic(3), cyclic(4)), "Z/12"),
        (alternating4(), "A4"),
        (semidirect_cyclic(3, 4, 2), "Dic3"),
    ],
)
def test_identify(group: FiniteGroup, label: str):
    assert identify_group(group) == label


def test_identify_outside_catalog():
    assert identify_group(cyclic(13)) is None
    assert describe_group(cyclic(13)) == "order-13"


def test_canonical_table_is_an_invariant(s3: FiniteGroup):
    shuffled = relabel(s3, [0, 5, 3, 4, 1, 2])
    assert shuffled != s3
    assert canonical_table(shuffled) == canonical_table(s3)
    assert fingerprint(shuffled) == fingerprint(s3)
    assert fingerprint(s3) != fingerprint(cyclic(6))


def test_canonical_table_budget():
    with pytest.raises(BudgetExceeded):
        canonical_table(cyclic(9))


def test_semidirect_needs_a_unit():
    with pytest.raises(StructuralError):
        semidirect_cyclic(5, 2, 2)


def test_from_function_needs_distinct_elements():
    with pytest.raises(StructuralError):
        from_function([0, 0], lambda a, b: 0)


def test_cyclic_labels():
    assert [g.label for g in groups_of_order(4)] == ["Z/4", "Z/2xZ/2"]
