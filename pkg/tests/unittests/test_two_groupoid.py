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

from nacohom.algebra import FiniteGroup, GroupFamily, GroupIso, cyclic
from nacohom.exceptions import (
    BudgetExceeded,
    CompositionError,
    StructuralError,
)
from nacohom.two_groupoid import (
    TwoCell,
    build_aut,
    find_iso,
    hcompose,
    is_natural,
    two_cell_codomain,
    two_cell_hinverse,
    two_cell_vinverse,
    vcompose,
)


def test_witness_must_be_an_element(z2: FiniteGroup):
    with pytest.raises(StructuralError):
        TwoCell(GroupIso.identity(z2), 2)


def test_codomain_is_conjugate(s3: FiniteGroup):
    c = TwoCell(GroupIso.identity(s3), 1)
    assert two_cell_codomain(c) == GroupIso.inner(s3, 1)
    assert c.codomain == GroupIso.inner(s3, 1)
    assert not c.is_identity()
    assert TwoCell.identity(GroupIso.identity(s3)).is_identity()


def test_vertical_composition(s3: FiniteGroup):
    first = TwoCell(GroupIso.identity(s3), 1)
    second = TwoCell(first.codomain, 3)
    both = vcompose(second, first)
    assert both.dom_iso == first.dom_iso
    assert both.witness == s3.mul(3, 1)
    with pytest.raises(CompositionError):
        vcompose(TwoCell(GroupIso.identity(s3), 0), first)


def test_horizontal_composition(s3: FiniteGroup, z2: FiniteGroup):
    f = GroupIso.inner(s3, 3)
    c = hcompose(TwoCell(f, 1), TwoCell(GroupIso.identity(s3), 2))
    assert c.dom_iso == f
    assert c.witness == s3.mul(1, f(2))
    with pytest.raises(CompositionError):
        hcompose(
            TwoCell(GroupIso.identity(z2), 0),
            TwoCell(GroupIso.identity(cyclic(3)), 0),
        )


def test_inverses_of_all_cells(s3: FiniteGroup):
    aut = build_aut(GroupFamily({0: s3}))
    cells = aut.two_cells
    assert len(cells) == 36
    for c in cells:
        assert is_natural(c)
        v = two_cell_vinverse(c)
        back = vcompose(v, c)
        assert back.witness == 0 and back.dom_iso == c.dom_iso
        forth = vcompose(c, v)
        assert forth.witness == 0 and forth.dom_iso == c.codomain
        h = two_cell_hinverse(c)
        assert h.dom_iso == c.dom_iso.inverse()
        for unit in (hcompose(h, c), hcompose(c, h)):
            assert unit.witness == 0
            assert unit.dom_iso.is_identity()


def test_aut_of_mixed_family(z2: FiniteGroup, z3: FiniteGroup):
    aut = build_aut(GroupFamily({0: z2, 1: z3}))
    assert len(aut.one_cells) == 3
    assert find_iso(aut, 0, 1) is None
    assert find_iso(aut, 1, 1) == GroupIso.identity(z3)
    assert aut.validate().ok


def test_aut_of_isomorphic_objects(z3: FiniteGroup):
    aut = build_aut(GroupFamily({0: z3, 1: z3}))
    assert len(aut.isos(0, 1)) == 2
    assert len(aut.one_cells) == 8
    assert len(aut.two_cells) == 24
    assert aut.validate().ok


def test_aut_group_order_limit():
    with pytest.raises(BudgetExceeded):
        build_aut(GroupFamily({0: cyclic(25)}))
