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

"""The 2-groupoid of groups, isomorphisms and conjugating elements.

A 2-cell ``(f, α)`` goes from the 1-cell ``f`` to ``u ↦ α·f(u)·α⁻¹``; the
codomain is always computed, never stored."""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from .algebra import FiniteGroup, GroupFamily, GroupIso, iter_isomorphisms
from .config import get_settings
from .exceptions import (
    BudgetExceeded,
    CompositionError,
    StructuralError,
    TheoremViolation,
)
from .report import ValidationReport

logger = logging.getLogger(__name__)


class TwoCell:
    """A 2-cell ``(dom_iso, witness)`` of the 2-category of groups.

    Args:
        dom_iso (GroupIso): The domain 1-cell ``f``.
        witness (int): The element ``α`` of the target group.

    Raises:
        StructuralError: ``witness`` is not an element of the target group.
    """

    __slots__: Iterable[str] = ("dom_iso", "witness")

    def __init__(self, dom_iso: GroupIso, witness: int) -> None:
        if not 0 <= witness < dom_iso.target.order:
            raise StructuralError(
                f"Witness {witness} is not an element of the target group."
            )
        self.dom_iso = dom_iso
        self.witness = witness

    @classmethod
    def identity(cls, f: GroupIso) -> TwoCell:
        return cls(f, 0)

    @property
    def source(self) -> FiniteGroup:
        return self.dom_iso.source

    @property
    def target(self) -> FiniteGroup:
        return self.dom_iso.target

    @property
    def codomain(self) -> GroupIso:
        return two_cell_codomain(self)

    def is_identity(self) -> bool:
        return self.witness == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwoCell):
            return NotImplemented
        return self.dom_iso == other.dom_iso and self.witness == other.witness

    def __hash__(self) -> int:
        return hash((self.dom_iso, self.witness))

    def __repr__(self) -> str:
        return f"<TwoCell {list(self.dom_iso.images)}; {self.witness}>"


def two_cell_codomain(c: TwoCell) -> GroupIso:
    return c.dom_iso.conjugated(c.witness)


def vcompose(second: TwoCell, first: TwoCell) -> TwoCell:
    """``(g,β)∘(f,α) = (f, β·α)``.

    Raises:
        CompositionError: ``second`` does not start at the codomain of
            ``first``.
    """

    if second.dom_iso != two_cell_codomain(first):
        raise CompositionError(
            "Vertical composition needs dom(second) = cod(first)."
        )
    h = first.target
    return TwoCell(first.dom_iso, h.mul(second.witness, first.witness))


def hcompose(second: TwoCell, first: TwoCell) -> TwoCell:
    """``(g,β)*(f,α) = (g∘f, β·g(α))``.

    Raises:
        CompositionError: The source of ``second`` is not the target of
            ``first``.
    """

    g = second.dom_iso
    if g.source != first.target:
        raise CompositionError(
            "Horizontal composition needs the groups to match."
        )
    witness = g.target.mul(second.witness, g(first.witness))
    return TwoCell(g.compose(first.dom_iso), witness)


def two_cell_vinverse(c: TwoCell) -> TwoCell:
    """``(f,α)⁻¹ = (αfα⁻¹, α⁻¹)``."""

    return TwoCell(two_cell_codomain(c), c.target.inv(c.witness))


def two_cell_hinverse(c: TwoCell) -> TwoCell:
    """The horizontal inverse of ``c: f ⇒ g``.

    Computed both as ``f⁻¹ * α⁻¹ * g⁻¹`` and ``g⁻¹ * α⁻¹ * f⁻¹``.

    Raises:
        TheoremViolation: The two expressions disagree.
    """

    f = c.dom_iso
    g = two_cell_codomain(c)
    alpha_inv = two_cell_vinverse(c)
    f_inv = TwoCell.identity(f.inverse())
    g_inv = TwoCell.identity(g.inverse())

    left = hcompose(hcompose(f_inv, alpha_inv), g_inv)
    right = hcompose(hcompose(g_inv, alpha_inv), f_inv)
    if left != right:
        raise TheoremViolation(
            "The two horizontal inverse formulas disagree.",
            {
                "cell": [list(f.images), c.witness],
                "left": [list(left.dom_iso.images), left.witness],
                "right": [list(right.dom_iso.images), right.witness],
            },
        )
    return left


def is_natural(c: TwoCell) -> bool:
    """``cod(u)·α = α·f(u)`` for every ``u``."""

    h = c.target
    cod = two_cell_codomain(c)
    a = c.witness
    return all(
        h.mul(cod(u), a) == h.mul(a, c.dom_iso(u)) for u in c.source.elements
    )


class AutTwoGroupoid:
    """``Aut(K)`` for a family ``K``: objects are the family indexes,
    1-cells all isomorphisms ``K_A → K_B`` and 2-cells all pairs
    ``(iso, element)``.

    Build it with :func:`build_aut`.
    """

    __slots__: Iterable[str] = ("family", "_isos")

    def __init__(
        self,
        family: GroupFamily,
        isos: Dict[Tuple[int, int], Tuple[GroupIso, ...]],
    ) -> None:
        self.family = family
        self._isos = isos

    @property
    def objects(self) -> Tuple[int, ...]:
        return self.family.base_objects

    def isos(self, a: int, b: int) -> Tuple[GroupIso, ...]:
        """All 1-cells ``a → b`` in lexicographic order of images."""

        return self._isos.get((a, b), ())

    def identity(self, a: int) -> GroupIso:
        return GroupIso.identity(self.family[a])

    @property
    def one_cells(self) -> List[Tuple[int, int, GroupIso]]:
        return [
            (a, b, f)
            for a in self.objects
            for b in self.objects
            for f in self.isos(a, b)
        ]

    @property
    def two_cells(self) -> List[TwoCell]:
        return [
            TwoCell(f, x)
            for _, b, f in self.one_cells
            for x in self.family[b].elements
        ]

    def validate(self) -> ValidationReport:
        """Check that 1-cells compose and invert within the 2-groupoid and
        that every 2-cell has a vertical inverse."""

        report = ValidationReport()
        cells = {(a, b): set(fs) for (a, b), fs in self._isos.items()}
        for a, b, f in self.one_cells:
            if f.inverse() not in cells.get((b, a), set()):
                report.add("inverse", f"1-cell {a}->{b} has no inverse", a, b)
            for c in self.objects:
                for g in self.isos(b, c):
                    if g.compose(f) not in cells.get((a, c), set()):
                        report.add(
                            "compose", f"composite {a}->{b}->{c} missing",
                            a, b, c,
                        )
        for c in self.two_cells:
            back = vcompose(two_cell_vinverse(c), c)
            if not back.is_identity() or back.dom_iso != c.dom_iso:
                report.add("2-inverse", f"2-cell {c!r} has no inverse")
        return report

    def __repr__(self) -> str:
        return (
            f"<AutTwoGroupoid {len(self.objects)} objects, "
            f"{len(self.one_cells)} 1-cells>"
        )


@lru_cache(maxsize=32)
def build_aut(family: GroupFamily) -> AutTwoGroupoid:
    """Materialize ``Aut(K)`` exhaustively.

    Raises:
        BudgetExceeded: A group is larger than ``max_group_order``.
    """

    limit = get_settings().max_group_order
    if family.max_order > limit:
        raise BudgetExceeded("group order for Aut", limit)

    isos: Dict[Tuple[int, int], Tuple[GroupIso, ...]] = {}
    cache: Dict[Tuple[FiniteGroup, FiniteGroup], Tuple[GroupIso, ...]] = {}
    for a, ka in family.items():
        for b, kb in family.items():
            key = (ka, kb)
            if key not in cache:
                cache[key] = tuple(iter_isomorphisms(ka, kb))
            found = cache[key]
            if found:
                isos[(a, b)] = found
    aut = AutTwoGroupoid(family, isos)
    logger.debug(
        "built Aut with %d objects and %d 1-cells",
        len(aut.objects),
        sum(len(v) for v in isos.values()),
    )
    return aut


def find_iso(aut: AutTwoGroupoid, a: int, b: int) -> Optional[GroupIso]:
    found = aut.isos(a, b)
    return found[0] if found else None
