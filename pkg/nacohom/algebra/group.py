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

"""Finite groups given by multiplication tables, and isomorphisms between
them.

Element ``0`` is always the identity. ``table[a][b]`` is the product
``a·b``."""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import CompositionError, StructuralError
from ..report import ValidationReport

logger = logging.getLogger(__name__)

Table = Tuple[Tuple[int, ...], ...]


class FiniteGroup:
    """A group stored as its full multiplication table.

    The constructor only checks the shape of the table; use
    :func:`validate_group` to check the group axioms.

    Args:
        table (Sequence[Sequence[int]]): A square table of element ids.
        label (str, optional): A human readable name, ignored by equality.

    Raises:
        StructuralError: The table is not square or holds ids out of range.
    """

    __slots__: Iterable[str] = ("table", "label", "_inverses", "_hash")

    def __init__(
        self, table: Sequence[Sequence[int]], label: Optional[str] = None
    ) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in table)
        n = len(rows)
        if n == 0:
            raise StructuralError("A group table needs at least one row.")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise StructuralError(
                    f"Row {i} has {len(row)} entries, expected {n}."
                )
            for x in row:
                if not 0 <= x < n:
                    raise StructuralError(
                        f"Row {i} holds {x}, outside 0..{n - 1}."
                    )

        self.table: Table = rows
        self.label = label
        self._inverses: Optional[Tuple[int, ...]] = None
        self._hash = hash(rows)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def prod(self, *xs: int) -> int:
        """Multiply left to right."""

        acc = 0
        for x in xs:
            acc = self.table[acc][x]
        return acc

    def inv(self, a: int) -> int:
        if self._inverses is None:
            self._inverses = tuple(row.index(0) for row in self.table)
        return self._inverses[a]

    def conj(self, a: int, x: int) -> int:
        """``a·x·a⁻¹``."""

        return self.table[self.table[a][x]][self.inv(a)]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        arr = self.as_array()
        return bool(np.array_equal(arr, arr.T))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.table == other.table

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        name = self.label or "group"
        return f"<FiniteGroup {name} of order {self.order}>"


def validate_group(g: FiniteGroup) -> ValidationReport:
    """Check the group axioms on ``g``.

    Every violation names the failing row, pair or triple.
    """

    report = ValidationReport()
    t = g.as_array()
    n = g.order
    ids = np.arange(n)

    for a in np.flatnonzero(~np.all(np.sort(t, axis=1) == ids, axis=1)):
        report.add("row", f"row {a} not a permutation", int(a))
    for b in np.flatnonzero(~np.all(np.sort(t, axis=0) == ids[:, None], 0)):
        report.add("column", f"column {b} not a permutation", int(b))

    for b in np.flatnonzero(t[0] != ids):
        report.add(
            "identity", f"identity failure at (0,{b}): 0·{b}={t[0, b]}",
            0, int(b),
        )
    for a in np.flatnonzero(t[:, 0] != ids):
        report.add(
            "identity", f"identity failure at ({a},0): {a}·0={t[a, 0]}",
            int(a), 0,
        )

    # lhs[a, b, c] = (a·b)·c and rhs[a, b, c] = a·(b·c)
    lhs = t[t]
    rhs = t[ids[:, None, None], t[None, :, :]]
    for a, b, c in np.argwhere(lhs != rhs):
        report.add(
            "assoc",
            f"associativity failure at ({a},{b},{c})",
            int(a), int(b), int(c),
        )
    return report


class GroupIso:
    """A map between two groups, given by the image of every element.

    Instances built by this library are isomorphisms; :meth:`validate`
    checks that for hand-built ones.
    """

    __slots__: Iterable[str] = ("source", "target", "images", "_hash")

    def __init__(
        self, source: FiniteGroup, target: FiniteGroup, images: Sequence[int]
    ) -> None:
        if len(images) != source.order:
            raise StructuralError(
                f"Map has {len(images)} images for a group of order "
                f"{source.order}."
            )
        if any(not 0 <= x < target.order for x in images):
            raise StructuralError("Map images fall outside the target group.")

        self.source = source
        self.target = target
        self.images: Tuple[int, ...] = tuple(int(x) for x in images)
        self._hash = hash((source, target, self.images))

    @classmethod
    def identity(cls, group: FiniteGroup) -> GroupIso:
        return cls(group, group, range(group.order))

    @classmethod
    def inner(cls, group: FiniteGroup, a: int) -> GroupIso:
        """Conjugation ``x ↦ a·x·a⁻¹``."""

        return cls(group, group, [group.conj(a, x) for x in group.elements])

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, first: GroupIso) -> GroupIso:
        """``self ∘ first``: apply ``first``, then ``self``."""

        if first.target != self.source:
            raise CompositionError(
                "Cannot compose isos: target of the first is not the source "
                "of the second."
            )
        return GroupIso(
            first.source, self.target, [self.images[y] for y in first.images]
        )

    def inverse(self) -> GroupIso:
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return GroupIso(self.target, self.source, inv)

    def conjugated(self, a: int) -> GroupIso:
        """``x ↦ a·f(x)·a⁻¹``."""

        h = self.target
        return GroupIso(
            self.source, h, [h.conj(a, y) for y in self.images]
        )

    def is_identity(self) -> bool:
        return self.source == self.target and self.images == tuple(
            range(len(self.images))
        )

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        if self.images[0] != 0:
            report.add("unit", "map does not send 0 to 0")
        if len(set(self.images)) != len(self.images) or (
            self.source.order != self.target.order
        ):
            report.add("bijection", "map is not a bijection")
        g, h = self.source, self.target
        for a in g.elements:
            for b in g.elements:
                if self.images[g.mul(a, b)] != h.mul(
                    self.images[a], self.images[b]
                ):
                    report.add(
                        "hom", f"map(a·b) != map(a)·map(b) at ({a},{b})", a, b
                    )
        return report

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupIso):
            return NotImplemented
        return (
            self.images == other.images
            and self.source == other.source
            and self.target == other.target
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"<GroupIso {list(self.images)}>"


def closure(g: FiniteGroup, gens: Iterable[int]) -> List[int]:
    """The subgroup generated by ``gens``, as a sorted list."""

    gens = list(gens)
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = g.mul(x, s)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return sorted(seen)


def generators(g: FiniteGroup) -> List[int]:
    """Greedy generating set: scan elements in increasing order and keep
    each one not already generated.

    Every element smaller than the k-th generator lies in the subgroup of
    the earlier generators, which makes generator-image search return
    homomorphisms in lexicographic order of their image tuples.
    """

    gens: List[int] = []
    sub = {0}
    for x in g.elements:
        if x not in sub:
            gens.append(x)
            sub = set(closure(g, gens))
    return gens


def _extend(
    a: FiniteGroup, b: FiniteGroup, gens: Sequence[int], imgs: Sequence[int]
) -> Optional[Tuple[int, ...]]:
    """Extend generator images to a homomorphism, or None if the images
    are inconsistent. Every (element, generator) pair is checked."""

    img = [-1] * a.order
    img[0] = 0
    queue = [0]
    while queue:
        x = queue.pop()
        for s, t in zip(gens, imgs):
            y = a.mul(x, s)
            iy = b.mul(img[x], t)
            if img[y] == -1:
                img[y] = iy
                queue.append(y)
            elif img[y] != iy:
                return None
    return tuple(img)


def iter_homomorphisms(
    a: FiniteGroup, b: FiniteGroup, *, bijective: bool = False
) -> Iterator[Tuple[int, ...]]:
    """Yield image tuples of all homomorphisms ``a → b`` in lexicographic
    order. With ``bijective`` only isomorphisms are yielded."""

    if bijective:
        if a.order != b.order:
            return
        orders_a = Counter(a.element_order(x) for x in a.elements)
        orders_b = Counter(b.element_order(x) for x in b.elements)
        if orders_a != orders_b:
            return

    gens = generators(a)
    b_orders = [b.element_order(y) for y in b.elements]
    candidates = []
    for s in gens:
        k = a.element_order(s)
        if bijective:
            candidates.append([y for y in b.elements if b_orders[y] == k])
        else:
            candidates.append([y for y in b.elements if k % b_orders[y] == 0])

    for imgs in itertools.product(*candidates):
        images = _extend(a, b, gens, imgs)
        if images is None:
            continue
        if bijective and len(set(images)) != a.order:
            continue
        yield images


def iter_isomorphisms(a: FiniteGroup, b: FiniteGroup) -> Iterator[GroupIso]:
    for images in iter_homomorphisms(a, b, bijective=True):
        yield GroupIso(a, b, images)


def group_iso_search(a: FiniteGroup, b: FiniteGroup) -> Optional[GroupIso]:
    """The lexicographically least isomorphism ``a → b``, or None."""

    return next(iter_isomorphisms(a, b), None)


def subgroup(
    g: FiniteGroup, elements: Iterable[int], label: Optional[str] = None
) -> Tuple[FiniteGroup, Tuple[int, ...]]:
    """Restrict ``g`` to a subset closed under multiplication.

    Returns the subgroup with its own ids (0 first, then increasing ids of
    ``g``) and the tuple mapping subgroup ids to ids of ``g``.
    """

    members = tuple(sorted(set(elements) | {0}))
    index: Dict[int, int] = {x: i for i, x in enumerate(members)}
    try:
        table = [[index[g.mul(x, y)] for y in members] for x in members]
    except KeyError:
        raise StructuralError("Subset is not closed under multiplication.")
    return FiniteGroup(table, label), members


def relabel(g: FiniteGroup, perm: Sequence[int]) -> FiniteGroup:
    """The isomorphic group obtained by renaming element ``x`` to
    ``perm[x]``. ``perm`` must fix 0."""

    if perm[0] != 0 or sorted(perm) != list(g.elements):
        raise StructuralError("A relabeling must be a permutation fixing 0.")
    table = [[0] * g.order for _ in g.elements]
    for a in g.elements:
        for b in g.elements:
            table[perm[a]][perm[b]] = perm[g.mul(a, b)]
    return FiniteGroup(table, g.label)
