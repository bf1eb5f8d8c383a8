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

from typing import Dict, Iterable, Iterator, Mapping, Tuple

from ..exceptions import StructuralError, UnknownObject
from .group import FiniteGroup
from .groupoid import FiniteGroupoid


class GroupFamily:
    """Groups ``K_A`` indexed by the objects of a base groupoid.

    Args:
        groups (Mapping[int, FiniteGroup]): Object id to group; its keys
            are the base objects.
    """

    __slots__: Iterable[str] = ("base_objects", "groups", "_hash")

    def __init__(self, groups: Mapping[int, FiniteGroup]) -> None:
        self.base_objects: Tuple[int, ...] = tuple(sorted(groups))
        self.groups: Dict[int, FiniteGroup] = {
            a: groups[a] for a in self.base_objects
        }
        self._hash = hash(tuple(self.groups.items()))

    @classmethod
    def constant(cls, base: FiniteGroupoid, group: FiniteGroup) -> GroupFamily:
        return cls({a: group for a in base.objects})

    def __getitem__(self, a: int) -> FiniteGroup:
        try:
            return self.groups[a]
        except KeyError:
            raise UnknownObject(a)

    def __iter__(self) -> Iterator[int]:
        return iter(self.base_objects)

    def __len__(self) -> int:
        return len(self.base_objects)

    def items(self) -> Iterable[Tuple[int, FiniteGroup]]:
        return self.groups.items()

    @property
    def max_order(self) -> int:
        return max((g.order for g in self.groups.values()), default=1)

    def check_indexes(self, base: FiniteGroupoid) -> None:
        """Raise unless the family is indexed by exactly the objects of
        ``base``."""

        if self.base_objects != base.objects:
            raise StructuralError(
                f"Family indexed by {list(self.base_objects)}, base has "
                f"objects {list(base.objects)}."
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupFamily):
            return NotImplemented
        return self.groups == other.groups

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(
            f"{a}: {g.label or g.order}" for a, g in self.groups.items()
        )
        return f"<GroupFamily {{{inner}}}>"
