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

"""Standard small groups and identification against them."""

from __future__ import annotations

import hashlib
import itertools
import logging
from functools import lru_cache
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from ..config import get_settings
from ..exceptions import BudgetExceeded, StructuralError
from .group import FiniteGroup, Table, group_iso_search

logger = logging.getLogger(__name__)

Perm = Tuple[int, ...]


def from_function(
    elements: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    label: Optional[str] = None,
) -> FiniteGroup:
    """Tabulate ``mul`` on ``elements``; the first element must be the
    identity."""

    index = {x: i for i, x in enumerate(elements)}
    if len(index) != len(elements):
        raise StructuralError("Elements must be distinct.")
    table = [[index[mul(x, y)] for y in elements] for x in elements]
    return FiniteGroup(table, label)


def _compose_perm(p: Perm, q: Perm) -> Perm:
    # p ∘ q
    return tuple(p[i] for i in q)


def from_permutations(
    gens: Sequence[Perm], label: Optional[str] = None
) -> FiniteGroup:
    """The permutation group generated by ``gens``, elements sorted with
    the identity first."""

    degree = len(gens[0])
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = _compose_perm(x, tuple(s))
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    elements = sorted(seen)
    return from_function(elements, _compose_perm, label)  # type: ignore


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup(
        [[(a + b) % n for b in range(n)] for a in range(n)], f"Z/{n}"
    )


def trivial() -> FiniteGroup:
    return cyclic(1)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """``g × h`` with ``(a, b)`` stored as ``a·|h| + b``."""

    m = h.order
    pairs = [(a, b) for a in g.elements for b in h.elements]
    table = [
        [g.mul(a1, a2) * m + h.mul(b1, b2) for a2, b2 in pairs]
        for a1, b1 in pairs
    ]
    label = None
    if g.label and h.label:
        label = f"{g.label}x{h.label}"
    return FiniteGroup(table, label)


def symmetric(n: int) -> FiniteGroup:
    """``S_n`` on lexicographically ordered permutations, with
    ``(p·q)(i) = p(q(i))``."""

    elements = list(itertools.permutations(range(n)))
    return from_function(elements, _compose_perm, f"S{n}")  # type: ignore


def semidirect_cyclic(
    n: int, m: int, r: int, label: Optional[str] = None
) -> FiniteGroup:
    """``Z/n ⋊ Z/m`` where the generator of ``Z/m`` acts as multiplication
    by ``r``; ``(a, b)`` is stored as ``b·n + a``."""

    if pow(r, m, n) != 1 % n:
        raise StructuralError(f"{r}^{m} is not 1 modulo {n}.")
    elements = [(a, b) for b in range(m) for a in range(n)]

    def mul(x: Tuple[int, int], y: Tuple[int, int]) -> Tuple[int, int]:
        return ((x[0] + pow(r, x[1], n) * y[0]) % n, (x[1] + y[1]) % m)

    return from_function(elements, mul, label)  # type: ignore


def dihedral(n: int) -> FiniteGroup:
    """The dihedral group of order ``2n``."""

    return semidirect_cyclic(n, 2, n - 1, f"D{n}")


def dicyclic3() -> FiniteGroup:
    return semidirect_cyclic(3, 4, 2, "Dic3")


_UNITS = (
    ((0, 0), (0, 1), (0, 2), (0, 3)),
    ((0, 1), (1, 0), (0, 3), (1, 2)),
    ((0, 2), (1, 3), (1, 0), (0, 1)),
    ((0, 3), (0, 2), (1, 1), (1, 0)),
)


def quaternion() -> FiniteGroup:
    """``Q8``; element ``sign·4 + unit`` with units ``1, i, j, k``."""

    table = []
    for x in range(8):
        row = []
        for y in range(8):
            sign, unit = _UNITS[x % 4][y % 4]
            row.append(((sign + x // 4 + y // 4) % 2) * 4 + unit)
        table.append(row)
    return FiniteGroup(table, "Q8")


def alternating4() -> FiniteGroup:
    return from_permutations([(1, 2, 0, 3), (1, 0, 3, 2)], "A4")


def _small_groups() -> List[FiniteGroup]:
    z2, z3 = cyclic(2), cyclic(3)
    groups = [cyclic(n) for n in range(1, 13)]
    groups += [
        direct_product(z2, z2),
        direct_product(cyclic(4), z2),
        direct_product(direct_product(z2, z2), z2),
        dihedral(4),
        quaternion(),
        direct_product(z3, z3),
        symmetric(3),
        dihedral(5),
        direct_product(z2, cyclic(6)),
        dihedral(6),
        alternating4(),
        dicyclic3(),
    ]
    return groups


@lru_cache(maxsize=1)
def small_groups() -> Tuple[FiniteGroup, ...]:
    """One representative of every isomorphism class of order ≤ 12."""

    return tuple(_small_groups())


def groups_of_order(n: int) -> Tuple[FiniteGroup, ...]:
    return tuple(g for g in small_groups() if g.order == n)


def identify_group(g: FiniteGroup) -> Optional[str]:
    """The catalog label of the group isomorphic to ``g``, if any."""

    for candidate in groups_of_order(g.order):
        if group_iso_search(g, candidate) is not None:
            return candidate.label
    return None


def canonical_table(g: FiniteGroup) -> Table:
    """The lexicographically least table over all relabelings fixing 0.

    Raises:
        BudgetExceeded: The order is above ``canonical_form_max_order``.
    """

    limit = get_settings().canonical_form_max_order
    if g.order > limit:
        raise BudgetExceeded("canonical form group order", limit)

    n = g.order
    best: Optional[Table] = None
    for rest in itertools.permutations(range(1, n)):
        perm = (0,) + rest
        inv = [0] * n
        for x, y in enumerate(perm):
            inv[y] = x
        # row-major in the new labels, so the first differing row decides
        cand = tuple(
            tuple(perm[g.mul(inv[a], inv[b])] for b in range(n))
            for a in range(n)
        )
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


def fingerprint(g: FiniteGroup) -> str:
    """A short hash of :func:`canonical_table`, for census counts."""

    digest = hashlib.sha1(repr(canonical_table(g)).encode()).hexdigest()
    return digest[:12]


def describe_group(g: FiniteGroup) -> str:
    """Catalog label when known, otherwise order plus fingerprint."""

    label = identify_group(g)
    if label is not None:
        return label
    try:
        return f"order-{g.order}:{fingerprint(g)}"
    except BudgetExceeded:
        return f"order-{g.order}"


def by_label() -> Dict[str, FiniteGroup]:
    return {g.label: g for g in small_groups() if g.label is not None}
