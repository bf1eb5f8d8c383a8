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

"""Finite groups, groupoids, functors and group families."""

from .catalog import (
    alternating4,
    canonical_table,
    cyclic,
    describe_group,
    dicyclic3,
    dihedral,
    direct_product,
    fingerprint,
    from_function,
    from_permutations,
    groups_of_order,
    identify_group,
    quaternion,
    semidirect_cyclic,
    small_groups,
    symmetric,
    trivial,
)
from .family import GroupFamily
from .group import (
    FiniteGroup,
    GroupIso,
    generators,
    group_iso_search,
    iter_homomorphisms,
    iter_isomorphisms,
    relabel,
    subgroup,
    validate_group,
)
from .groupoid import (
    Arrow,
    FiniteGroupoid,
    GroupoidFunctor,
    VertexGroup,
    connected_components,
    disjoint_union,
    loop_group,
    validate_functor,
    validate_groupoid,
    vertex_group,
)

__all__ = (
    "Arrow",
    "FiniteGroup",
    "FiniteGroupoid",
    "GroupFamily",
    "GroupIso",
    "GroupoidFunctor",
    "VertexGroup",
    "alternating4",
    "canonical_table",
    "connected_components",
    "cyclic",
    "describe_group",
    "dicyclic3",
    "dihedral",
    "direct_product",
    "disjoint_union",
    "fingerprint",
    "from_function",
    "from_permutations",
    "generators",
    "group_iso_search",
    "groups_of_order",
    "identify_group",
    "iter_homomorphisms",
    "iter_isomorphisms",
    "loop_group",
    "quaternion",
    "relabel",
    "semidirect_cyclic",
    "small_groups",
    "subgroup",
    "symmetric",
    "trivial",
    "validate_functor",
    "validate_group",
    "validate_groupoid",
    "vertex_group",
)
