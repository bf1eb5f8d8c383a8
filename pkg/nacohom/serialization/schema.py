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

"""Payload models of the JSON documents.

Every document is ``{"kind": ..., "version": ..., "payload": {...}}``.
Ids are plain integers; groups are full multiplication tables; maps between
groups are image arrays; ``σ`` is keyed by ``"v,u"`` with ``u`` applied
first."""

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, validator

FORMAT_VERSION = "1"

KINDS = (
    "group",
    "groupoid",
    "family",
    "cocycle",
    "cochain",
    "morphism",
    "functor",
    "cleavage",
    "extension",
    "nerve",
    "map",
    "homotopy",
    "classes",
    "report",
)


class Document(BaseModel):
    kind: str
    """One of :data:`KINDS`."""
    version: str = FORMAT_VERSION
    payload: Dict[str, Any]

    @validator("kind")
    def known_kind(cls, v: str) -> str:
        if v not in KINDS:
            raise ValueError(f"unknown document kind {v!r}")
        return v

    @validator("version")
    def known_version(cls, v: str) -> str:
        if v != FORMAT_VERSION:
            raise ValueError(f"unsupported format version {v!r}")
        return v


class GroupPayload(BaseModel):
    table: List[List[int]]
    """``table[a][b]`` is ``a·b``; element ``0`` is the identity."""
    label: Optional[str] = None


class GroupoidPayload(BaseModel):
    objects: int
    arrows: List[Tuple[int, int, int]]
    """``(id, src, tgt)`` rows."""
    identity: List[int]
    """Identity arrow of each object, indexed by object id."""
    compose: List[Tuple[int, int, int]]
    """``(g, f, g∘f)`` rows, ``f`` applied first."""
    inverse: List[int]
    """Inverse of each arrow, indexed by arrow id."""
    label: Optional[str] = None


class FamilyPayload(BaseModel):
    groups: Dict[int, GroupPayload]


class ActionTables(BaseModel):
    F: Dict[int, List[int]]
    """Arrow id to the images of ``F(u)``."""
    sigma: Dict[str, int]
    """``"v,u"`` to ``σ_vu``."""


class CocyclePayload(ActionTables):
    base: GroupoidPayload
    family: FamilyPayload


class CochainPayload(BaseModel):
    base: GroupoidPayload
    family: FamilyPayload
    tau: Dict[int, int]


class MorphismPayload(BaseModel):
    source: CocyclePayload
    target: CocyclePayload
    tau: Dict[int, int]


class FunctorPayload(BaseModel):
    domain: GroupoidPayload
    codomain: GroupoidPayload
    object_map: List[int]
    arrow_map: List[int]


class CleavagePayload(BaseModel):
    lift: List[int]
    """The chosen lift of each base arrow, indexed by base arrow id."""


class ExtensionPayload(BaseModel):
    projection: FunctorPayload
    family: FamilyPayload
    kernel: Dict[int, List[int]]
    """Base object to the kernel arrows, listed by element id."""
    label: Optional[str] = None


class NervePayload(BaseModel):
    simplices: List[List[Any]]
    faces: List[List[List[int]]]
    degeneracies: List[List[List[int]]]
    coskeletal: int = 0


class MapPayload(BaseModel):
    """A map ``ner(G) → ner(Aut(K))``; both nerves are rebuilt from
    ``base`` and ``family``."""

    base: GroupoidPayload
    family: FamilyPayload
    levels: List[List[int]]


class HomotopyPayload(BaseModel):
    base: GroupoidPayload
    family: FamilyPayload
    source: List[List[int]]
    target: List[List[int]]
    components: List[List[List[int]]]


class ClassPayload(BaseModel):
    representative: ActionTables
    size: int
    witnesses: Optional[List[Dict[int, int]]] = None
    """``τ`` taking the representative to each member, when requested."""


class ClassesPayload(BaseModel):
    base: GroupoidPayload
    family: FamilyPayload
    classes: List[ClassPayload]
