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

"""Reading and writing documents.

Output is deterministic: keys are sorted and the indentation is fixed, so
equal values always produce equal bytes."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from ..exceptions import DocumentError
from .schema import (
    FORMAT_VERSION,
    ClassesPayload,
    CleavagePayload,
    CochainPayload,
    CocyclePayload,
    Document,
    ExtensionPayload,
    FamilyPayload,
    FunctorPayload,
    GroupoidPayload,
    GroupPayload,
    HomotopyPayload,
    MapPayload,
    MorphismPayload,
    NervePayload,
)

logger = logging.getLogger(__name__)

_M = TypeVar("_M", bound=BaseModel)

PAYLOADS: Dict[str, Type[BaseModel]] = {
    "group": GroupPayload,
    "groupoid": GroupoidPayload,
    "family": FamilyPayload,
    "cocycle": CocyclePayload,
    "cochain": CochainPayload,
    "morphism": MorphismPayload,
    "functor": FunctorPayload,
    "cleavage": CleavagePayload,
    "extension": ExtensionPayload,
    "nerve": NervePayload,
    "map": MapPayload,
    "homotopy": HomotopyPayload,
    "classes": ClassesPayload,
}
"""Payload model per kind; ``report`` payloads stay plain dicts."""


def _location(prefix: str, error: Dict[str, Any]) -> str:
    parts = [prefix] + [str(p) for p in error["loc"]]
    return ".".join(p for p in parts if p)


def parse_document(text: str, source: str = "<input>") -> Document:
    """Parse the outer ``{kind, version, payload}`` envelope.

    Raises:
        DocumentError: The text is not JSON or not a document.
    """

    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"{source}:{e.lineno}:{e.colno}", e.msg)
    if not isinstance(raw, dict):
        raise DocumentError(source, "a document must be a JSON object")
    try:
        return Document(**raw)
    except ValidationError as e:
        first = e.errors()[0]
        raise DocumentError(_location(source, first), first["msg"])


def parse_payload(doc: Document, model: Type[_M], source: str = "") -> _M:
    try:
        return model(**doc.payload)
    except ValidationError as e:
        first = e.errors()[0]
        prefix = f"{source}:payload" if source else "payload"
        raise DocumentError(_location(prefix, first), first["msg"])


def read_document(path: Union[str, Path]) -> Document:
    """Raises:
    DocumentError: The file cannot be read or parsed.
    """

    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(str(path), e.strerror or "cannot read file")
    logger.debug("read %d bytes from %s", len(text), path)
    return parse_document(text, str(path))


def load_payload(path: Union[str, Path], kind: str) -> Any:
    """Read ``path`` and parse its payload, checking the kind.

    Returns the payload model, or a dict for reports.

    Raises:
        DocumentError: Unreadable, malformed, or of another kind.
    """

    doc = read_document(path)
    if doc.kind != kind:
        raise DocumentError(
            f"{path}:kind", f"expected a {kind} document, got {doc.kind}"
        )
    model = PAYLOADS.get(kind)
    if model is None:
        return doc.payload
    return parse_payload(doc, model, str(path))


def dump_document(kind: str, payload: Union[BaseModel, Dict[str, Any]]) -> str:
    """Serialize one document with sorted keys and a trailing newline."""

    if isinstance(payload, BaseModel):
        body = payload.dict(exclude_none=True)
    else:
        body = payload
    doc = Document(kind=kind, version=FORMAT_VERSION, payload=body)
    return json.dumps(doc.dict(), sort_keys=True, indent=2) + "\n"


def write_output(text: str, output: Optional[Union[str, Path]]) -> None:
    """Write to ``output``, or to stdout when it is ``None``."""

    if output is None:
        print(text, end="")
        return
    Path(output).write_text(text, encoding="utf-8")
    logger.debug("wrote %d bytes to %s", len(text), output)
