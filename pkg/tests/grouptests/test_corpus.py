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

import json
from pathlib import Path
from typing import Dict

import pytest

from nacohom.cli import ExitCode, main
from nacohom.serialization import (
    CochainConverter,
    CocycleConverter,
    Converter,
    ExtensionConverter,
    FamilyConverter,
    FunctorConverter,
    GroupConverter,
    GroupoidConverter,
    MorphismConverter,
    load_payload,
    read_document,
)

CORPUS = Path(__file__).resolve().parents[2] / "corpus"

CONVERTERS: Dict[str, Converter] = {
    "group": GroupConverter(),
    "groupoid": GroupoidConverter(),
    "family": FamilyConverter(),
    "cocycle": CocycleConverter(),
    "cochain": CochainConverter(),
    "morphism": MorphismConverter(),
    "functor": FunctorConverter(),
    "extension": ExtensionConverter(),
}

VALID = sorted(
    p
    for p in CORPUS.glob("*/*.json")
    if p.parent.name not in ("invalid", "cleavages")
)
INVALID = sorted((CORPUS / "invalid").glob("*.json"))


def _id(path: Path) -> str:
    return f"{path.parent.name}/{path.stem}"


@pytest.mark.parametrize("path", VALID, ids=_id)
def test_valid_documents(path: Path, capsys):
    kind = read_document(path).kind
    assert main(["validate", kind, str(path)]) == ExitCode.OK
    capsys.readouterr()


@pytest.mark.parametrize("path", VALID, ids=_id)
def test_documents_survive_conversion(path: Path):
    kind = read_document(path).kind
    payload = load_payload(path, kind)
    converter = CONVERTERS[kind]
    assert converter.to_stored(converter.from_stored(payload)) == payload


@pytest.mark.parametrize("path", INVALID, ids=_id)
def test_invalid_documents(path: Path, capsys):
    kind = read_document(path).kind
    assert main(["validate", kind, str(path)]) == ExitCode.VIOLATION
    capsys.readouterr()


def test_cleavage_document(capsys):
    code = main(
        [
            "validate",
            "cleavage",
            str(CORPUS / "cleavages" / "z4-over-z2-odd.json"),
            "--fibration",
            str(CORPUS / "extensions" / "z4-over-z2.json"),
        ]
    )
    assert code == ExitCode.OK
    capsys.readouterr()


@pytest.mark.parametrize(
    "groupoid, family, count",
    [
        ("bz2", "z2", 2),
        ("bz2", "z3", 2),
        ("bz3", "z3", 3),
        ("interval", "interval-z2", 1),
        ("interval", "interval-mixed", 0),
        ("bz2-bz3", "bz2-bz3-mixed", 2),
    ],
)
def test_h2_on_corpus(groupoid: str, family: str, count: int, capsys):
    code = main(
        [
            "h2",
            str(CORPUS / "groupoids" / f"{groupoid}.json"),
            str(CORPUS / "families" / f"{family}.json"),
        ]
    )
    assert code == ExitCode.OK
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["payload"]["classes"]) == count
