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
import subprocess
import sys
from pathlib import Path
from typing import Any, Dict, Tuple

import pytest
from pytest_mock import MockerFixture

from nacohom.algebra import (
    FiniteGroup,
    FiniteGroupoid,
    GroupFamily,
    GroupIso,
    GroupoidFunctor,
    cyclic,
)
from nacohom.cli import ExitCode, build_parser, main
from nacohom.cocycle import WeakAction
from nacohom.exceptions import TheoremViolation
from nacohom.extensions import Extension
from nacohom.serialization import (
    CocycleConverter,
    ExtensionConverter,
    FamilyConverter,
    FunctorConverter,
    GroupConverter,
    GroupoidConverter,
    dump_document,
)
from nacohom.serialization.schema import CleavagePayload, GroupPayload

Run = Tuple[int, Dict[str, Any], str]


@pytest.fixture()
def corpus(tmp_path: Path, z4_action: WeakAction) -> Path:
    z2, z3 = cyclic(2), cyclic(3)
    bz2 = FiniteGroupoid.from_group(z2)
    bz3 = FiniteGroupoid.from_group(z3)
    k2, k3 = GroupFamily({0: z2}), GroupFamily({0: z3})
    cond4 = WeakAction.normalized(
        bz3, k3, [GroupIso.identity(z3)] * 3, {(1, 1): 1}
    )
    z4 = Extension.from_group_surjection(cyclic(4), z2, [0, 1, 0, 1])
    collapse = GroupoidFunctor.from_homomorphism(bz2, bz2, [0, 0])
    bad_bz2 = FiniteGroupoid(
        1, bz2.arrows, bz2.identity, bz2.compose_table, {0: 1, 1: 0}
    )
    bad_k2 = GroupFamily({0: FiniteGroup([[0, 1], [1, 1]])})
    docs = {
        "z2-group": ("group", GroupConverter().to_stored(z2)),
        "bad-group": ("group", GroupPayload(table=[[0, 1], [1, 1]])),
        "z2-groupoid": ("groupoid", GroupoidConverter().to_stored(bz2)),
        "z3-groupoid": ("groupoid", GroupoidConverter().to_stored(bz3)),
        "bad-groupoid": ("groupoid", GroupoidConverter().to_stored(bad_bz2)),
        "z2-family": ("family", FamilyConverter().to_stored(k2)),
        "z3-family": ("family", FamilyConverter().to_stored(k3)),
        "bad-family": ("family", FamilyConverter().to_stored(bad_k2)),
        "z4-cocycle": ("cocycle", CocycleConverter().to_stored(z4_action)),
        "cond4-cocycle": ("cocycle", CocycleConverter().to_stored(cond4)),
        "z4-extension": ("extension", ExtensionConverter().to_stored(z4)),
        "z4-functor": ("functor", FunctorConverter().to_stored(z4.projection)),
        "z4-cleavage": ("cleavage", CleavagePayload(lift=[0, 3])),
        "bad-cleavage": ("cleavage", CleavagePayload(lift=[2, 0])),
        "collapse": ("functor", FunctorConverter().to_stored(collapse)),
    }
    for name, (kind, payload) in docs.items():
        (tmp_path / f"{name}.json").write_text(dump_document(kind, payload))
    (tmp_path / "broken.json").write_text('{"kind": "group",')
    return tmp_path


def run(capsys: pytest.CaptureFixture[str], *argv: Any) -> Run:
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    doc = json.loads(captured.out) if captured.out else {}
    return code, doc, captured.err


def test_parser_requires_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_fiber_needs_a_cleavage_choice(corpus: Path):
    with pytest.raises(SystemExit):
        build_parser().parse_args(["fiber", str(corpus / "z4-functor.json")])


def test_validate_group(corpus: Path, capsys):
    code, doc, _ = run(capsys, "validate", "group", corpus / "z2-group.json")
    assert code == ExitCode.OK
    assert doc["kind"] == "report"
    assert doc["payload"]["violations"] == []


def test_validate_bad_group(corpus: Path, capsys):
    code, doc, _ = run(capsys, "validate", "group", corpus / "bad-group.json")
    assert code == ExitCode.VIOLATION
    assert doc["payload"]["violations"]


def test_validate_cocycle(corpus: Path, capsys):
    code, _, _ = run(capsys, "validate", "cocycle", corpus / "z4-cocycle.json")
    assert code == ExitCode.OK
    code, doc, _ = run(
        capsys, "validate", "cocycle", corpus / "cond4-cocycle.json"
    )
    assert code == ExitCode.VIOLATION
    codes = {v["code"] for v in doc["payload"]["violations"]}
    assert "cond4" in codes


@pytest.mark.parametrize(
    "kind, name", [("extension", "z4-extension"), ("functor", "z4-functor")]
)
def test_validate_other_kinds(kind: str, name: str, corpus: Path, capsys):
    code, _, _ = run(capsys, "validate", kind, corpus / f"{name}.json")
    assert code == ExitCode.OK


def test_validate_cleavage(corpus: Path, capsys):
    fibration = corpus / "z4-extension.json"
    code, _, _ = run(
        capsys,
        "validate",
        "cleavage",
        corpus / "z4-cleavage.json",
        "--fibration",
        fibration,
    )
    assert code == ExitCode.OK
    code, doc, _ = run(
        capsys,
        "validate",
        "cleavage",
        corpus / "bad-cleavage.json",
        "--fibration",
        fibration,
    )
    assert code == ExitCode.VIOLATION
    codes = sorted(v["code"] for v in doc["payload"]["violations"])
    assert codes == ["over", "unit"]


def test_validate_cleavage_needs_fibration(corpus: Path, capsys):
    code, _, err = run(
        capsys, "validate", "cleavage", corpus / "z4-cleavage.json"
    )
    assert code == ExitCode.VIOLATION
    assert "--fibration" in err


def test_validate_wrong_kind(corpus: Path, capsys):
    code, _, err = run(
        capsys, "validate", "groupoid", corpus / "z2-group.json"
    )
    assert code == ExitCode.DOCUMENT
    assert ":kind" in err


@pytest.mark.parametrize("name", ["broken.json", "missing.json"])
def test_unreadable_documents(name: str, corpus: Path, capsys):
    code, doc, err = run(capsys, "validate", "group", corpus / name)
    assert code == ExitCode.DOCUMENT
    assert doc == {}
    assert err.startswith("document error")


def test_h2(corpus: Path, capsys):
    code, doc, _ = run(
        capsys, "h2", corpus / "z2-groupoid.json", corpus / "z2-family.json"
    )
    assert code == ExitCode.OK
    assert doc["kind"] == "classes"
    classes = doc["payload"]["classes"]
    assert len(classes) == 2
    assert all("witnesses" not in c for c in classes)


def test_h2_with_witnesses(corpus: Path, capsys):
    code, doc, _ = run(
        capsys,
        "h2",
        corpus / "z2-groupoid.json",
        corpus / "z3-family.json",
        "--witnesses",
    )
    assert code == ExitCode.OK
    classes = doc["payload"]["classes"]
    assert sorted(c["size"] for c in classes) == [1, 3]
    assert all(len(c["witnesses"]) == c["size"] for c in classes)


def test_h2_rejects_invalid_groupoid(corpus: Path, capsys):
    code, doc, err = run(
        capsys, "h2", corpus / "bad-groupoid.json", corpus / "z2-family.json"
    )
    assert code == ExitCode.VIOLATION
    assert doc["kind"] == "report"
    codes = {v["code"] for v in doc["payload"]["violations"]}
    assert codes == {"inverse"}
    assert "invalid input" in err


@pytest.mark.parametrize("command", [["h2"], ["check", "interpretation"]])
def test_invalid_family_is_refused(command, corpus: Path, capsys):
    code, doc, _ = run(
        capsys,
        *command,
        corpus / "z2-groupoid.json",
        corpus / "bad-family.json",
    )
    assert code == ExitCode.VIOLATION
    messages = [v["message"] for v in doc["payload"]["violations"]]
    assert messages and all(m.startswith("K_0: ") for m in messages)


def test_budget_exit_code(corpus: Path, capsys):
    code, _, err = run(
        capsys,
        "h2",
        corpus / "z3-groupoid.json",
        corpus / "z3-family.json",
        "--budget",
        1,
    )
    assert code == ExitCode.BUDGET
    assert err.startswith("budget exceeded")


def test_twist_then_fiber(corpus: Path, capsys, tmp_path: Path):
    extension = tmp_path / "twisted.json"
    code, _, _ = run(
        capsys, "twist", corpus / "z4-cocycle.json", "-o", extension
    )
    assert code == ExitCode.OK
    assert json.loads(extension.read_text())["kind"] == "extension"

    back = tmp_path / "back.json"
    code, _, _ = run(capsys, "fiber", extension, "--canonical", "-o", back)
    assert code == ExitCode.OK
    assert back.read_text() == (corpus / "z4-cocycle.json").read_text()


def test_twist_total(corpus: Path, capsys):
    code, doc, _ = run(capsys, "twist", corpus / "z4-cocycle.json", "--total")
    assert code == ExitCode.OK
    assert doc["kind"] == "groupoid"
    assert doc["payload"]["label"] == "Z/2~"


def test_twist_invalid_cocycle(corpus: Path, capsys):
    code, doc, err = run(capsys, "twist", corpus / "cond4-cocycle.json")
    assert code == ExitCode.VIOLATION
    assert err.startswith("invalid input")
    assert doc["payload"]["violations"]


def test_fiber_with_cleavage(corpus: Path, capsys):
    code, doc, _ = run(
        capsys,
        "fiber",
        corpus / "z4-functor.json",
        "--cleavage",
        corpus / "z4-cleavage.json",
    )
    assert code == ExitCode.OK
    assert doc["kind"] == "cocycle"
    assert doc["payload"]["sigma"]["1,1"] == 1


def test_fiber_of_non_fibration(corpus: Path, capsys):
    collapse = corpus / "collapse.json"
    code, _, err = run(capsys, "fiber", collapse, "--canonical")
    assert code == ExitCode.VIOLATION
    assert "witness (0, 1)" in err


def test_gamma(corpus: Path, capsys):
    code, doc, _ = run(
        capsys, "gamma", corpus / "z4-extension.json", "--canonical"
    )
    assert code == ExitCode.OK
    assert doc["kind"] == "functor"
    assert sorted(doc["payload"]["arrow_map"]) == [0, 1, 2, 3]


def test_nerve_of_groupoid(corpus: Path, capsys):
    code, doc, _ = run(capsys, "nerve", corpus / "z2-groupoid.json")
    assert code == ExitCode.OK
    counts = [len(level) for level in doc["payload"]["simplices"]]
    assert counts == [1, 2, 4, 8]
    assert doc["payload"]["coskeletal"] == 2


def test_nerve_of_aut(corpus: Path, capsys):
    code, doc, _ = run(capsys, "nerve", corpus / "z3-family.json")
    assert code == ExitCode.OK
    counts = [len(level) for level in doc["payload"]["simplices"]]
    assert counts == [1, 2, 12, 216]


def test_nerve_of_wrong_kind(corpus: Path, capsys):
    code, _, _ = run(capsys, "nerve", corpus / "z4-cocycle.json")
    assert code == ExitCode.DOCUMENT


@pytest.mark.parametrize(
    "theorem", ["interpretation", "representation", "weak-identity"]
)
def test_check(theorem: str, corpus: Path, capsys):
    code, doc, _ = run(
        capsys,
        "check",
        theorem,
        corpus / "z2-groupoid.json",
        corpus / "z3-family.json",
    )
    assert code == ExitCode.OK
    payload = doc["payload"]
    assert payload["theorem"] == theorem
    assert payload["instance"] == "z2-groupoid/z3-family"
    assert payload["ok"]


def test_check_equivalence(corpus: Path, capsys):
    code, doc, _ = run(
        capsys,
        "check",
        "equivalence",
        corpus / "z2-groupoid.json",
        corpus / "z2-family.json",
        "--cleavage-limit",
        2,
    )
    assert code == ExitCode.OK
    assert doc["payload"]["left_count"] == 2


def test_theorem_violation_is_reported(
    corpus: Path, capsys, mocker: MockerFixture
):
    mocker.patch(
        "nacohom.cli.h2",
        side_effect=TheoremViolation("broken", {"class": 0}),
    )
    code, doc, err = run(
        capsys, "h2", corpus / "z2-groupoid.json", corpus / "z2-family.json"
    )
    assert code == ExitCode.VIOLATION
    assert err.startswith("theorem violation")
    assert doc["payload"]["counterexample"] == {"class": 0}
    assert not doc["payload"]["ok"]


def test_workers_are_passed_on(corpus: Path, capsys, mocker: MockerFixture):
    h2 = mocker.patch("nacohom.cli.h2", return_value=[])
    code, _, _ = run(
        capsys,
        "h2",
        corpus / "z2-groupoid.json",
        corpus / "z2-family.json",
        "--workers",
        3,
    )
    assert code == ExitCode.OK
    assert h2.call_args.kwargs["workers"] == 3


@pytest.mark.parametrize(
    "target, name",
    [
        ("group", "z2-group"),
        ("nerve", "z2-groupoid"),
        ("nerve", "z3-family"),
        ("cocycle", "z4-cocycle"),
    ],
)
def test_fuzz(target: str, name: str, corpus: Path, capsys):
    argv = ["fuzz", target, corpus / f"{name}.json", "--rounds", 6]
    code, doc, _ = run(capsys, *argv, "--seed", 7)
    assert code == ExitCode.OK
    payload = doc["payload"]
    assert payload["theorem"] == f"fuzz-{target}"
    assert payload["instance"] == f"{name}@7"
    assert payload["left_count"] == payload["right_count"] == 6
    _, again, _ = run(capsys, *argv, "--seed", 7)
    assert again == doc


def test_output_file(corpus: Path, capsys, tmp_path: Path):
    out = tmp_path / "report.json"
    code, doc, _ = run(
        capsys, "validate", "group", corpus / "z2-group.json", "-o", out
    )
    assert code == ExitCode.OK
    assert doc == {}
    assert json.loads(out.read_text())["kind"] == "report"


def test_module_entry_point(corpus: Path):
    result = subprocess.run(
        [
            sys.executable,
            "-m",
            "nacohom",
            "validate",
            "group",
            str(corpus / "z2-group.json"),
        ],
        text=True,
        capture_output=True,
    )
    assert result.returncode == 0, result.stderr
    assert json.loads(result.stdout)["kind"] == "report"
