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

"""Reports returned by validators and theorem checks.

Validators never raise on axiom violations. They collect
:class:`Violation` records instead, and an empty report means the value is
valid."""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel


class Violation(BaseModel):
    code: str
    """Short machine-readable category, e.g. ``assoc`` or ``cond4``."""
    message: str
    where: List[int] = []
    """The ids (elements, arrows, pairs) the violation is about."""


class ValidationReport(BaseModel):
    violations: List[Violation] = []

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, code: str, message: str, *where: int) -> None:
        self.violations.append(
            Violation(code=code, message=message, where=list(where))
        )

    def extend(self, other: "ValidationReport", prefix: str = "") -> None:
        for v in other.violations:
            self.violations.append(
                Violation(
                    code=v.code, message=prefix + v.message, where=v.where
                )
            )

    def codes(self) -> List[str]:
        return [v.code for v in self.violations]


class TheoremReport(BaseModel):
    """The outcome of a theorem check on one instance.

    For the bijection theorems, ``left_count`` counts cohomology classes and
    ``right_count`` the classes on the other side; ``rows`` is the matching
    table."""

    theorem: str
    instance: str
    ok: bool
    left_count: int = 0
    right_count: int = 0
    rows: List[Dict[str, Any]] = []
    counterexample: Optional[Dict[str, Any]] = None
