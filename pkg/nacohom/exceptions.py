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

from typing import TYPE_CHECKING, Any, Dict, Iterable, Optional, Tuple

if TYPE_CHECKING:  # pragma: no cover
    from .report import ValidationReport


class NacohomBaseException(Exception):
    """The base class for all exceptions in nacohom."""

    __slots__: Iterable[str] = ()


# data-side exceptions
class DataException(NacohomBaseException):
    """Base class for exceptions about the shape of input data."""

    __slots__: Iterable[str] = ()


class StructuralError(DataException):
    """The data is malformed: wrong dimensions, dangling ids or partial
    maps. Axiom violations are reported, not raised."""

    __slots__: Iterable[str] = ()


class UnknownObject(DataException):
    """An object id that does not belong to the groupoid."""

    __slots__: Iterable[str] = ("object_id",)

    def __init__(self, object_id: int) -> None:
        self.object_id = object_id

        super().__init__(f"Unknown object {object_id}.")


class UnknownArrow(DataException):
    """An arrow id that does not belong to the groupoid."""

    __slots__: Iterable[str] = ("arrow_id",)

    def __init__(self, arrow_id: int) -> None:
        self.arrow_id = arrow_id

        super().__init__(f"Unknown arrow {arrow_id}.")


class CompositionError(DataException):
    """Two cells or arrows were composed along boundaries that do not
    match."""

    __slots__: Iterable[str] = ()


class DocumentError(DataException):
    """A JSON document could not be parsed into a payload.

    Args:
        location (str): Where in the document the problem is.
        message (str): What went wrong.
    """

    __slots__: Iterable[str] = ("location",)

    def __init__(self, location: str, message: str) -> None:
        self.location = location

        super().__init__(f"{location}: {message}")


# domain-side exceptions
class DomainException(NacohomBaseException):
    """Base class for exceptions raised by the algebra itself."""

    __slots__: Iterable[str] = ()


class InvalidInput(DomainException):
    """An operation was handed a value that its validator rejects.

    Args:
        what (str): The kind of value.
        report (ValidationReport): The failing report.
    """

    __slots__: Iterable[str] = ("report",)

    def __init__(self, what: str, report: ValidationReport) -> None:
        self.report = report

        first = report.violations[0].message if report.violations else "?"
        super().__init__(
            f"Invalid {what}: {len(report.violations)} violation(s), "
            f"first: {first}"
        )


class PreconditionFailed(DomainException):
    """A documented precondition of an operation does not hold."""

    __slots__: Iterable[str] = ()


class TheoremViolation(DomainException):
    """A property that holds by theorem was found to fail. Carries the
    counterexample so that it can be dumped."""

    __slots__: Iterable[str] = ("counterexample",)

    def __init__(
        self, message: str, counterexample: Optional[Dict[str, Any]] = None
    ) -> None:
        self.counterexample = counterexample or {}

        super().__init__(message)


class NotAFibration(DomainException):
    """The functor has an (object, base arrow) pair without a lift, or it
    is not bijective on objects."""

    __slots__: Iterable[str] = ("witness",)

    def __init__(
        self, message: str, witness: Optional[Tuple[int, int]] = None
    ) -> None:
        self.witness = witness

        super().__init__(message)


class BudgetExceeded(NacohomBaseException):
    """A size guard or a search budget was exhausted.

    Args:
        what (str): The guarded quantity.
        limit (int): The configured limit.
    """

    __slots__: Iterable[str] = ("what", "limit")

    def __init__(self, what: str, limit: int) -> None:
        self.what = what
        self.limit = limit

        super().__init__(f"{what} exceeds the configured limit of {limit}.")
