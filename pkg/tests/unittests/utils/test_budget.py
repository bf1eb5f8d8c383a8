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

import pytest
from pytest_mock import MockerFixture

from nacohom.exceptions import BudgetExceeded
from nacohom.utils import Budget


def test_spend_until_exhausted():
    budget = Budget(3, "test")
    budget.spend()
    budget.spend(2)
    assert budget.spent == 3
    with pytest.raises(BudgetExceeded) as exc:
        budget.spend()
    assert exc.value.limit == 3
    assert exc.value.what == "test node count"


def test_check_size():
    budget = Budget(10)
    budget.check_size(10)
    with pytest.raises(BudgetExceeded) as exc:
        budget.check_size(11, "cocycle space")
    assert exc.value.what == "cocycle space"
    assert budget.spent == 0


def test_resolve_shares_budgets():
    budget = Budget(5)
    assert Budget.resolve(budget) is budget
    fresh = Budget.resolve(7, "fresh")
    assert fresh.limit == 7
    assert fresh.what == "fresh"


def test_resolve_reads_settings(mocker: MockerFixture):
    settings = mocker.Mock(search_budget=42)
    mocker.patch("nacohom.utils.budget.get_settings", return_value=settings)
    assert Budget.resolve(None).limit == 42
