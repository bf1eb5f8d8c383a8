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

import time

import pytest
from pytest_mock import MockerFixture

from nacohom.utils import ordered_map


def _slow_square(x: int) -> int:
    time.sleep(0.001 * (10 - x))
    return x * x


@pytest.mark.parametrize("workers", [1, 2, 4])
def test_order_is_kept(workers: int):
    assert ordered_map(_slow_square, range(10), workers) == [
        x * x for x in range(10)
    ]


def test_default_workers(mocker: MockerFixture):
    settings = mocker.Mock(workers=1)
    mocker.patch("nacohom.utils.parallel.get_settings", return_value=settings)
    fn = mocker.Mock(side_effect=lambda x: -x)
    assert ordered_map(fn, [1, 2]) == [-1, -2]
    assert fn.call_count == 2


def test_empty_input():
    assert ordered_map(_slow_square, [], 4) == []
