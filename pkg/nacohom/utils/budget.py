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

import logging
import threading
from typing import Iterable, Optional, Union

from ..config import get_settings
from ..exceptions import BudgetExceeded

logger = logging.getLogger(__name__)


class Budget:
    """A thread-safe counter of search nodes.

    Args:
        limit (int): How many nodes may be spent.
        what (str): Name used in the :class:`BudgetExceeded` message.
    """

    __slots__: Iterable[str] = ("limit", "what", "spent", "_lock")

    def __init__(self, limit: int, what: str = "search") -> None:
        self.limit = limit
        self.what = what
        self.spent = 0
        self._lock = threading.Lock()

    @classmethod
    def resolve(
        cls, budget: Union[int, Budget, None], what: str = "search"
    ) -> Budget:
        """Share an existing budget, or start a new one from an int or
        from the settings."""

        if isinstance(budget, Budget):
            return budget
        if budget is None:
            budget = get_settings().search_budget
        return cls(budget, what)

    def spend(self, amount: int = 1) -> None:
        with self._lock:
            self.spent += amount
            if self.spent > self.limit:
                logger.warning(
                    "%s budget of %d nodes exhausted", self.what, self.limit
                )
                raise BudgetExceeded(f"{self.what} node count", self.limit)

    def check_size(self, size: int, what: Optional[str] = None) -> None:
        """Refuse up front when a search space is known to be too big."""

        if size > self.limit:
            raise BudgetExceeded(what or f"{self.what} space", self.limit)
