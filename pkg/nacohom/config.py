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

"""Runtime limits shared by every exhaustive search."""

from functools import lru_cache

from pydantic import BaseSettings, Field


class Settings(BaseSettings):
    """Limits and fan-out width, read from ``NACOHOM_*`` environment
    variables."""

    max_objects: int = Field(64, ge=1)
    """Groupoids with more objects are refused."""
    max_arrows: int = Field(4096, ge=1)
    """Groupoids with more arrows are refused."""
    max_group_order: int = Field(24, ge=1)
    """Largest group for which all isomorphisms are enumerated."""
    search_budget: int = Field(2_000_000, ge=1)
    """Search nodes an exhaustive search may visit before giving up."""
    workers: int = Field(1, ge=1)
    """Threads used to fan out independent candidates."""
    pool_limit: int = Field(512, ge=1)
    """Cap on the size of a generated extension pool."""
    canonical_form_max_order: int = Field(8, ge=1)
    """Largest group for which the brute-force canonical table is
    computed."""

    class Config:
        env_prefix = "NACOHOM_"


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
