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

"""
nacohom computes non-abelian 2-cocycles of finite groupoids, their
cohomology sets, and the extensions and simplicial maps they classify.

nacohom is licensed under the MIT license.
"""

from importlib import metadata

from . import exceptions
from .algebra import (
    FiniteGroup,
    FiniteGroupoid,
    GroupFamily,
    GroupIso,
    GroupoidFunctor,
    validate_functor,
    validate_group,
    validate_groupoid,
)
from .cocycle import (
    ActionMorphism,
    Cochain1,
    CohomologyClass,
    WeakAction,
    check_weak_identity,
    cohomologous,
    enumerate_cocycles,
    h2,
    nabla,
    validate_cocycle,
    validate_morphism,
)
from .config import Settings, get_settings
from .extensions import (
    Extension,
    ExtensionMorphism,
    ext_components,
    find_extension_morphism,
    generate_pool,
    interpretation_check,
    validate_extension,
)
from .grothendieck import (
    Cleavage,
    KernelIdentification,
    TwistedGroupoid,
    canonical_cleavage,
    check_equivalence,
    fiber_action,
    gamma,
    twist,
    twist_morphism,
)
from .nerve import (
    SimplicialHomotopy,
    SimplicialMap,
    TruncatedSimplicialSet,
    cocycle_to_map,
    map_to_cocycle,
    nerve_of_aut,
    nerve_of_groupoid,
    normalized_homotopic,
    representation_check,
)
from .report import TheoremReport, ValidationReport, Violation
from .two_groupoid import AutTwoGroupoid, TwoCell, build_aut

__version__ = metadata.version(__name__)

__all__ = (
    "ActionMorphism",
    "AutTwoGroupoid",
    "Cleavage",
    "Cochain1",
    "CohomologyClass",
    "Extension",
    "ExtensionMorphism",
    "FiniteGroup",
    "FiniteGroupoid",
    "GroupFamily",
    "GroupIso",
    "GroupoidFunctor",
    "KernelIdentification",
    "Settings",
    "SimplicialHomotopy",
    "SimplicialMap",
    "TheoremReport",
    "TruncatedSimplicialSet",
    "TwistedGroupoid",
    "TwoCell",
    "ValidationReport",
    "Violation",
    "WeakAction",
    "build_aut",
    "canonical_cleavage",
    "check_equivalence",
    "check_weak_identity",
    "cocycle_to_map",
    "cohomologous",
    "enumerate_cocycles",
    "exceptions",
    "ext_components",
    "fiber_action",
    "find_extension_morphism",
    "gamma",
    "generate_pool",
    "get_settings",
    "h2",
    "interpretation_check",
    "map_to_cocycle",
    "nabla",
    "nerve_of_aut",
    "nerve_of_groupoid",
    "normalized_homotopic",
    "representation_check",
    "twist",
    "twist_morphism",
    "validate_cocycle",
    "validate_extension",
    "validate_functor",
    "validate_group",
    "validate_groupoid",
    "validate_morphism",
)
