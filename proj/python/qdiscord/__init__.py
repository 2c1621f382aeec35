# Copyright 2026 The qdiscord Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Two-qubit quantum discord."""

from ._core import (
    DegenerateOutcome,
    DiscordReport,
    DomainError,
    G_func,
    H_func,
    InvalidState,
    NotApplicable,
    ParseError,
    QDiscordError,
    SingularMarginal,
    StationaryPoint,
    bell_diagonal,
    binary_entropy,
    conditional_entropy,
    decompose,
    discord,
    grid_oracle,
    is_x_state,
    counterexample_state,
    counterexample_state_printed,
    mutual_information,
    named_state,
    parse_density_matrix,
    random_state,
    serialize_density_matrix,
    stationary_points,
    werner,
    x_state,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
