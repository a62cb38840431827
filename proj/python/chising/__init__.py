# Copyright 2026 chising contributors
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.

"""Ising ground states on Chimera graphs: python bindings."""

from ._core import (
    Instance,
    Rng,
    brute_force,
    chimera_counts,
    embed_clique,
    gen_family,
    maxcut_counts,
    preprocess_counts,
    read_instance,
    run_heuristic,
    solve_exact,
    t99_microseconds,
    write_instance,
)

__version__ = "1.0.0"

__all__ = [
    "Instance",
    "Rng",
    "brute_force",
    "chimera_counts",
    "embed_clique",
    "gen_family",
    "maxcut_counts",
    "preprocess_counts",
    "read_instance",
    "run_heuristic",
    "solve_exact",
    "t99_microseconds",
    "write_instance",
    "__version__",
]
