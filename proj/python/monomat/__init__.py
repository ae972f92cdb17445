# Copyright 2026 The monomat Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for monomat."""

from monomat._monomat import (
    ModelSpec,
    MomentData,
    Polynomial,
    TensorModel,
    TrialReport,
    __version__,
    example_eigenvalues,
    limit_sweep,
    mc_estimate,
    rate_check,
    run_cli,
    sample_haar_unitary,
    verify,
)

__all__ = [
    "ModelSpec",
    "MomentData",
    "Polynomial",
    "TensorModel",
    "TrialReport",
    "__version__",
    "example_eigenvalues",
    "limit_sweep",
    "mc_estimate",
    "rate_check",
    "run_cli",
    "sample_haar_unitary",
    "verify",
]
