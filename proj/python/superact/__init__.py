# Copyright 2026 The superactivation-sim Authors
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

"""Numerical demonstration of quantum channel capacity superactivation."""

from ._core import (
    SystemLayout,
    PureState,
    DensityMatrix,
    KrausChannel,
    EntropyReport,
    CoherentInfoReport,
    PptResult,
    Q1Result,
    ProtocolReport,
    kron,
    partial_trace,
    partial_transpose,
    hermitian_eigenvalues,
    trace_norm,
    bell,
    classically_correlated,
    hiding_flags,
    flagged_bell,
    twisted_private_state,
    fidelity_with_pure,
    erasure_channel,
    identity_channel,
    apply_channel,
    choi,
    is_ppt,
    ppt_distinguishability_bound,
    von_neumann_entropy,
    coherent_information_state,
    channel_coherent_information,
    q1_search,
    run_protocol,
    run_protocol_full_simulation,
    untwist,
    sweep,
    __version__,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
