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

import math

import numpy as np
import pytest

import superact


def test_protocol_headline():
    rep = superact.run_protocol(2, 0.5)
    assert rep.fidelity_psi0 == pytest.approx(0.75, abs=1e-10)
    expected_ic = 1.0 - (-(0.25 * math.log2(0.25)) - 0.75 * math.log2(0.75))
    assert rep.i_c == pytest.approx(expected_ic, abs=1e-9)
    assert rep.final_ab.shape == (4, 4)


def test_full_simulation_agrees():
    fast = superact.run_protocol(2, 0.25)
    full = superact.run_protocol_full_simulation(2, 0.25)
    assert np.max(np.abs(fast.final_ab - full.final_ab)) < 1e-9


def test_entropy_and_states():
    cc = superact.classically_correlated()
    assert superact.von_neumann_entropy(cc).entropy_bits == pytest.approx(1.0)
    b0 = superact.bell(0)
    assert superact.fidelity_with_pure(cc, b0) == pytest.approx(0.5)


def test_qmat_interop_with_numpy():
    z = np.diag([1.0, -1.0]).astype(complex)
    zz = superact.kron(z, z)
    psi = superact.bell(0).amplitudes
    assert np.allclose(zz @ psi, psi)

    layout = superact.SystemLayout([("A", 2), ("B", 2)])
    reduced, sub = superact.partial_trace(superact.bell(0).projector(), layout, ["B"])
    assert np.allclose(reduced, np.eye(2) / 2)


def test_ppt_and_flags():
    b0 = superact.DensityMatrix(
        superact.bell(0).projector(), superact.SystemLayout([("A", 2), ("B", 2)])
    )
    res = superact.is_ppt(b0, ["B"])
    assert not res.is_ppt
    assert res.min_eigenvalue == pytest.approx(-0.5, abs=1e-10)

    tau0, tau1 = superact.hiding_flags(4)
    bound = superact.ppt_distinguishability_bound(tau0, tau1, ["B'"])
    assert bound == pytest.approx(0.75, abs=1e-9)


def test_q1_search_deterministic():
    ch = superact.erasure_channel(0.5, 2)
    a = superact.q1_search(ch, restarts=2, max_iters=20, seed=7)
    b = superact.q1_search(ch, restarts=2, max_iters=20, seed=7)
    assert a.best_ic <= 1e-6
    assert a.iterate_trace == b.iterate_trace


def test_invalid_inputs_raise():
    with pytest.raises(ValueError):
        superact.bell(2)
    with pytest.raises(ValueError):
        superact.erasure_channel(1.5, 2)
