import os

import numpy as np
import pytest

import bbshot

SPEC_DIR = os.environ.get(
    "BBSHOT_SPEC_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "specs")
)


@pytest.fixture(scope="module")
def code1():
    return bbshot.load(os.path.join(SPEC_DIR, "code1.spec"))


def test_parameters(code1):
    assert (code1.n, code1.k, code1.N) == (42, 18, 21)
    assert code1.deg_g == 9


def test_matrices_commute(code1):
    hx, hz = code1.hx, code1.hz
    assert hx.shape == (21, 42)
    assert not ((hx.astype(int) @ hz.T.astype(int)) % 2).any()
    assert not ((code1.rx.astype(int) @ hx.astype(int)) % 2).any()


def test_structure_checks(code1):
    assert all(code1.structure_checks().values())


def test_build_matches_load():
    c = bbshot.build(21, [0, 3, 9], [0, 3, 9], name="c")
    assert c.k == 18
    assert np.array_equal(c.hx, bbshot.load(os.path.join(SPEC_DIR, "code1.spec")).hx)


def test_analyze(code1):
    rep = bbshot.analyze(code1)
    assert rep["dim"] == 12
    assert rep["d_exact"] is not None
    assert rep["d_lower"] <= rep["d_exact"] <= rep["d_upper"]
    assert rep["t_S"] == (rep["d_exact"] - 1) // 2


def test_theory_and_intervals():
    assert bbshot.p_fail_theory(21, 1, 0.01) == pytest.approx(0.018512, abs=1e-5)
    lo, hi = bbshot.wilson_interval(0, 100)
    assert lo == 0.0 and 0 < hi < 0.05
    ok, text = bbshot.round_condition(1, 4, 3)
    assert isinstance(ok, bool) and "R=3" in text


def test_simulations_are_deterministic(code1):
    a = bbshot.simulate_logical(code1, 0.01, 0.01, rounds=1, max_trials=300, min_failures=0, seed=7)
    b = bbshot.simulate_logical(code1, 0.01, 0.01, rounds=1, max_trials=300, min_failures=0, seed=7)
    assert a == b
    assert a["trials"] == 300 and 0 <= a["failures"] <= 300
    s = bbshot.simulate_syndrome(code1, 0.01, max_trials=500, min_failures=0, seed=3)
    assert s["trials"] == 500 and s["ci_lo"] <= s["rate"] <= s["ci_hi"]


def test_bad_decoder_raises(code1):
    with pytest.raises(Exception):
        bbshot.simulate_logical(code1, 0.01, 0.01, data_decoder="nope", max_trials=10)
