import pytest

from quiverpaths import verify


def test_small_suite_passes():
    results = verify.run_all({"max_size": 8, "fock_size": 5, "max_dim": 5, "max_energy": 2, "quiver_dim": 3, "seeds": 4})
    assert results
    assert all(r.passed for r in results), [r.line() for r in results if not r.passed]
    assert all(r.count > 0 for r in results)


def test_delta_fault_is_caught():
    r = verify.check_delta(max_size=4, faults=("delta-sign",))
    assert not r.passed
    assert r.counterexample["Y"] == [1]


def test_fock_fault_is_caught():
    results = verify.check_fock(max_size=3, span=2, faults=("fock-sign",))
    assert not all(r.passed for r in results)


def test_skip_reduce_fault_is_caught():
    assert verify.check_lifts(1, (0, 0), 2, max_size=8).passed
    assert not verify.check_lifts(1, (0, 0), 2, max_size=8, faults=("skip-reduce",)).passed


def test_only_restricts_groups():
    results = verify.run_all(only=["energy"])
    assert [r.name for r in results] == ["energy_equals_v0"]
    with pytest.raises(ValueError):
        verify.run_all(only=["nope"])


def test_result_line():
    r = verify.CheckResult("x", False, 3, {"Y": [1]})
    assert r.line().startswith("FAIL")
    assert "x" in r.line()
