import os
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seqmerit import kernels

BACKENDS = kernels.backends()
needs_compiled = pytest.mark.skipif("compiled" not in BACKENDS,
                                    reason="compiled extension not built")


def naive_rho(values):
    n = len(values)
    return [sum(values[k] * values[k + t] for k in range(n - t)) for t in range(n)]


@pytest.mark.parametrize("name", sorted(BACKENDS))
@given(st.lists(st.sampled_from([-1, 1]), min_size=1, max_size=40))
@settings(max_examples=60, deadline=None)
def test_aperiodic_matches_naive(name, values):
    assert list(BACKENDS[name].aperiodic_pm(values)) == naive_rho(values)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_empty_prefix_conventions(name):
    core = BACKENDS[name]
    assert sorted(core.bounded_leaves(3, 2, [])) == list(range(8))
    # rho(n-1) = +-1 rules out c = 0 for every prefix
    assert core.bounded_leaves(5, 0, []) == []
    assert core.bounded_leaves(4, 0, [1, 1, 1, 1, 1]) == []


@needs_compiled
@pytest.mark.parametrize("n", range(2, 15))
def test_bounded_leaves_parity(n):
    py, c = BACKENDS["python"], BACKENDS["compiled"]
    for bound in range(4):
        for prefix in ([], [-1], [-1, -1], [1, -1, 1]):
            assert sorted(py.bounded_leaves(n, bound, prefix)) == \
                sorted(c.bounded_leaves(n, bound, prefix))


@needs_compiled
@pytest.mark.parametrize("n", range(2, 17))
def test_min_energy_parity(n):
    py, c = BACKENDS["python"], BACKENDS["compiled"]
    for prefix in ([], [-1, -1]):
        assert py.min_energy(n, prefix) == c.min_energy(n, prefix)


@needs_compiled
@pytest.mark.parametrize("n", range(1, 13))
def test_perfect_rows_parity(n):
    assert sorted(BACKENDS["python"].perfect_rows(n)) == sorted(BACKENDS["compiled"].perfect_rows(n))


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_kernel_length_limit(name):
    core = BACKENDS[name]
    assert core.MAX_KERNEL_N == kernels.MAX_KERNEL_N == 62
    with pytest.raises(ValueError):
        core.bounded_leaves(63, 1, [])


def _backend_in_subprocess(value):
    env = dict(os.environ)
    env.pop("SEQMERIT_PURE_PYTHON", None)
    if value is not None:
        env["SEQMERIT_PURE_PYTHON"] = value
    out = subprocess.run([sys.executable, "-c", "from seqmerit import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    return out.stdout.strip()


def test_env_var_forces_python_backend():
    assert _backend_in_subprocess("1") == "python"
    default = "compiled" if kernels.compiled_available() else "python"
    assert _backend_in_subprocess(None) == default
    assert _backend_in_subprocess("0") == default


def test_benchmark_quick_run():
    script = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    out = subprocess.run([sys.executable, str(script), "--quick", "--repeat", "1"],
                         capture_output=True, text=True, check=True)
    rows = out.stdout.splitlines()
    assert rows[0] == "kernel,case,backend,seconds,speedup"
    assert len(rows) == 1 + 4 * len(BACKENDS)
