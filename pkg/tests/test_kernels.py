import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from eccad import _kernels_py as py
from eccad import kernels

ck = pytest.importorskip("eccad._ckernels")

ints = st.lists(st.integers(-(2**70), 2**70), min_size=1, max_size=12)


def test_dispatch_prefers_compiled():
    assert kernels.BACKEND == "cython"


def test_pure_python_switch():
    env = dict(os.environ, ECCAD_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from eccad import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


@settings(max_examples=100, deadline=None)
@given(
    st.dictionaries(st.integers(0, 2**40), st.integers(-99, 99), max_size=8),
    st.dictionaries(st.integers(0, 2**40), st.integers(-99, 99), max_size=8),
)
def test_mul_terms(a, b):
    assert ck.mul_terms(a, b) == py.mul_terms(a, b)


@settings(max_examples=100, deadline=None)
@given(ints)
def test_shift_and_variations(p):
    assert ck.dup_shift1(p) == py.dup_shift1(p)
    assert ck.sign_variations(p) == py.sign_variations(p)


@settings(max_examples=100, deadline=None)
@given(ints, st.integers(-(2**20), 2**20), st.integers(1, 2**20))
def test_eval_scaled(p, num, den):
    assert ck.dup_eval_scaled(p, num, den) == py.dup_eval_scaled(p, num, den)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=2, max_size=8))
def test_descartes(p):
    if p[-1] == 0 or p[0] == 0:
        return
    assert ck.descartes_01(p) == py.descartes_01(p)


@settings(max_examples=100, deadline=None)
@given(ints, st.lists(st.integers(-99, 99), min_size=1, max_size=6))
def test_prem(f, g):
    if g[-1] == 0:
        return
    assert ck.dup_prem(f, g) == py.dup_prem(f, g)
