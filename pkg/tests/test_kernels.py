"""The two kernel lanes must be indistinguishable to the bit."""

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from qsem import _kernels
from qsem._kernels import coalesce, fallback

try:
    from qsem._kernels import _accel
except ImportError:
    _accel = None

needs_accel = pytest.mark.skipif(_accel is None, reason="compiled lane not built")


def _as_arrays(docs):
    offsets = np.zeros(len(docs) + 1, dtype=np.int64)
    np.cumsum([len(d) for d in docs], out=offsets[1:])
    tokens = np.array([t for d in docs for t in d] or [0], dtype=np.int32)[: int(offsets[-1])]
    return np.ascontiguousarray(tokens), offsets


def _dense(triplets, n):
    rows, cols, weights = coalesce(*triplets, n)
    out = np.zeros((n, n), dtype=np.int64)
    out[rows, cols] = weights
    return out


def _random_docs(seed, n_vocab=12, n_docs=6, max_len=40):
    rng = np.random.default_rng(seed)
    return [
        rng.integers(0, n_vocab, size=rng.integers(0, max_len + 1)).tolist()
        for _ in range(n_docs)
    ]


def test_fallback_hal_matches_oracle():
    for seed in range(10):
        docs = _random_docs(seed)
        tokens, offsets = _as_arrays(docs)
        for window in (1, 2, 5, 11):
            got = _dense(fallback.hal_pairs(tokens, offsets, window), 12)
            assert np.array_equal(got, oracles.naive_hal(docs, 12, window)), (seed, window)


def test_fallback_centered_matches_oracle():
    for seed in range(6):
        docs = _random_docs(seed)
        tokens, offsets = _as_arrays(docs)
        for target in (0, 5):
            for radius, window in ((1, 5), (3, 2), (4, 4), (20, 3)):
                got = _dense(fallback.centered_pairs(tokens, offsets, target, radius, window), 12)
                got = got + got.T
                want = oracles.naive_centered(docs, 12, target, radius, window)
                assert np.array_equal(got, want), (seed, target, radius, window)


def test_fallback_global_matches_oracle():
    for seed in range(6):
        docs = _random_docs(seed, max_len=25)
        tokens, offsets = _as_arrays(docs)
        for radius, window in ((1, 5), (2, 2), (3, 6), (10, 4)):
            got = _dense(fallback.global_pairs(tokens, offsets, radius, window), 12)
            got = got + got.T
            want = oracles.naive_global(docs, 12, radius, window)
            assert np.array_equal(got, want), (seed, radius, window)


@needs_accel
def test_lanes_agree_exactly():
    for seed in range(8):
        docs = _random_docs(seed, n_vocab=30, n_docs=10, max_len=120)
        tokens, offsets = _as_arrays(docs)
        for window in (1, 3, 7):
            a = coalesce(*_accel.hal_pairs(tokens, offsets, window), 30)
            b = coalesce(*fallback.hal_pairs(tokens, offsets, window), 30)
            for x, y in zip(a, b):
                assert np.array_equal(x, y)
        for target, radius, window in ((0, 2, 5), (7, 6, 3), (29, 1, 1)):
            a = coalesce(*_accel.centered_pairs(tokens, offsets, target, radius, window), 30)
            b = coalesce(*fallback.centered_pairs(tokens, offsets, target, radius, window), 30)
            for x, y in zip(a, b):
                assert np.array_equal(x, y)
        for radius, window in ((2, 5), (6, 3), (1, 1), (50, 9)):
            a = coalesce(*_accel.global_pairs(tokens, offsets, radius, window), 30)
            b = coalesce(*fallback.global_pairs(tokens, offsets, radius, window), 30)
            for x, y in zip(a, b):
                assert np.array_equal(x, y)


def test_coalesce_sums_duplicates():
    rows = np.array([2, 0, 2, 0], dtype=np.int32)
    cols = np.array([1, 0, 1, 0], dtype=np.int32)
    weights = np.array([3, 1, 4, 10], dtype=np.int64)
    r, c, w = coalesce(rows, cols, weights, 3)
    assert r.tolist() == [0, 2]
    assert c.tolist() == [0, 1]
    assert w.tolist() == [11, 7]
    assert r.dtype == np.int32 and w.dtype == np.int64


def test_coalesce_row_major_order():
    rows = np.array([1, 0, 1, 0], dtype=np.int32)
    cols = np.array([0, 1, 1, 0], dtype=np.int32)
    weights = np.ones(4, dtype=np.int64)
    r, c, _ = coalesce(rows, cols, weights, 2)
    assert list(zip(r.tolist(), c.tolist())) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_empty_inputs():
    tokens = np.empty(0, dtype=np.int32)
    offsets = np.zeros(1, dtype=np.int64)
    for fn, args in (
        (fallback.hal_pairs, (tokens, offsets, 5)),
        (fallback.centered_pairs, (tokens, offsets, 0, 2, 5)),
        (fallback.global_pairs, (tokens, offsets, 2, 5)),
    ):
        rows, cols, weights = fn(*args)
        assert len(rows) == len(cols) == len(weights) == 0


def test_env_override_selects_lane():
    code = "import qsem; print(qsem.active_backend())"
    env = dict(os.environ, QSEM_KERNEL="python")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"
    if _accel is not None:
        env = dict(os.environ, QSEM_KERNEL="compiled")
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
        assert out.stdout.strip() == "compiled"


def test_env_override_rejects_unknown_value():
    code = "import qsem"
    env = dict(os.environ, QSEM_KERNEL="turbo")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.returncode != 0


@settings(max_examples=60, deadline=None)
@given(
    docs=st.lists(
        st.lists(st.integers(min_value=0, max_value=7), min_size=0, max_size=25),
        min_size=0,
        max_size=5,
    ),
    window=st.integers(min_value=1, max_value=8),
)
def test_hal_pairs_property(docs, window):
    tokens, offsets = _as_arrays(docs)
    got = _dense(_kernels.hal_pairs(tokens, offsets, window), 8)
    assert np.array_equal(got, oracles.naive_hal(docs, 8, window))


@settings(max_examples=40, deadline=None)
@given(
    docs=st.lists(
        st.lists(st.integers(min_value=0, max_value=5), min_size=0, max_size=18),
        min_size=0,
        max_size=4,
    ),
    radius=st.integers(min_value=1, max_value=6),
    window=st.integers(min_value=1, max_value=6),
)
def test_global_pairs_property(docs, radius, window):
    tokens, offsets = _as_arrays(docs)
    got = _dense(_kernels.global_pairs(tokens, offsets, radius, window), 6)
    assert np.array_equal(got + got.T, oracles.naive_global(docs, 6, radius, window))
