import os
import subprocess
import sys

import numpy as np
import pytest

from twistedtorus import kernels, pd_code_of_closure, torus_braid, twisted_torus_word
from twistedtorus.braid import BraidWord

numba_mod = pytest.importorskip("twistedtorus.kernels._numba")
numpy_mod = kernels.get_backend("numpy")


@pytest.mark.parametrize("flags", [(False, False, False), (True, True, True), (False, True, False)])
def test_scan_backends_agree(flags):
    a = numba_mod.scan_range(4, 150, *flags, 100)
    b = numpy_mod.scan_range(4, 150, *flags, 100)
    assert a[0] == b[0]
    assert np.array_equal(a[1], b[1])
    assert np.array_equal(a[2], b[2])
    assert a[4] == b[4]
    assert np.array_equal(a[3], b[3])



def test_scan_records_buffer_truncates_but_counts():
    records = np.zeros((2, 3), dtype=np.int64)
    n = 0
    for row in [(5, 2, 1), (7, 3, 4), (9, 2, 5)]:
        n = numba_mod._push(records, n, *row)
    assert n == 3
    assert records.tolist() == [[5, 2, 1], [7, 3, 4]]


def test_scan_clean_range_has_no_records():
    pairs, hist, counts, records, n = numba_mod.scan_range(4, 40, True, True, True, 3)
    assert n == 0 and not records.any() and not counts.any()
    assert hist.sum() == pairs


@pytest.mark.parametrize(
    "b",
    [
        BraidWord(2, (1,)),
        torus_braid(3, 2),
        BraidWord(3, (1, -2, 1, -2)),
        torus_braid(5, 3),
        twisted_torus_word(4, 3, -1),
    ],
)
def test_bracket_backends_agree(b):
    pd = np.asarray(pd_code_of_closure(b).crossings, dtype=np.int64) - 1
    assert np.array_equal(numba_mod.bracket_counts(pd), numpy_mod.bracket_counts(pd))


def test_bracket_counts_total_states():
    pd = np.asarray(pd_code_of_closure(torus_braid(4, 3)).crossings, dtype=np.int64) - 1
    table = numba_mod.bracket_counts(pd)
    assert table.sum() == 2 ** 9
    # the number of states with a A-smoothings is binomial(9, a)
    from math import comb

    assert [int(x) for x in table.sum(axis=1)] == [comb(9, a) for a in range(10)]


def test_env_flag_selects_numpy():
    env = dict(os.environ, TWISTEDTORUS_DISABLE_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", "import twistedtorus; print(twistedtorus.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "numpy"


def test_numpy_backend_end_to_end():
    env = dict(os.environ, TWISTEDTORUS_DISABLE_NUMBA="1")
    code = (
        "from twistedtorus import *\n"
        "r = scan_theorem(60, collect_stats=True, case_search=True, cross_check_walk=True, timing=False)\n"
        "assert r.ok, r.to_dict()\n"
        "print(jones(torus_braid(3, 2)))\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "t^1 + t^3 - t^4"
