from __future__ import annotations

import importlib
import random

import pytest

from linkirr import _pykernels, kernels

ck = pytest.importorskip("linkirr._ckernels", reason="compiled kernels not built")


def _rows(rng, n, p):
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return rows


def test_backend_selection(monkeypatch):
    monkeypatch.setenv("LINKIRR_PURE", "1")
    mod = importlib.reload(kernels)
    assert mod.BACKEND == "python"
    monkeypatch.delenv("LINKIRR_PURE")
    mod = importlib.reload(kernels)
    assert mod.BACKEND == "compiled"


def test_canon_parity():
    rng = random.Random(5)
    for _ in range(1500):
        n = rng.randint(0, 14)
        rows = _rows(rng, n, rng.random())
        assert ck.canon(n, rows) == _pykernels.canon(n, rows)


def test_canon_parity_highly_symmetric():
    for n in (8, 12, 16):
        cyc = [((1 << ((i + 1) % n)) | (1 << ((i - 1) % n))) for i in range(n)]
        assert ck.canon(n, cyc) == _pykernels.canon(n, cyc)
    full = (1 << 20) - 1
    kn = [full & ~(1 << i) for i in range(20)]
    assert ck.canon(20, kn) == _pykernels.canon(20, kn)


def test_extend_and_regular_children_parity():
    rng = random.Random(9)
    for _ in range(60):
        n = rng.randint(1, 7)
        rows = _rows(rng, n, rng.random())
        code = _pykernels.canon_code(n, rows)
        crow = _pykernels.rows_from_code(n, code)
        assert ck.rows_from_code(n, code) == crow
        assert ck.extend_children(n, crow, code) == _pykernels.extend_children(n, crow, code)
    for n, r in [(8, 3), (9, 4), (10, 3)]:
        rows = [0] * n
        assert ck.regular_children(n, r, rows) == _pykernels.regular_children(n, r, rows)


def test_graphical_sequence_parity():
    rng = random.Random(1)
    for _ in range(500):
        degs = [rng.randint(0, 6) for _ in range(rng.randint(0, 8))]
        assert bool(ck.graphical_sequence(degs)) == bool(_pykernels.graphical_sequence(degs))


def test_graphical_sequence_known():
    assert _pykernels.graphical_sequence([3, 3, 3, 3])
    assert not _pykernels.graphical_sequence([3, 3, 1, 1])
    assert not _pykernels.graphical_sequence([1])
    assert _pykernels.graphical_sequence([])


def test_labeled_count_guards():
    assert _pykernels.count_labeled_classes(1) == 1
    with pytest.raises(ValueError):
        _pykernels.count_labeled_classes(9)
