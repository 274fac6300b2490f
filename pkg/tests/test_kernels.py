"""Kernel agreement: jitted path vs pure-numpy path vs brute force."""

import numpy as np
import pytest

from flagops import kernels


def brute_length(window, n, margin=None):
    """Count inversions (i, j), 1 <= i <= n < j unbounded, by direct scan."""
    if margin is None:
        margin = (max(window) - min(window)) // n + 2

    def value(j):
        r = (j - 1) % n
        k = (j - 1 - r) // n
        return window[r] + k * n

    count = 0
    for i in range(1, n + 1):
        for j in range(i + 1, i + (margin + 1) * n + 1):
            if value(i) > value(j):
                count += 1
    return count


def random_windows(rng, n, count=40):
    out = []
    for _ in range(count):
        w = np.arange(1, n + 1, dtype=np.int64)
        for _ in range(rng.integers(0, 9)):
            i = int(rng.integers(0, n))
            # right multiplication by s_i as a window shuffle
            w = kernels.apply_transposition_numpy(w, n, i if i else n, (i if i else n) + 1)
        out.append(w)
    return out


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_length_matches_brute_force(n):
    rng = np.random.default_rng(11 + n)
    for w in random_windows(rng, n):
        assert kernels.length_numpy(w, n) == brute_length(w.tolist(), n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_backends_agree(n):
    rng = np.random.default_rng(5 + n)
    for w in random_windows(rng, n):
        assert int(kernels.length(w, n)) == kernels.length_numpy(w, n)
        got = np.asarray(kernels.cover_classes(w, n))
        want = kernels.cover_classes_numpy(w, n)
        assert got.tolist() == want.tolist()
        for v in random_windows(rng, n, count=3):
            assert kernels.product(w, v, n).tolist() == kernels.product_numpy(w, v, n).tolist()
        assert (
            kernels.apply_transposition(w, n, 1, 2).tolist()
            == kernels.apply_transposition_numpy(w, n, 1, 2).tolist()
        )


def test_cover_classes_drop_length_by_one():
    n = 3
    rng = np.random.default_rng(3)
    for w in random_windows(rng, n):
        base = kernels.length_numpy(w, n)
        for p, q in kernels.cover_classes_numpy(w, n):
            moved = kernels.apply_transposition_numpy(w, n, int(p), int(q))
            assert kernels.length_numpy(moved, n) == base - 1
