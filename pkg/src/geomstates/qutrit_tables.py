"""Reference tables of three-level structure constants.

The C values and the d values with all indices in the traceless sector are
asserted against computed constants in the test suite.  The d entries that
involve the identity index are kept separately: the computed ground truth is
d[j,j,0] = 0 (the identity component is carried by the explicit delta term)
and d[0,j,j] = d[j,0,j] = +sqrt(2/3), which differs from the commonly
printed table values; those rows are reported, never asserted.
"""

from itertools import permutations

import numpy as np

SQ3 = np.sqrt(3.0)

_C_BASE = {
    (1, 2, 3): 1.0,
    (4, 5, 8): SQ3 / 2,
    (6, 7, 8): SQ3 / 2,
    (1, 4, 7): 0.5,
    (1, 5, 6): -0.5,
    (2, 4, 6): 0.5,
    (2, 5, 7): 0.5,
    (3, 4, 5): 0.5,
    (3, 6, 7): -0.5,
}

_D_BASE = {
    (1, 1, 8): 1 / SQ3,
    (2, 2, 8): 1 / SQ3,
    (3, 3, 8): 1 / SQ3,
    (8, 8, 8): -1 / SQ3,
    (4, 4, 8): -1 / (2 * SQ3),
    (5, 5, 8): -1 / (2 * SQ3),
    (6, 6, 8): -1 / (2 * SQ3),
    (7, 7, 8): -1 / (2 * SQ3),
    (3, 4, 4): 0.5,
    (3, 5, 5): 0.5,
    (3, 6, 6): -0.5,
    (3, 7, 7): -0.5,
    (1, 4, 6): 0.5,
    (1, 5, 7): 0.5,
    (2, 4, 7): -0.5,
    (2, 5, 6): 0.5,
}


def _sign(perm) -> int:
    perm = list(perm)
    s = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                s = -s
    return s


def full_c_table() -> np.ndarray:
    """Totally antisymmetric C over flat indices 0..8."""
    c = np.zeros((9, 9, 9))
    for (i, j, k), v in _C_BASE.items():
        seen = set()
        for p in permutations(range(3)):
            idx = ((i, j, k)[p[0]], (i, j, k)[p[1]], (i, j, k)[p[2]])
            if idx in seen:
                continue
            seen.add(idx)
            c[idx] = _sign(p) * v
    return c


def full_d_table() -> np.ndarray:
    """Totally symmetric d over the traceless indices (0-row/col/slab zero)."""
    d = np.zeros((9, 9, 9))
    for (i, j, k), v in _D_BASE.items():
        for p in permutations((i, j, k)):
            d[p] = v
    return d


def paper_zero_index_d(mu: int, nu: int, rho: int) -> float:
    """The printed table value for a d entry with an identity index."""
    idx = (mu, nu, rho)
    if idx.count(0) != 1:
        return 0.0
    rest = [i for i in idx if i != 0]
    if rest[0] != rest[1]:
        return 0.0
    return np.sqrt(2.0 / 3.0) if idx[2] == 0 else -np.sqrt(2.0 / 3.0)
