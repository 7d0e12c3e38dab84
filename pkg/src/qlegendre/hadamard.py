"""Hadamard matrices of order 2l+2 built from verified length-l pairs.

The block layout is a bordered two-by-two arrangement of circulants:

    [ t00 t01 |  1 .. 1   1 .. 1 ]
    [ t10  1  |  1 .. 1  -1 ..-1 ]
    [  1   1  |                  ]
    [  :   :  |  C(A)      C(B)  ]
    [  1  -1  |                  ]
    [  :   :  | C(~B)^T  -C(~A)^T]

with corner (t00, t01, t10) = (-1, -1, -1) for odd l and (-1, i, -i) for
even l, where ~X is the entrywise conjugate.  The pair is normalized to
canonical balance form first; both checkers work on the exact integer
Gram product, so a True answer is a proof.
"""
from __future__ import annotations

import numpy as np

from .gaussint import GaussInt
from .matrices import GaussMatrix, circulant_from_entries
from .pairs import normalize
from .sequences import QSeq


def quaternary_hadamard_from_pair(a: QSeq, b: QSeq) -> GaussMatrix:
    """Order 2l+2 matrix with unit entries and Gram (2l+2) I."""
    a, b = normalize(a, b)
    l = len(a)
    n = 2 * l + 2
    ca = circulant_from_entries(a.entries)
    cb = circulant_from_entries(b.entries)
    cb_bar_t = circulant_from_entries(z.conj() for z in b.entries).transpose()
    nca_bar_t = (-circulant_from_entries(z.conj() for z in a.entries)).transpose()

    re = np.ones((n, n), dtype=np.int64)
    im = np.zeros((n, n), dtype=np.int64)
    re[0, 0] = -1
    if l % 2 == 1:
        re[0, 1] = -1
        re[1, 0] = -1
    else:
        re[0, 1] = 0
        im[0, 1] = 1
        re[1, 0] = 0
        im[1, 0] = -1
    re[1, 2 + l :] = -1
    re[2 + l :, 1] = -1
    re[2 : 2 + l, 2 : 2 + l] = ca.re
    im[2 : 2 + l, 2 : 2 + l] = ca.im
    re[2 : 2 + l, 2 + l :] = cb.re
    im[2 : 2 + l, 2 + l :] = cb.im
    re[2 + l :, 2 : 2 + l] = cb_bar_t.re
    im[2 + l :, 2 : 2 + l] = cb_bar_t.im
    re[2 + l :, 2 + l :] = nca_bar_t.re
    im[2 + l :, 2 + l :] = nca_bar_t.im
    h = GaussMatrix(re, im)
    if not is_quaternary_hadamard(h):
        raise AssertionError("constructed matrix failed its own Gram check")
    return h


def _unit_entries(m: GaussMatrix) -> bool:
    return bool(np.all(np.abs(m.re) + np.abs(m.im) == 1))


def is_quaternary_hadamard(h: GaussMatrix) -> bool:
    """Exact check: unit entries and H (conj H)^T = n I."""
    if not _unit_entries(h):
        return False
    gram = h @ h.conj_transpose()
    return gram.is_scalar_identity(GaussInt(h.n, 0))


def binary_from_quaternary(h: GaussMatrix) -> GaussMatrix:
    """Doubled-order {-1, 1} matrix [[X+Y, X-Y], [Y-X, X+Y]] from H = X+iY.

    Verified after construction; a failure here can only mean the input
    was not a quaternary Hadamard matrix (or a bug), so it raises.
    """
    x, y = h.re, h.im
    p = x + y
    q = x - y
    n = h.n
    re = np.zeros((2 * n, 2 * n), dtype=np.int64)
    re[:n, :n] = p
    re[:n, n:] = q
    re[n:, :n] = -q
    re[n:, n:] = p
    k = GaussMatrix(re, np.zeros_like(re))
    if not is_binary_hadamard(k):
        raise AssertionError("doubled matrix failed the binary Gram check")
    return k


def is_binary_hadamard(m: GaussMatrix) -> bool:
    """Exact check: real entries in {-1, 1} and M M^T = n I."""
    if np.any(m.im):
        return False
    if not np.all(np.abs(m.re) == 1):
        return False
    gram = m @ m.transpose()
    return gram.is_scalar_identity(GaussInt(m.n, 0))
