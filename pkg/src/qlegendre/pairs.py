"""Legendre pairs: exact verification, balance data and normal form.

Two length-l sequences over {1, i, -1, -i} form a Legendre pair when

    paf(A, s) + paf(B, s) = -2   for s = 1..l-1.

Because paf(X, l-s) = conj(paf(X, s)), checking lags 1..floor(l/2) covers
all of them.  The row sums (alpha, beta) always satisfy
|alpha|^2 + |beta|^2 = 2: for odd l both are units, for even l one is 0
and the other has norm 2.  normalize() moves every pair to the canonical
balance form — alpha = beta = 1 for odd l, (alpha, beta) = (0, 1+i) for
even l — using only pair-preserving moves (swap, elementwise unit
multiplication, negation of one member, simultaneous conjugation).
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .gaussint import GaussInt, format_gauss
from .sequences import QSeq, format_qseq, parse_qseq, paf, row_sum

MINUS_TWO = GaussInt(-2, 0)


def is_legendre_pair(a: QSeq, b: QSeq) -> bool:
    """Exact pair test over lags 1..floor(l/2)."""
    l = len(a)
    if len(b) != l:
        raise ValueError(f"length mismatch: {l} vs {len(b)}")
    if l < 2:
        raise ValueError("Legendre pairs need length >= 2")
    return all(
        paf(a, s) + paf(b, s) == MINUS_TWO for s in range(1, l // 2 + 1)
    )


def balance_check(a: QSeq, b: QSeq) -> tuple[GaussInt, GaussInt]:
    """Row sums (alpha, beta); for a verified pair, also asserts the
    norm identity |alpha|^2 + |beta|^2 = 2 and its parity-specific form."""
    alpha = row_sum(a)
    beta = row_sum(b)
    if is_legendre_pair(a, b):
        if alpha.norm() + beta.norm() != 2:
            raise AssertionError("balance identity violated by a verified pair")
        if len(a) % 2 == 1:
            if not (alpha.is_unit() and beta.is_unit()):
                raise AssertionError("odd-length pair with non-unit row sum")
        else:
            if not (
                (alpha.norm() == 0 and beta.norm() == 2)
                or (alpha.norm() == 2 and beta.norm() == 0)
            ):
                raise AssertionError("even-length pair without a zero row sum")
    return alpha, beta


def normalize(a: QSeq, b: QSeq) -> tuple[QSeq, QSeq]:
    """Canonical balance form of a verified pair.

    Odd length: multiply each member by the conjugate of its row sum,
    giving alpha = beta = 1.  Even length: swap so beta carries norm 2,
    negate B if Re(beta) < 0, conjugate both if beta = 1-i, giving
    (alpha, beta) = (0, 1+i).  Idempotent.
    """
    if not is_legendre_pair(a, b):
        raise ValueError("normalize expects a verified Legendre pair")
    alpha = row_sum(a)
    beta = row_sum(b)
    if len(a) % 2 == 1:
        if not (alpha.is_unit() and beta.is_unit()):
            raise AssertionError("odd-length pair with non-unit row sum")
        return a.scaled(alpha.conj()), b.scaled(beta.conj())
    if beta.norm() == 0:
        a, b = b, a
        beta = alpha
    if beta.norm() != 2:
        raise AssertionError("even-length pair without a norm-2 row sum")
    if beta.re < 0:
        b = -b
        beta = -beta
    if beta.im < 0:
        a = a.conj()
        b = b.conj()
    return a, b


@dataclass(frozen=True)
class LegendrePair:
    """A pair together with its balance data and verification flag."""

    a: QSeq
    b: QSeq
    alpha: GaussInt
    beta: GaussInt
    verified: bool

    @classmethod
    def check(cls, a: QSeq, b: QSeq) -> "LegendrePair":
        return cls(a, b, row_sum(a), row_sum(b), is_legendre_pair(a, b))

    @property
    def length(self) -> int:
        return len(self.a)


def pair_to_json(p: LegendrePair) -> str:
    return json.dumps(
        {
            "length": p.length,
            "A": format_qseq(p.a),
            "B": format_qseq(p.b),
            "alpha": format_gauss(p.alpha),
            "beta": format_gauss(p.beta),
            "verified": p.verified,
        },
        indent=2,
        sort_keys=True,
    )


def pair_from_json(text: str) -> LegendrePair:
    doc = json.loads(text)
    a = parse_qseq(doc["A"])
    b = parse_qseq(doc["B"])
    if len(a) != doc["length"] or len(b) != doc["length"]:
        raise ValueError("length field disagrees with the sequences")
    p = LegendrePair.check(a, b)
    if format_gauss(p.alpha) != doc["alpha"] or format_gauss(p.beta) != doc["beta"]:
        raise ValueError("row-sum fields disagree with the sequences")
    if p.verified != doc["verified"]:
        raise ValueError("verified flag disagrees with recomputation")
    return p


def canonical_key(a: QSeq, b: QSeq) -> tuple[str, str]:
    """Deduplication key: the lexicographically least (A, B) text over
    swaps, independent rotations of each member and simultaneous
    conjugation.  A reporting convention only; never used in verification.
    """
    best: tuple[str, str] | None = None
    for x, y in ((a, b), (b, a)):
        for x2, y2 in ((x, y), (x.conj(), y.conj())):
            for r in range(len(x2)):
                xr = format_qseq(x2.rotated(r))
                for t in range(len(y2)):
                    cand = (xr, format_qseq(y2.rotated(t)))
                    if best is None or cand < best:
                        best = cand
    assert best is not None
    return best
