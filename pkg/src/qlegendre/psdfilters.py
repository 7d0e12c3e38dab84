"""Arithmetic eligibility filters on special-lag PSD values.

For an even-length Legendre pair in canonical balance form, the exact
half-lag values x = psd(A, l/2) and y = psd(B, l/2) satisfy

    x + y = 2l + 2,   y = 2 mod 8,   both sums of two squares

(and x is then automatically 0 mod 4).  The same eligible set constrains
the quarter lag when 4 | l.  The mod-3 family of filters covers lengths
divisible by 6 through the l/3- and l/6-compressions.
"""
from __future__ import annotations

from dataclasses import dataclass

from .gaussint import GaussInt
from .numtheory import factorize, is_sum_of_two_squares, squarefree_part
from .compression import CompressedSeq, compress


@dataclass(frozen=True)
class PsdPairTable:
    """Eligible (psd(A, lag), psd(B, lag)) values at a special lag."""

    length: int
    lag: int
    pairs: tuple[tuple[int, int], ...]


def _eligible_pairs(l: int) -> tuple[tuple[int, int], ...]:
    total = 2 * l + 2
    out = []
    y = 2
    while y <= total:
        x = total - y
        if is_sum_of_two_squares(x) and is_sum_of_two_squares(y):
            if x % 4 != 0:
                raise AssertionError("eligible x must be divisible by 4")
            out.append((x, y))
        y += 8
    out.sort()
    return tuple(out)


def eligible_half_psd_pairs(l: int) -> PsdPairTable:
    """All (x, y) the half lag can take for an even length l."""
    if l < 2 or l % 2 != 0:
        raise ValueError(f"half-lag table needs even l >= 2, got {l}")
    return PsdPairTable(l, l // 2, _eligible_pairs(l))


def eligible_quarter_psd_pairs(l: int) -> PsdPairTable:
    """All (x, y) the quarter lag can take when 4 divides l; the same
    value set as the half lag, anchored at lag l/4."""
    if l < 4 or l % 4 != 0:
        raise ValueError(f"quarter-lag table needs 4 | l, got {l}")
    return PsdPairTable(l, l // 4, _eligible_pairs(l))


def mod3_admissible(n: int) -> bool:
    """Whether n can equal a^2 - a*b + b^2: no prime = 2 mod 3 may divide
    its squarefree part."""
    if n < 0:
        return False
    if n <= 1:
        return True
    for p in factorize(squarefree_part(n)):
        if p % 3 == 2:
            return False
    return True


def seed_a3(l: int, a: int, b: int) -> CompressedSeq:
    """The l/3-compression seed [0, a+ib, -(a+ib)] for l = 0 mod 6.

    Requires |a|+|b| <= l/3, a^2+b^2 <= (2l+2)/3 and |a|+|b| = l/3 mod 2;
    any decompression then has psd(., 1) = 3(a^2+b^2) at the compressed
    level.
    """
    if l % 6 != 0 or l < 6:
        raise ValueError(f"seed_a3 needs l divisible by 6, got {l}")
    m = l // 3
    weight = abs(a) + abs(b)
    if weight > m:
        raise ValueError(f"|a|+|b| = {weight} exceeds l/3 = {m}")
    if 3 * (a * a + b * b) > 2 * l + 2:
        raise ValueError(
            f"a^2+b^2 = {a * a + b * b} exceeds (2l+2)/3 = {(2 * l + 2) / 3:g}"
        )
    if (weight - m) % 2 != 0:
        raise ValueError(f"|a|+|b| = {weight} must have the parity of l/3 = {m}")
    z = GaussInt(a, b)
    return CompressedSeq([GaussInt(0, 0), z, -z], ratio=m)


def a3_seed_candidates(l: int) -> list[tuple[int, int]]:
    """All (a, b) passing the seed_a3 preconditions, in (a, b) order.

    mod3_admissible is deliberately not applied here: it constrains PSD
    values only under the integrality hypotheses of
    integral_compression_filter, which these seeds do not satisfy (the
    length-18 solution's seed has psd 6, which the norm form misses).
    """
    if l % 6 != 0 or l < 6:
        raise ValueError(f"a3 seeds need l divisible by 6, got {l}")
    m = l // 3
    out = []
    for a in range(-m, m + 1):
        for b in range(-m, m + 1):
            w = abs(a) + abs(b)
            if w > m or (w - m) % 2 != 0:
                continue
            if 3 * (a * a + b * b) > 2 * l + 2:
                continue
            out.append((a, b))
    return out


def integral_compression_filter(a6: CompressedSeq) -> tuple[bool, bool]:
    """Integrality conditions on an l/6-compression A_6 (six entries).

    First flag: the induced l/3-compression A_3 has a_0 - a_2 and
    a_1 - a_2 rational, making psd(A_3, 1) an integer of the form
    a^2 - a*b + b^2.  Second flag: the analogous condition on A_6 itself,
    a_0 - a_3 + a_5 - a_2 and a_4 - a_1 + a_5 - a_2 rational.
    """
    if len(a6) != 6:
        raise ValueError(f"expected a 6-entry compression, got {len(a6)} entries")
    e = a6.entries
    a3 = [e[0] + e[3], e[1] + e[4], e[2] + e[5]]
    flag3 = (a3[0] - a3[2]).is_rational() and (a3[1] - a3[2]).is_rational()
    flag6 = (e[0] - e[3] + e[5] - e[2]).is_rational() and (
        e[4] - e[1] + e[5] - e[2]
    ).is_rational()
    return flag3, flag6


def two_square_compression_filter(a6: CompressedSeq) -> tuple[bool, bool]:
    """Companion flags: a_1 == a_2 at the A_3 level forces psd(A_3, 1)
    to be a sum of two squares; a_4 + a_5 == a_1 + a_2 at the A_6 level
    does the same for psd(A_6, 1)."""
    if len(a6) != 6:
        raise ValueError(f"expected a 6-entry compression, got {len(a6)} entries")
    e = a6.entries
    a3 = [e[0] + e[3], e[1] + e[4], e[2] + e[5]]
    return a3[1] == a3[2], e[4] + e[5] == e[1] + e[2]


def sixfold_compression(a) -> CompressedSeq:
    """Convenience: the l/6-compression (six entries) of a sequence whose
    length is divisible by 6."""
    ent = a.entries if hasattr(a, "entries") else tuple(a)
    if len(ent) % 6 != 0:
        raise ValueError(f"length {len(ent)} is not divisible by 6")
    return compress(ent, 6)
