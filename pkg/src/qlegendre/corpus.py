"""Reference corpus of known quaternary Legendre pairs and PSD data.

Two families are embedded:

  * seed family — for p in {3, 5, 7, 13, 19, 31, 41}, the half-vector
    that expands to a Legendre partner of the decompressed seed A
    (origin: seed construction at length 2p);
  * direct family — pairs of even length l in {2, 4, 8, 12, 16, 18, 20,
    22, 24} (origin: direct search at length l), together with the full
    eligible half-lag PSD table, the member of it each pair realizes,
    and the quarter-lag PSD values where 4 | l.

Every loader re-verifies the pair exactly before returning it.
"""
from __future__ import annotations

from .pairs import LegendrePair
from .sequences import parse_qseq
from .seeds import HalfVector, build_seed_b, decompress_seed_a

SEED_PRIMES = (3, 5, 7, 13, 19, 31, 41)

# p -> [b_1 .. b_{(p-1)/2}]
SEED_HALF_VECTORS: dict[int, str] = {
    3: "[1]",
    5: "[1,i]",
    7: "[1,-i,-1]",
    13: "[1,1,-1,i,1,i]",
    19: "[1,-1,1,-i,-1,-i,-i,1,1]",
    31: "[1,-1,1,-1,-1,-i,-1,-i,-i,-1,i,i,-i,-1,-1]",
    41: "[1,1,-i,1,-1,-i,-1,i,1,i,1,-i,i,i,i,-i,1,1,-1,-i]",
}

EVEN_LENGTHS = (2, 4, 8, 12, 16, 18, 20, 22, 24)

EVEN_A: dict[int, str] = {
    2: "[1,-1]",
    4: "[1,1,-1,-1]",
    8: "[1,1,-1,-i,-1,1,-1,i]",
    12: "[1,1,1,-1,i,-i,1,-1,-1,-1,-i,i]",
    16: "[1,1,1,-1,-i,-1,i,1,i,-1,i,-1,-i,-i,i,-i]",
    18: "[1,1,-1,i,-1,-1,-i,1,-1,i,-i,1,-1,-i,1,-i,i,i]",
    20: "[1,1,1,-1,i,-i,-i,i,i,1,i,-1,-1,-i,-1,1,-i,-i,i,-1]",
    22: "[1,1,1,1,-1,-1,-1,1,-1,1,-1,-i,i,1,-1,-1,-i,i,-i,-i,i,i]",
    24: "[1,1,1,1,1,-1,1,1,-1,-1,1,-1,1,-1,-1,1,-1,1,-1,-1,-1,1,-1,-1]",
}

EVEN_B: dict[int, str] = {
    2: "[1,i]",
    4: "[1,i,1,-1]",
    8: "[1,1,1,i,-1,1,-1,-1]",
    12: "[1,1,-1,-1,1,-1,1,-1,-1,1,1,i]",
    16: "[1,1,1,-1,1,1,-1,1,-1,i,-i,-i,-1,i,i,-1]",
    18: "[1,1,-1,i,-i,-1,1,-1,1,i,-1,-1,i,i,1,1,-i,-i]",
    20: "[1,1,1,-i,-i,-i,i,-1,-i,i,-i,i,1,-1,i,1,i,-1,i,-1]",
    22: "[1,1,1,1,-1,1,1,-1,-i,1,-i,i,i,i,-1,-i,-1,i,-i,-1,i,-1]",
    24: "[1,1,1,1,1,i,-1,-1,-i,1,-1,i,1,-1,-i,-1,1,i,-1,1,-i,-1,-1,i]",
}

# full eligible half-lag table (psd(A, l/2), psd(B, l/2)), ascending first
# component, for the lengths of the direct family
EXPECTED_HALF_PSD_TABLE: dict[int, tuple[tuple[int, int], ...]] = {
    2: ((4, 2),),
    4: ((0, 10), (8, 2)),
    8: ((0, 18), (8, 10), (16, 2)),
    12: ((0, 26), (8, 18), (16, 10)),
    16: ((0, 34), (8, 26), (16, 18), (32, 2)),
    18: ((4, 34), (20, 18), (36, 2)),
    20: ((8, 34), (16, 26), (32, 10), (40, 2)),
    22: ((20, 26), (36, 10)),
    24: ((0, 50), (16, 34), (32, 18), (40, 10)),
}

# the table member each direct-family pair realizes at the half lag
REALIZED_HALF_PSD: dict[int, tuple[int, int]] = {
    2: (4, 2),
    4: (0, 10),
    8: (16, 2),
    12: (16, 10),
    16: (32, 2),
    18: (20, 18),
    20: (16, 26),
    22: (36, 10),
    24: (0, 50),
}

# (psd(A, l/4), psd(B, l/4)) for the direct-family pairs with 4 | l
REALIZED_QUARTER_PSD: dict[int, tuple[int, int]] = {
    4: (8, 2),
    8: (8, 10),
    12: (16, 10),
    16: (16, 18),
    20: (32, 10),
    24: (0, 50),
}

# feasibility of the seed route among odd primes <= 47
SEED_FEASIBLE_PRIMES = (3, 5, 7, 13, 19, 23, 31, 37, 41, 43)
SEED_INFEASIBLE_PRIMES = (11, 17, 29, 47)


def seed_half_vector(p: int) -> HalfVector:
    text = SEED_HALF_VECTORS[p]
    symbols = tuple(parse_qseq(text))
    return HalfVector(p, symbols)


def corpus_seed_pair(p: int) -> LegendrePair:
    """The verified length-2p pair grown from the seed at p."""
    if p not in SEED_HALF_VECTORS:
        raise KeyError(f"no corpus seed entry for p={p}")
    a = decompress_seed_a(p)
    b = build_seed_b(p, seed_half_vector(p).symbols)
    pair = LegendrePair.check(a, b)
    if not pair.verified:
        raise AssertionError(f"corpus seed entry p={p} failed verification")
    return pair


def corpus_even_pair(l: int) -> LegendrePair:
    """The verified direct-family pair of even length l."""
    if l not in EVEN_A:
        raise KeyError(f"no corpus entry for length {l}")
    pair = LegendrePair.check(parse_qseq(EVEN_A[l]), parse_qseq(EVEN_B[l]))
    if not pair.verified:
        raise AssertionError(f"corpus entry l={l} failed verification")
    return pair


def all_corpus_pairs() -> list[tuple[str, LegendrePair]]:
    """Every corpus pair with a neutral origin label, seeds first."""
    out: list[tuple[str, LegendrePair]] = []
    for p in SEED_PRIMES:
        out.append((f"seed construction, p={p}", corpus_seed_pair(p)))
    for l in EVEN_LENGTHS:
        out.append((f"direct search, length {l}", corpus_even_pair(l)))
    return out


__all__ = [
    "SEED_PRIMES",
    "SEED_HALF_VECTORS",
    "EVEN_LENGTHS",
    "EVEN_A",
    "EVEN_B",
    "EXPECTED_HALF_PSD_TABLE",
    "REALIZED_HALF_PSD",
    "REALIZED_QUARTER_PSD",
    "SEED_FEASIBLE_PRIMES",
    "SEED_INFEASIBLE_PRIMES",
    "seed_half_vector",
    "corpus_seed_pair",
    "corpus_even_pair",
    "all_corpus_pairs",
]
