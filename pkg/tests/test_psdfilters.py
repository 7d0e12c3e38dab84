"""Eligibility tables and the mod-3 filter family."""
import pytest

from qlegendre.compression import CompressedSeq, compress
from qlegendre.corpus import (
    EVEN_LENGTHS,
    EXPECTED_HALF_PSD_TABLE,
    corpus_even_pair,
    corpus_seed_pair,
)
from qlegendre.gaussint import GaussInt
from qlegendre.numtheory import is_sum_of_two_squares
from qlegendre.psdfilters import (
    a3_seed_candidates,
    eligible_half_psd_pairs,
    eligible_quarter_psd_pairs,
    integral_compression_filter,
    mod3_admissible,
    seed_a3,
    sixfold_compression,
    two_square_compression_filter,
)
from qlegendre.sequences import psd


def test_tables_match_frozen_values():
    for l in EVEN_LENGTHS:
        assert eligible_half_psd_pairs(l).pairs == EXPECTED_HALF_PSD_TABLE[l], l


def test_table_structure_invariants():
    for l in range(2, 60, 2):
        table = eligible_half_psd_pairs(l)
        assert table.length == l and table.lag == l // 2
        assert list(table.pairs) == sorted(table.pairs)
        for x, y in table.pairs:
            assert x + y == 2 * l + 2
            assert y % 8 == 2
            assert x % 4 == 0
            assert is_sum_of_two_squares(x) and is_sum_of_two_squares(y)


def test_quarter_table():
    t = eligible_quarter_psd_pairs(20)
    assert t.lag == 5
    assert t.pairs == eligible_half_psd_pairs(20).pairs
    with pytest.raises(ValueError):
        eligible_quarter_psd_pairs(18)
    with pytest.raises(ValueError):
        eligible_half_psd_pairs(9)


def _brute_norm_form(n: int) -> bool:
    # n = a^2 - a*b + b^2 has a solution
    bound = 2 * int(n**0.5) + 2
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if a * a - a * b + b * b == n:
                return True
    return False


def test_mod3_admissible_oracle():
    for n in range(0, 2000):
        assert mod3_admissible(n) == _brute_norm_form(n), n
    assert not mod3_admissible(-1)
    assert mod3_admissible(12) and mod3_admissible(48)
    assert not mod3_admissible(24)


def test_seed_a3_accepts_valid():
    c = seed_a3(18, 3, 1)
    assert c.ratio == 6
    assert c.entries == (GaussInt(0, 0), GaussInt(3, 1), GaussInt(-3, -1))
    assert seed_a3(12, 0, 2).ratio == 4
    # the seed of the known length-18 solution
    c18 = seed_a3(18, 1, -1)
    assert c18.entries == (GaussInt(0, 0), GaussInt(1, -1), GaussInt(-1, 1))
    assert psd(c18, 1) == pytest.approx(6)


def test_seed_a3_rejections():
    with pytest.raises(ValueError):
        seed_a3(16, 1, 1)  # not divisible by 6
    with pytest.raises(ValueError):
        seed_a3(18, 3, 2)  # parity of |a|+|b| differs from l/3
    with pytest.raises(ValueError):
        seed_a3(18, 7, 1)  # weight above l/3
    with pytest.raises(ValueError):
        seed_a3(18, 6, 0)  # psd bound 3(a^2+b^2) > 2l+2


def test_a3_candidates_structure():
    for l in (6, 12, 18, 24):
        cands = a3_seed_candidates(l)
        assert cands == sorted(cands)
        m = l // 3
        for a, b in cands:
            assert abs(a) + abs(b) <= m
            assert (abs(a) + abs(b)) % 2 == m % 2
            assert 3 * (a * a + b * b) <= 2 * l + 2
            seed_a3(l, a, b)  # must construct
    # the known length-18 solution's seed must be enumerable
    assert (1, -1) in a3_seed_candidates(18)
    with pytest.raises(ValueError):
        a3_seed_candidates(8)


def test_corpus_threefold_compressions():
    # the length-18 solution compresses to a seed of the [0, z, -z] shape
    pair = corpus_even_pair(18)
    c = compress(pair.a, 3)
    assert c.entries == (GaussInt(0, 0), GaussInt(1, -1), GaussInt(-1, 1))
    assert psd(c, 1) == pytest.approx(6)


def test_sixfold_integral_cases():
    # frozen integral sixfold compressions and their lag-1/lag-2 psd values
    a12 = sixfold_compression(corpus_even_pair(12).a)
    assert [(z.re, z.im) for z in a12.entries] == [
        (2, 0), (0, 0), (0, 0), (-2, 0), (0, 0), (0, 0)
    ]
    assert integral_compression_filter(a12) == (True, True)
    assert psd(a12, 1) == pytest.approx(16)
    assert psd(a12, 2) == pytest.approx(0, abs=1e-9)

    a24 = sixfold_compression(corpus_even_pair(24).a)
    assert [(z.re, z.im) for z in a24.entries] == [
        (2, 0), (0, 0), (-2, 0), (2, 0), (0, 0), (-2, 0)
    ]
    assert integral_compression_filter(a24) == (True, True)
    assert psd(a24, 1) == pytest.approx(0, abs=1e-9)
    assert psd(a24, 2) == pytest.approx(48)

    a6 = sixfold_compression(corpus_seed_pair(3).a)
    assert psd(a6, 1) == pytest.approx(4)
    assert psd(a6, 2) == pytest.approx(12)

    t3, t6 = two_square_compression_filter(a12)
    assert t3 and t6
    _, t6_24 = two_square_compression_filter(a24)
    assert t6_24

    for l in (12, 18, 24):
        a6l = sixfold_compression(corpus_even_pair(l).a)
        assert isinstance(a6l, CompressedSeq) and len(a6l) == 6
        f3, f6 = integral_compression_filter(a6l)
        assert isinstance(f3, bool) and isinstance(f6, bool)
        # the admissibility consequence holds whenever a flag fires
        if f3:
            assert mod3_admissible(round(psd(a6l, 2)))
        if f6:
            assert mod3_admissible(round(psd(a6l, 1)))
    with pytest.raises(ValueError):
        sixfold_compression(corpus_even_pair(8).a)
    with pytest.raises(ValueError):
        integral_compression_filter(compress(corpus_even_pair(8).a, 4))
