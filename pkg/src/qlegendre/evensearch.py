"""Direct search for even-length pairs in canonical balance form.

Pipeline: the eligibility table fixes the exact values the half-lag PSDs
can take; per-role candidate enumeration walks the 4^l entry tree
depth-first, pruning on three exact integer walks (row sum, alternating
sum, i-weighted quarter sum where 4 | l); a hash join on exact PAF
half-profiles then pairs the roles, probing with -2 - paf(B, s).  Every
emitted pair is re-verified exactly.

Symmetry reductions are explicit plan flags, default off, so that
exhaustiveness claims stay honest: rotation keeps only rotation-minimal
A members (any rotation of A preserves the pair property), conjugation
keeps one of {(A, B), (conj A, i conj B)} — the i rescaling restores
B's canonical row sum 1+i after conjugation.  With reductions off the
output is the complete set of canonical-form pairs in deterministic
order.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .gaussint import GaussInt, UNITS
from .numtheory import two_square_reps
from .sequences import QSeq, format_qseq, parse_qseq, paf
from .pairs import LegendrePair
from .psdfilters import eligible_half_psd_pairs, seed_a3
from .compression import decompress


class InfeasibleLengthError(ValueError):
    """No eligible half-lag PSD pair exists: a pair is provably absent."""


@dataclass(frozen=True)
class SearchPlan:
    """A fully-determined search: two runs with equal plans and worker
    counts emit identical ordered output."""

    length: int
    half_pair: Optional[tuple[int, int]] = None  # None: run the whole table
    quarter_pair: Optional[tuple[int, int]] = None
    reduce_rotation: bool = False
    reduce_conjugation: bool = False
    first_only: bool = False
    workers: int = 1
    float_screen: bool = False
    tol: float = 1e-6
    a3_seed: Optional[tuple[int, int]] = None
    join_chunk: int = 1 << 20


_ROW_TARGET = {"A": (0, 0), "B": (1, 1)}


def _walk_feasible(
    dx: int, dy: int, rem: int, targets: Sequence[tuple[int, int]]
) -> bool:
    # each remaining entry moves the walk by exactly 1 in Manhattan terms
    for tx, ty in targets:
        d = abs(dx - tx) + abs(dy - ty)
        if d <= rem and (d - rem) % 2 == 0:
            return True
    return False


def enumerate_role_candidates(
    l: int,
    role: str,
    half_norm: int,
    quarter_norms: Optional[Sequence[int]] = None,
    *,
    prefix: tuple[int, ...] = (),
    rotation_minimal: bool = False,
) -> Iterator[QSeq]:
    """All length-l sequences for one role, DFS order over the canonical
    symbol order.

    Constraints: row sum 0 for role A and 1+i for role B; alternating sum
    of norm half_norm; when quarter_norms is given (4 | l), the i-weighted
    sum must land on one of those norms.  prefix pins leading symbol
    indices (the work-partitioning hook).
    """
    if l < 2 or l % 2 != 0:
        raise ValueError(f"even length required, got {l}")
    if role not in _ROW_TARGET:
        raise ValueError(f"role must be 'A' or 'B', got {role!r}")
    row_targets = (_ROW_TARGET[role],)
    alt_targets = tuple(two_square_reps(half_norm))
    if not alt_targets:
        return iter(())
    quarter_targets: Optional[tuple[tuple[int, int], ...]] = None
    quarter_set: Optional[frozenset[int]] = None
    if quarter_norms is not None:
        if l % 4 != 0:
            raise ValueError("quarter constraints need 4 | l")
        quarter_set = frozenset(quarter_norms)
        quarter_targets = tuple(
            itertools.chain.from_iterable(two_square_reps(q) for q in quarter_set)
        )
        if not quarter_targets:
            return iter(())

    # i^j factors per position, as (re move, im move) multipliers
    unit_xy = ((1, 0), (0, 1), (-1, 0), (0, -1))
    chosen: list[int] = []

    def quarter_step(j: int, idx: int) -> tuple[int, int]:
        # contribution of symbol idx at position j to sum_j a_j i^j
        k = (idx + j) % 4  # i^j * i^idx = i^(j+idx)
        return unit_xy[k]

    def walk(
        j: int, rx: int, ry: int, ax: int, ay: int, qx: int, qy: int
    ) -> Iterator[QSeq]:
        if j == l:
            if (rx, ry) != row_targets[0]:
                return
            if ax * ax + ay * ay != half_norm:
                return
            if quarter_set is not None and (qx * qx + qy * qy) not in quarter_set:
                return
            seq = QSeq(UNITS[i] for i in chosen)
            if rotation_minimal and not _is_rotation_minimal(seq):
                return
            yield seq
            return
        rem = l - j - 1
        alt_sign = 1 if j % 2 == 0 else -1
        fixed = prefix[j] if j < len(prefix) else None
        for idx in range(4):
            if fixed is not None and idx != fixed:
                continue
            mx, my = unit_xy[idx]
            rx2, ry2 = rx + mx, ry + my
            ax2, ay2 = ax + alt_sign * mx, ay + alt_sign * my
            if not _walk_feasible(rx2, ry2, rem, row_targets):
                continue
            if not _walk_feasible(ax2, ay2, rem, alt_targets):
                continue
            qmx, qmy = quarter_step(j, idx)
            qx2, qy2 = qx + qmx, qy + qmy
            if quarter_targets is not None and not _walk_feasible(
                qx2, qy2, rem, quarter_targets
            ):
                continue
            chosen.append(idx)
            yield from walk(j + 1, rx2, ry2, ax2, ay2, qx2, qy2)
            chosen.pop()

    return walk(0, 0, 0, 0, 0, 0, 0)


def _is_rotation_minimal(seq: QSeq) -> bool:
    key = format_qseq(seq)
    return all(format_qseq(seq.rotated(k)) >= key for k in range(1, len(seq)))


def _float_screen_ok(seq: QSeq, bound: float) -> bool:
    vals = np.array([complex(z) for z in seq.entries])
    spectrum = np.abs(len(seq) * np.fft.ifft(vals)) ** 2
    return bool(spectrum[1:].max() <= bound)


def _a3_candidates(
    l: int,
    seed: tuple[int, int],
    half_norm: int,
    quarter_norms: Optional[Sequence[int]],
    rotation_minimal: bool,
) -> Iterator[QSeq]:
    """A-role candidates drawn from decompressions of an l/3 seed."""
    a, b = seed
    comp = seed_a3(l, a, b)
    m = comp.ratio
    alt_targets = tuple(two_square_reps(half_norm))

    def prune(partial: tuple[tuple[GaussInt, ...], ...]) -> bool:
        # positions covered so far: entry j holds slots j, j+3, ..., j+3(m-1)
        filled = 3 * [False]
        rx = ry = ax = ay = 0
        for j, split in enumerate(partial):
            filled[j] = True
            for n, u in enumerate(split):
                pos = j + 3 * n
                rx += u.re
                ry += u.im
                sign = 1 if pos % 2 == 0 else -1
                ax += sign * u.re
                ay += sign * u.im
        rem = sum(m for j, f in enumerate(filled) if not f)
        if not _walk_feasible(rx, ry, rem, ((0, 0),)):
            return False
        return _walk_feasible(ax, ay, rem, alt_targets)

    quarter_set = frozenset(quarter_norms) if quarter_norms is not None else None

    def accept(seq: QSeq) -> bool:
        ax = ay = 0
        qx = qy = 0
        for j, z in enumerate(seq.entries):
            if j % 2 == 0:
                ax += z.re
                ay += z.im
            else:
                ax -= z.re
                ay -= z.im
            if quarter_set is not None:
                k = j % 4
                if k == 0:
                    qx += z.re
                    qy += z.im
                elif k == 1:
                    qx -= z.im
                    qy += z.re
                elif k == 2:
                    qx -= z.re
                    qy -= z.im
                else:
                    qx += z.im
                    qy -= z.re
        if ax * ax + ay * ay != half_norm:
            return False
        if quarter_set is not None and (qx * qx + qy * qy) not in quarter_set:
            return False
        if sum(z.re for z in seq.entries) != 0 or sum(z.im for z in seq.entries) != 0:
            return False
        return not rotation_minimal or _is_rotation_minimal(seq)

    return decompress(comp, predicate=accept, prune=prune)


def _enumerate_task(
    l: int,
    role: str,
    half_norm: int,
    quarter_norms: Optional[tuple[int, ...]],
    prefix: tuple[int, ...],
    rotation_minimal: bool,
) -> list[str]:
    return [
        format_qseq(seq)
        for seq in enumerate_role_candidates(
            l,
            role,
            half_norm,
            quarter_norms,
            prefix=prefix,
            rotation_minimal=rotation_minimal,
        )
    ]


def _collect_candidates(
    plan: SearchPlan,
    role: str,
    half_norm: int,
    quarter_norms: Optional[tuple[int, ...]],
) -> list[QSeq]:
    rotation_minimal = plan.reduce_rotation and role == "A"
    if role == "A" and plan.a3_seed is not None:
        cands = list(
            _a3_candidates(
                plan.length, plan.a3_seed, half_norm, quarter_norms, rotation_minimal
            )
        )
    elif plan.workers > 1:
        with ProcessPoolExecutor(max_workers=plan.workers) as pool:
            chunks = pool.map(
                _enumerate_task,
                itertools.repeat(plan.length),
                itertools.repeat(role),
                itertools.repeat(half_norm),
                itertools.repeat(quarter_norms),
                [(idx,) for idx in range(4)],
                itertools.repeat(rotation_minimal),
            )
            cands = [parse_qseq(text) for chunk in chunks for text in chunk]
    else:
        cands = list(
            enumerate_role_candidates(
                plan.length,
                role,
                half_norm,
                quarter_norms,
                rotation_minimal=rotation_minimal,
            )
        )
    if plan.float_screen:
        bound = 2 * plan.length + 2 + plan.tol
        cands = [c for c in cands if _float_screen_ok(c, bound)]
    return cands


def paf_join(
    a_cands: Sequence[QSeq], b_cands: Sequence[QSeq], chunk: int = 1 << 20
) -> list[tuple[int, int]]:
    """Index pairs (i, j) with paf(A_i, s) + paf(B_j, s) = -2 on every
    lag 1..l/2 — output order identical to the quadratic double loop.

    The B side is hashed in chunks of at most `chunk` entries, bounding
    the table size regardless of candidate counts.
    """
    if not a_cands or not b_cands:
        return []
    l = len(a_cands[0])
    half = l // 2

    def a_key(seq: QSeq) -> tuple[tuple[int, int], ...]:
        return tuple(
            (v.re, v.im) for v in (paf(seq, s) for s in range(1, half + 1))
        )

    def b_probe(seq: QSeq) -> tuple[tuple[int, int], ...]:
        return tuple(
            (-2 - v.re, -v.im) for v in (paf(seq, s) for s in range(1, half + 1))
        )

    matches: list[tuple[int, int]] = []
    for lo in range(0, len(b_cands), chunk):
        table: dict[tuple, list[int]] = {}
        for j in range(lo, min(lo + chunk, len(b_cands))):
            table.setdefault(b_probe(b_cands[j]), []).append(j)
        for i, a in enumerate(a_cands):
            hit = table.get(a_key(a))
            if hit:
                matches.extend((i, j) for j in hit)
    matches.sort()
    return matches


def _conjugate_not_smaller(plan: SearchPlan, a: QSeq, b: QSeq) -> bool:
    # the canonical-space conjugation partner: conjugating both roles
    # flips B's row sum to 1-i, so B is rescaled by i to restore 1+i
    ca, cb = a.conj(), b.conj().scaled(GaussInt(0, 1))
    if plan.reduce_rotation:
        ca = min((ca.rotated(k) for k in range(len(ca))), key=format_qseq)
    return (format_qseq(a), format_qseq(b)) <= (format_qseq(ca), format_qseq(cb))


def search_even(plan: SearchPlan) -> Iterator[LegendrePair]:
    """Stream the canonical-form pairs the plan describes.

    Raises InfeasibleLengthError when the eligibility table already rules
    every pair out, which is distinct from an exhausted search.
    """
    l = plan.length
    table = eligible_half_psd_pairs(l).pairs
    if not table:
        raise InfeasibleLengthError(f"no eligible half-lag PSD pair at length {l}")
    if plan.half_pair is not None:
        if plan.half_pair not in table:
            raise ValueError(
                f"requested half-lag pair {plan.half_pair} is not eligible at "
                f"length {l}; table: {list(table)}"
            )
        targets = (plan.half_pair,)
    else:
        targets = table

    quarter_a: Optional[tuple[int, ...]] = None
    quarter_b: Optional[tuple[int, ...]] = None
    if l % 4 == 0:
        if plan.quarter_pair is not None:
            if plan.quarter_pair not in table:
                raise ValueError(
                    f"requested quarter-lag pair {plan.quarter_pair} is not "
                    f"eligible at length {l}; table: {list(table)}"
                )
            quarter_a = (plan.quarter_pair[0],)
            quarter_b = (plan.quarter_pair[1],)
        else:
            quarter_a = tuple(sorted({x for x, _ in table}))
            quarter_b = tuple(sorted({y for _, y in table}))
    elif plan.quarter_pair is not None:
        raise ValueError(f"quarter-lag constraint needs 4 | l, got l={l}")

    for x, y in targets:
        a_cands = _collect_candidates(plan, "A", x, quarter_a)
        if not a_cands:
            continue
        b_cands = _collect_candidates(plan, "B", y, quarter_b)
        if not b_cands:
            continue
        for i, j in paf_join(a_cands, b_cands, plan.join_chunk):
            a, b = a_cands[i], b_cands[j]
            if plan.reduce_conjugation and not _conjugate_not_smaller(plan, a, b):
                continue
            pair = LegendrePair.check(a, b)
            if not pair.verified:
                raise AssertionError("paf_join emitted a non-pair")
            yield pair
            if plan.first_only:
                return
