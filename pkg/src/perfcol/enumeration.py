"""Exhaustive enumeration of color adjacency matrices up to relabeling.

For m colors and regularity k there are binom(k+m-1, m-1)^m candidate
matrices with the right row sums.  A matrix survives if it is weakly
symmetric, color-connected, consistent, and its class ratio vector is
nondecreasing (for two colors this is just a_12 >= a_21, since the class
sizes are proportional to (a_21, a_12)).  Survivors that are conjugate,
meaning they describe the same coloring with the colors relabeled, are
then identified, keeping the lexicographically smallest conjugate.

The full row-sum space is never walked.  Rows are ordered compositions
of k; once the rows above row i are fixed, weak symmetry prescribes
exactly which of the first i entries of row i must vanish, so the scan
draws row i from a precomputed bucket of compositions with that leading
zero pattern.  Only the weakly symmetric matrices, a small fraction of
the space, ever reach the remaining filters.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import comb
from multiprocessing import Pool

from .cam import (
    ColorAdjacencyMatrix,
    _ratios_or_none,
    class_ratios,
    entries_of,
    is_color_connected,
    is_weakly_symmetric,
)


@dataclass(frozen=True)
class EnumerationResult:
    """Outcome of one (m, k) enumeration run.

    raw_count is the size of the unfiltered row-sum space,
    binom(k+m-1, m-1)^m; survivors is the canonical deduplicated list,
    sorted lexicographically.
    """

    m: int
    k: int
    raw_count: int
    survivors: tuple[ColorAdjacencyMatrix, ...]


@lru_cache(maxsize=None)
def _compositions(k: int, m: int) -> tuple[tuple[int, ...], ...]:
    """All m-tuples of nonnegative integers summing to k, lexicographic."""
    if m == 1:
        return ((k,),)
    return tuple((head,) + tail
                 for head in range(k + 1)
                 for tail in _compositions(k - head, m - 1))


def generate_row_sum_matrices(m: int, k: int):
    """Yield every m x m matrix with all row sums k, in lexicographic order.

    The stream has binom(k+m-1, m-1)^m elements.  enumerate_cams does
    not consume this stream (it fuses the weak symmetry filter into the
    row choice instead), but the filtered composition of the two must
    and does agree with it.
    """
    if m < 1 or k < 1:
        raise ValueError("need m >= 1 and k >= 1")
    for rows in product(_compositions(k, m), repeat=m):
        yield ColorAdjacencyMatrix(rows)


def passes_filters(A) -> bool:
    """The per-matrix filter of the enumeration.

    True iff A is weakly symmetric, color-connected, consistent, and its
    class ratio vector is nondecreasing.
    """
    a = entries_of(A)
    if not is_weakly_symmetric(a):
        return False
    if not is_color_connected(a):
        return False
    ratios = _ratios_or_none(a)
    if ratios is None:
        return False
    return all(x <= y for x, y in zip(ratios, ratios[1:]))


def canonical_form(A) -> ColorAdjacencyMatrix:
    """The canonical representative of A's conjugacy class.

    Among all conjugates whose permuted ratio vector stays nondecreasing
    (at least the ratio-sorting permutations qualify), the row-major
    lexicographically smallest is the representative.
    """
    a = entries_of(A)
    return ColorAdjacencyMatrix(_canonical_key(a, class_ratios(a).numerators))


def _canonical_key(a, ratios) -> tuple[tuple[int, ...], ...]:
    m = len(a)
    best = None
    for perm in permutations(range(m)):
        ok = True
        for i in range(m - 1):
            if ratios[perm[i]] > ratios[perm[i + 1]]:
                ok = False
                break
        if not ok:
            continue
        b = tuple(tuple(a[perm[i]][perm[j]] for j in range(m)) for i in range(m))
        if best is None or b < best:
            best = b
    return best


def canonical_dedup(candidates) -> list[ColorAdjacencyMatrix]:
    """One representative per conjugacy class, sorted lexicographically.

    The input matrices must pass passes_filters (their ratios must at
    least be defined).
    """
    keys = {_canonical_key(a, class_ratios(a).numerators)
            for a in map(entries_of, candidates)}
    return [ColorAdjacencyMatrix(key) for key in sorted(keys)]


def enumerate_cams(m: int, k: int, threads: int | None = None) -> EnumerationResult:
    """All color adjacency matrices of perfect m-colorings of connected
    k-regular graphs, up to conjugacy.

    threads > 1 shards the scan by the first row across processes; the
    result is identical to the single-threaded run.  When threads is
    None the PERFCOL_THREADS environment variable applies, default 1.
    Results are memoized per (m, k).
    """
    if m < 1 or k < 1:
        raise ValueError("need m >= 1 and k >= 1")
    if (m, k) in _memo:
        return _memo[(m, k)]
    if threads is None:
        threads = int(os.environ.get("PERFCOL_THREADS") or 1)
    count = len(_compositions(k, m))
    if threads > 1 and count >= 2 * threads:
        bounds = [i * count // threads for i in range(threads + 1)]
        jobs = [(m, k, lo, hi) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
        with Pool(processes=len(jobs)) as pool:
            chunks = pool.map(_scan_job, jobs)
        candidates = [cand for chunk in chunks for cand in chunk]
    else:
        candidates = _scan_range(m, k, 0, count)
    keys = {_canonical_key(a, ratios) for a, ratios in candidates}
    survivors = tuple(ColorAdjacencyMatrix(key) for key in sorted(keys))
    result = EnumerationResult(m, k, comb(k + m - 1, m - 1) ** m, survivors)
    _memo[(m, k)] = result
    return result


_memo: dict[tuple[int, int], EnumerationResult] = {}


@lru_cache(maxsize=None)
def _zero_pattern_buckets(m: int, k: int):
    """For each row index i >= 1, compositions keyed by which of their
    first i entries are zero (a bitmask over positions 0..i-1)."""
    comps = _compositions(k, m)
    table: list[dict[int, tuple] | None] = [None]
    for i in range(1, m):
        buckets: dict[int, list] = {}
        for c in comps:
            mask = 0
            for j in range(i):
                if c[j] == 0:
                    mask |= 1 << j
            buckets.setdefault(mask, []).append(c)
        table.append({mask: tuple(rows) for mask, rows in buckets.items()})
    return table


def _scan_range(m: int, k: int, lo: int, hi: int):
    """Filtered candidates whose first row index lies in [lo, hi).

    Returns (entries, ratios) pairs for every matrix in that slice that
    passes all four filters.  Weak symmetry holds by construction: row i
    is drawn from the bucket whose leading zero pattern matches the
    entries already placed above it in column i.
    """
    comps = _compositions(k, m)
    buckets = _zero_pattern_buckets(m, k)
    out = []
    rows: list[tuple[int, ...]] = [()] * m

    def descend(i: int):
        if i == m:
            a = tuple(rows)
            if not is_color_connected(a):
                return
            ratios = _ratios_or_none(a)
            if ratios is None:
                return
            for x, y in zip(ratios, ratios[1:]):
                if x > y:
                    return
            out.append((a, ratios))
            return
        mask = 0
        for j in range(i):
            if rows[j][i] == 0:
                mask |= 1 << j
        for c in buckets[i].get(mask, ()):
            rows[i] = c
            descend(i + 1)

    for first in range(lo, hi):
        rows[0] = comps[first]
        descend(1)
    return out


def _scan_job(args):
    return _scan_range(*args)
