"""Erasure patterns, exhaustive SD verification, and stripe shortening.

A code tolerates a pattern of m whole-disk failures plus s additional
sector failures exactly when the parity-check columns of the erased
sectors are linearly independent, so the SD property is decided by
checking every pattern.  Verification groups patterns by their disk set:
one forward elimination pivoting on the mr disk columns is shared by all
C((n-m)r, s) sector choices of the group, which each reduce to an s x s
test against the leftover (non-pivot) rows.  For s = 2 that test is a
2 x 2 determinant evaluated for all pairs at once with table lookups.

Over the ring the same procedure runs once per irreducible factor of
M_p(x); a pattern fails if it fails in any factor.

The report is deterministic: all patterns are always counted, the
witness is the first failing pattern in enumeration order (disk sets in
lexicographic order, then sector subsets in lexicographic order over
surviving sectors sorted by (row, disk)), and neither depends on the
worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable, Optional, Sequence

import numpy as np

from . import _gf2poly as poly
from .algebra import Field
from .construct import CodeSpec, ParityCheckMatrix
from .errors import (
    BadRowCountError,
    PatternInvalidError,
    TooManyErasuresError,
)
from .linalg import Matrix, full_column_rank, submatrix


@dataclass(frozen=True)
class ErasurePattern:
    """Failed whole disks plus failed individual sectors (row, disk)."""

    disks: tuple[int, ...] = ()
    sectors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "disks", tuple(sorted(self.disks)))
        object.__setattr__(self, "sectors",
                           tuple(sorted((int(a), int(b)) for a, b in self.sectors)))


@dataclass(frozen=True)
class SdReport:
    sd: bool
    witness: Optional[ErasurePattern]
    patterns_checked: int


def validate_pattern(p: ErasurePattern, spec: CodeSpec) -> None:
    if len(set(p.disks)) != len(p.disks):
        raise PatternInvalidError(f"duplicate disks in {p}")
    if len(p.disks) > spec.m:
        raise PatternInvalidError(f"{len(p.disks)} failed disks exceeds m={spec.m}")
    for d in p.disks:
        if not 0 <= d < spec.n:
            raise PatternInvalidError(f"disk {d} outside [0, {spec.n})")
    if len(set(p.sectors)) != len(p.sectors):
        raise PatternInvalidError(f"duplicate sectors in {p}")
    for row, disk in p.sectors:
        if not (0 <= row < spec.r and 0 <= disk < spec.n):
            raise PatternInvalidError(f"sector ({row}, {disk}) outside the stripe")
        if disk in p.disks:
            raise PatternInvalidError(
                f"sector ({row}, {disk}) lies inside failed disk {disk}")


def erased_columns(p: ErasurePattern, spec: CodeSpec) -> list[int]:
    """Sorted matrix columns wiped out by the pattern."""
    validate_pattern(p, spec)
    cols = {spec.column_of(i, d) for i in range(spec.r) for d in p.disks}
    cols.update(spec.column_of(row, disk) for row, disk in p.sectors)
    return sorted(cols)


def _survivors(spec: CodeSpec, disks: Sequence[int]) -> list[tuple[int, int]]:
    dset = set(disks)
    return [(i, j) for i in range(spec.r) for j in range(spec.n) if j not in dset]


def enumerate_patterns(spec: CodeSpec):
    """All patterns with exactly m disks and s sectors on surviving disks,
    in lexicographic order; count = C(n,m) * C((n-m)r, s)."""
    for disks in combinations(range(spec.n), spec.m):
        for sectors in combinations(_survivors(spec, disks), spec.s):
            yield ErasurePattern(disks, sectors)


def is_pattern_decodable(hm: ParityCheckMatrix, p: ErasurePattern) -> bool:
    """True iff the erased columns are linearly independent."""
    spec = hm.spec
    cols = erased_columns(p, spec)
    if len(cols) > spec.parity_rows:
        raise TooManyErasuresError(
            f"{len(cols)} erased columns but only {spec.parity_rows} parity rows")
    if not cols:
        return True
    return full_column_rank(submatrix(hm.matrix, range(hm.matrix.rows), cols))


# -- grouped verification ----------------------------------------------------

def _factor_views(hm: ParityCheckMatrix) -> list[tuple]:
    """(ops, bits) per factor field: one view for a field, one per
    irreducible factor of M_p(x) for the ring."""
    alg = hm.spec.algebra
    if isinstance(alg, Field):
        return [(alg.ops, hm.matrix.bits)]
    views = []
    for f, ops in zip(alg.factorization.factors, alg.factor_ops):
        views.append((ops, tuple(tuple(poly.mod(v, f) for v in row)
                                 for row in hm.matrix.bits)))
    return views


def _eliminate_rows(ops, rows: list[list[int]], pivot_cols: Sequence[int]):
    """Forward elimination pivoting on the given columns, first-nonzero
    row choice.  Returns (rank, indices of rows never used as pivots)."""
    used = [False] * len(rows)
    rank = 0
    for c in pivot_cols:
        p = next((k for k in range(len(rows)) if not used[k] and rows[k][c]), None)
        if p is None:
            continue
        used[p] = True
        rank += 1
        inv = ops.inv(rows[p][c])
        if inv != 1:
            rows[p] = [ops.mul(inv, v) for v in rows[p]]
        prow = rows[p]
        for t in range(len(rows)):
            f = rows[t][c]
            if used[t] or not f:
                continue
            rows[t] = [a ^ ops.mul(f, b) for a, b in zip(rows[t], prow)]
    return rank, [t for t in range(len(rows)) if not used[t]]


def _subset_singular(ops, residual: list[list[int]], combo: Sequence[int]) -> bool:
    """True iff the s x s submatrix of the residual on these columns is
    singular (s small)."""
    s = len(combo)
    if s == 0:
        return False
    if s == 1:
        return residual[0][combo[0]] == 0
    if s == 2:
        a, b = residual[0][combo[0]], residual[0][combo[1]]
        c, d = residual[1][combo[0]], residual[1][combo[1]]
        return ops.mul(a, d) == ops.mul(b, c)
    rows = [[row[c] for c in combo] for row in residual]
    rank, _ = _eliminate_rows(ops, rows, range(s))
    return rank < s


def _scan_group_python(views, spec: CodeSpec, disks: Sequence[int]):
    """First failing sector choice for this disk set, as survivor indices;
    'all' when the disk columns alone are dependent; None when clean."""
    mr = spec.m * spec.r
    disk_cols = sorted(spec.column_of(i, d) for i in range(spec.r) for d in disks)
    dset = set(disks)
    survivor_cols = [c for c in range(spec.total_columns) if c % spec.n not in dset]
    residuals = []
    for ops, rows in views:
        work = [list(r) for r in rows]
        rank, rest = _eliminate_rows(ops, work, disk_cols)
        if rank < mr:
            return "all"
        residuals.append((ops, [[work[t][c] for c in survivor_cols] for t in rest]))
    for combo in combinations(range(len(survivor_cols)), spec.s):
        if any(_subset_singular(ops, res, combo) for ops, res in residuals):
            return combo
    return None


def _scan_group_np(views_np, spec: CodeSpec, disks: Sequence[int]):
    """Table-driven variant of _scan_group_python for s = 2."""
    mr = spec.m * spec.r
    disk_cols = sorted(spec.column_of(i, d) for i in range(spec.r) for d in disks)
    dset = set(disks)
    survivor_cols = np.fromiter(
        (c for c in range(spec.total_columns) if c % spec.n not in dset), dtype=np.intp)
    pair_fail = None
    for exp, log, qm1, m0 in views_np:
        m = m0.copy()
        used = np.zeros(m.shape[0], dtype=bool)
        rank = 0
        for c in disk_cols:
            cand = np.nonzero((m[:, c] != 0) & ~used)[0]
            if cand.size == 0:
                continue
            p = cand[0]
            used[p] = True
            rank += 1
            row = m[p]
            piv = int(row[c])
            if piv != 1:
                nz = row != 0
                row[nz] = exp[log[row[nz]] + (qm1 - log[piv])]
            others = cand[1:]
            if others.size:
                contrib = exp[log[m[others, c]][:, None] + log[row][None, :]]
                contrib[:, row == 0] = 0
                m[others] ^= contrib
        if rank < mr:
            return "all"
        res = m[~used][:, survivor_cols]
        r0, r1 = res[0], res[1]
        prod = exp[log[r0][:, None] + log[r1][None, :]]
        prod[r0 == 0, :] = 0
        prod[:, r1 == 0] = 0
        det = prod ^ prod.T
        fail = det == 0
        pair_fail = fail if pair_fail is None else pair_fail | fail
    iu, ju = np.triu_indices(pair_fail.shape[0], 1)
    bad = np.nonzero(pair_fail[iu, ju])[0]
    if bad.size == 0:
        return None
    return int(iu[bad[0]]), int(ju[bad[0]])


def is_sd(hm: ParityCheckMatrix, jobs: int = 1,
          progress: Optional[Callable[[int, int], None]] = None) -> SdReport:
    """Exhaustively decide the SD property.

    Every pattern is counted (no early exit), the witness is the first
    failure in enumeration order, and the outcome is independent of the
    worker count.
    """
    spec = hm.spec
    total = comb(spec.n, spec.m) * comb((spec.n - spec.m) * spec.r, spec.s)
    views = _factor_views(hm)
    if spec.s == 2 and all(ops.has_tables for ops, _ in views):
        views_np = [(*ops.np_tables(), ops.qm1, np.array(bits, dtype=np.int32))
                    for ops, bits in views]
        scan = lambda d: _scan_group_np(views_np, spec, d)
    else:
        scan = lambda d: _scan_group_python(views, spec, d)
    groups = list(combinations(range(spec.n), spec.m))
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(scan, groups))
    else:
        results = [scan(d) for d in groups]
    witness = None
    for done, (disks, res) in enumerate(zip(groups, results), start=1):
        if progress is not None:
            progress(done, len(groups))
        if res is None or witness is not None:
            continue
        survivors = _survivors(spec, disks)
        if res == "all":
            sectors = tuple(survivors[:spec.s])
        else:
            sectors = tuple(survivors[t] for t in res)
        witness = ErasurePattern(disks, sectors)
    return SdReport(witness is None, witness, total)


def shorten(hm: ParityCheckMatrix, r_new: int) -> ParityCheckMatrix:
    """Drop stripe rows >= r_new: their columns vanish, their local parity
    rows vanish, and the global rows keep their leading r_new*n entries."""
    spec = hm.spec
    if not 1 <= r_new < spec.r:
        raise BadRowCountError(f"need 1 <= r_new < {spec.r}, got {r_new}")
    keep_cols = r_new * spec.n
    mr_new = spec.m * r_new
    bits = hm.matrix.bits
    rows = [row[:keep_cols] for row in bits[:mr_new]]
    rows += [row[:keep_cols] for row in bits[spec.m * spec.r:]]
    new_spec = CodeSpec(n=spec.n, m=spec.m, s=spec.s, r=r_new,
                        algebra=spec.algebra, family=spec.family)
    return ParityCheckMatrix(new_spec, Matrix(spec.algebra, rows))


# -- pattern text form -------------------------------------------------------

def pattern_to_text(p: ErasurePattern) -> str:
    d = ",".join(str(x) for x in p.disks) or "-"
    s = ",".join(f"{row}:{disk}" for row, disk in p.sectors) or "-"
    return f"d={d} s={s}"


def pattern_from_text(text: str) -> ErasurePattern:
    parts = text.split()
    kv = {}
    for part in parts:
        if "=" not in part:
            raise ValueError(f"bad pattern item {part!r}")
        k, v = part.split("=", 1)
        kv[k] = v
    if set(kv) != {"d", "s"}:
        raise ValueError(f"pattern text needs d= and s=, got {text!r}")
    disks = []
    if kv["d"] not in ("", "-"):
        disks = [int(x) for x in kv["d"].split(",")]
    sectors = []
    if kv["s"] not in ("", "-"):
        for item in kv["s"].split(","):
            row, _, disk = item.partition(":")
            if not _:
                raise ValueError(f"bad sector item {item!r} (want row:disk)")
            sectors.append((int(row), int(disk)))
    return ErasurePattern(tuple(disks), tuple(sectors))
