"""Systematic encoding and erasure decoding of stripes.

A stripe is an r × n grid of symbols; position (row i, disk j) is vector
slot ni + j, and a full codeword satisfies H·vec = 0.  Parity lives at a
fixed support: the last m disks, plus the trailing s data-disk sectors
of the bottom stripe row (wrapping upward row by row when s exceeds the
data-disk count).  The SD property guarantees that support is decodable,
which makes the encode system solvable; any decodable support would
work, this one is fixed so independent implementations interoperate.

Decoding treats missing symbols as unknowns of the linear system given
by the parity checks; present symbols always get a syndrome check, so
corrupt-but-complete inputs are rejected rather than silently accepted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, TextIO

from .algebra import Element, parse_algebra
from .construct import CodeSpec, ParityCheckMatrix
from .errors import (
    InconsistentSyndromeError,
    LengthMismatchError,
    ParseError,
    ShapeMismatchError,
    SingularParitySupportError,
    TooManyParitySectorsError,
    UndecodablePatternError,
)
from .linalg import solve_bits
from .sdcheck import ErasurePattern, erased_columns


@dataclass
class Stripe:
    """Symbol grid with per-position availability."""

    spec: CodeSpec
    symbols: list[list[Element]]
    present: list[list[bool]]

    def vec_bits(self) -> list[int]:
        return [self.symbols[i][j].bits
                for i in range(self.spec.r) for j in range(self.spec.n)]

    def missing_positions(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.spec.r) for j in range(self.spec.n)
                if not self.present[i][j]]


def default_parity_pattern(spec: CodeSpec) -> ErasurePattern:
    """The fixed parity support: last m disks, then s sectors walking
    leftward from (r-1, n-m-1) and wrapping up a row as needed."""
    if spec.s > (spec.n - spec.m) * spec.r:
        raise TooManyParitySectorsError(
            f"s={spec.s} parity sectors exceed the {(spec.n - spec.m) * spec.r} "
            f"data-disk sectors")
    disks = tuple(range(spec.n - spec.m, spec.n))
    sectors = []
    row, disk = spec.r - 1, spec.n - spec.m - 1
    for _ in range(spec.s):
        sectors.append((row, disk))
        disk -= 1
        if disk < 0:
            row -= 1
            disk = spec.n - spec.m - 1
    return ErasurePattern(disks, tuple(sectors))


def data_columns(spec: CodeSpec) -> list[int]:
    """Non-parity vector slots in ascending order (the data fill order)."""
    pcols = set(erased_columns(default_parity_pattern(spec), spec))
    return [c for c in range(spec.total_columns) if c not in pcols]


def _syndrome_bits(hm: ParityCheckMatrix, vec_bits: Sequence[int],
                   skip: frozenset[int] = frozenset()) -> list[int]:
    alg = hm.spec.algebra
    bits = hm.matrix.bits
    out = [0] * hm.matrix.rows
    for c, v in enumerate(vec_bits):
        if not v or c in skip:
            continue
        for t in range(hm.matrix.rows):
            h = bits[t][c]
            if h:
                out[t] ^= alg.mul_bits(h, v)
    return out


def encode(hm: ParityCheckMatrix, data: Sequence[Element]) -> Stripe:
    """Fill data slots in column order, then solve for the parity slots
    so that H·vec = 0."""
    spec = hm.spec
    alg = spec.algebra
    dcols = data_columns(spec)
    if len(data) != len(dcols):
        raise LengthMismatchError(
            f"code dimension is {len(dcols)} symbols, got {len(data)}")
    pcols = erased_columns(default_parity_pattern(spec), spec)
    vec = [0] * spec.total_columns
    for c, e in enumerate(data):
        vec[dcols[c]] = alg._check(e)
    rhs = _syndrome_bits(hm, vec)
    sub = [[hm.matrix.bits[t][c] for c in pcols] for t in range(hm.matrix.rows)]
    status, x = solve_bits(alg, sub, rhs)
    if status != "ok":
        raise SingularParitySupportError(
            "parity support is not decodable for this matrix")
    for c, v in zip(pcols, x):
        vec[c] = v
    symbols = [[alg.element(vec[spec.column_of(i, j)]) for j in range(spec.n)]
               for i in range(spec.r)]
    present = [[True] * spec.n for _ in range(spec.r)]
    return Stripe(spec, symbols, present)


def _check_compatible(hm: ParityCheckMatrix, st: Stripe) -> None:
    a, b = hm.spec, st.spec
    if (a.n, a.m, a.s, a.r) != (b.n, b.m, b.s, b.r) or a.algebra != b.algebra:
        raise ShapeMismatchError(
            f"stripe parameters (n={b.n} m={b.m} s={b.s} r={b.r}, {b.algebra}) "
            f"do not match the matrix (n={a.n} m={a.m} s={a.s} r={a.r}, {a.algebra})")


def decode(hm: ParityCheckMatrix, st: Stripe) -> Stripe:
    """Recover all missing symbols, or raise.

    Missing slots become unknowns of H·vec = 0; a solvable-but-violated
    system raises InconsistentSyndrome, an unsolvable missing set raises
    UndecodablePattern (rank deficiency wins when both apply).
    """
    _check_compatible(hm, st)
    spec = hm.spec
    alg = spec.algebra
    missing = st.missing_positions()
    mcols = sorted(spec.column_of(i, j) for i, j in missing)
    vec = [st.symbols[i][j].bits if st.present[i][j] else 0
           for i in range(spec.r) for j in range(spec.n)]
    rhs = _syndrome_bits(hm, vec, skip=frozenset(mcols))
    if not mcols:
        if any(rhs):
            raise InconsistentSyndromeError("complete stripe violates the parity checks")
        recovered = [row[:] for row in st.symbols]
    else:
        sub = [[hm.matrix.bits[t][c] for c in mcols] for t in range(hm.matrix.rows)]
        status, x = solve_bits(alg, sub, rhs)
        if status == "deficient":
            raise UndecodablePatternError(
                f"missing set {missing} is not recoverable from this code")
        if status == "inconsistent":
            raise InconsistentSyndromeError(
                "present symbols violate the parity checks on the known rows")
        fill = dict(zip(mcols, x))
        recovered = [[alg.element(fill.get(spec.column_of(i, j),
                                           st.symbols[i][j].bits))
                      for j in range(spec.n)] for i in range(spec.r)]
    present = [[True] * spec.n for _ in range(spec.r)]
    return Stripe(spec, recovered, present)


def erase(st: Stripe, p: ErasurePattern) -> Stripe:
    """Copy of the stripe with the pattern's positions marked missing."""
    spec = st.spec
    gone = {spec.column_of(i, d) for i in range(spec.r) for d in p.disks}
    gone.update(spec.column_of(row, disk) for row, disk in p.sectors)
    zero = spec.algebra.zero
    symbols = [[zero if spec.column_of(i, j) in gone else st.symbols[i][j]
                for j in range(spec.n)] for i in range(spec.r)]
    present = [[spec.column_of(i, j) not in gone and st.present[i][j]
                for j in range(spec.n)] for i in range(spec.r)]
    return Stripe(spec, symbols, present)


# -- text format -------------------------------------------------------------

STRIPE_MAGIC = "SDCODE-STRIPE v1"
MISSING_TOKEN = "?"


def write_stripe(st: Stripe, sink) -> None:
    own = not hasattr(sink, "write")
    fh: TextIO = open(sink, "w") if own else sink
    try:
        spec, alg = st.spec, st.spec.algebra
        fh.write(STRIPE_MAGIC + "\n")
        fh.write(alg.descriptor() + "\n")
        fh.write(f"params n={spec.n} m={spec.m} s={spec.s} r={spec.r}\n")
        for i in range(spec.r):
            toks = [alg.element_token(st.symbols[i][j]) if st.present[i][j]
                    else MISSING_TOKEN for j in range(spec.n)]
            fh.write(" ".join(toks) + "\n")
    finally:
        if own:
            fh.close()


def read_stripe(source) -> Stripe:
    own = not hasattr(source, "read")
    fh: TextIO = open(source, "r") if own else source
    try:
        lines = fh.read().split("\n")
    finally:
        if own:
            fh.close()
    if not lines or lines[0].strip() != STRIPE_MAGIC:
        raise ParseError(f"expected header {STRIPE_MAGIC!r}", line=1, column=1)
    if len(lines) < 3:
        raise ParseError("truncated file", line=len(lines), column=1)
    try:
        algebra = parse_algebra(lines[1].strip())
    except ValueError as ex:
        raise ParseError(str(ex), line=2, column=1) from None
    toks = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", lines[2])]
    if not toks or toks[0][0] != "params":
        raise ParseError("expected a 'params ...' line", line=3, column=1)
    kv = {}
    for tok, col in toks[1:]:
        if "=" not in tok:
            raise ParseError(f"expected key=value, got {tok!r}", line=3, column=col)
        k, v = tok.split("=", 1)
        try:
            kv[k] = int(v)
        except ValueError:
            raise ParseError(f"{k} must be an integer, got {v!r}",
                             line=3, column=col) from None
    if set(kv) != {"n", "m", "s", "r"}:
        raise ParseError("params line must set exactly n, m, s, r", line=3, column=1)
    try:
        spec = CodeSpec(n=kv["n"], m=kv["m"], s=kv["s"], r=kv["r"],
                        algebra=algebra, family="generic")
    except ValueError as ex:
        raise ParseError(str(ex), line=3, column=1) from None

    body = lines[3:]
    while body and not body[-1].strip():
        body.pop()
    if len(body) != spec.r:
        raise ParseError(f"expected {spec.r} stripe rows, found {len(body)}",
                         line=4, column=1)
    symbols = []
    present = []
    for ri, text in enumerate(body):
        lineno = 4 + ri
        row_toks = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", text)]
        if len(row_toks) != spec.n:
            raise ParseError(f"expected {spec.n} tokens, found {len(row_toks)}",
                             line=lineno, column=1)
        srow, prow = [], []
        for tok, col in row_toks:
            if tok == MISSING_TOKEN:
                srow.append(algebra.zero)
                prow.append(False)
                continue
            try:
                srow.append(algebra.parse_element(tok))
            except ValueError as ex:
                raise ParseError(str(ex), line=lineno, column=col) from None
            prow.append(True)
        symbols.append(srow)
        present.append(prow)
    return Stripe(spec, symbols, present)
