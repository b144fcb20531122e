"""Boolean matrices and the row-domination product.

Rows are stored as Python ints used as bit vectors (bit ``j`` of ``rows[i]`` is
entry ``(i, j)``), so ``u ⊗ v`` reduces to ``u & ~v != 0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError


def _mask(width: int) -> int:
    return (1 << width) - 1


def bits_of(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class BoolMatrix:
    """Dense 0/1 matrix with ``nrows`` rows and ``ncols`` columns.

    Zero-sized dimensions are allowed so that a factorisation with no columns
    (the all-zeros input) is representable.
    """

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.nrows < 0 or self.ncols < 0:
            raise InputError(f"negative shape {self.nrows}x{self.ncols}")
        if len(self.rows) != self.nrows:
            raise InputError(f"expected {self.nrows} rows, got {len(self.rows)}")
        full = _mask(self.ncols)
        for i, r in enumerate(self.rows):
            if r < 0 or r & ~full:
                raise InputError(f"row {i} has bits outside {self.ncols} columns")

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]], ncols: int | None = None) -> BoolMatrix:
        """Build from nested sequences of 0/1; ``ncols`` is needed only when there are no rows."""
        data = [list(row) for row in data]
        if ncols is None:
            ncols = len(data[0]) if data else 0
        rows = []
        for i, row in enumerate(data):
            if len(row) != ncols:
                raise InputError(f"row {i} has length {len(row)}, expected {ncols}")
            bits = 0
            for j, x in enumerate(row):
                if x not in (0, 1) or isinstance(x, float):
                    raise InputError(f"entry ({i}, {j}) is {x!r}, expected 0 or 1")
                if x:
                    bits |= 1 << j
            rows.append(bits)
        return cls(len(rows), ncols, tuple(rows))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> BoolMatrix:
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def ones(cls, nrows: int, ncols: int) -> BoolMatrix:
        return cls(nrows, ncols, (_mask(ncols),) * nrows)

    @classmethod
    def identity(cls, n: int) -> BoolMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(index)
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> list[int]:
        r = self.rows[i]
        return [(r >> j) & 1 for j in range(self.ncols)]

    def to_lists(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.nrows)]

    def transpose(self) -> BoolMatrix:
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            for j in bits_of(r):
                cols[j] |= 1 << i
        return BoolMatrix(self.ncols, self.nrows, tuple(cols))

    def complement(self) -> BoolMatrix:
        full = _mask(self.ncols)
        return BoolMatrix(self.nrows, self.ncols, tuple(full & ~r for r in self.rows))

    def count_ones(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def __str__(self) -> str:
        return format_matrix(self)


@dataclass(frozen=True)
class ModRescPair:
    """A candidate factorisation ``C = mod ⊗ resc`` with ``gene_count`` columns."""

    mod: BoolMatrix
    resc: BoolMatrix

    def __post_init__(self) -> None:
        if self.mod.ncols != self.resc.ncols:
            raise InputError(
                f"mod has {self.mod.ncols} columns but resc has {self.resc.ncols}"
            )

    @property
    def gene_count(self) -> int:
        return self.mod.ncols


def vec_otimes(u: Sequence[int], v: Sequence[int]) -> int:
    """Return 1 if some position has ``u[i] = 1`` and ``v[i] = 0``, else 0."""
    if len(u) != len(v):
        raise InputError(f"vector lengths differ: {len(u)} vs {len(v)}")
    a = BoolMatrix.from_lists([u], ncols=len(u)).rows[0]
    b = BoolMatrix.from_lists([v], ncols=len(v)).rows[0]
    return 1 if a & ~b else 0


def mat_otimes(m: BoolMatrix, r: BoolMatrix) -> BoolMatrix:
    """Row-by-row product: entry ``(i, j)`` is ``vec_otimes(m[i], r[j])``."""
    if m.ncols != r.ncols:
        raise InputError(f"column counts differ: {m.ncols} vs {r.ncols}")
    out = []
    for a in m.rows:
        bits = 0
        for j, b in enumerate(r.rows):
            if a & ~b:
                bits |= 1 << j
        out.append(bits)
    return BoolMatrix(m.nrows, r.nrows, tuple(out))


def trivial_solution(c: BoolMatrix) -> ModRescPair:
    """The always-valid factorisation with one gene per row: identity mod, complemented transposed resc."""
    return ModRescPair(BoolMatrix.identity(c.nrows), c.complement().transpose())


def verify_solution(c: BoolMatrix, pair: ModRescPair) -> bool:
    if pair.mod.nrows != c.nrows or pair.resc.nrows != c.ncols:
        raise InputError(
            f"pair shapes mod {pair.mod.shape} / resc {pair.resc.shape} "
            f"incompatible with C {c.shape}"
        )
    return mat_otimes(pair.mod, pair.resc).rows == c.rows


_SEPARATORS = re.compile(r"[,\s]+")


def parse_matrix(text: str, source: str = "<input>") -> BoolMatrix:
    """Parse the line-oriented 0/1 text format.

    Each non-blank, non-``#`` line is a row; entries are ``0``/``1`` with
    optional comma or whitespace separators. Errors carry line and column.
    """
    rows: list[list[int]] = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = []
        for col, ch in enumerate(line, start=1):
            if ch in "01":
                row.append(int(ch))
            elif not _SEPARATORS.fullmatch(ch):
                raise InputError(f"unexpected character {ch!r}", source, lineno, col)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise InputError(
                f"row has {len(row)} entries, expected {width}", source, lineno, 1
            )
        rows.append(row)
    if not rows:
        raise InputError("matrix has no rows", source)
    return BoolMatrix.from_lists(rows)


def load_matrix(path: str) -> BoolMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read(), source=str(path))


def format_matrix(c: BoolMatrix) -> str:
    return "\n".join("".join(str(x) for x in row) for row in c.to_lists())
