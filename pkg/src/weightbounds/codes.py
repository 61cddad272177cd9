"""Linear codes as generator matrices over GF(q).

Provides rank-checked construction, deterministic row reduction,
exhaustive weight-spectrum enumeration, minimum distance, and the
residual-code construction (puncture a code at the support of one of
its codewords).

Codeword enumeration order is fixed: message integer m in [0, q^k)
has base-q digits d_0 ... d_{k-1} (d_0 least significant), and the
m-th codeword is sum_i element(d_i) * rows[i].  All "first codeword
of weight w" semantics refer to this order.
"""

from __future__ import annotations

import functools
import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    DegenerateResidualError,
    EmptyMatrixError,
    EnumerationTooLargeError,
    LengthMismatchError,
    NotACodewordError,
    ParamRangeError,
    RankDeficientError,
    ZeroCodewordError,
)
from .gf import GF, Vector, make_field

DEFAULT_ENUMERATION_LIMIT = 1 << 26


class ResidualWindowWarning(UserWarning):
    """Residual taken outside the w*(q-1) < q*d window: no dimension guarantee."""


def hamming_weight(v: Sequence[int]) -> int:
    """Number of nonzero coordinates."""
    return len(v) - tuple(v).count(0)


@dataclass(frozen=True)
class CodeParams:
    """The parameter tuple (n, k, d, q) that the bound formulas operate on."""

    n: int
    k: int
    d: int
    q: int

    def __post_init__(self) -> None:
        if not (1 <= self.k <= self.n and 1 <= self.d <= self.n and self.q >= 2):
            raise ParamRangeError(
                f"invalid parameters n={self.n} k={self.k} d={self.d} q={self.q}"
            )


@dataclass(frozen=True)
class WeightSpectrum:
    """Exact codeword counts per Hamming weight: counts[w] codewords of weight w."""

    counts: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def min_distance(self) -> int:
        for w in range(1, len(self.counts)):
            if self.counts[w]:
                return w
        raise ValueError("spectrum has no nonzero weight")

    @property
    def max_weight(self) -> int:
        return max(w for w in range(len(self.counts)) if self.counts[w])

    def total(self) -> int:
        return sum(self.counts)

    def nonzero(self) -> dict[int, int]:
        """Counts with zero entries omitted, keyed by weight."""
        return {w: c for w, c in enumerate(self.counts) if c}


@dataclass(frozen=True)
class LinearCode:
    """A linear [n, k] code given by k independent generator rows over a field.

    Rows are kept exactly as supplied; construction rejects rank-deficient
    matrices (use `code_from_matrix(..., auto_reduce=True)` to accept any
    matrix and keep a row-space basis instead).
    """

    gf: GF
    rows: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise EmptyMatrixError("a generator matrix needs at least one row")
        n = len(self.rows[0])
        if n == 0:
            raise EmptyMatrixError("a generator matrix needs at least one column")
        for row in self.rows:
            if len(row) != n:
                raise LengthMismatchError("generator rows have unequal lengths")
            for x in row:
                self.gf.check(x)
        _, rank = row_reduce(self.gf, self.rows)
        if rank != len(self.rows):
            raise RankDeficientError(
                f"supplied {len(self.rows)} rows but rank is {rank}"
            )

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def q(self) -> int:
        return self.gf.q


def row_reduce(gf: GF, rows: Iterable[Sequence[int]]) -> tuple[tuple[Vector, ...], int]:
    """Reduced row-echelon form over GF(q).

    Pivot choice is deterministic: leftmost column first, then the topmost
    row with a nonzero entry there.  Returns (nonzero rows of the RREF,
    rank).
    """
    mat = [list(r) for r in rows]
    if not mat:
        return (), 0
    ncols = len(mat[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = gf.inv(mat[r][c])
        if inv != 1:
            mat[r] = [gf.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [gf.sub(x, gf.mul(f, y)) for x, y in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    basis = tuple(tuple(row) for row in mat[:r] if any(row))
    return basis, len(basis)


def code_from_matrix(
    gf: GF, rows: Iterable[Sequence[int]], auto_reduce: bool = False
) -> LinearCode:
    """Build a LinearCode from generator rows.

    By default the rows must already be independent; with auto_reduce a
    row-space basis (RREF) is kept instead.
    """
    rows = tuple(tuple(r) for r in rows)
    if not rows:
        raise EmptyMatrixError("a generator matrix needs at least one row")
    if auto_reduce:
        for row in rows:
            for x in row:
                gf.check(x)
        basis, rank = row_reduce(gf, rows)
        if rank == 0:
            raise RankDeficientError("row space is zero")
        return LinearCode(gf, basis)
    return LinearCode(gf, rows)


def in_row_space(code: LinearCode, v: Sequence[int]) -> bool:
    """Whether v lies in the code (membership by rank of the stacked matrix)."""
    _, rank = row_reduce(code.gf, code.rows + (tuple(v),))
    return rank == code.k


def iter_codewords(code: LinearCode) -> Iterator[Vector]:
    """Yield all q^k codewords in message order (see module docstring)."""
    gf = code.gf
    q, n, k = gf.q, code.n, code.k
    add = gf.add
    scaled = [
        [[gf.mul(c, x) for x in row] for c in range(q)] for row in code.rows
    ]
    # diff[i][a][j]: change of coordinate j when digit i steps a -> (a+1) mod q.
    diff = [
        [
            [gf.sub(scaled[i][(a + 1) % q][j], scaled[i][a][j]) for j in range(n)]
            for a in range(q)
        ]
        for i in range(k)
    ]
    digits = [0] * k
    cw = [0] * n
    yield tuple(cw)
    for _ in range(q**k - 1):
        i = 0
        while digits[i] == q - 1:
            step = diff[i][q - 1]
            for j in range(n):
                cw[j] = add(cw[j], step[j])
            digits[i] = 0
            i += 1
        step = diff[i][digits[i]]
        for j in range(n):
            cw[j] = add(cw[j], step[j])
        digits[i] += 1
        yield tuple(cw)


def _check_limit(code: LinearCode, limit: int | None) -> None:
    limit = DEFAULT_ENUMERATION_LIMIT if limit is None else limit
    size = code.q**code.k
    if size > limit:
        raise EnumerationTooLargeError(
            f"enumerating q^k = {size} codewords exceeds the limit {limit}; "
            f"a limit of at least {size} is required"
        )


def _spectrum_generic(code: LinearCode) -> tuple[int, ...]:
    counts = [0] * (code.n + 1)
    for cw in iter_codewords(code):
        counts[len(cw) - cw.count(0)] += 1
    return tuple(counts)


def _spectrum_gf2(code: LinearCode) -> tuple[int, ...]:
    """Gray-code walk over bit-packed codewords; spectrum only (order-free)."""
    masks = [sum(1 << j for j, x in enumerate(row) if x) for row in code.rows]
    counts = [0] * (code.n + 1)
    counts[0] = 1
    cw = 0
    prev = 0
    for t in range(1, 1 << code.k):
        gray = t ^ (t >> 1)
        idx = (gray ^ prev).bit_length() - 1
        cw ^= masks[idx]
        prev = gray
        counts[cw.bit_count()] += 1
    return tuple(counts)


@functools.lru_cache(maxsize=4096)
def _spectrum_counts(code: LinearCode) -> tuple[int, ...]:
    if code.q == 2:
        return _spectrum_gf2(code)
    return _spectrum_generic(code)


def spectrum(code: LinearCode, limit: int | None = None) -> WeightSpectrum:
    """Exact weight distribution by enumerating all q^k codewords."""
    _check_limit(code, limit)
    return WeightSpectrum(_spectrum_counts(code))


def min_distance(code: LinearCode, limit: int | None = None) -> int:
    """Smallest nonzero codeword weight."""
    return spectrum(code, limit).min_distance


def code_params(code: LinearCode, limit: int | None = None) -> CodeParams:
    """The (n, k, d, q) tuple of the code, with d computed exactly."""
    return CodeParams(n=code.n, k=code.k, d=min_distance(code, limit), q=code.q)


def find_codeword_of_weight(
    code: LinearCode, w: int, index: int = 0, limit: int | None = None
) -> Vector:
    """The index-th codeword of weight w in enumeration order (0-based)."""
    _check_limit(code, limit)
    seen = 0
    for cw in iter_codewords(code):
        if len(cw) - cw.count(0) == w:
            if seen == index:
                return cw
            seen += 1
    raise ValueError(
        f"code has {seen} codeword(s) of weight {w}; index {index} not found"
    )


def residual(
    code: LinearCode, codeword: Sequence[int], limit: int | None = None
) -> LinearCode:
    """Puncture the code at the support of one of its codewords.

    For a codeword of weight w inside the window w*(q-1) < q*d the result
    is guaranteed to have length n-w and dimension k-1, and that dimension
    is checked.  Outside the window the punctured code is still returned
    with its actual rank, under a ResidualWindowWarning.
    """
    vec = tuple(codeword)
    if len(vec) != code.n:
        raise LengthMismatchError(f"codeword length {len(vec)} != n = {code.n}")
    for x in vec:
        code.gf.check(x)
    w = hamming_weight(vec)
    if w == 0:
        raise ZeroCodewordError("the residual is taken at a nonzero codeword")
    if not in_row_space(code, vec):
        raise NotACodewordError("vector is not in the code")
    keep = [j for j, x in enumerate(vec) if x == 0]
    if not keep:
        raise DegenerateResidualError("codeword has full support; nothing remains")
    punctured = [tuple(row[j] for j in keep) for row in code.rows]
    basis, rank = row_reduce(code.gf, punctured)
    if rank == 0:
        raise DegenerateResidualError("all generator rows vanish after puncturing")
    result = LinearCode(code.gf, basis)
    d = min_distance(code, limit)
    if w * (code.q - 1) < code.q * d:
        if rank != code.k - 1:
            raise AssertionError(
                f"residual rank {rank} != k-1 = {code.k - 1} inside the window"
            )
    else:
        warnings.warn(
            ResidualWindowWarning(
                f"weight {w} is outside the window ({w}*(q-1) >= q*{d}); "
                f"returned punctured code has rank {rank}"
            ),
            stacklevel=2,
        )
    return result


# --- generator-matrix file format -----------------------------------
#
# Text, UTF-8.  First data line: "q n k"; then k lines of n integers in
# [0, q) using the field element encoding.  '#' starts a comment line.


def parse_generator_text(text: str) -> LinearCode:
    """Parse the generator-matrix exchange format."""
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ValueError("no data lines in generator file")
    header = lines[0].split()
    if len(header) != 3:
        raise ValueError(f"header must be 'q n k', got {lines[0]!r}")
    q, n, k = (int(t) for t in header)
    if len(lines) - 1 != k:
        raise ValueError(f"expected {k} rows, found {len(lines) - 1}")
    gf = make_field(q)
    rows = []
    for line in lines[1:]:
        row = tuple(int(t) for t in line.split())
        if len(row) != n:
            raise ValueError(f"expected {n} entries per row, got {len(row)}")
        rows.append(row)
    return code_from_matrix(gf, rows)


def read_generator_file(path) -> LinearCode:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_generator_text(fh.read())


def generator_text(code: LinearCode, comment: str | None = None) -> str:
    """Render a code in the generator-matrix exchange format."""
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{code.q} {code.n} {code.k}")
    out.extend(" ".join(str(x) for x in row) for row in code.rows)
    return "\n".join(out) + "\n"
