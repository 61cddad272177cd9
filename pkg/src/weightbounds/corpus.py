"""Built-in codes, the seeded random-code generator, and embedded table data.

The named constructors reproduce the explicitly known generator matrices
used throughout the test suite.  Two externally published codes (a
ternary [27, 8, 14] and a binary cyclic [15, 10, 4]) are represented
only by their published weight enumerators; generator matrices for them
are optional fixtures loaded from files when present.

Random codes use SplitMix64 so the corpus is reproducible bit-for-bit
across platforms and Python versions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .codes import CodeParams, LinearCode, code_from_matrix, row_reduce
from .errors import ParamRangeError, UnknownNameError
from .gf import make_field

DEFAULT_SELFTEST_SEED = 12345
DEFAULT_SELFTEST_TRIALS = 1000

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 PRNG (public-domain constants, 64-bit state).

    state += 0x9E3779B97F4A7C15; z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
    return z ^ (z >> 31).

    `below(bound)` reduces next_u64() modulo bound; for the tiny bounds
    used here (q <= 4, n <= 14) the modulo bias is irrelevant and the
    output is identical on every platform.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return self.next_u64() % bound


def random_code(seed: int, q: int, n: int, k: int) -> LinearCode:
    """Deterministic pseudo-random full-rank [n, k] code over GF(q).

    Rows are drawn one at a time from SplitMix64(seed) (each row is n
    draws of below(q)); a row is kept only if it is independent of the
    rows kept so far, otherwise it is discarded and a fresh row drawn.
    """
    if q not in (2, 3, 4):
        raise ParamRangeError(f"random codes support q in {{2, 3, 4}}, got {q}")
    if not (1 <= k <= 5 and k <= n <= 14):
        raise ParamRangeError(f"need 1 <= k <= 5 and k <= n <= 14, got n={n} k={k}")
    gf = make_field(q)
    rng = SplitMix64(seed)
    accepted: list[tuple[int, ...]] = []
    while len(accepted) < k:
        row = tuple(rng.below(q) for _ in range(n))
        _, rank = row_reduce(gf, accepted + [row])
        if rank == len(accepted) + 1:
            accepted.append(row)
    return LinearCode(gf, tuple(accepted))


def random_corpus(trials: int, seed: int) -> Iterator[LinearCode]:
    """Yield `trials` random codes with q in {2,3,4}, 2 <= k <= 5, k <= n <= 14.

    One SplitMix64 stream seeded with `seed` drives both the parameter
    draws and the per-code seeds, so the whole corpus is a pure function
    of (trials, seed).
    """
    stream = SplitMix64(seed)
    for _ in range(trials):
        q = (2, 3, 4)[stream.below(3)]
        k = 2 + stream.below(4)
        n = k + stream.below(14 - k + 1)
        yield random_code(stream.next_u64(), q, n, k)


# --- named constructions ---------------------------------------------

_G_11_3_6 = (
    (1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0),
    (1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 0),
    (1, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1),
)


def example_11_3_6() -> LinearCode:
    """The explicit binary [11, 3, 6] code whose nonzero weights are {6, 8}."""
    return LinearCode(make_field(2), _G_11_3_6)


def ratio_code(q: int) -> LinearCode:
    """The [q+1, 2, q]_q code attaining (q+1)*d = q*n.

    First row is all ones then a zero; second row lists every field
    element in encoding order then a one.
    """
    gf = make_field(q)
    rows = ((1,) * q + (0,), tuple(range(q)) + (1,))
    return LinearCode(gf, rows)


def reed_muller_1(m: int) -> LinearCode:
    """First-order binary Reed-Muller code of length 2^m.

    Generators: the all-ones row plus m coordinate-indicator rows;
    indicator row j holds bit (m-1-j) of the column index, so column c
    spells the binary digits of c, most significant first.
    """
    if m < 1:
        raise ParamRangeError(f"need m >= 1, got {m}")
    n = 1 << m
    rows = [(1,) * n]
    rows += [
        tuple((c >> (m - 1 - j)) & 1 for c in range(n)) for j in range(m)
    ]
    return LinearCode(make_field(2), tuple(rows))


def ternary_hamming_13_10() -> LinearCode:
    """The [13, 10, 3] ternary Hamming code.

    Built as the null space of the 3x13 check matrix whose columns are
    the 13 projective points of PG(2, 3), normalized to leading
    coefficient 1 and ordered lexicographically.
    """
    gf = make_field(3)
    points = sorted(
        p
        for p in product(range(3), repeat=3)
        if any(p) and p[next(i for i, x in enumerate(p) if x)] == 1
    )
    check = [tuple(pt[r] for pt in points) for r in range(3)]
    basis, _ = row_reduce(gf, check)
    pivots = [next(j for j, x in enumerate(row) if x) for row in basis]
    free = [c for c in range(13) if c not in pivots]
    kernel = []
    for f in free:
        v = [0] * 13
        v[f] = 1
        for row, pc in zip(basis, pivots):
            v[pc] = gf.neg(row[f])
        kernel.append(tuple(v))
    return code_from_matrix(gf, kernel)


def named_code(name: str) -> LinearCode:
    """Look up a built-in construction by name.

    Accepted names: example_11_3_6, hamming_13_10_3_ternary, ratio_<q>
    (e.g. ratio_4), rm_1_<m> (e.g. rm_1_4).
    """
    if name == "example_11_3_6":
        return example_11_3_6()
    if name == "hamming_13_10_3_ternary":
        return ternary_hamming_13_10()
    match = re.fullmatch(r"ratio_(\d+)", name)
    if match:
        return ratio_code(int(match.group(1)))
    match = re.fullmatch(r"rm_1_(\d+)", name)
    if match:
        return reed_muller_1(int(match.group(1)))
    raise UnknownNameError(f"no built-in code named {name!r}")


# Published weight enumerators of codes referenced without printed
# generator matrices.  A matching generator matrix may be supplied as an
# optional fixture file fixtures/<name>.gen; tests skip when absent.
EXTERNAL_SPECTRA: dict[str, dict[int, int]] = {
    "ding_27_8_14_ternary": {
        0: 1, 14: 810, 15: 702, 17: 1404, 18: 780,
        20: 2106, 21: 702, 26: 54, 27: 2,
    },
    "cyclic_15_10_4_binary": {
        0: 1, 4: 105, 6: 280, 8: 435, 10: 168, 12: 35,
    },
}


# --- embedded comparison tables --------------------------------------


@dataclass(frozen=True)
class TableRow:
    """One comparison-table row: parameters plus the printed excluded sets.

    `printed_counts` keeps the "(N weights)" annotations in cell order
    (chen-xie, singleton[, griesmer]); a few of those annotations
    disagree with their own printed sets and are preserved as printed so
    the reproduction harness can flag them.
    """

    params: CodeParams
    expected_chen_xie: frozenset[int]
    expected_singleton: frozenset[int]
    expected_griesmer: frozenset[int] | None
    printed_counts: tuple[int, ...]
    source: str


def parse_weights(text: str) -> frozenset[int]:
    """Parse a printed weight cell: comma-separated values and a-b ranges."""
    out: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if not part or part == "-":
            continue
        if "-" in part:
            a, b = (int(t) for t in part.split("-"))
            lo, hi = min(a, b), max(a, b)
            out.update(range(lo, hi + 1))
        else:
            out.add(int(part))
    return frozenset(out)


def format_weights(weights, ranges: bool = False) -> str:
    """Render a weight set descending; collapse runs to a-b when asked."""
    ws = sorted(weights, reverse=True)
    if not ws:
        return "-"
    if not ranges:
        return ", ".join(str(w) for w in ws)
    runs = []
    start = prev = ws[0]
    for w in ws[1:]:
        if w == prev - 1:
            prev = w
            continue
        runs.append((start, prev))
        start = prev = w
    runs.append((start, prev))
    return ", ".join(f"{b}-{a}" if a != b else f"{a}" for a, b in runs)


# (n, k, d, chen-xie cell, count, singleton cell, count); binary codes.
_TABLE1 = (
    (15, 5, 7, "13, 12", 2, "13, 12, 11", 3),
    (21, 9, 8, "15, 14", 2, "15, 14, 13", 3),
    (31, 5, 16, "31, 30, 29, 28", 4, "31, 30, 29, 28, 27, 26, 25", 7),
    (32, 6, 16, "31, 30, 29, 28", 4, "31, 30, 29, 28, 27, 26, 25", 7),
    (47, 5, 24, "47, 46, 45, 44", 4, "47, 46, 45, 44, 43, 42, 41", 7),
    (48, 6, 24, "47, 46, 45, 44", 4, "47, 46, 45, 44, 43, 42, 41", 7),
    (55, 5, 28, "55, 54, 53, 52", 4, "55, 54, 53, 52, 51, 50, 49", 7),
    (56, 6, 28, "55, 54, 53, 52", 4, "55, 54, 53, 52, 51, 50, 49", 7),
    (59, 5, 30, "59, 58, 57, 56", 4, "59, 58, 57, 56, 55, 54, 53", 7),
    (60, 6, 30, "59, 58, 57, 56", 4, "59, 58, 57, 56, 55, 54, 53", 7),
    (61, 5, 31, "61, 60, 59, 58", 4, "61, 60, 59, 58, 57, 56, 55", 7),
    (62, 6, 31, "61, 60, 59, 58", 4, "61, 60, 59, 58, 57, 56, 55", 7),
    (63, 5, 32, "63, 62, 61, 60", 4, "63, 62, 61, 60, 59, 58, 57", 7),
    (63, 6, 32, "63, 62, 61, 60, 59", 5, "63, 62, 61, 60, 59, 58, 57, 56, 55", 9),
    (63, 7, 31, "61, 60, 59, 58", 4, "61, 60, 59, 58, 57, 56, 55", 7),
    (64, 6, 32, "63, 62, 61, 60", 4, "63, 62, 61, 60, 59, 58, 57", 7),
    (64, 7, 32, "63, 62, 61, 60, 59", 5, "63, 62, 61, 60, 59, 58, 57, 56, 55", 9),
    (65, 7, 32, "63, 62, 61, 60", 4, "63, 62, 61, 60, 59, 58, 57", 7),
    (71, 5, 36, "71, 70, 69, 68", 4, "71, 70, 69, 68, 67, 66, 65", 7),
    (75, 5, 38, "75, 74, 73, 72", 4, "75, 74, 73, 72, 71, 70, 69", 7),
    (77, 5, 39, "77, 76, 75, 74", 4, "77, 76, 75, 74, 73, 72, 71", 7),
    (78, 5, 40, "78, 77, 76, 75", 4, "79, 78, 77, 76, 75, 74, 73, 72, 71", 9),
    (79, 5, 40, "79, 78, 77, 76", 4, "79, 78, 77, 76, 75, 74, 73", 7),
    (80, 6, 40, "79, 78, 77, 76", 4, "79, 78, 77, 76, 75, 74, 73", 7),
    (83, 5, 42, "83, 82, 81, 80", 4, "83, 82, 81, 80, 79, 78, 77", 7),
    (85, 5, 43, "85, 84, 83, 82", 4, "85, 84, 83, 82, 81, 80, 79", 7),
    (86, 5, 44, "86, 85, 84, 83", 4, "87, 86, 85, 84, 83, 82, 81, 80, 79", 9),
    (87, 5, 44, "87, 86, 85, 84", 4, "87, 86, 85, 84, 83, 82, 81", 7),
    (88, 6, 44, "87, 86, 85, 84", 4, "87, 86, 85, 84, 83, 82, 81", 7),
    (89, 5, 45, "89, 88, 87, 86", 4, "89, 88, 87, 86, 85, 84, 83", 7),
    (90, 5, 46, "90, 89, 88, 87", 4, "90, 89, 88, 87, 86, 85, 84, 83", 8),
    (91, 5, 46, "91, 90, 89, 88", 4, "91, 90, 89, 88, 87, 86, 85", 7),
    (92, 5, 47, "92, 91, 90, 89", 4, "93, 92, 91, 90, 89, 88, 87, 86, 85", 9),
    (92, 6, 46, "91, 90, 89, 88", 4, "91, 90, 89, 88, 87, 86, 85", 7),
    (93, 5, 48, "93, 92, 91, 90", 4, "95, 94, 93, 92, 91, 90, 89, 88, 87, 86, 85", 11),
)

# Same layout, ternary codes.
_TABLE2 = (
    (27, 4, 18, "26, 25", 2, "26, 25, 24, 23, 22", 5),
    (36, 4, 24, "35, 34", 2, "35, 34, 33, 32, 31", 5),
    (80, 4, 54, "80, 79, 78", 3, "80, 79, 78, 77, 76, 75, 74, 73", 8),
    (81, 5, 54, "80, 79, 78", 3, "80, 79, 78, 77, 76, 75, 74, 73", 8),
    (107, 4, 72, "107, 106, 105", 3, "107, 106, 105, 104, 103, 102, 101, 100", 8),
    (108, 5, 72, "107, 106, 105", 3, "107, 106, 105, 104, 103, 102, 101, 100", 8),
    (116, 4, 78, "116, 115, 114", 3, "116, 115, 114, 113, 112, 111, 110, 109", 8),
    (117, 5, 78, "116, 115, 114", 3, "116, 115, 114, 113, 112, 111, 110, 109", 8),
    (119, 4, 80, "119, 118, 117", 3, "119, 118, 117, 116, 115, 114, 113, 112", 8),
    (120, 4, 81, "120, 119, 118", 3,
     "121, 120, 119, 118, 117, 116, 115, 114, 113, 112", 10),
    (120, 5, 80, "119, 118, 117", 3, "119, 118, 117, 116, 115, 114, 113, 112", 8),
    (121, 5, 81, "120, 119, 118", 3,
     "121, 120, 119, 118, 117, 116, 115, 114, 113, 112", 10),
    (134, 4, 90, "134, 133, 132", 3, "134, 133, 132, 131, 130, 129, 128, 127", 8),
    (143, 4, 96, "143, 142, 141", 3, "143, 142, 141, 140, 139, 138, 137, 136", 8),
    (146, 4, 98, "146, 145, 144", 3, "146, 145, 144, 143, 142, 141, 140, 139", 8),
    (147, 4, 99, "147, 146, 145", 3,
     "148, 147, 146, 145, 144, 143, 142, 141, 140, 139", 10),
    (152, 4, 102, "152, 151, 150", 3, "152, 151, 150, 149, 148, 147, 146, 145", 8),
    (155, 4, 104, "155, 154, 153", 3, "155, 154, 153, 152, 151, 150, 149, 148", 8),
    (162, 5, 108, "161, 160, 159", 3, "161, 160, 159, 158, 157, 156, 155, 154", 8),
    (189, 5, 126, "188, 187, 186", 3, "188, 187, 186, 185, 184, 183, 182, 181", 8),
    (198, 5, 132, "197, 196, 195", 3, "197, 196, 195, 194, 193, 192, 191, 190", 8),
    (201, 4, 135, "201, 200, 199", 3,
     "202, 201, 200, 199, 198, 197, 196, 195, 194, 193", 10),
    (201, 5, 134, "200, 199, 198", 3, "200, 199, 198, 197, 196, 195, 194, 193", 8),
    (202, 5, 135, "201, 200, 199", 3,
     "202, 201, 200, 199, 198, 197, 196, 195, 194, 193", 10),
)

# (n, k, d, chen-xie, count, singleton, count, griesmer, count); binary.
_TABLE3 = (
    (267, 8, 132, "261-263", 3, "259-263", 5,
     "133-135, 167, 183, 191, 195, 197-199, 215, 223, 227, 229-231, 239, 243, "
     "245-247, 251, 253-255, 257-263", 32),
    (271, 8, 134, "265-267", 3, "263-267", 5,
     "135, 137-139, 171, 187, 195, 199, 201-203, 219, 227, 231, 233-235, 243, "
     "247, 249-251, 255, 257-259, 261-267", 33),
    (274, 8, 136, "268-271", 4, "265-271", 7,
     "137-143, 159, 167, 171, 173-175, 183, 187, 189-191, 195, 197-199, "
     "201-207, 215, 219, 221-223, 227, 229-231, 233-239, 243, 245-247, "
     "249-255, 257-271", 71),
    (279, 8, 138, "273-275", 3, "271-275", 5,
     "139, 143, 145-147, 179, 195, 203, 207, 209-211, 227, 235, 239, 241-243, "
     "251, 255, 257-259, 263, 265-267, 269-275", 34),
    (282, 8, 140, "276-279", 4, "273-279", 7,
     "141-143, 145-151, 167, 175, 179, 181-183, 191, 195, 197-199, 203, "
     "205-207, 209-215, 223, 227, 229-231, 235, 237-239, 241-247, 251, "
     "253-255, 257-263, 265-279", 79),
    (286, 8, 142, "280-283", 4, "277-283", 7,
     "143, 145-147, 149-155, 171, 179, 183, 185-187, 195, 199, 201-203, 207, "
     "209-211, 213-219, 227, 231, 233-235, 239, 241-243, 245-251, 255, "
     "257-259, 261-267, 269-283", 83),
    (289, 8, 144, "283-287", 5, "279-287", 9,
     "145-159, 167, 171, 173-175, 179, 181-183, 185-191, 195, 197-199, "
     "201-207, 209-215, 216-223, 227, 229-231, 233-239, 241-247, 248-255, "
     "257-263, 264-271, 272-279, 280-287", 143),
)


def table_rows(which: int) -> list[TableRow]:
    """The embedded rows of comparison table 1, 2, or 3."""
    if which == 1:
        raw, q = _TABLE1, 2
    elif which == 2:
        raw, q = _TABLE2, 3
    elif which == 3:
        raw, q = _TABLE3, 2
    else:
        raise ParamRangeError(f"table index must be 1, 2 or 3, got {which}")
    rows = []
    for i, entry in enumerate(raw):
        if which == 3:
            n, k, d, cx, ccx, si, csi, gr, cgr = entry
            griesmer = parse_weights(gr)
            counts = (ccx, csi, cgr)
        else:
            n, k, d, cx, ccx, si, csi = entry
            griesmer = None
            counts = (ccx, csi)
        rows.append(
            TableRow(
                params=CodeParams(n=n, k=k, d=d, q=q),
                expected_chen_xie=parse_weights(cx),
                expected_singleton=parse_weights(si),
                expected_griesmer=griesmer,
                printed_counts=counts,
                source=f"table{which}:{i:02d}",
            )
        )
    return rows


def row_to_dict(row: TableRow) -> dict:
    """JSON-ready form of a table row (weight sets listed descending)."""
    out = {
        "n": row.params.n,
        "k": row.params.k,
        "d": row.params.d,
        "q": row.params.q,
        "chen_xie": sorted(row.expected_chen_xie, reverse=True),
        "singleton": sorted(row.expected_singleton, reverse=True),
        "printed_counts": list(row.printed_counts),
        "source": row.source,
    }
    if row.expected_griesmer is not None:
        out["griesmer"] = sorted(row.expected_griesmer, reverse=True)
    return out


def row_from_dict(data: dict) -> TableRow:
    """Inverse of row_to_dict."""
    return TableRow(
        params=CodeParams(n=data["n"], k=data["k"], d=data["d"], q=data["q"]),
        expected_chen_xie=frozenset(data["chen_xie"]),
        expected_singleton=frozenset(data["singleton"]),
        expected_griesmer=(
            frozenset(data["griesmer"]) if "griesmer" in data else None
        ),
        printed_counts=tuple(data["printed_counts"]),
        source=data["source"],
    )
