"""Property suites run over the seeded random-code corpus.

These are the executable forms of the core guarantees: the residual-code
dimension/distance lemma, the global weight cap q*(n-d), the distance
ratio (q+1)*d <= q*n, and soundness of all three exclusion criteria
against true spectra.  Used both by the test suite and by the CLI
`selftest` subcommand.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bounds import ceil_div
from .codes import LinearCode, hamming_weight, iter_codewords, min_distance, residual, spectrum
from .corpus import random_corpus
from .exclusion import audit_against_spectrum


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one property suite: items checked and violations found."""

    name: str
    checked: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _label(code: LinearCode, d: int) -> str:
    return f"[{code.n},{code.k},{d}]_{code.q}"


def check_residual_lemma(codes: Iterable[LinearCode]) -> CheckResult:
    """Residual codes of in-window codewords: length n-w, dimension k-1,
    and minimum distance at least d - w + ceil(w/q).

    Codewords sharing a support are punctured identically and have equal
    weight, so each distinct support is verified once while every window
    codeword is counted as checked.
    """
    checked = 0
    violations = []
    for code in codes:
        q, n, k = code.q, code.n, code.k
        d = min_distance(code)
        label = _label(code, d)
        supports: dict[int, tuple[int, ...]] = {}
        for cw in iter_codewords(code):
            w = hamming_weight(cw)
            if w == 0 or w * (q - 1) >= q * d:
                continue
            checked += 1
            mask = sum(1 << j for j, x in enumerate(cw) if x)
            supports.setdefault(mask, cw)
        for cw in supports.values():
            w = hamming_weight(cw)
            try:
                res = residual(code, cw)
            except AssertionError as exc:
                violations.append(f"{label} w={w}: {exc}")
                continue
            if res.n != n - w:
                violations.append(f"{label} w={w}: residual length {res.n} != {n - w}")
            if res.k != k - 1:
                violations.append(f"{label} w={w}: residual dimension {res.k} != {k - 1}")
            floor_d = d - w + ceil_div(w, q)
            res_d = min_distance(res)
            if res_d < floor_d:
                violations.append(
                    f"{label} w={w}: residual distance {res_d} < {floor_d}"
                )
    return CheckResult("residual-lemma", checked, tuple(violations))


def check_global_weight(codes: Iterable[LinearCode]) -> CheckResult:
    """Every nonzero weight of a k > 1 code is at most q*(n-d)."""
    checked = 0
    violations = []
    for code in codes:
        if code.k <= 1:
            continue
        spec = spectrum(code)
        d = spec.min_distance
        cap = code.q * (code.n - d)
        checked += 1
        for w, count in spec.nonzero().items():
            if w and w > cap:
                violations.append(
                    f"{_label(code, d)}: {count} codeword(s) of weight {w} > {cap}"
                )
    return CheckResult("global-weight", checked, tuple(violations))


def check_distance_ratio(codes: Iterable[LinearCode]) -> CheckResult:
    """(q+1)*d <= q*n for every k > 1 code."""
    checked = 0
    violations = []
    for code in codes:
        if code.k <= 1:
            continue
        d = min_distance(code)
        checked += 1
        if (code.q + 1) * d > code.q * code.n:
            violations.append(f"{_label(code, d)}: (q+1)*d exceeds q*n")
    return CheckResult("distance-ratio", checked, tuple(violations))


def check_exclusion_soundness(codes: Iterable[LinearCode]) -> CheckResult:
    """No criterion excludes a weight the code actually attains."""
    checked = 0
    violations = []
    for code in codes:
        checked += 1
        for v in audit_against_spectrum(code):
            d = min_distance(code)
            violations.append(
                f"{_label(code, d)}: {v.criterion} excludes attained weight "
                f"{v.weight} (A_w = {v.count})"
            )
    return CheckResult("exclusion-soundness", checked, tuple(violations))


def run_selftest(trials: int, seed: int) -> list[CheckResult]:
    """Run all four suites over the seeded corpus; deterministic in (trials, seed)."""
    codes = list(random_corpus(trials, seed))
    return [
        check_residual_lemma(codes),
        check_global_weight(codes),
        check_distance_ratio(codes),
        check_exclusion_soundness(codes),
    ]


def corpus_codes(trials: int, seed: int) -> Sequence[LinearCode]:
    """Materialized seeded corpus (shared by tests)."""
    return list(random_corpus(trials, seed))
