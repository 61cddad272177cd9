"""Excluded-weight criteria: which weights cannot appear in any [n,k,d]_q code.

Three methods are implemented:

* Chen-Xie interval: weights in [n-k+2, floor(q*d/(q-1)) - 1] vanish.
* Singleton criterion: weights w with d <= w < q*d/(q-1) and
  w > q*(n-k-d+2) vanish; a consecutive interval.
* Griesmer criterion: weights w with d <= w < q*d/(q-1) vanish whenever
  n < residual_griesmer_min_n(k, d, q, w); this set need not be an
  interval.

Endpoint logic is exact-integer throughout.  Both upper endpoints use
the strict window w*(q-1) < q*d; the Chen-Xie endpoint additionally
requires w <= q*d/(q-1) - 1, which is one lower when (q-1) does not
divide q*d.  Clamped variants intersect with [1, n]; raw variants keep
the formula intervals even past n (some published tables print those).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import max_window_weight, residual_griesmer_min_n
from .codes import CodeParams, LinearCode, code_params, spectrum
from .errors import ParamRangeError


@dataclass(frozen=True)
class ExclusionReport:
    """Per-criterion excluded weights for one parameter tuple."""

    params: CodeParams
    chen_xie: frozenset[int]
    singleton: frozenset[int]
    griesmer: frozenset[int]
    union: frozenset[int]
    clamped: bool
    notes: tuple[str, ...]


@dataclass(frozen=True)
class AuditViolation:
    """A weight that a criterion excludes but the code actually attains."""

    criterion: str
    weight: int
    count: int


def _clamped(weights: set[int], n: int, clamp: bool) -> set[int]:
    return {w for w in weights if 1 <= w <= n} if clamp else weights


def chen_xie_upper(d: int, q: int) -> int:
    """Largest integer <= q*d/(q-1) - 1, i.e. floor(q*d/(q-1)) - 1."""
    return (q * d) // (q - 1) - 1


def chen_xie_excluded(params: CodeParams, clamp: bool = True) -> set[int]:
    """The Chen-Xie interval [n-k+2, floor(q*d/(q-1)) - 1] (may be empty)."""
    lo = params.n - params.k + 2
    hi = chen_xie_upper(params.d, params.q)
    return _clamped(set(range(lo, hi + 1)), params.n, clamp)


def chen_xie_excluded_by_slack(params: CodeParams, clamp: bool = True) -> set[int]:
    """Chen-Xie set built from the slack-parameter form (cross-check path).

    Scans every slack v >= 0 with (n-k+2+v)*(q-1) < q*d and unions the
    integer weights in [q*d/(q-1) - v - 1, q*d/(q-1) - 1].  Must agree
    with the closed-form interval; kept to guard endpoint off-by-ones.
    """
    n, k, d, q = params.n, params.k, params.d, params.q
    hi = chen_xie_upper(d, q)
    out: set[int] = set()
    v = 0
    while (n - k + 2 + v) * (q - 1) < q * d:
        # smallest integer >= q*d/(q-1) - v - 1
        lo = -((-(q * d)) // (q - 1)) - v - 1
        out.update(range(lo, hi + 1))
        v += 1
    return _clamped(out, n, clamp)


def singleton_excluded(params: CodeParams, clamp: bool = True) -> set[int]:
    """Weights ruled out by the residual-Singleton argument (an interval).

    Requires k >= 2: the argument passes to a residual code of dimension
    k-1, and for k = 1 the claim is simply false (a [5,1,5] binary
    repetition code attains the weight 5 that the formula would rule out).
    """
    n, k, d, q = params.n, params.k, params.d, params.q
    if k < 2:
        raise ParamRangeError("the Singleton criterion needs k >= 2")
    lo = max(d, q * (n - k - d + 2) + 1)
    hi = max_window_weight(d, q)
    return _clamped(set(range(lo, hi + 1)), n, clamp)


def griesmer_excluded(params: CodeParams, clamp: bool = True) -> set[int]:
    """Weights ruled out by the residual-Griesmer argument (possibly gappy).

    Scans d <= w < q*d/(q-1) (and w <= n when clamping) and keeps w
    whenever the forced length exceeds n.  Requires k >= 2.
    """
    n, k, d, q = params.n, params.k, params.d, params.q
    if k < 2:
        raise ParamRangeError("the Griesmer criterion needs k >= 2")
    hi = max_window_weight(d, q)
    if clamp:
        hi = min(hi, n)
    return {
        w for w in range(d, hi + 1) if n < residual_griesmer_min_n(k, d, q, w)
    }


def compare_methods(params: CodeParams, clamp: bool = True) -> ExclusionReport:
    """Evaluate all three criteria side by side.

    Records the left-endpoint relation: whenever (q-1)*(n-k+2) < q*d and
    d respects the Singleton bound d <= n-k+1 (tuples violating it admit
    no code at all), the Singleton set must contain the Chen-Xie set, and
    that containment is checked here rather than assumed.
    """
    n, k, d, q = params.n, params.k, params.d, params.q
    cx = frozenset(chen_xie_excluded(params, clamp))
    si = frozenset(singleton_excluded(params, clamp)) if k >= 2 else frozenset()
    gr = frozenset(griesmer_excluded(params, clamp)) if k >= 2 else frozenset()
    notes = []
    if d > 1:
        notes.append(
            f"weights 1..{d - 1} are trivially absent (below the minimum distance)"
        )
    if k < 2:
        notes.append("residual-based criteria skipped: they need k >= 2")
    if (q - 1) * (n - k + 2) >= q * d:
        notes.append("left-endpoint condition void: chen-xie interval is empty")
    elif k >= 2 and d <= n - k + 1:
        if not cx <= si:
            raise AssertionError(
                f"singleton set fails to contain chen-xie set at {params}"
            )
        notes.append("left-endpoint condition holds: singleton contains chen-xie")
    else:
        notes.append(
            "left-endpoint comparison inapplicable: no code has these parameters"
        )
    if not clamp:
        for name, s in (("chen-xie", cx), ("singleton", si), ("griesmer", gr)):
            over = sorted(w for w in s if w > n)
            if over:
                notes.append(f"{name} raw interval exceeds n={n}: {over}")
    return ExclusionReport(
        params=params,
        chen_xie=cx,
        singleton=si,
        griesmer=gr,
        union=cx | si | gr,
        clamped=clamp,
        notes=tuple(notes),
    )


def audit_against_spectrum(
    code: LinearCode, limit: int | None = None
) -> list[AuditViolation]:
    """Check every criterion against the code's true weight distribution.

    Computes (n, k, d) from the code itself, derives the clamped excluded
    sets, and reports every weight that is both excluded and attained.
    Sound criteria return an empty list.
    """
    params = code_params(code, limit)
    counts = spectrum(code, limit).counts
    sets = {"chen-xie": chen_xie_excluded(params)}
    if params.k >= 2:
        sets["singleton"] = singleton_excluded(params)
        sets["griesmer"] = griesmer_excluded(params)
    violations = []
    for criterion in sorted(sets):
        for w in sorted(sets[criterion]):
            if counts[w]:
                violations.append(
                    AuditViolation(criterion=criterion, weight=w, count=counts[w])
                )
    return violations
