"""Classical and weight-aware bounds for [n, k, d]_q linear codes.

Every comparison is exact integer arithmetic; the non-integer threshold
q*d/(q-1) is never materialized (window membership is decided by the
cross-multiplied test w*(q-1) < q*d).  These functions are arithmetic
contracts on parameter tuples; nothing here assumes a code exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParamRangeError, WindowViolatedError


def ceil_div(a: int, b: int) -> int:
    """Exact ceiling of a/b for positive b."""
    return -(-a // b)


@dataclass(frozen=True)
class BoundVerdict:
    """One evaluated bound: `holds` iff `lhs relation rhs` is satisfied."""

    name: str
    holds: bool
    lhs: int
    rhs: int
    tight: bool
    relation: str = "<="


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ParamRangeError(msg)


def singleton_max_d(n: int, k: int) -> int:
    """Largest distance allowed by the Singleton bound: n - k + 1."""
    _require(1 <= k <= n, f"need 1 <= k <= n, got n={n} k={k}")
    return n - k + 1


def griesmer_min_n(k: int, d: int, q: int) -> int:
    """Smallest length allowed by the Griesmer bound: sum of ceil(d/q^i)."""
    _require(k >= 1 and d >= 1 and q >= 2, f"bad parameters k={k} d={d} q={q}")
    return sum(ceil_div(d, q**i) for i in range(k))


def weight_in_window(d: int, q: int, w: int) -> bool:
    """Whether w < q*d/(q-1), decided as w*(q-1) < q*d."""
    _require(d >= 1 and q >= 2 and w >= 1, f"bad parameters d={d} q={q} w={w}")
    return w * (q - 1) < q * d


def max_window_weight(d: int, q: int) -> int:
    """Largest integer weight inside the window, i.e. strictly below q*d/(q-1)."""
    _require(d >= 1 and q >= 2, f"bad parameters d={d} q={q}")
    return (q * d - 1) // (q - 1)


def residual_singleton_max_d(n: int, k: int, q: int, w: int) -> int:
    """Distance cap n - k - ceil(w/q) + 2 forced by a weight-w codeword.

    Contract: if an [n, k, d]_q code with k >= 2 has a nonzero codeword
    of weight w with weight_in_window(d, q, w), then d is at most this
    value.  (k = 1 repetition codes escape the cap: the underlying
    residual argument needs a (k-1)-dimensional code.)
    """
    _require(1 <= k <= n and 1 <= w and q >= 2, f"bad parameters n={n} k={k} q={q} w={w}")
    return n - k - ceil_div(w, q) + 2


def residual_griesmer_min_n(k: int, d: int, q: int, w: int) -> int:
    """Length floor forced by a weight-w codeword in the window.

    Returns d + ceil(w/q) + sum_{i=1}^{k-2} ceil((d - w + ceil(w/q)) / q^i);
    the sum is empty for k = 2.  Requires k >= 2 and w in the window
    (which guarantees the numerator d - w + ceil(w/q) is >= 1).
    """
    _require(k >= 2 and d >= 1 and q >= 2 and w >= 1, f"bad parameters k={k} d={d} q={q} w={w}")
    if not weight_in_window(d, q, w):
        raise WindowViolatedError(f"w={w} is not below q*d/(q-1) = {q}*{d}/{q - 1}")
    lead = ceil_div(w, q)
    rest = d - w + lead
    return d + lead + sum(ceil_div(rest, q**i) for i in range(1, k - 1))


def global_weight_max(n: int, d: int, q: int) -> int:
    """Weight cap q*(n - d) satisfied by every nonzero codeword when k > 1."""
    _require(1 <= d <= n and q >= 2, f"bad parameters n={n} d={d} q={q}")
    return q * (n - d)


def distance_ratio_holds(n: int, d: int, q: int) -> BoundVerdict:
    """The ratio bound (q+1)*d <= q*n, equivalent to d <= q*n/(q+1)."""
    _require(1 <= d <= n and q >= 2, f"bad parameters n={n} d={d} q={q}")
    lhs = (q + 1) * d
    rhs = q * n
    return BoundVerdict(
        name="distance-ratio",
        holds=lhs <= rhs,
        lhs=lhs,
        rhs=rhs,
        tight=lhs == rhs,
    )


def mds_weight_ok(q: int, d: int, w: int) -> bool:
    """Whether a weight w is admissible for an MDS code: w <= q.

    Applies only under the caller-asserted MDS context with k >= 2,
    d <= w and w in the window; a False return then means no such MDS
    code can contain a codeword of weight w.  ([n,1,n] repetition codes
    are MDS but escape the restriction.)
    """
    _require(d >= 1 and q >= 2 and w >= 1, f"bad parameters d={d} q={q} w={w}")
    if w < d or not weight_in_window(d, q, w):
        raise WindowViolatedError(
            f"need d <= w < q*d/(q-1); got d={d}, w={w}, q={q}"
        )
    return w <= q


def parameter_verdicts(
    n: int, k: int, d: int, q: int, w: int | None = None
) -> list[BoundVerdict]:
    """Evaluate every applicable bound for (n, k, d, q) and optionally w.

    The ratio bound, the weight cap and all residual-based bounds hold
    only for k >= 2 and are omitted for one-dimensional parameters.
    """
    _require(1 <= k <= n and 1 <= d <= n and q >= 2, f"bad parameters n={n} k={k} d={d} q={q}")
    out = [
        BoundVerdict(
            name="singleton",
            holds=d <= singleton_max_d(n, k),
            lhs=d,
            rhs=singleton_max_d(n, k),
            tight=d == singleton_max_d(n, k),
        ),
        BoundVerdict(
            name="griesmer",
            holds=n >= griesmer_min_n(k, d, q),
            lhs=n,
            rhs=griesmer_min_n(k, d, q),
            tight=n == griesmer_min_n(k, d, q),
            relation=">=",
        ),
    ]
    if k >= 2:
        out.append(distance_ratio_holds(n, d, q))
    if w is None:
        return out
    _require(w >= 1, f"bad weight w={w}")
    in_window = weight_in_window(d, q, w)
    out.append(
        BoundVerdict(
            name="weight-window",
            holds=in_window,
            lhs=w * (q - 1),
            rhs=q * d,
            tight=w * (q - 1) == q * d,
            relation="<",
        )
    )
    if k < 2:
        return out
    out.append(
        BoundVerdict(
            name="global-weight",
            holds=w <= global_weight_max(n, d, q),
            lhs=w,
            rhs=global_weight_max(n, d, q),
            tight=w == global_weight_max(n, d, q),
        )
    )
    if in_window:
        cap = residual_singleton_max_d(n, k, q, w)
        out.append(
            BoundVerdict(
                name="residual-singleton",
                holds=d <= cap,
                lhs=d,
                rhs=cap,
                tight=d == cap,
            )
        )
        floor_n = residual_griesmer_min_n(k, d, q, w)
        out.append(
            BoundVerdict(
                name="residual-griesmer",
                holds=n >= floor_n,
                lhs=n,
                rhs=floor_n,
                tight=n == floor_n,
                relation=">=",
            )
        )
        if d == singleton_max_d(n, k) and d <= w:
            out.append(
                BoundVerdict(
                    name="mds-weight",
                    holds=mds_weight_ok(q, d, w),
                    lhs=w,
                    rhs=q,
                    tight=w == q,
                )
            )
    return out
