"""Local periods, repetition words, critical points, period profiles.

Vocabulary (see README for worked examples):

* A nonempty word u is a repetition word at position p of w = x.y when
  u matches around the cut: u ends at p or has x as a suffix, and u
  starts at p+1 or has y as a prefix.  Its length is a local period.
* per(w, p) is the minimal local period at p; it never exceeds the
  global period per(w), and p is *critical* when per(w, p) = per(w).
* eta(w) counts the critical points; density is eta / (|w| - 1).

The minimal local period is computed by two independent routes:

* ``local_period`` / ``local_periods_scan``: the definitional scan,
  trying q = 1, 2, ... with a letter-by-letter window check.  This is
  the reference route.
* ``local_periods``: a shift sweep that resolves all positions of one
  word together from per-shift mismatch prefix sums, O(n * per(w)).
  ``profile`` uses it.

The two must agree everywhere; verification runs recompute both and
treat any disagreement as a failure of the run itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .config import DEFAULT_LIMITS
from .errors import InvalidPeriod, InvalidPosition, ResourceGuard, TooShort
from .words import border_array


def is_local_period(w: str, p: int, q: int) -> bool:
    """Window test for a local period: q is a local period of w at p iff
    w[i] = w[i+q] for every 1-based i with max(1, p-q+1) <= i <= min(p, |w|-q).

    The window is empty for q = |w|, which therefore always passes.
    Raises InvalidPosition / InvalidPeriod outside 1 <= p < |w|,
    1 <= q <= |w|.
    """
    n = len(w)
    if not 1 <= p < n:
        raise InvalidPosition(f"position {p} not in 1..{n - 1}")
    if not 1 <= q <= n:
        raise InvalidPeriod(f"candidate period {q} not in 1..{n}")
    lo = max(0, p - q)
    hi = min(p, n - q)
    return lo >= hi or w[lo:hi] == w[lo + q : hi + q]


def local_period(w: str, p: int) -> int:
    """Minimal local period of ``w`` at position ``p``, by the
    definitional scan: return the first q = 1, 2, ... whose matching
    window holds letter by letter.  Always terminates by q = |w|.
    """
    n = len(w)
    if n < 2 or not 1 <= p < n:
        raise InvalidPosition(f"position {p} not in 1..{max(n - 1, 0)}")
    for q in range(1, n + 1):
        lo = max(0, p - q)
        hi = min(p, n - q)
        ok = True
        for j in range(lo, hi):
            if w[j] != w[j + q]:
                ok = False
                break
        if ok:
            return q
    raise AssertionError("unreachable: q = |w| has an empty window")


def local_periods_scan(w: str) -> list[int]:
    """Minimal local periods at every position, reference route.

    Same scan as ``local_period``, inlined across positions; kept free
    of shortcuts so it can serve as the oracle for the sweep.
    """
    n = len(w)
    if n < 2:
        raise TooShort(f"need |w| >= 2, got {n}")
    out = []
    for p in range(1, n):
        q = 1
        while True:
            lo = p - q
            if lo < 0:
                lo = 0
            hi = n - q
            if p < hi:
                hi = p
            j = lo
            while j < hi:
                if w[j] != w[j + q]:
                    break
                j += 1
            else:
                out.append(q)
                break
            q += 1
    return out


def local_periods(w: str) -> list[int]:
    """Minimal local periods at every position 1..|w|-1, shift sweep.

    For each candidate q ascending, positions whose matching window is
    mismatch-free get per(w, p) = q; mismatches per shift are shared
    through a prefix-sum array.  Every position resolves by q = per(w),
    since the global period is a local period everywhere.
    """
    n = len(w)
    if n < 2:
        raise TooShort(f"need |w| >= 2, got {n}")
    per = n - border_array(w)[-1]
    out = [0] * (n - 1)
    pending = list(range(1, n))
    for q in range(1, per + 1):
        m = n - q
        bad = [0] * (m + 1)
        c = 0
        for j in range(m):
            if w[j] != w[j + q]:
                c += 1
            bad[j + 1] = c
        still = []
        for p in pending:
            lo = p - q
            if lo < 0:
                lo = 0
            hi = m if m < p else p
            if lo >= hi or bad[hi] == bad[lo]:
                out[p - 1] = q
            else:
                still.append(p)
        if not still:
            return out
        pending = still
    raise AssertionError("unreachable: q = per(w) resolves all positions")


@dataclass(frozen=True)
class RepetitionInfo:
    """Minimal repetition word at one position, with overflow flags.

    ``left_overflow`` holds when u reaches past the left end (|u| > p),
    ``right_overflow`` when it reaches past the right end (|u| > |w|-p).
    """

    u: str
    length: int
    left_overflow: bool
    right_overflow: bool


def _rebuild_repetition(w: str, p: int, q: int) -> RepetitionInfo:
    """Reconstruct the unique minimal repetition word from q = per(w, p).

    Whichever side of the cut fits inside w supplies u directly; with
    overflow on both sides u is y followed by the missing head of x,
    which degenerates to y.x exactly at q = |w|.
    """
    n = len(w)
    if q <= n - p:
        u = w[p : p + q]
    elif q <= p:
        u = w[p - q : p]
    else:
        u = w[p:] + w[n - q : p]
    return RepetitionInfo(u, q, q > p, q > n - p)


def repetition_info(w: str, p: int) -> RepetitionInfo:
    """Minimal repetition word of ``w`` at position ``p``."""
    return _rebuild_repetition(w, p, local_period(w, p))


def midpoint(w: str) -> int:
    """The midpoint position floor((|w|+1)/2)."""
    if len(w) < 2:
        raise TooShort(f"need |w| >= 2, got {len(w)}")
    return (len(w) + 1) // 2


@dataclass(frozen=True)
class PeriodProfile:
    """All critical-factorisation data of one word.

    ``local_periods[p-1]`` is per(w, p); ``critical_points`` holds the
    positions with per(w, p) = per(w) in increasing order; ``eta`` is
    their count.  ``density`` is kept exact as a Fraction; JSON output
    carries the unreduced pair (eta, |w|-1).
    """

    word: str
    period: int
    local_periods: tuple[int, ...]
    critical_points: tuple[int, ...]
    eta: int
    midpoint: int

    @property
    def density(self) -> Fraction:
        """Critical points per position: eta / (|w| - 1)."""
        return Fraction(self.eta, len(self.word) - 1)

    @property
    def density_over_length(self) -> Fraction:
        """The eta / |w| ratio used for the low-density families."""
        return Fraction(self.eta, len(self.word))


def profile(w: str, *, max_len: int | None = None) -> PeriodProfile:
    """Compute the full period profile of ``w`` (needs |w| >= 2).

    Guarded by the configured profile length ceiling; pass ``max_len``
    to override for one call.
    """
    n = len(w)
    if n < 2:
        raise TooShort(f"need |w| >= 2, got {n}")
    cap = DEFAULT_LIMITS.max_profile_len if max_len is None else max_len
    if n > cap:
        raise ResourceGuard(f"|w| = {n} exceeds the profile ceiling {cap}")
    lp = local_periods(w)
    per = n - border_array(w)[-1]
    crit = tuple(p for p in range(1, n) if lp[p - 1] == per)
    return PeriodProfile(
        word=w,
        period=per,
        local_periods=tuple(lp),
        critical_points=crit,
        eta=len(crit),
        midpoint=(n + 1) // 2,
    )


def critical_interval(prof: PeriodProfile) -> tuple[int, int] | None:
    """Endpoints (q1, q2) of the critical set when it is a contiguous
    interval, else None.  Square-free ternary words always yield an
    interval; arbitrary words need not.
    """
    cp = prof.critical_points
    if not cp:
        return None
    if cp[-1] - cp[0] + 1 == len(cp):
        return cp[0], cp[-1]
    return None


def is_unimodal(prof: PeriodProfile) -> bool:
    """Whether the local periods rise up to the midpoint and fall after:
    per(w, p-1) <= per(w, p) for 2 <= p <= M(w) and
    per(w, p) <= per(w, p-1) for M(w) < p <= |w|-1.
    """
    lp = prof.local_periods
    m = prof.midpoint
    for p in range(2, m + 1):
        if lp[p - 2] > lp[p - 1]:
            return False
    for p in range(m + 1, len(lp) + 1):
        if lp[p - 1] > lp[p - 2]:
            return False
    return True


def profile_json_dict(prof: PeriodProfile) -> dict:
    """Profile as a JSON-ready dict, the documented wire format."""
    w = prof.word
    reps = []
    for p in range(1, len(w)):
        info = _rebuild_repetition(w, p, prof.local_periods[p - 1])
        reps.append(
            {
                "p": p,
                "u": info.u,
                "leftOverflow": info.left_overflow,
                "rightOverflow": info.right_overflow,
            }
        )
    return {
        "word": w,
        "period": prof.period,
        "localPeriods": list(prof.local_periods),
        "criticalPoints": list(prof.critical_points),
        "eta": prof.eta,
        "densityNum": prof.eta,
        "densityDen": len(w) - 1,
        "midpoint": prof.midpoint,
        "repetitionWords": reps,
    }


def profile_csv_rows(prof: PeriodProfile) -> list[tuple]:
    """One row per position: (p, localPeriod, u, leftOverflow,
    rightOverflow, critical)."""
    w = prof.word
    crit = set(prof.critical_points)
    rows = []
    for p in range(1, len(w)):
        info = _rebuild_repetition(w, p, prof.local_periods[p - 1])
        rows.append(
            (p, info.length, info.u, info.left_overflow, info.right_overflow, p in crit)
        )
    return rows
