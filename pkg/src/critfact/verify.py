"""Theorem-by-theorem verification over exhaustive word universes.

Each suite re-derives every local-period sequence through BOTH routes
(shift sweep and definitional scan); any disagreement is reported as a
counterexample no matter what the suite itself would have concluded.

Range suites (``verify`` / ``verify_many``) walk a word universe
determined by the theorem:

    cft, overflow, rep-unbordered    every word over the alphabet
    midpoint, unimodal, interval,
    no-overlap, upper-bound,
    lower-bound                      square-free words only

Runs can be partitioned by word prefix across worker processes; merged
reports are independent of the worker count (counts are summed and
counterexamples re-sorted lexicographically by word).

The family suites (``verify_alpha_extremal``, ``verify_beta_eta``,
``verify_wx_density``) and the two exploration searches live here too.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from multiprocessing import Pool
from typing import Iterable, Iterator

from .config import DEFAULT_LIMITS
from .errors import RangeError, ResourceGuard
from .periods import (
    _rebuild_repetition,
    critical_interval,
    local_periods,
    local_periods_scan,
    profile,
)
from .squarefree import (
    extend_square_free,
    is_square_free,
    overlaps_self,
    square_free_range,
    square_free_words,
)
from .thue import beta_family, construct_wx, x_n
from .words import TERNARY, border_array


class TheoremId(str, Enum):
    """Verifiable statements; values double as CLI tokens."""

    CFT = "cft"
    MIDPOINT = "midpoint"
    UNIMODAL = "unimodal"
    INTERVAL = "interval"
    OVERFLOW_IFF_SQUAREFREE = "overflow"
    MIN_REP_UNBORDERED = "rep-unbordered"
    NO_SELF_OVERLAP = "no-overlap"
    UPPER_BOUND = "upper-bound"
    LOWER_BOUND = "lower-bound"
    ALPHA_EXTREMAL = "alpha-extremal"
    BETA_ETA = "beta-eta"
    WX_DENSITY = "wx-density"


# Universe each range suite walks: every word, or square-free words only.
_UNIVERSE = {
    TheoremId.CFT: "all",
    TheoremId.OVERFLOW_IFF_SQUAREFREE: "all",
    TheoremId.MIN_REP_UNBORDERED: "all",
    TheoremId.MIDPOINT: "square-free",
    TheoremId.UNIMODAL: "square-free",
    TheoremId.INTERVAL: "square-free",
    TheoremId.NO_SELF_OVERLAP: "square-free",
    TheoremId.UPPER_BOUND: "square-free",
    TheoremId.LOWER_BOUND: "square-free",
}

_RANGE_SUITES = frozenset(_UNIVERSE)


@dataclass(frozen=True)
class VerifyOptions:
    """Knobs for range suites.

    ``random_count`` adds that many pseudo-random square-free words of
    length ``random_min``..``random_max`` (seeded, so reports stay
    deterministic) after the exhaustive part; used to spot-check length
    ranges too large to exhaust.
    """

    alphabet: str = TERNARY
    jobs: int = 1
    max_words: int | None = None
    random_count: int = 0
    random_min: int = 0
    random_max: int = 0
    seed: int = 0


@dataclass
class VerificationReport:
    theorem: str
    range: dict
    tested: int
    counterexamples: list[tuple[str, str]]
    elapsed_ms: int

    @property
    def verdict(self) -> str:
        return "PASS" if not self.counterexamples else "FAIL"

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "range": self.range,
            "tested": self.tested,
            "counterexamples": [
                {"word": w, "detail": d} for w, d in self.counterexamples
            ],
            "elapsedMs": self.elapsed_ms,
            "verdict": self.verdict,
        }


def _check_word(w: str, ids: tuple[TheoremId, ...]) -> list[tuple[TheoremId, str, str]]:
    """Run the per-word predicates; a route disagreement fails them all."""
    n = len(w)
    lp = local_periods(w)
    scan = local_periods_scan(w)
    if lp != scan:
        detail = f"local-period routes disagree: sweep={lp} scan={scan}"
        return [(tid, w, detail) for tid in ids]
    per = n - border_array(w)[-1]
    crit = [p for p in range(1, n) if lp[p - 1] == per]
    mid = (n + 1) // 2
    issues = []
    for tid in ids:
        if tid is TheoremId.CFT:
            if not crit:
                issues.append((tid, w, "no critical point"))
            elif crit[0] > per:
                issues.append(
                    (tid, w, f"least critical point {crit[0]} exceeds per(w)={per}")
                )
        elif tid is TheoremId.MIDPOINT:
            if lp[mid - 1] != per:
                issues.append(
                    (tid, w, f"midpoint {mid} not critical: per(w,{mid})={lp[mid - 1]}, per={per}")
                )
        elif tid is TheoremId.UNIMODAL:
            ok = all(lp[p - 2] <= lp[p - 1] for p in range(2, mid + 1)) and all(
                lp[p - 1] <= lp[p - 2] for p in range(mid + 1, n)
            )
            if not ok:
                issues.append((tid, w, f"local periods not unimodal: {lp}"))
        elif tid is TheoremId.INTERVAL:
            if not crit or crit[-1] - crit[0] + 1 != len(crit):
                issues.append((tid, w, f"critical points not an interval: {crit}"))
            elif not crit[0] <= mid <= crit[-1]:
                issues.append(
                    (tid, w, f"interval [{crit[0]}, {crit[-1]}] misses midpoint {mid}")
                )
        elif tid is TheoremId.OVERFLOW_IFF_SQUAREFREE:
            all_overflow = all(
                q > p or q > n - p for p, q in enumerate(lp, start=1)
            )
            sf = is_square_free(w)
            if sf != all_overflow:
                issues.append(
                    (tid, w, f"square-free={sf} but every-point-overflow={all_overflow}")
                )
        elif tid is TheoremId.MIN_REP_UNBORDERED:
            for p in range(1, n):
                u = _rebuild_repetition(w, p, lp[p - 1]).u
                if border_array(u)[-1] != 0:
                    issues.append((tid, w, f"repetition word {u!r} at p={p} is bordered"))
        elif tid is TheoremId.NO_SELF_OVERLAP:
            factors = {w[i:j] for i in range(n) for j in range(i + 1, n + 1)}
            for x in sorted(factors):
                if overlaps_self(x, w):
                    issues.append((tid, w, f"factor {x!r} overlaps itself"))
        elif tid is TheoremId.UPPER_BOUND:
            if len(crit) > n - 5:
                issues.append((tid, w, f"eta={len(crit)} exceeds |w|-5={n - 5}"))
        elif tid is TheoremId.LOWER_BOUND:
            if 4 * len(crit) < n:
                issues.append((tid, w, f"4*eta={4 * len(crit)} below |w|={n}"))
        else:
            raise RangeError(f"{tid.value} is not a range suite")
    return issues


def _iter_universe(
    universe: str, alphabet: str, min_len: int, max_len: int, prefix: str
) -> Iterator[str]:
    if universe == "square-free":
        yield from square_free_range(min_len, max_len, alphabet, prefix)
        return
    for length in range(min_len, max_len + 1):
        k = length - len(prefix)
        if k < 0:
            continue
        for tail in itertools.product(alphabet, repeat=k):
            yield prefix + "".join(tail)


def _run_chunk(payload) -> tuple[int, list[tuple[str, str, str]]]:
    ids, universe, alphabet, min_len, max_len, prefix = payload
    tested = 0
    found: list[tuple[str, str, str]] = []
    for w in _iter_universe(universe, alphabet, min_len, max_len, prefix):
        tested += 1
        for tid, word, detail in _check_word(w, ids):
            found.append((tid.value, word, detail))
    return tested, found


def _count_universe(
    universe: str, alphabet: str, min_len: int, max_len: int, ceiling: int
) -> int:
    """Size of the universe, aborting early past the ceiling."""
    if universe == "all":
        total = sum(len(alphabet) ** n for n in range(min_len, max_len + 1))
        if total > ceiling:
            raise ResourceGuard(f"{total} words exceed the ceiling {ceiling}")
        return total
    total = 0
    for _ in square_free_range(min_len, max_len, alphabet):
        total += 1
        if total > ceiling:
            raise ResourceGuard(f"more than {ceiling} square-free words in range")
    return total


def random_square_free(length: int, rng: random.Random, alphabet: str = TERNARY) -> str:
    """A pseudo-random square-free word of the given length, built by
    random extension with restart on dead ends."""
    while True:
        w = ""
        while len(w) < length:
            letters = [a for a in alphabet if extend_square_free(w, a)]
            if not letters:
                break
            w += rng.choice(letters)
        if len(w) == length:
            return w


def verify_many(
    theorems: Iterable[TheoremId],
    min_len: int,
    max_len: int,
    options: VerifyOptions | None = None,
) -> list[VerificationReport]:
    """Run several range suites over one shared enumeration pass.

    All requested theorems must walk the same universe.  Returns one
    report per theorem, in input order.
    """
    ids = tuple(theorems)
    opts = options or VerifyOptions()
    if not ids:
        raise RangeError("no theorems requested")
    for tid in ids:
        if tid not in _RANGE_SUITES:
            raise RangeError(f"{tid.value} takes no length range; call its own function")
    universes = {_UNIVERSE[tid] for tid in ids}
    if len(universes) > 1:
        raise RangeError("cannot share one enumeration across different universes")
    universe = universes.pop()
    if not 2 <= min_len <= max_len:
        raise RangeError(f"need 2 <= min <= max, got {min_len}..{max_len}")
    if TheoremId.UPPER_BOUND in ids and min_len < 26:
        raise RangeError("the upper-bound suite needs min length >= 26")

    start = time.perf_counter()
    ceiling = opts.max_words if opts.max_words is not None else DEFAULT_LIMITS.max_words
    _count_universe(universe, opts.alphabet, min_len, max_len, ceiling)

    depth = min(3, min_len)
    if universe == "square-free":
        prefixes = list(square_free_words(depth, opts.alphabet))
    else:
        prefixes = ["".join(t) for t in itertools.product(opts.alphabet, repeat=depth)]
    chunks = [(ids, universe, opts.alphabet, min_len, max_len, pre) for pre in prefixes]

    if opts.jobs > 1:
        with Pool(opts.jobs) as pool:
            parts = pool.map(_run_chunk, chunks)
    else:
        parts = [_run_chunk(c) for c in chunks]

    tested = sum(t for t, _ in parts)
    found = [item for _, part in parts for item in part]

    range_desc: dict = {
        "minLen": min_len,
        "maxLen": max_len,
        "universe": universe,
        "alphabet": opts.alphabet,
    }
    if opts.random_count > 0:
        rng = random.Random(opts.seed)
        for _ in range(opts.random_count):
            length = rng.randint(opts.random_min, opts.random_max)
            w = random_square_free(length, rng, opts.alphabet)
            tested += 1
            for tid, word, detail in _check_word(w, ids):
                found.append((tid.value, word, detail))
        range_desc["randomCount"] = opts.random_count
        range_desc["randomMin"] = opts.random_min
        range_desc["randomMax"] = opts.random_max
        range_desc["seed"] = opts.seed

    elapsed_ms = int(round((time.perf_counter() - start) * 1000))
    reports = []
    for tid in ids:
        ces = sorted((w, d) for token, w, d in found if token == tid.value)
        reports.append(
            VerificationReport(
                theorem=tid.value,
                range=dict(range_desc),
                tested=tested,
                counterexamples=ces,
                elapsed_ms=elapsed_ms,
            )
        )
    return reports


def verify(
    theorem: TheoremId,
    min_len: int,
    max_len: int,
    options: VerifyOptions | None = None,
) -> VerificationReport:
    """Run one range suite; see ``verify_many``."""
    return verify_many([theorem], min_len, max_len, options)[0]


# -- family suites -----------------------------------------------------------

# The longest unbordered square-free word with 01 occurring only as its
# prefix; the exhaustive search below re-establishes it from scratch.
ALPHA_WORD = "0121021202102"

_ALPHA_SEARCH_CAP = 64


def verify_alpha_extremal() -> VerificationReport:
    """Exhaustively search square-free words that start with 01 and
    contain 01 exactly once; PASS iff the unbordered ones top out at
    length 13 with the single witness ``ALPHA_WORD``.
    """
    start = time.perf_counter()
    tested = 0
    by_len: dict[int, list[str]] = {}

    def walk(w: str) -> None:
        nonlocal tested
        tested += 1
        if len(w) > _ALPHA_SEARCH_CAP:
            raise ResourceGuard("01-constrained search ran past the expected depth")
        if border_array(w)[-1] == 0:
            by_len.setdefault(len(w), []).append(w)
        for a in TERNARY:
            if w[-1] == "0" and a == "1":
                continue  # a second 01 would appear
            if extend_square_free(w, a):
                walk(w + a)

    walk("01")
    top = max(by_len)
    counterexamples = []
    if top > 13:
        for w in sorted(wd for length, ws in by_len.items() if length > 13 for wd in ws):
            counterexamples.append((w, f"unbordered, unique 01 prefix, length {len(w)} > 13"))
    elif top < 13:
        counterexamples.append(("", f"search topped out at length {top} < 13"))
    elif by_len[13] != [ALPHA_WORD]:
        for w in sorted(by_len[13]):
            if w != ALPHA_WORD:
                counterexamples.append((w, "unexpected maximal witness"))
        if ALPHA_WORD not in by_len[13]:
            counterexamples.append((ALPHA_WORD, "expected witness not found"))
    return VerificationReport(
        theorem=TheoremId.ALPHA_EXTREMAL.value,
        range={"constraint": "square-free, prefix 01, no other 01 occurrence"},
        tested=tested,
        counterexamples=sorted(counterexamples),
        elapsed_ms=int(round((time.perf_counter() - start) * 1000)),
    )


# Local periods and repetition words demanded of the four non-critical
# points of every maximal-eta family word.
_BETA_EDGE = ((1, 2, "10"), (2, 4, "0201"), (-2, 4, "1202"), (-1, 2, "21"))


def verify_beta_eta(count: int, search_bound: int) -> VerificationReport:
    """Check the first ``count`` maximal-eta family words from
    m_prefix(search_bound): square-free, unbordered, eta = |w|-5, and
    the four edge points carrying exactly the expected local periods
    and repetition words.
    """
    start = time.perf_counter()
    words = beta_family(count, search_bound)
    found: list[tuple[str, str]] = []
    for w in words:
        n = len(w)
        lp = local_periods(w)
        if lp != local_periods_scan(w):
            found.append((w, "local-period routes disagree"))
            continue
        per = n - border_array(w)[-1]
        crit = [p for p in range(1, n) if lp[p - 1] == per]
        if not is_square_free(w):
            found.append((w, "family word not square-free"))
        if per != n:
            found.append((w, f"family word bordered: per={per} < {n}"))
        if len(crit) != n - 5:
            found.append((w, f"eta={len(crit)}, wanted |w|-5={n - 5}"))
        noncrit = [p for p in range(1, n) if lp[p - 1] != per]
        expected_noncrit = [1, 2, n - 2, n - 1]
        if noncrit != expected_noncrit:
            found.append((w, f"non-critical points {noncrit}, wanted {expected_noncrit}"))
            continue
        for offset, want_q, want_u in _BETA_EDGE:
            p = offset if offset > 0 else n + offset
            q = lp[p - 1]
            u = _rebuild_repetition(w, p, q).u
            if (q, u) != (want_q, want_u):
                found.append(
                    (w, f"p={p}: per(w,p)={q}, u={u!r}, wanted {want_q}, {want_u!r}")
                )
    return VerificationReport(
        theorem=TheoremId.BETA_ETA.value,
        range={"count": count, "searchBound": search_bound},
        tested=len(words),
        counterexamples=sorted(found),
        elapsed_ms=int(round((time.perf_counter() - start) * 1000)),
    )


def verify_wx_density(n_max: int) -> VerificationReport:
    """For n = 1..n_max check the template words w = 0x02x10x02x0 built
    on x = x_n: square-free, eta = |x|+3, eta/|w| = 1/4 + 1/|w| exactly,
    and critical interval [2|x|+4, 3|x|+6].
    """
    if not 1 <= n_max <= 6:
        raise RangeError(f"need 1 <= n_max <= 6, got {n_max}")
    start = time.perf_counter()
    found: list[tuple[str, str]] = []
    for n in range(1, n_max + 1):
        x = x_n(n)
        w = construct_wx(x)
        lx, lw = len(x), len(w)
        lp = local_periods(w)
        if lp != local_periods_scan(w):
            found.append((w, "local-period routes disagree"))
            continue
        prof = profile(w)
        if not is_square_free(w):
            found.append((w, f"w_x for n={n} not square-free"))
            continue
        if prof.eta != lx + 3:
            found.append((w, f"n={n}: eta={prof.eta}, wanted |x|+3={lx + 3}"))
        if Fraction(prof.eta, lw) != Fraction(1, 4) + Fraction(1, lw):
            found.append((w, f"n={n}: eta/|w| is not exactly 1/4 + 1/|w|"))
        if critical_interval(prof) != (2 * lx + 4, 3 * lx + 6):
            found.append(
                (w, f"n={n}: critical interval {critical_interval(prof)}, "
                    f"wanted ({2 * lx + 4}, {3 * lx + 6})")
            )
    return VerificationReport(
        theorem=TheoremId.WX_DENSITY.value,
        range={"nMax": n_max},
        tested=n_max,
        counterexamples=sorted(found),
        elapsed_ms=int(round((time.perf_counter() - start) * 1000)),
    )


# -- exploration (no truth claims) -------------------------------------------

_PROBLEM1_NOTE = (
    "searching square-free x for which 0x02x10x02x0 is square-free; "
    "reported per length within the searched range only"
)


def explore_problem1(
    len_min: int, len_max: int, max_words: int | None = None
) -> dict:
    """Witness-or-exhausted table: for each length, the first square-free
    x whose template word 0x02x10x02x0 is square-free, if any."""
    if not 1 <= len_min <= len_max:
        raise RangeError(f"need 1 <= min <= max, got {len_min}..{len_max}")
    ceiling = max_words if max_words is not None else DEFAULT_LIMITS.max_words
    searched_total = 0
    rows = []
    for length in range(len_min, len_max + 1):
        witness = None
        searched = 0
        for x in square_free_words(length):
            searched += 1
            searched_total += 1
            if searched_total > ceiling:
                raise ResourceGuard(f"search exceeded the ceiling of {ceiling} words")
            if is_square_free(construct_wx(x)):
                witness = x
                break
        rows.append({"length": length, "witness": witness, "searched": searched})
    return {"problem": "problem1", "note": _PROBLEM1_NOTE, "lengths": rows}


def explore_problem2(len_max: int, max_words: int | None = None) -> dict:
    """Per-length minima of eta(w) - |w|/4 over square-free words with
    length divisible by 4, plus any exact-equality witnesses."""
    if len_max > 30:
        raise RangeError(f"need len_max <= 30, got {len_max}")
    ceiling = max_words if max_words is not None else DEFAULT_LIMITS.max_words
    tested_total = 0
    rows = []
    for length in range(4, len_max + 1, 4):
        best = None
        witnesses: list[str] = []
        tested = 0
        quarter = length // 4
        for w in square_free_words(length):
            tested += 1
            tested_total += 1
            if tested_total > ceiling:
                raise ResourceGuard(f"search exceeded the ceiling of {ceiling} words")
            lp = local_periods(w)
            per = length - border_array(w)[-1]
            eta = sum(1 for v in lp if v == per)
            excess = eta - quarter
            if best is None or excess < best:
                best = excess
                witnesses = [w] if excess == 0 else []
            elif excess == 0:
                witnesses.append(w)
        rows.append(
            {"length": length, "minExcess": best, "witnesses": witnesses, "tested": tested}
        )
    return {"problem": "problem2", "lengths": rows}
