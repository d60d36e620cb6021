"""critfact: critical factorisation data for words, square-free ternary
word families from the tau morphism, and exhaustive verification suites.
"""

from .config import DEFAULT_LIMITS, Limits
from .errors import (
    AlphabetError,
    CritfactError,
    EmptyFactor,
    EmptyWord,
    InsufficientBound,
    InvalidPeriod,
    InvalidPosition,
    RangeError,
    ResourceGuard,
    TooShort,
)
from .periods import (
    PeriodProfile,
    RepetitionInfo,
    critical_interval,
    is_local_period,
    is_unimodal,
    local_period,
    local_periods,
    local_periods_scan,
    midpoint,
    profile,
    profile_csv_rows,
    profile_json_dict,
    repetition_info,
)
from .squarefree import (
    SquareOccurrence,
    count_square_free,
    extend_square_free,
    find_square,
    has_square,
    is_square_free,
    overlaps_self,
    square_free_range,
    square_free_words,
)
from .thue import (
    alpha_n,
    beta_family,
    beta_n,
    construct_wx,
    m_n,
    m_prefix,
    tau,
    tau_iter,
    x_n,
)
from .verify import (
    TheoremId,
    VerificationReport,
    VerifyOptions,
    explore_problem1,
    explore_problem2,
    random_square_free,
    verify,
    verify_alpha_extremal,
    verify_beta_eta,
    verify_many,
    verify_wx_density,
)
from .words import (
    BINARY,
    TERNARY,
    border_array,
    global_period,
    is_unbordered,
    parse_word,
    reverse,
)

__version__ = "0.1.0"
