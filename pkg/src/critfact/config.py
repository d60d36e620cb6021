"""Resource limits, overridable through environment variables.

All bounds live here so CLI and library runs share one predictable
resource envelope:

    CRITFACT_MAX_WORDS        enumeration ceiling per run   (default 1_000_000)
    CRITFACT_MAX_PROFILE_LEN  longest word profiled         (default 5_000)
    CRITFACT_MAX_PREFIX_LEN   longest generated prefix      (default 2_000_000)
"""

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    max_words: int = 1_000_000
    max_profile_len: int = 5_000
    max_prefix_len: int = 2_000_000

    @classmethod
    def from_env(cls) -> "Limits":
        def read(name: str, default: int) -> int:
            raw = os.environ.get(name)
            return default if raw is None else int(raw)

        return cls(
            max_words=read("CRITFACT_MAX_WORDS", cls.max_words),
            max_profile_len=read("CRITFACT_MAX_PROFILE_LEN", cls.max_profile_len),
            max_prefix_len=read("CRITFACT_MAX_PREFIX_LEN", cls.max_prefix_len),
        )


DEFAULT_LIMITS = Limits.from_env()
